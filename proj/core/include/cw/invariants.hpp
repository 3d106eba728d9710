#ifndef CW_INVARIANTS_HPP
#define CW_INVARIANTS_HPP

#include <array>
#include <string>
#include <vector>

#include "cw/codes.hpp"
#include "cw/gf.hpp"
#include "cw/poly.hpp"

namespace cw::inv {

inline constexpr int kDefaultDegreeCap = 40;

// Echelonized basis of the homogeneous degree-n invariants of G_f
// (of <G_f, Gamma_f> when with_galois). Basis elements are sorted by
// decreasing pivot monomial; the first one has pivot x_0^n.
struct InvariantBasis {
  int degree = 0;
  std::vector<poly::Poly> basis;

  int dim() const { return static_cast<int>(basis.size()); }
};

// Fixed space of the degree-n action, computed from the generator set:
// monomials are filtered by the d_r phase condition, summed over the
// m_r (and gamma) permutation orbits, and the MacWilliams constraint is
// solved as an exact rational kernel. Results are cached per (field,
// n, with_galois). Throws codes::BudgetError above the degree cap.
const InvariantBasis& invariant_space(const gf::FieldCtx& ctx, int n,
                                      bool with_galois,
                                      int cap = kDefaultDegreeCap);

poly::Poly derivative(const poly::Poly& p, int var);

// Rank of the Jacobian of polys at the given point.
int jacobian_rank(const std::vector<poly::Poly>& polys,
                  const std::vector<mpq_class>& point);

// Jacobian rank at the deterministic point (1, 2, 3, 5, ...); rank
// equal to the number of polynomials certifies algebraic independence.
int check_independence(const std::vector<poly::Poly>& polys);

// Cached extended QR code of length p+1 over F4.
const codes::LinearCode& qr_f4(int p);
// Complete weight enumerators of Q4, Q8, Q12, Q20 (cached).
const std::array<poly::Poly, 4>& f4_qr_enumerators();

// True iff the degree-n products of the four QR enumerators span
// invariant_space(F4, n, false). Requires n = 0 mod 4, n <= 36.
bool product_span_check(int n);

enum class Obstruction { NEGATIVE_COEFF, NOT_POWER_OF_TWO, NOT_DIV3, NO_SOLUTION };
std::string to_string(Obstruction o);

struct ObstructionNote {
  Obstruction kind;
  std::string detail;
};

struct Candidate {
  poly::Poly p;
  int log2_at_1100 = -1;  // p(1,1,0,0) = 2^m
};

struct ExtremalReport {
  int n = 0;
  int d = 0;
  bool feasible = false;
  std::vector<Candidate> candidates;
  std::vector<ObstructionNote> obstructions;
};

// Searches for complete weight enumerators of putative doubly-even
// self-dual codes of length n over F4 with minimum distance >= d:
// parametrizes over invariant_space(F4, n, false), imposes the linear
// conditions p(1,1,1,1) = 2^n and x^d | p(1,x,x,x) - 1, and filters the
// integer points of the resulting polytope by the remaining conditions
// (nonnegative integer coefficients, the mod-3 divisibilities, and
// p(1,1,0,0) a power of 2 with exponent <= n/2). Requires n = 0 mod 4,
// n <= 24.
ExtremalReport extremal_search(int n, int d);

struct TableRow {
  int n = 0;
  int d = 0;           // distance attained by the verified witness code
  int feasible_d = 0;  // largest d with extremal_search(n, d) feasible
  // feasible_d > d: the five enumerator conditions admit a candidate at a
  // distance no witness code attains, so they do not close the gap alone.
  bool discrepancy = false;
  std::string witness;
  bool witness_ok = false;  // doubly-even, self-dual, distance == d
};

// The n -> d table for n in {4, 8, 12, 16, 20, 24}, with witness codes.
// d is the verified witness distance; feasible_d is the enumerator
// feasibility bound, reported separately and flagged when they differ.
std::vector<TableRow> reproduce_table(
    std::uint64_t budget = codes::kDefaultCodewordBudget);

}  // namespace cw::inv

#endif
