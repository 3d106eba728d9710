#ifndef CW_CWG_HPP
#define CW_CWG_HPP

#include <optional>
#include <string>
#include <vector>

#include "cw/cyc8.hpp"
#include "cw/gf.hpp"
#include "cw/poly.hpp"

namespace cw::cwg {

// q x q matrix over Q(zeta_8). Row a holds the image of the variable
// x_a: the substitution sends x_a to sum_b M[a][b] x_b.
struct CycMatrix {
  int dim = 0;
  std::vector<cyc::Cyc8> e;

  CycMatrix() = default;
  explicit CycMatrix(int d) : dim(d), e(d * d) {}
  static CycMatrix identity(int d);

  cyc::Cyc8& at(int r, int c) { return e[r * dim + c]; }
  const cyc::Cyc8& at(int r, int c) const { return e[r * dim + c]; }

  CycMatrix operator*(const CycMatrix& o) const;
  bool operator==(const CycMatrix& o) const = default;

  CycMatrix conj_transpose() const;
  bool is_unitary() const;
  // The scalar s when this == s * I.
  std::optional<cyc::Cyc8> as_scalar() const;
  // Canonical byte key for exact dedup during closure.
  std::string key() const;
};

// Matrix of the composition "apply a first, then b" (as substitutions).
CycMatrix compose(const CycMatrix& a, const CycMatrix& b);

// Generators. gen_m requires r != 0; gen_d takes the basis defining phi.
CycMatrix gen_m(const gf::FieldCtx& ctx, gf::Bits r);
CycMatrix gen_d(const gf::FieldCtx& ctx, gf::Bits r, const gf::ScBasis& basis);
CycMatrix gen_h(const gf::FieldCtx& ctx);
// Frobenius variable permutation x_a -> x_{a^2}.
CycMatrix galois_gen(const gf::FieldCtx& ctx);

// h, all m_r, all d_r (r != 0), plus gamma when with_galois.
std::vector<CycMatrix> group_generators(const gf::FieldCtx& ctx,
                                        const gf::ScBasis& basis,
                                        bool with_galois);

std::uint64_t default_group_cap(int f);

struct MatrixGroup {
  std::vector<CycMatrix> generators;
  std::vector<CycMatrix> elements;

  std::size_t order() const { return elements.size(); }
};

// BFS closure under right multiplication by the generators. Throws if
// more than cap distinct elements appear.
MatrixGroup close_group(const std::vector<CycMatrix>& gens, std::uint64_t cap);

struct MolienSeries {
  std::size_t group_order = 0;
  std::vector<mpz_class> coeffs;  // dimensions of invariant spaces
};

// Exact Molien series (1/|G|) sum_g 1/det(I - t g) through max_degree.
// Asserts that the group sum is rational with integral coefficients.
MolienSeries molien(const MatrixGroup& g, int max_degree);

struct StructureCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct StructureReport {
  int f = 0;
  std::size_t group_order = 0;
  std::vector<StructureCheck> checks;

  bool all_pass() const;
};

// Runs the structural checks on G_f: generator unitarity, scalar
// subgroup order, the d_r^2 / q_r normal-subgroup relations, extraspecial
// commutators, the conjugation action, the order formula
// |G| = |Z| q^2 |SL2(F_q)|, and (h d_1)^3 for odd f.
StructureReport verify_structure(const gf::FieldCtx& ctx,
                                 std::uint64_t cap = 0);

// Substitution action x_a -> sum_b M[a][b] x_b on a polynomial with
// cyclotomic coefficients.
poly::PolyT<cyc::CycQ> act_endomorphism(const poly::PolyT<cyc::CycQ>& p,
                                        const CycMatrix& m);
poly::PolyT<cyc::CycQ> to_cyc_poly(const poly::Poly& p);

// True iff p is fixed by every generator of G_f (and gamma when
// with_galois). Uses monomial fast paths for m_r/d_r/gamma and a scaled
// integer MacWilliams check for h.
bool is_invariant(const poly::Poly& p, const gf::FieldCtx& ctx,
                  bool with_galois);

}  // namespace cw::cwg

#endif
