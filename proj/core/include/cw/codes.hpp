#ifndef CW_CODES_HPP
#define CW_CODES_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cw/gf.hpp"

namespace cw::codes {

// Raised when an enumeration would exceed the configured codeword budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultCodewordBudget = std::uint64_t{1} << 32;

// Linear code over GF(2^f), stored as a canonical (RREF) generator matrix.
// Equal codes produce identical generator matrices.
struct LinearCode {
  const gf::FieldCtx* ctx = nullptr;
  int n = 0;
  std::vector<std::vector<gf::Bits>> gens;  // k rows of length n, RREF

  int dim() const { return static_cast<int>(gens.size()); }
  // q^k, saturating at 2^63 to keep budget comparisons safe.
  std::uint64_t size_bound() const;
  bool operator==(const LinearCode& o) const {
    return ctx == o.ctx && n == o.n && gens == o.gens;
  }
};

// Row-reduces arbitrary spanning rows into canonical form.
LinearCode make_code(const gf::FieldCtx& ctx, int n,
                     std::vector<std::vector<gf::Bits>> rows);

LinearCode dual(const LinearCode& c);
bool is_self_orthogonal(const LinearCode& c);
bool is_self_dual(const LinearCode& c);

struct DoublyEvenResult {
  bool ok = false;
  // A codeword violating the condition, when !ok.
  std::vector<gf::Bits> witness;
};

// Doubly-even test via the phi criterion (phi(C) = {0} over the pinned
// self-complementary basis). Codes with at most `full_check_bound`
// codewords are checked exhaustively; larger codes use the polarization
// fast path on an F2-generating set.
DoublyEvenResult is_doubly_even(const LinearCode& c,
                                std::uint64_t full_check_bound = 1 << 16);

// Extended quadratic-residue code of length p+1 over ctx. Requires p an
// odd prime, and an even-degree field when p = +-3 (mod 8). The parity
// coordinate is appended last.
LinearCode extended_qr(const gf::FieldCtx& ctx, int p);

struct WeightProfile {
  std::vector<std::uint64_t> dist;  // dist[w] = number of words of weight w

  int min_nonzero_weight() const;
};

WeightProfile weight_profile(const LinearCode& c,
                             std::uint64_t budget = kDefaultCodewordBudget);
int min_distance(const LinearCode& c,
                 std::uint64_t budget = kDefaultCodewordBudget);

// Coordinate-wise expansion over a self-complementary basis of ctx over
// the subfield; length multiplies by the basis size.
LinearCode subfield_expand(const LinearCode& c, const gf::FieldCtx& subctx,
                           const gf::ScBasis& basis);

// Words of c with all coordinates in the subfield, as a code over subctx.
LinearCode rational_subcode(const LinearCode& c, const gf::FieldCtx& subctx);

LinearCode shorten(const LinearCode& c, const std::vector<int>& positions);
// Extends the code by one generator; v must not already lie in c.
LinearCode adjoin(const LinearCode& c, const std::vector<gf::Bits>& v);

bool contains(const LinearCode& c, const std::vector<gf::Bits>& v);

// Enumerates all q^k codewords, invoking fn(word) for each (including 0).
// Deterministic order; throws BudgetError if q^k exceeds the budget.
void enumerate_codewords(const LinearCode& c, std::uint64_t budget,
                         const std::function<void(const std::vector<gf::Bits>&)>& fn);

// The n=16 doubly-even self-dual code with d = 6, built from Q20 by the
// documented search: lexicographic 4-subsets of coordinates, shorten,
// adjoin the all-ones vector and then a 0/1-valued weight-8 vector from
// the dual. Returns the first code passing all checks.
LinearCode sixteen_from_q20(const LinearCode& q20);

}  // namespace cw::codes

#endif
