#ifndef CW_GF_HPP
#define CW_GF_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cw::gf {

// Polynomial-basis coordinates of a field element, packed as bits
// (bit i = coefficient of x^i). Degrees up to 31 are supported, which
// covers the extension fields needed for quadratic-residue codes up to
// p = 31 over F4.
using Bits = std::uint32_t;

// Context for GF(2^m) with a fixed irreducible modulus. Elements are
// ordered by the integer whose binary digits are their coordinates, so
// over F4: 0, 1, w = 2, w^2 = 3.
class FieldCtx {
public:
  // Canonical context for GF(2^m). The modulus is the lowest-weight,
  // lexicographically least irreducible of degree m, found by a
  // deterministic search; the contexts are cached and never freed, so
  // the same m always yields the same object.
  static const FieldCtx& get(int degree);
  // Parses a spec string such as "F4" or "F16".
  static const FieldCtx& of_name(std::string_view name);

  int degree() const { return m_; }
  Bits modulus() const { return mod_; }
  std::uint64_t order() const { return std::uint64_t{1} << m_; }
  std::string name() const { return "F" + std::to_string(order()); }

  Bits add(Bits a, Bits b) const { return a ^ b; }
  Bits mul(Bits a, Bits b) const {
    return multab_.empty() ? mul_slow(a, b) : multab_[(a << m_) | b];
  }
  Bits inv(Bits a) const;
  Bits pow(Bits a, std::uint64_t e) const;
  // a^(2^k)
  Bits frobenius(Bits a, int k) const;
  // Trace to GF(2).
  int trace(Bits a) const;
  // Least multiplicative generator (in element order); computed lazily.
  Bits generator() const;

  bool operator==(const FieldCtx& o) const { return this == &o; }

private:
  FieldCtx(int m, Bits mod);
  Bits mul_slow(Bits a, Bits b) const;

  int m_;
  Bits mod_;
  std::vector<Bits> multab_;       // full table for small fields
  mutable Bits generator_ = 0;     // 0 = not yet computed
};

struct FieldElement {
  Bits bits = 0;
  const FieldCtx* ctx = nullptr;

  FieldElement() = default;
  FieldElement(Bits b, const FieldCtx& c) : bits(b), ctx(&c) {}

  friend FieldElement operator+(FieldElement a, FieldElement b) {
    return {a.ctx->add(a.bits, b.bits), *a.ctx};
  }
  friend FieldElement operator*(FieldElement a, FieldElement b) {
    return {a.ctx->mul(a.bits, b.bits), *a.ctx};
  }
  bool operator==(const FieldElement& o) const {
    return bits == o.bits && ctx == o.ctx;
  }
  bool is_zero() const { return bits == 0; }
};

// Self-complementary (trace-orthogonal) basis: tau(b_i b_j) = delta_ij.
struct ScBasis {
  const FieldCtx* ctx = nullptr;
  std::vector<Bits> elems;

  int size() const { return static_cast<int>(elems.size()); }
};

int trace(const FieldElement& a);
FieldElement frobenius(const FieldElement& a, int k);

// Lexicographically first self-complementary basis (DFS in element
// order). Throws std::logic_error if none exists (cannot happen in
// characteristic 2).
ScBasis find_sc_basis(const FieldCtx& ctx);

// The cached find_sc_basis result for ctx; this is the basis all
// downstream artifacts (phi values, d_r matrices) are pinned to.
const ScBasis& pinned_sc_basis(const FieldCtx& ctx);

// Coordinates of a over the basis, as 0/1 ints.
std::vector<int> expand(Bits a, const ScBasis& basis);
Bits combine(const std::vector<int>& coords, const ScBasis& basis);

// Weight-mod-4 map: Hamming weight of the coordinates of a over the
// given self-complementary basis, mod 4. Returns a value in 0..3.
int phi(Bits a, const ScBasis& basis);

// --- GF(2)[x] utilities (bit-packed polynomials) -------------------------

namespace poly2 {
int degree(std::uint64_t p);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
bool is_irreducible(std::uint64_t p);
// Lowest-weight, lexicographically least irreducible of the given degree.
std::uint64_t canonical_irreducible(int degree);
}  // namespace poly2

// --- Subfield embeddings --------------------------------------------------

// Embedding of GF(2^s) into GF(2^m), s | m, determined by the smallest
// (in element order) root of the subfield modulus in the big field.
class FieldEmbedding {
public:
  FieldEmbedding(const FieldCtx& sub, const FieldCtx& big);

  const FieldCtx& sub() const { return *sub_; }
  const FieldCtx& big() const { return *big_; }

  Bits to_big(Bits a) const;
  // Inverse map; empty if a is not in the image subfield.
  std::optional<Bits> to_sub(Bits a) const;

private:
  const FieldCtx* sub_;
  const FieldCtx* big_;
  Bits root_;                       // image of the subfield generator x
  std::vector<Bits> root_pows_;     // root_^i, i < deg(sub)
  // Row-reduced solver for to_sub: columns of root_pows_ over GF(2).
  std::vector<std::uint64_t> solver_rows_;
  std::vector<int> solver_pivots_;
};

}  // namespace cw::gf

#endif
