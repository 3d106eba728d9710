#include <doctest.h>

#include "cw/gf.hpp"

using namespace cw;
using gf::Bits;
using gf::FieldCtx;

TEST_CASE("canonical moduli") {
  CHECK(gf::poly2::canonical_irreducible(1) == 0b10u);  // x (degree-1 slot unused)
  CHECK(gf::poly2::canonical_irreducible(2) == 0b111u);      // x^2+x+1
  CHECK(gf::poly2::canonical_irreducible(3) == 0b1011u);     // x^3+x+1
  CHECK(gf::poly2::canonical_irreducible(4) == 0b10011u);    // x^4+x+1
  CHECK(gf::poly2::canonical_irreducible(6) == 0b1000011u);  // x^6+x+1
}

TEST_CASE("F4 arithmetic table") {
  const FieldCtx& f4 = FieldCtx::get(2);
  const Bits w = 2, w2 = 3;
  CHECK(f4.mul(w, w) == w2);
  CHECK(f4.mul(w, w2) == 1);
  CHECK(f4.add(w, w2) == 1);
  CHECK(f4.pow(w, 3) == 1);
  CHECK(f4.inv(w) == w2);
  CHECK(f4.generator() == w);
  CHECK(f4.name() == "F4");
  CHECK(&gf::FieldCtx::of_name("F4") == &f4);
}

TEST_CASE("inverses and Frobenius over F16") {
  const FieldCtx& f16 = FieldCtx::get(4);
  for (Bits a = 1; a < 16; ++a) {
    CHECK(f16.mul(a, f16.inv(a)) == 1);
    CHECK(f16.frobenius(a, 4) == a);
    // Frobenius is the squaring map.
    CHECK(f16.frobenius(a, 1) == f16.mul(a, a));
  }
}

TEST_CASE("trace is additive and GF(2)-valued") {
  for (int m : {1, 2, 3, 4}) {
    const FieldCtx& ctx = FieldCtx::get(m);
    for (Bits a = 0; a < ctx.order(); ++a)
      for (Bits b = 0; b < ctx.order(); ++b)
        CHECK(ctx.trace(ctx.add(a, b)) == (ctx.trace(a) ^ ctx.trace(b)));
  }
}

TEST_CASE("pinned self-complementary bases") {
  const auto& b2 = gf::pinned_sc_basis(FieldCtx::get(1));
  CHECK(b2.elems == std::vector<Bits>{1});
  const auto& b4 = gf::pinned_sc_basis(FieldCtx::get(2));
  CHECK(b4.elems == std::vector<Bits>{2, 3});  // (w, w^2)
  for (int m : {1, 2, 3, 4, 6}) {
    const FieldCtx& ctx = FieldCtx::get(m);
    const auto& b = gf::pinned_sc_basis(ctx);
    REQUIRE(b.size() == m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        CHECK(ctx.trace(ctx.mul(b.elems[i], b.elems[j])) == (i == j ? 1 : 0));
  }
}

TEST_CASE("expand/combine round-trip") {
  for (int m : {2, 3, 4}) {
    const FieldCtx& ctx = FieldCtx::get(m);
    const auto& b = gf::pinned_sc_basis(ctx);
    for (Bits a = 0; a < ctx.order(); ++a)
      CHECK(gf::combine(gf::expand(a, b), b) == a);
  }
}

TEST_CASE("phi table over F4") {
  const auto& b = gf::pinned_sc_basis(FieldCtx::get(2));
  CHECK(gf::phi(0, b) == 0);
  CHECK(gf::phi(1, b) == 2);  // 1 = w + w^2: both coordinates set
  CHECK(gf::phi(2, b) == 1);
  CHECK(gf::phi(3, b) == 1);
}

TEST_CASE("phi identities") {
  for (int m : {1, 2, 3, 4}) {
    const FieldCtx& ctx = FieldCtx::get(m);
    const auto& b = gf::pinned_sc_basis(ctx);
    for (Bits a = 0; a < ctx.order(); ++a) {
      // phi(a) = tau(a) mod 2
      CHECK(gf::phi(a, b) % 2 == ctx.trace(a));
      for (Bits c = 0; c < ctx.order(); ++c) {
        // phi(a + c) = phi(a) + phi(c) + 2 tau(ac) mod 4
        int lhs = gf::phi(ctx.add(a, c), b);
        int rhs = (gf::phi(a, b) + gf::phi(c, b) +
                   2 * ctx.trace(ctx.mul(a, c))) % 4;
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("subfield embedding F4 -> F16") {
  const FieldCtx& f4 = FieldCtx::get(2);
  const FieldCtx& f16 = FieldCtx::get(4);
  gf::FieldEmbedding e(f4, f16);
  CHECK(e.to_big(0) == 0);
  CHECK(e.to_big(1) == 1);
  for (Bits a = 0; a < 4; ++a)
    for (Bits b = 0; b < 4; ++b) {
      CHECK(e.to_big(f4.mul(a, b)) == f16.mul(e.to_big(a), e.to_big(b)));
      CHECK(e.to_big(f4.add(a, b)) == f16.add(e.to_big(a), e.to_big(b)));
    }
  for (Bits a = 0; a < 4; ++a) CHECK(e.to_sub(e.to_big(a)) == a);
  // Elements outside the image have no preimage; the subfield has 4
  // elements, so 12 of the 16 must map back to nothing.
  int misses = 0;
  for (Bits a = 0; a < 16; ++a)
    if (!e.to_sub(a)) ++misses;
  CHECK(misses == 12);
}
