#include <doctest.h>

#include "cw/codes.hpp"
#include "cw/cwg.hpp"

using namespace cw;
using cwg::CycMatrix;
using cyc::Cyc8;
using gf::FieldCtx;

TEST_CASE("generator matrices over F4") {
  const FieldCtx& f4 = FieldCtx::get(2);
  const auto& basis = gf::pinned_sc_basis(f4);
  // d_1 = diag(i^phi(a)) = diag(1, -1, i, i)
  CycMatrix d1 = cwg::gen_d(f4, 1, basis);
  CHECK(d1.at(0, 0) == Cyc8::i_pow(0));
  CHECK(d1.at(1, 1) == Cyc8::i_pow(2));
  CHECK(d1.at(2, 2) == Cyc8::i_pow(1));
  CHECK(d1.at(3, 3) == Cyc8::i_pow(1));
  // m_w permutes x_a -> x_{aw}
  CycMatrix mw = cwg::gen_m(f4, 2);
  CHECK(mw.at(1, 2) == Cyc8(1));
  CHECK(mw.at(2, 3) == Cyc8(1));
  CHECK(mw.at(3, 1) == Cyc8(1));
  CHECK_THROWS_AS(cwg::gen_m(f4, 0), std::invalid_argument);
}

TEST_CASE("h is a unitary involution") {
  for (int f : {1, 2}) {
    CycMatrix h = cwg::gen_h(FieldCtx::get(f));
    CHECK(h.is_unitary());
    CHECK(compose(h, h) == CycMatrix::identity(1 << f));
  }
}

TEST_CASE("(h d_1)^3 is a primitive 8th root of unity for f=1") {
  const FieldCtx& f2 = FieldCtx::get(1);
  const auto& basis = gf::pinned_sc_basis(f2);
  CycMatrix hd = compose(cwg::gen_h(f2), cwg::gen_d(f2, 1, basis));
  CycMatrix cube = compose(compose(hd, hd), hd);
  auto s = cube.as_scalar();
  REQUIRE(s.has_value());
  // s^4 = -1: primitive 8th root.
  Cyc8 s4 = *s * *s * *s * *s;
  CHECK(s4 == Cyc8(-1));
}

TEST_CASE("group closures") {
  const FieldCtx& f2 = FieldCtx::get(1);
  const FieldCtx& f4 = FieldCtx::get(2);
  auto g1 = cwg::close_group(
      cwg::group_generators(f2, gf::pinned_sc_basis(f2), false), 10000);
  CHECK(g1.order() == 192);
  auto g2 = cwg::close_group(
      cwg::group_generators(f4, gf::pinned_sc_basis(f4), false), 10000);
  CHECK(g2.order() == 3840);
  auto g2g = cwg::close_group(
      cwg::group_generators(f4, gf::pinned_sc_basis(f4), true), 10000);
  CHECK(g2g.order() == 7680);
  // Cap enforcement maps to the budget error.
  CHECK_THROWS_AS(cwg::close_group(g2.generators, 100), codes::BudgetError);
}

TEST_CASE("structure reports pass") {
  for (int f : {1, 2}) {
    auto r = cwg::verify_structure(FieldCtx::get(f));
    CAPTURE(f);
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CHECK(c.pass);
    }
    CHECK(r.all_pass());
  }
}

TEST_CASE("Molien series of G1 at low degree") {
  const FieldCtx& f2 = FieldCtx::get(1);
  auto g1 = cwg::close_group(
      cwg::group_generators(f2, gf::pinned_sc_basis(f2), false), 10000);
  auto m = cwg::molien(g1, 16);
  // 1/((1-t^8)(1-t^24)) = 1 + t^8 + t^16 + ...
  std::vector<int> want{1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1};
  REQUIRE(m.coeffs.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(m.coeffs[i] == want[i]);
}

TEST_CASE("Molien series of G2 at low degree") {
  const FieldCtx& f4 = FieldCtx::get(2);
  auto g2 = cwg::close_group(
      cwg::group_generators(f4, gf::pinned_sc_basis(f4), false), 10000);
  auto m = cwg::molien(g2, 12);
  // Partitions into parts {4, 8, 12}: 1 at 4, 2 at 8, 3 at 12.
  std::vector<int> want{1, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 3};
  REQUIRE(m.coeffs.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(m.coeffs[i] == want[i]);
}

TEST_CASE("is_invariant on enumerators") {
  const FieldCtx& f4 = FieldCtx::get(2);
  auto q4 = codes::extended_qr(f4, 3);
  poly::Poly p = poly::cwe(q4);
  CHECK(cwg::is_invariant(p, f4, false));
  CHECK(cwg::is_invariant(p, f4, true));
  CHECK(cwg::is_invariant(p * p, f4, false));
  // Perturbing one coefficient must break invariance.
  poly::Poly bad = p;
  bad.add_term(poly::pack_exps({4, 0, 0, 0}), 1);
  CHECK_FALSE(cwg::is_invariant(bad, f4, false));
  // A non-monomial-permutation-symmetric polynomial fails fast.
  poly::Poly asym(4);
  asym.add_term(poly::pack_exps({0, 4, 0, 0}), 1);
  CHECK_FALSE(cwg::is_invariant(asym, f4, false));
}

TEST_CASE("is_invariant over F2") {
  const FieldCtx& f2 = FieldCtx::get(1);
  auto h8 = codes::extended_qr(f2, 7);
  CHECK(cwg::is_invariant(poly::cwe(h8), f2, false));
}
