#include <doctest.h>

#include "cw/codes.hpp"
#include "cw/poly.hpp"

using namespace cw;
using gf::FieldCtx;
using poly::Poly;

TEST_CASE("key packing is lexicographic") {
  std::vector<int> a{2, 0, 0, 0}, b{1, 1, 0, 0}, c{1, 0, 1, 0};
  CHECK(poly::pack_exps(a) > poly::pack_exps(b));
  CHECK(poly::pack_exps(b) > poly::pack_exps(c));
  CHECK(poly::unpack_exps(poly::pack_exps(c), 4) == c);
  CHECK(poly::key_degree(poly::pack_exps(a), 4) == 2);
}

TEST_CASE("arithmetic basics") {
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  Poly p = (x + y) * (x + y);
  CHECK(p.coefficient(poly::pack_exps({2, 0})) == 1);
  CHECK(p.coefficient(poly::pack_exps({1, 1})) == 2);
  CHECK(p.degree() == 2);
  CHECK(p.is_homogeneous());
  Poly q = p - p;
  CHECK(q.is_zero());
  CHECK((p * mpq_class(1, 2)).coefficient(poly::pack_exps({1, 1})) == 1);
}

TEST_CASE("cwe of the repetition code over F2") {
  const FieldCtx& f2 = FieldCtx::get(1);
  auto rep = codes::make_code(f2, 3, {{1, 1, 1}});
  Poly p = poly::cwe(rep);
  // x0^3 + x1^3
  CHECK(p.term_count() == 2);
  CHECK(p.coefficient(poly::pack_exps({3, 0})) == 1);
  CHECK(p.coefficient(poly::pack_exps({0, 3})) == 1);
}

TEST_CASE("cwe of Q4 matches its weight profile") {
  const FieldCtx& f4 = FieldCtx::get(2);
  auto q4 = codes::extended_qr(f4, 3);
  Poly p = poly::cwe(q4);
  CHECK(p.is_homogeneous());
  CHECK(p.degree() == 4);
  CHECK(poly::evaluate(p, {1, 1, 1, 1}) == 16);
  CHECK(p.coefficient(poly::pack_exps({4, 0, 0, 0})) == 1);
  auto ham = poly::hamming_specialize(p);
  auto w = codes::weight_profile(q4);
  REQUIRE(ham.size() >= w.dist.size());
  for (std::size_t i = 0; i < w.dist.size(); ++i)
    CHECK(ham[i] == mpq_class(static_cast<unsigned long>(w.dist[i])));
}

TEST_CASE("substitution is an algebra morphism") {
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  Poly p = x * x + y * mpq_class(3);
  std::vector<Poly> images{x + y, x - y};
  Poly sub = poly::substitute(p, images);
  // (x+y)^2 + 3(x-y)
  CHECK(sub.coefficient(poly::pack_exps({2, 0})) == 1);
  CHECK(sub.coefficient(poly::pack_exps({1, 1})) == 2);
  CHECK(sub.coefficient(poly::pack_exps({0, 2})) == 1);
  CHECK(sub.coefficient(poly::pack_exps({1, 0})) == 3);
  CHECK(sub.coefficient(poly::pack_exps({0, 1})) == -3);
  // Substituting a point agrees with evaluate.
  CHECK(poly::evaluate(sub, {2, 5}) == poly::evaluate(p, {7, -3}));
}

TEST_CASE("evaluate validates arity") {
  Poly x = Poly::variable(3, 0);
  CHECK_THROWS_AS(poly::evaluate(x, {1, 2}), std::invalid_argument);
}
