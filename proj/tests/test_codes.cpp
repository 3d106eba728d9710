#include <doctest.h>

#include <set>

#include "cw/codes.hpp"

using namespace cw;
using codes::LinearCode;
using gf::Bits;
using gf::FieldCtx;

namespace {

// Brute-force dual over all q^n vectors; oracle for small codes.
LinearCode brute_dual(const LinearCode& c) {
  const FieldCtx& ctx = *c.ctx;
  const std::uint64_t q = ctx.order();
  std::uint64_t total = 1;
  for (int i = 0; i < c.n; ++i) total *= q;
  std::vector<std::vector<Bits>> rows;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<Bits> v(c.n);
    std::uint64_t t = idx;
    for (int i = 0; i < c.n; ++i) {
      v[i] = static_cast<Bits>(t % q);
      t /= q;
    }
    bool ortho = true;
    for (const auto& g : c.gens) {
      Bits s = 0;
      for (int i = 0; i < c.n; ++i) s = ctx.add(s, ctx.mul(g[i], v[i]));
      if (s != 0) {
        ortho = false;
        break;
      }
    }
    if (ortho) rows.push_back(std::move(v));
  }
  return codes::make_code(ctx, c.n, std::move(rows));
}

// Exhaustive doubly-even check straight from the definition of phi.
bool brute_doubly_even(const LinearCode& c) {
  const auto& basis = gf::pinned_sc_basis(*c.ctx);
  bool ok = true;
  codes::enumerate_codewords(c, std::uint64_t{1} << 24,
                             [&](const std::vector<Bits>& w) {
                               int s = 0;
                               for (Bits x : w) s += gf::phi(x, basis);
                               if (s % 4 != 0) ok = false;
                             });
  return ok;
}

}  // namespace

TEST_CASE("make_code canonicalizes") {
  const FieldCtx& f4 = FieldCtx::get(2);
  auto a = codes::make_code(f4, 4, {{1, 1, 1, 1}, {0, 1, 2, 3}});
  auto b = codes::make_code(f4, 4, {{0, 1, 2, 3}, {1, 0, 3, 2}, {1, 1, 1, 1}});
  CHECK(a == b);
  CHECK(a.dim() == 2);
}

TEST_CASE("Q4 generator matrix") {
  const FieldCtx& f4 = FieldCtx::get(2);
  auto q4 = codes::extended_qr(f4, 3);
  // RREF of [[1,1,1,1],[0,1,w,w^2]].
  auto want = codes::make_code(f4, 4, {{1, 1, 1, 1}, {0, 1, 2, 3}});
  CHECK(q4 == want);
}

TEST_CASE("duals against brute force") {
  const FieldCtx& f2 = FieldCtx::get(1);
  const FieldCtx& f4 = FieldCtx::get(2);
  auto c1 = codes::make_code(f2, 6, {{1, 1, 0, 0, 1, 0}, {0, 1, 1, 1, 0, 0}});
  CHECK(codes::dual(c1) == brute_dual(c1));
  auto c2 = codes::make_code(f4, 4, {{1, 2, 3, 0}, {0, 1, 1, 2}});
  CHECK(codes::dual(c2) == brute_dual(c2));
  auto q4 = codes::extended_qr(f4, 3);
  CHECK(codes::dual(q4) == q4);
}

TEST_CASE("self-duality and double evenness of small QR codes") {
  const FieldCtx& f2 = FieldCtx::get(1);
  const FieldCtx& f4 = FieldCtx::get(2);
  for (auto [ctx, p] : {std::pair<const FieldCtx*, int>{&f4, 3},
                        {&f2, 7},
                        {&f4, 7},
                        {&f4, 11}}) {
    auto c = codes::extended_qr(*ctx, p);
    CAPTURE(p);
    CHECK(c.n == p + 1);
    CHECK(c.dim() == (p + 1) / 2);
    CHECK(codes::is_self_dual(c));
    CHECK(codes::is_doubly_even(c).ok);
    // The fast path agrees with the definition.
    CHECK(brute_doubly_even(c));
  }
}

TEST_CASE("doubly-even failure yields a witness") {
  const FieldCtx& f4 = FieldCtx::get(2);
  // Every scalar multiple of (1, w, w^2) has phi-sum 4.
  auto c = codes::make_code(f4, 3, {{1, 2, 3}});
  CHECK(codes::is_doubly_even(c).ok);
  auto bad = codes::make_code(f4, 2, {{1, 2}});  // phi(1)+phi(w) = 3
  auto r = codes::is_doubly_even(bad);
  CHECK_FALSE(r.ok);
  REQUIRE(r.witness.size() == 2);
  int s = 0;
  for (Bits x : r.witness) s += gf::phi(x, gf::pinned_sc_basis(f4));
  CHECK(s % 4 != 0);
  CHECK(codes::contains(bad, r.witness));
}

TEST_CASE("minimum distances of Q4, Q8, Q12") {
  const FieldCtx& f4 = FieldCtx::get(2);
  CHECK(codes::min_distance(codes::extended_qr(f4, 3)) == 3);
  CHECK(codes::min_distance(codes::extended_qr(f4, 7)) == 4);
  CHECK(codes::min_distance(codes::extended_qr(f4, 11)) == 6);
}

TEST_CASE("weight profile counts all codewords") {
  const FieldCtx& f4 = FieldCtx::get(2);
  auto q8 = codes::extended_qr(f4, 7);
  auto w = codes::weight_profile(q8);
  std::uint64_t total = 0;
  for (auto c : w.dist) total += c;
  CHECK(total == 256);  // 4^4 codewords
  CHECK(w.dist[0] == 1);
  CHECK(w.min_nonzero_weight() == 4);
}

TEST_CASE("rational subcode against enumeration") {
  const FieldCtx& f2 = FieldCtx::get(1);
  const FieldCtx& f4 = FieldCtx::get(2);
  auto q8 = codes::extended_qr(f4, 7);
  auto rat = codes::rational_subcode(q8, f2);
  // Oracle: count 0/1-valued codewords directly.
  std::uint64_t count = 0;
  codes::enumerate_codewords(q8, 1 << 20, [&](const std::vector<Bits>& w) {
    bool bin = true;
    for (Bits x : w) bin = bin && x <= 1;
    if (bin) ++count;
  });
  CHECK(count == std::uint64_t{1} << rat.dim());
  CHECK(rat.ctx == &f2);
  CHECK(rat.n == 8);
}

TEST_CASE("binary expansion of Q4 is an [8,4,4] code") {
  const FieldCtx& f2 = FieldCtx::get(1);
  const FieldCtx& f4 = FieldCtx::get(2);
  auto q4 = codes::extended_qr(f4, 3);
  auto bin = codes::subfield_expand(q4, f2, gf::pinned_sc_basis(f4));
  CHECK(bin.n == 8);
  CHECK(bin.dim() == 4);
  CHECK(codes::is_self_dual(bin));
  CHECK(codes::min_distance(bin) == 4);
}

TEST_CASE("shorten and adjoin") {
  const FieldCtx& f4 = FieldCtx::get(2);
  auto q8 = codes::extended_qr(f4, 7);
  auto s = codes::shorten(q8, {0, 1});
  CHECK(s.n == 6);
  // Every shortened word extends by zeros to a codeword.
  codes::enumerate_codewords(s, 1 << 20, [&](const std::vector<Bits>& w) {
    std::vector<Bits> ext{0, 0};
    ext.insert(ext.end(), w.begin(), w.end());
    CHECK(codes::contains(q8, ext));
  });
  auto bigger = codes::adjoin(s, std::vector<Bits>(6, 1));
  CHECK(bigger.dim() == s.dim() + 1);
  CHECK_THROWS_AS(codes::adjoin(bigger, std::vector<Bits>(6, 1)),
                  std::invalid_argument);
}

TEST_CASE("budget errors") {
  const FieldCtx& f4 = FieldCtx::get(2);
  auto q8 = codes::extended_qr(f4, 7);
  CHECK_THROWS_AS(codes::enumerate_codewords(q8, 100, [](const auto&) {}),
                  codes::BudgetError);
  CHECK_THROWS_AS(codes::min_distance(q8, 100), codes::BudgetError);
}

TEST_CASE("extended_qr rejects bad parameters") {
  const FieldCtx& f2 = FieldCtx::get(1);
  CHECK_THROWS_AS(codes::extended_qr(f2, 9), std::invalid_argument);   // not prime
  CHECK_THROWS_AS(codes::extended_qr(f2, 3), std::invalid_argument);   // 2 not a QR
  CHECK_THROWS_AS(codes::extended_qr(f2, 2), std::invalid_argument);
}
