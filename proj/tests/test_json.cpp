#include <doctest.h>

#include <json.hpp>

#include "cw/json_io.hpp"

using namespace cw;
using gf::FieldCtx;

TEST_CASE("code JSON round-trip") {
  const FieldCtx& f4 = FieldCtx::get(2);
  auto c = codes::extended_qr(f4, 7);
  auto j = jio::code_to_json(c);
  CHECK(j["schema"] == "cliffweil/1");
  CHECK(j["field"] == "F4");
  CHECK(j["n"] == 8);
  CHECK(j["k"] == 4);
  auto back = jio::code_from_json(j);
  CHECK(back == c);
}

TEST_CASE("code JSON validation") {
  nlohmann::json j;
  j["schema"] = "other/1";
  CHECK_THROWS_AS(jio::code_from_json(j), std::invalid_argument);
  auto good = jio::code_to_json(codes::extended_qr(FieldCtx::get(2), 3));
  auto bad = good;
  bad["gens"][0][0] = 9;  // out of range for F4
  CHECK_THROWS_AS(jio::code_from_json(bad), std::invalid_argument);
}

TEST_CASE("poly JSON round-trip keeps exact rationals") {
  poly::Poly p(4);
  p.add_term(poly::pack_exps({2, 1, 0, 0}), mpq_class(-7, 3));
  p.add_term(poly::pack_exps({0, 0, 3, 0}), mpq_class(5));
  auto j = jio::poly_to_json(p, "F4");
  CHECK(jio::poly_from_json(j) == p);
  // Coefficients appear as exact strings.
  bool found = false;
  for (const auto& t : j["terms"])
    if (t["coeff"] == "-7/3") found = true;
  CHECK(found);
}

TEST_CASE("dump is deterministic") {
  auto c = codes::extended_qr(FieldCtx::get(2), 11);
  CHECK(jio::dump(jio::code_to_json(c)) == jio::dump(jio::code_to_json(c)));
}

TEST_CASE("extremal report JSON") {
  auto r = inv::extremal_search(4, 4);
  auto j = jio::extremal_to_json(r);
  CHECK(j["feasible"] == false);
  CHECK(j["obstructions"].size() > 0);
  std::string kind = j["obstructions"][0]["kind"];
  CHECK((kind == "NEGATIVE_COEFF" || kind == "NOT_POWER_OF_TWO" ||
         kind == "NOT_DIV3" || kind == "NO_SOLUTION"));
}
