#include "cw/json_io.hpp"

#include <stdexcept>

namespace cw::jio {

using nlohmann::json;

namespace {

json base(const char* kind) {
  json j;
  j["schema"] = kSchema;
  j["kind"] = kind;
  return j;
}

void expect(const json& j, const char* kind) {
  if (!j.is_object() || j.value("schema", "") != kSchema)
    throw std::invalid_argument("not a cliffweil/1 payload");
  if (j.value("kind", "") != kind)
    throw std::invalid_argument(std::string("expected kind ") + kind);
}

std::string q2s(const mpq_class& v) { return v.get_str(); }

mpq_class s2q(const std::string& s) {
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  v.canonicalize();
  return v;
}

}  // namespace

json code_to_json(const codes::LinearCode& c) {
  json j = base("code");
  j["field"] = c.ctx->name();
  j["n"] = c.n;
  j["k"] = c.dim();
  json rows = json::array();
  for (const auto& row : c.gens) {
    json r = json::array();
    for (gf::Bits b : row) r.push_back(b);
    rows.push_back(std::move(r));
  }
  j["gens"] = std::move(rows);
  return j;
}

codes::LinearCode code_from_json(const json& j) {
  expect(j, "code");
  const gf::FieldCtx& ctx = gf::FieldCtx::of_name(j.at("field").get<std::string>());
  int n = j.at("n").get<int>();
  std::vector<std::vector<gf::Bits>> rows;
  for (const auto& r : j.at("gens")) {
    std::vector<gf::Bits> row;
    for (const auto& b : r) {
      std::uint64_t v = b.get<std::uint64_t>();
      if (v >= ctx.order()) throw std::invalid_argument("element out of range");
      row.push_back(static_cast<gf::Bits>(v));
    }
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("generator row length != n");
    rows.push_back(std::move(row));
  }
  return codes::make_code(ctx, n, std::move(rows));
}

json poly_to_json(const poly::Poly& p, const std::string& field) {
  json j = base("poly");
  j["field"] = field;
  j["nvars"] = p.nvars();
  json terms = json::array();
  for (const auto& [k, c] : p.terms()) {  // std::map: keys ascend
    json t;
    t["exps"] = poly::unpack_exps(k, p.nvars());
    t["coeff"] = q2s(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

poly::Poly poly_from_json(const json& j) {
  expect(j, "poly");
  int nv = j.at("nvars").get<int>();
  poly::Poly p(nv);
  for (const auto& t : j.at("terms")) {
    std::vector<int> exps = t.at("exps").get<std::vector<int>>();
    if (static_cast<int>(exps.size()) != nv)
      throw std::invalid_argument("exponent vector length != nvars");
    p.add_term(poly::pack_exps(exps), s2q(t.at("coeff").get<std::string>()));
  }
  return p;
}

json molien_to_json(const cwg::MolienSeries& m) {
  json j = base("molien");
  j["group_order"] = m.group_order;
  json coeffs = json::array();
  for (const auto& c : m.coeffs) coeffs.push_back(c.get_str());
  j["coeffs"] = std::move(coeffs);
  return j;
}

json structure_to_json(const cwg::StructureReport& r) {
  json j = base("structure");
  j["f"] = r.f;
  j["group_order"] = r.group_order;
  j["all_pass"] = r.all_pass();
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j;
}

json weight_profile_to_json(const codes::WeightProfile& w) {
  json j = base("weight_profile");
  j["dist"] = w.dist;
  j["min_distance"] = w.min_nonzero_weight();
  return j;
}

json invariant_basis_to_json(const inv::InvariantBasis& b,
                             const std::string& field) {
  json j = base("invariant_basis");
  j["degree"] = b.degree;
  j["dim"] = b.dim();
  json basis = json::array();
  for (const auto& p : b.basis) basis.push_back(poly_to_json(p, field));
  j["basis"] = std::move(basis);
  return j;
}

json extremal_to_json(const inv::ExtremalReport& r) {
  json j = base("extremal");
  j["n"] = r.n;
  j["d"] = r.d;
  j["feasible"] = r.feasible;
  json cands = json::array();
  for (const auto& c : r.candidates) {
    json e;
    e["poly"] = poly_to_json(c.p, "F4");
    e["log2_at_1100"] = c.log2_at_1100;
    cands.push_back(std::move(e));
  }
  j["candidates"] = std::move(cands);
  json obs = json::array();
  for (const auto& o : r.obstructions) {
    json e;
    e["kind"] = inv::to_string(o.kind);
    e["detail"] = o.detail;
    obs.push_back(std::move(e));
  }
  j["obstructions"] = std::move(obs);
  return j;
}

json table_to_json(const std::vector<inv::TableRow>& rows) {
  json j = base("table");
  json rs = json::array();
  for (const auto& r : rows) {
    json e;
    e["n"] = r.n;
    e["d"] = r.d;
    e["feasible_d"] = r.feasible_d;
    e["discrepancy"] = r.discrepancy;
    e["witness"] = r.witness;
    e["witness_ok"] = r.witness_ok;
    rs.push_back(std::move(e));
  }
  j["rows"] = std::move(rs);
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace cw::jio
