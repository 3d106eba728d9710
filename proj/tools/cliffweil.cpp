// cliffweil: command-line front end for the exact Clifford-Weil
// workbench. All subcommands read/write JSON on stdin/stdout (or a
// terse text rendering with --format text); nothing touches the
// network, and identical invocations produce identical bytes.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "cw/codes.hpp"
#include "cw/cwg.hpp"
#include "cw/gf.hpp"
#include "cw/invariants.hpp"
#include "cw/json_io.hpp"
#include "cw/poly.hpp"
#include "cw/reproduce.hpp"

namespace {

using nlohmann::json;
using namespace cw;

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  return std::strtoull(v, nullptr, 10);
}

struct Options {
  std::string format = "json";
  std::uint64_t codeword_budget =
      env_u64("CLIFFWEIL_CODEWORD_BUDGET", codes::kDefaultCodewordBudget);
  std::uint64_t group_cap = env_u64("CLIFFWEIL_GROUP_CAP", 0);  // 0 = default
  int degree_cap =
      static_cast<int>(env_u64("CLIFFWEIL_DEGREE_CAP", inv::kDefaultDegreeCap));

  bool text() const { return format == "text"; }
};

json read_stdin_json() {
  json j;
  try {
    std::cin >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("stdin is not JSON: ") + e.what());
  }
  return j;
}

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.text())
    std::cout << text << "\n";
  else
    std::cout << jio::dump(j);
}

cwg::MatrixGroup build_group(const Options& opt, const gf::FieldCtx& ctx,
                             bool with_galois) {
  auto gens = cwg::group_generators(ctx, gf::pinned_sc_basis(ctx), with_galois);
  std::uint64_t cap =
      opt.group_cap ? opt.group_cap : cwg::default_group_cap(ctx.degree());
  return cwg::close_group(gens, cap);
}

std::string poly_text(const poly::Poly& p) {
  std::ostringstream os;
  os << p.term_count() << " terms, degree " << p.degree();
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Exact workbench for generalized doubly-even self-dual codes"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--codeword-budget", opt.codeword_budget,
                 "Max codewords to enumerate");
  app.add_option("--group-cap", opt.group_cap, "Max group elements (0 = default)");
  app.add_option("--degree-cap", opt.degree_cap, "Max invariant degree");

  std::string field = "F4";
  int p_arg = 7, n_arg = 0, d_arg = 0, degree = 0;
  bool with_galois = false, chk_de = false, chk_sd = false, big = false;
  std::string subfield = "F2";
  std::vector<std::string> only;

  auto* c_field = app.add_subcommand("field", "Field context summary");
  c_field->add_option("--field", field, "Field name, e.g. F4");

  auto* c_code = app.add_subcommand("code", "Code constructions and checks");
  c_code->require_subcommand(1);
  auto* c_qr = c_code->add_subcommand("qr", "Extended quadratic-residue code");
  c_qr->add_option("--field", field);
  c_qr->add_option("--p", p_arg, "Odd prime")->required();
  auto* c_check = c_code->add_subcommand("check", "Check a code from stdin");
  c_check->add_flag("--doubly-even", chk_de);
  c_check->add_flag("--self-dual", chk_sd);
  auto* c_dist = c_code->add_subcommand("dist", "Weight profile of a code from stdin");
  auto* c_expand = c_code->add_subcommand("expand", "Expand a code over a subfield");
  c_expand->add_option("--subfield", subfield);
  auto* c_rat = c_code->add_subcommand("rational", "Rational subcode over a subfield");
  c_rat->add_option("--subfield", subfield);

  auto* c_cwe = app.add_subcommand("cwe", "Complete weight enumerator of a code from stdin");

  auto* c_group = app.add_subcommand("group", "Clifford-Weil groups");
  c_group->require_subcommand(1);
  auto* g_order = c_group->add_subcommand("order", "Group order by closure");
  g_order->add_option("--field", field);
  g_order->add_flag("--with-galois", with_galois);
  auto* g_verify = c_group->add_subcommand("verify", "Structure report");
  g_verify->add_option("--field", field);
  auto* g_molien = c_group->add_subcommand("molien", "Molien series");
  g_molien->add_option("--field", field);
  g_molien->add_option("--degree", degree, "Truncation degree")->required();
  g_molien->add_flag("--with-galois", with_galois);

  auto* c_inv = app.add_subcommand("inv", "Invariant rings and extremality");
  c_inv->require_subcommand(1);
  auto* i_basis = c_inv->add_subcommand("basis", "Invariant space basis");
  i_basis->add_option("--field", field);
  i_basis->add_option("--degree", degree)->required();
  i_basis->add_flag("--with-galois", with_galois);
  auto* i_ext = c_inv->add_subcommand("extremal", "Extremal enumerator search");
  i_ext->add_option("--n", n_arg)->required();
  i_ext->add_option("--d", d_arg)->required();
  auto* i_table = c_inv->add_subcommand("table", "The n -> d table with witnesses");

  auto* c_rep = app.add_subcommand("reproduce", "Run the reproduction suite");
  c_rep->add_flag("--big", big, "Include the long f=3 Molien check");
  c_rep->add_option("--only", only, "Restrict to criterion tags");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*c_field) {
    const auto& ctx = gf::FieldCtx::of_name(field);
    const auto& basis = gf::pinned_sc_basis(ctx);
    json j;
    j["schema"] = jio::kSchema;
    j["kind"] = "field";
    j["name"] = ctx.name();
    j["degree"] = ctx.degree();
    j["modulus_bits"] = ctx.modulus();
    j["sc_basis"] = basis.elems;
    std::vector<int> phi;
    for (std::uint64_t a = 0; a < ctx.order(); ++a)
      phi.push_back(gf::phi(static_cast<gf::Bits>(a), basis));
    j["phi"] = phi;
    emit(opt, j, ctx.name() + " modulus=" + std::to_string(ctx.modulus()));
  } else if (*c_qr) {
    auto c = codes::extended_qr(gf::FieldCtx::of_name(field), p_arg);
    emit(opt, jio::code_to_json(c),
         "[" + std::to_string(c.n) + "," + std::to_string(c.dim()) + "] over " + field);
  } else if (*c_check) {
    auto c = jio::code_from_json(read_stdin_json());
    json j;
    j["schema"] = jio::kSchema;
    j["kind"] = "check";
    bool all = true;
    if (chk_de || !chk_sd) {
      bool de = codes::is_doubly_even(c).ok;
      j["doubly_even"] = de;
      all = all && (!chk_de || de);
    }
    if (chk_sd || !chk_de) {
      bool sd = codes::is_self_dual(c);
      j["self_dual"] = sd;
      all = all && (!chk_sd || sd);
    }
    emit(opt, j, all ? "true" : "false");
  } else if (*c_dist) {
    auto c = jio::code_from_json(read_stdin_json());
    auto w = codes::weight_profile(c, opt.codeword_budget);
    emit(opt, jio::weight_profile_to_json(w),
         "min distance " + std::to_string(w.min_nonzero_weight()));
  } else if (*c_expand) {
    auto c = jio::code_from_json(read_stdin_json());
    const auto& sub = gf::FieldCtx::of_name(subfield);
    auto e = codes::subfield_expand(c, sub, gf::pinned_sc_basis(*c.ctx));
    emit(opt, jio::code_to_json(e),
         "[" + std::to_string(e.n) + "," + std::to_string(e.dim()) + "] over " + subfield);
  } else if (*c_rat) {
    auto c = jio::code_from_json(read_stdin_json());
    auto r = codes::rational_subcode(c, gf::FieldCtx::of_name(subfield));
    emit(opt, jio::code_to_json(r),
         "[" + std::to_string(r.n) + "," + std::to_string(r.dim()) + "] over " + subfield);
  } else if (*c_cwe) {
    auto c = jio::code_from_json(read_stdin_json());
    auto p = poly::cwe(c, opt.codeword_budget);
    emit(opt, jio::poly_to_json(p, c.ctx->name()), poly_text(p));
  } else if (*g_order) {
    auto g = build_group(opt, gf::FieldCtx::of_name(field), with_galois);
    json j;
    j["schema"] = jio::kSchema;
    j["kind"] = "group_order";
    j["order"] = g.order();
    emit(opt, j, std::to_string(g.order()));
  } else if (*g_verify) {
    auto r = cwg::verify_structure(gf::FieldCtx::of_name(field), opt.group_cap);
    emit(opt, jio::structure_to_json(r), r.all_pass() ? "pass" : "FAIL");
    return r.all_pass() ? 0 : 1;
  } else if (*g_molien) {
    auto g = build_group(opt, gf::FieldCtx::of_name(field), with_galois);
    auto m = cwg::molien(g, degree);
    std::string text = "order " + std::to_string(m.group_order) + "; coeffs";
    for (const auto& c : m.coeffs) text += " " + c.get_str();
    emit(opt, jio::molien_to_json(m), text);
  } else if (*i_basis) {
    const auto& ib = inv::invariant_space(gf::FieldCtx::of_name(field), degree,
                                          with_galois, opt.degree_cap);
    emit(opt, jio::invariant_basis_to_json(ib, field),
         "dim " + std::to_string(ib.dim()) + " at degree " + std::to_string(degree));
  } else if (*i_ext) {
    auto r = inv::extremal_search(n_arg, d_arg);
    std::string text = r.feasible
                           ? std::to_string(r.candidates.size()) + " candidate(s)"
                           : "infeasible: " +
                                 (r.obstructions.empty()
                                      ? std::string("?")
                                      : inv::to_string(r.obstructions[0].kind));
    emit(opt, jio::extremal_to_json(r), text);
  } else if (*i_table) {
    auto rows = inv::reproduce_table(opt.codeword_budget);
    std::string text;
    for (const auto& r : rows) {
      text += std::to_string(r.n) + "->" + std::to_string(r.d);
      if (r.discrepancy)
        text += "[enumerator bound " + std::to_string(r.feasible_d) + "]";
      text += " (" + r.witness + (r.witness_ok ? " ok) " : " FAIL) ");
    }
    emit(opt, jio::table_to_json(rows), text);
  } else if (*c_rep) {
    json reports = json::array();
    bool text = opt.text();
    auto progress = [&](const rep::CriterionResult& r) {
      if (!text) return;
      std::cout << (r.skipped ? "SKIP" : r.pass ? "PASS" : "FAIL") << " "
                << r.id << " " << r.name << ": " << r.detail << "\n"
                << std::flush;
    };
    auto results = rep::run_criteria(big, only, progress);
    std::string first_fail;
    for (const auto& r : results) {
      json e;
      e["id"] = r.id;
      e["tag"] = r.tag;
      e["name"] = r.name;
      e["pass"] = r.pass;
      e["skipped"] = r.skipped;
      e["detail"] = r.detail;
      reports.push_back(std::move(e));
      if (!r.skipped && !r.pass && first_fail.empty()) first_fail = r.name;
    }
    bool ok = rep::all_pass(results);
    if (!text) {
      json j;
      j["schema"] = jio::kSchema;
      j["kind"] = "reproduce";
      j["all_pass"] = ok;
      j["criteria"] = std::move(reports);
      std::cout << jio::dump(j);
    } else if (!ok) {
      std::cout << "first failure: " << first_fail << "\n";
    }
    return ok ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const codes::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const poly::TermCapError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
