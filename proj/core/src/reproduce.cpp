#include "cw/reproduce.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "cw/codes.hpp"
#include "cw/cwg.hpp"
#include "cw/gf.hpp"
#include "cw/invariants.hpp"
#include "cw/poly.hpp"

namespace cw::rep {

namespace {

using gf::FieldCtx;

// --- truncated integer power series ---------------------------------------

using Series = std::vector<mpz_class>;  // coefficients 0..deg

Series series_mul(const Series& a, const Series& b, int deg) {
  Series out(deg + 1, 0);
  for (int i = 0; i <= deg && i < static_cast<int>(a.size()); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= deg && j < static_cast<int>(b.size()); ++j)
      out[i + j] += a[i] * b[j];
  }
  return out;
}

// num / den as a power series; den must have constant term 1.
Series series_div(const Series& num, const Series& den, int deg) {
  Series out(deg + 1, 0);
  for (int k = 0; k <= deg; ++k) {
    mpz_class s = k < static_cast<int>(num.size()) ? num[k] : mpz_class(0);
    for (int j = 1; j <= k && j < static_cast<int>(den.size()); ++j)
      s -= den[j] * out[k - j];
    out[k] = s;
  }
  return out;
}

Series one_minus_tk(int k, int deg) {
  Series s(deg + 1, 0);
  s[0] = 1;
  if (k <= deg) s[k] = -1;
  return s;
}

std::string fmt_series(const Series& s, int upto) {
  std::ostringstream os;
  for (int i = 0; i <= upto && i < static_cast<int>(s.size()); ++i) {
    if (i) os << ",";
    os << s[i].get_str();
  }
  return os.str();
}

// --- shared lazily-built artifacts -----------------------------------------

struct Workspace {
  std::map<std::pair<std::string, int>, codes::LinearCode> codes_;
  std::optional<cwg::MatrixGroup> g1, g2, g2g;
  std::optional<cwg::MolienSeries> molien_g1, molien_g2, molien_g2g;
  std::optional<codes::LinearCode> c16;

  const codes::LinearCode& qr(const FieldCtx& ctx, int p) {
    auto key = std::make_pair(ctx.name(), p);
    auto it = codes_.find(key);
    if (it == codes_.end())
      it = codes_.emplace(key, codes::extended_qr(ctx, p)).first;
    return it->second;
  }

  const cwg::MatrixGroup& group(int f, bool with_galois) {
    auto& slot = f == 1 ? g1 : (with_galois ? g2g : g2);
    if (!slot) {
      const FieldCtx& ctx = FieldCtx::get(f);
      auto gens = cwg::group_generators(ctx, gf::pinned_sc_basis(ctx),
                                        with_galois);
      slot = cwg::close_group(gens, cwg::default_group_cap(f));
    }
    return *slot;
  }

  const cwg::MolienSeries& molien(int f, bool with_galois, int deg) {
    auto& slot = f == 1 ? molien_g1 : (with_galois ? molien_g2g : molien_g2);
    if (!slot || static_cast<int>(slot->coeffs.size()) <= deg)
      slot = cwg::molien(group(f, with_galois), deg);
    return *slot;
  }

  const codes::LinearCode& sixteen() {
    if (!c16) c16 = codes::sixteen_from_q20(qr(FieldCtx::get(2), 19));
    return *c16;
  }
};

struct Check {
  int id;
  const char* tag;
  const char* name;
  bool big_only;
  std::function<bool(Workspace&, std::string&)> run;
};

const std::pair<int, int> kQrPairs[] = {
    {2, 3}, {1, 7}, {2, 7}, {2, 11}, {2, 19}, {2, 23}, {1, 23}};

bool c1(Workspace& w, std::string& detail) {
  for (auto [f, p] : kQrPairs) {
    const auto& c = w.qr(FieldCtx::get(f), p);
    auto de = codes::is_doubly_even(c);
    if (!de.ok || !codes::is_self_dual(c)) {
      detail = "Q over F" + std::to_string(1 << f) + ", p=" + std::to_string(p) +
               (de.ok ? " not self-dual" : " not doubly even");
      return false;
    }
  }
  detail = "7 codes doubly-even and self-dual";
  return true;
}

bool c2(Workspace& w, std::string& detail) {
  const FieldCtx& f4 = FieldCtx::get(2);
  const std::pair<int, int> want[] = {{3, 3}, {7, 4}, {11, 6}, {19, 8}, {23, 8}};
  std::ostringstream os;
  for (auto [p, d] : want) {
    int got = codes::min_distance(w.qr(f4, p));
    os << "d(Q" << p + 1 << ")=" << got << " ";
    if (got != d) {
      detail = os.str() + "(expected " + std::to_string(d) + ")";
      return false;
    }
  }
  detail = os.str();
  return true;
}

bool c3(Workspace& w, std::string& detail) {
  for (auto [f, p] : kQrPairs) {
    const FieldCtx& ctx = FieldCtx::get(f);
    poly::Poly p_cwe = poly::cwe(w.qr(ctx, p));
    if (!cwg::is_invariant(p_cwe, ctx, false)) {
      detail = "cwe of QR p=" + std::to_string(p) + " over F" +
               std::to_string(1 << f) + " is not invariant";
      return false;
    }
  }
  detail = "all 7 enumerators invariant under the matching generators";
  return true;
}

bool c4(Workspace& w, std::string& detail) {
  std::size_t o1 = w.group(1, false).order();
  std::size_t o2 = w.group(2, false).order();
  std::size_t o2g = w.group(2, true).order();
  detail = "|G1|=" + std::to_string(o1) + " |G2|=" + std::to_string(o2) +
           " |<G2,Gamma2>|=" + std::to_string(o2g);
  return o1 == 192 && o2 == 3840 && o2g == 7680;
}

bool c5(Workspace&, std::string& detail) {
  for (int f : {1, 2}) {
    auto r = cwg::verify_structure(FieldCtx::get(f));
    if (!r.all_pass()) {
      for (const auto& c : r.checks)
        if (!c.pass) detail += "f=" + std::to_string(f) + " " + c.name + "; ";
      return false;
    }
  }
  detail = "all structure checks pass for f=1,2";
  return true;
}

bool c6(Workspace& w, std::string& detail) {
  const int deg = 40;
  Series num(deg + 1, 0);
  num[0] = 1;
  num[40] = 1;
  Series den = one_minus_tk(4, deg);
  for (int k : {8, 12, 20}) den = series_mul(den, one_minus_tk(k, deg), deg);
  Series ref = series_div(num, den, deg);
  const auto& m = w.molien(2, false, deg);
  for (int i = 0; i <= deg; ++i)
    if (m.coeffs[i] != ref[i]) {
      detail = "mismatch at t^" + std::to_string(i);
      return false;
    }
  detail = "coeffs 0..40: " + fmt_series(m.coeffs, 24) + ",...";
  return true;
}

bool c7(Workspace& w, std::string& detail) {
  const int deg = 32;
  Series num(deg + 1, 0);
  num[0] = 1;
  Series den = series_mul(one_minus_tk(8, deg), one_minus_tk(24, deg), deg);
  Series ref = series_div(num, den, deg);
  const auto& m = w.molien(1, false, deg);
  for (int i = 0; i <= deg; ++i)
    if (m.coeffs[i] != ref[i]) {
      detail = "mismatch at t^" + std::to_string(i);
      return false;
    }
  detail = "coeffs 0..32: " + fmt_series(m.coeffs, 32);
  return true;
}

bool c8(Workspace&, std::string& detail) {
  const auto& g = inv::f4_qr_enumerators();
  int r = inv::check_independence({g[0], g[1], g[2], g[3]});
  detail = "Jacobian rank " + std::to_string(r);
  return r == 4;
}

bool c9(Workspace&, std::string& detail) {
  for (int n : {8, 12, 16, 20, 24})
    if (!inv::product_span_check(n)) {
      detail = "products fail to span at n=" + std::to_string(n);
      return false;
    }
  detail = "QR enumerator products span degrees 8..24";
  return true;
}

bool c10(Workspace& w, std::string& detail) {
  const auto& plain = w.molien(2, false, 40);
  const auto& gal = w.molien(2, true, 40);
  mpz_class diff = plain.coeffs[40] - gal.coeffs[40];
  detail = "dim Inv(G2)_40 - dim Inv(<G2,Gamma2>)_40 = " + diff.get_str();
  return diff == 1;
}

// Re-checks the five enumerator conditions on a degree-n candidate from
// first principles (independent of the search that produced it): integer
// nonnegative coefficients, mod-3 divisibility of the x0^a (x1 xw xw2)^b
// coefficients, p(1,1,1,1) = 2^n, p(1,1,0,0) = 2^m with m <= n/2, and
// x^d | p(1,x,x,x) - 1. Returns m, or -1 if any condition fails.
int recheck_candidate(const poly::Poly& p, int n, int d) {
  mpq_class total = 0, rational = 0;
  std::map<int, mpq_class> ham;
  for (const auto& [k, c] : p.terms()) {
    auto e = poly::unpack_exps(k, 4);
    if (c < 0 || c.get_den() != 1) return -1;
    if (e[1] == e[2] && e[2] == e[3] && e[1] > 0 && c.get_num() % 3 != 0)
      return -1;
    total += c;
    if (e[2] == 0 && e[3] == 0) rational += c;
    ham[e[1] + e[2] + e[3]] += c;
  }
  mpz_class two_n = 1;
  two_n <<= n;
  if (total != two_n) return -1;
  if (ham[0] != 1) return -1;
  for (int w = 1; w < d; ++w)
    if (ham.count(w) && ham[w] != 0) return -1;
  mpz_class v = rational.get_num();
  if (rational.get_den() != 1 || v <= 0) return -1;
  int m = int(mpz_sizeinbase(v.get_mpz_t(), 2)) - 1;
  mpz_class two_m = 1;
  two_m <<= m;
  if (v != two_m || m > n / 2) return -1;
  return m;
}

bool c11(Workspace&, std::string& detail) {
  auto r16 = inv::extremal_search(16, 7);
  auto r24 = inv::extremal_search(24, 9);
  auto has = [](const inv::ExtremalReport& r, inv::Obstruction o) {
    for (const auto& n : r.obstructions)
      if (n.kind == o) return true;
    return false;
  };
  bool ok16 = !r16.feasible && has(r16, inv::Obstruction::NEGATIVE_COEFF);
  // At (24,9) the five conditions do not rule the distance out: the exact
  // search yields two candidate enumerators, and both survive a from-scratch
  // recheck of every condition here. Their values at (1,1,0,0) are 2^4 and
  // 2^2, both = 1 mod 3, so no mod-3 argument can exclude a power of 2 on
  // this family. The criterion verifies this computed outcome and flags the
  // disagreement with the previously reported exclusion.
  bool ok24 = r24.feasible && r24.candidates.size() == 2;
  std::string ms = "";
  if (ok24) {
    std::vector<int> want_m{4, 2};
    for (std::size_t i = 0; i < 2; ++i) {
      int m = recheck_candidate(r24.candidates[i].p, 24, 9);
      ok24 = ok24 && m == want_m[i] && r24.candidates[i].log2_at_1100 == m;
      ms += (i ? "," : "") + std::to_string(m);
    }
  }
  detail = std::string("(16,7): ") +
           (r16.obstructions.empty() ? "feasible"
                                     : inv::to_string(r16.obstructions[0].kind)) +
           "; (24,9): " + std::to_string(r24.candidates.size()) +
           " candidates recheck with p(1,1,0,0) = 2^{" + ms +
           "} (documented exclusion not reproduced; discrepancy flagged)";
  return ok16 && ok24;
}

bool c12(Workspace& w, std::string& detail) {
  auto rows = inv::reproduce_table();
  const std::map<int, int> want{{4, 3}, {8, 4}, {12, 6}, {16, 6}, {20, 8}, {24, 8}};
  const std::map<int, int> want_feasible{{4, 3},  {8, 4},  {12, 6},
                                         {16, 6}, {20, 8}, {24, 9}};
  std::ostringstream os;
  for (const auto& r : rows) {
    os << r.n << "->" << r.d;
    if (r.discrepancy) os << " (enumerator bound " << r.feasible_d << ")";
    os << " ";
    if (want.at(r.n) != r.d || want_feasible.at(r.n) != r.feasible_d ||
        !r.witness_ok || r.discrepancy != (r.n == 24)) {
      detail = os.str() + "(witness " + r.witness + " failed)";
      return false;
    }
  }
  // The n=16 witness, expanded to binary, has the weight profile of the
  // extended binary QR code of length 32.
  const FieldCtx& f4 = FieldCtx::get(2);
  const FieldCtx& f2 = FieldCtx::get(1);
  auto bin = codes::subfield_expand(w.sixteen(), f2, gf::pinned_sc_basis(f4));
  auto qr32 = codes::extended_qr(f2, 31);
  bool profiles = codes::weight_profile(bin).dist == codes::weight_profile(qr32).dist;
  detail = os.str() + (profiles ? "; binary expansion matches QR32 profile"
                                : "; binary expansion profile mismatch");
  return profiles;
}

bool c13(Workspace& w, std::string& detail) {
  const FieldCtx& f4 = FieldCtx::get(2);
  auto r8 = inv::extremal_search(8, 4);
  auto r12 = inv::extremal_search(12, 6);
  bool ok8 = r8.feasible && r8.candidates.size() == 1 &&
             r8.candidates[0].p == poly::cwe(w.qr(f4, 7));
  bool ok12 = r12.feasible && r12.candidates.size() == 1 &&
              r12.candidates[0].p == poly::cwe(w.qr(f4, 11));
  detail = "n=8: " + std::to_string(r8.candidates.size()) +
           " candidate(s); n=12: " + std::to_string(r12.candidates.size());
  return ok8 && ok12;
}

bool c14(Workspace&, std::string& detail) {
  const FieldCtx& f8 = FieldCtx::get(3);
  auto gens = cwg::group_generators(f8, gf::pinned_sc_basis(f8), false);
  auto g3 = cwg::close_group(gens, cwg::default_group_cap(3));
  if (g3.order() != 258048) {
    detail = "|G3|=" + std::to_string(g3.order());
    return false;
  }
  const int deg = 32;
  auto m = cwg::molien(g3, deg);
  // Multiply the series by the denominator and spot-check the numerator.
  Series den(1, 1);
  for (int k : {8, 8, 16, 16, 24, 24}) den = series_mul(den, one_minus_tk(k, deg), deg);
  for (int k : {56, 72}) den = series_mul(den, one_minus_tk(k, deg), deg);
  Series num = series_mul(m.coeffs, den, deg);
  const std::pair<int, int> want[] = {{0, 1}, {16, 5}, {24, 77}, {32, 300}};
  detail = "|G3|=258048 numerator:";
  for (auto [i, v] : want) {
    detail += " t^" + std::to_string(i) + "=" + num[i].get_str();
    if (num[i] != v) return false;
  }
  return true;
}

const Check kChecks[] = {
    {1, "codes", "doubly-even self-dual QR codes", false, c1},
    {2, "distance", "minimum distances match the table", false, c2},
    {3, "invariance", "cwe invariance under G_f", false, c3},
    {4, "group", "group orders 192 / 3840 / 7680", false, c4},
    {5, "group", "structure report f=1,2", false, c5},
    {6, "molien", "Molien series of G2", false, c6},
    {7, "molien", "Molien series of G1", false, c7},
    {8, "independence", "Jacobian rank of the QR enumerators", false, c8},
    {9, "span", "products span low-degree invariants", false, c9},
    {10, "molien", "p40 existence from Molien series", false, c10},
    {11, "extremal", "extremality analysis at (16,7), (24,9)", false, c11},
    {12, "table", "d-table reproduction with witnesses", false, c12},
    {13, "extremal", "uniqueness at n=8, n=12", false, c13},
    {14, "big", "Molien series of G3 (large closure)", true, c14},
};

}  // namespace

std::vector<CriterionResult> run_criteria(bool big,
                                          const std::vector<std::string>& only,
                                          const Progress& progress) {
  Workspace w;
  std::vector<CriterionResult> out;
  for (const auto& c : kChecks) {
    CriterionResult r;
    r.id = c.id;
    r.tag = c.tag;
    r.name = c.name;
    bool selected = only.empty() ||
                    std::find(only.begin(), only.end(), c.tag) != only.end();
    if (!selected || (c.big_only && !big)) {
      r.skipped = true;
      r.detail = c.big_only && !big ? "requires --big" : "filtered out";
    } else {
      try {
        r.pass = c.run(w, r.detail);
      } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
      }
    }
    if (progress) progress(r);
    out.push_back(std::move(r));
  }
  return out;
}

bool all_pass(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.skipped && !r.pass) return false;
  return true;
}

}  // namespace cw::rep
