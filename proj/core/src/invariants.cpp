#include "cw/invariants.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "cw/linalg.hpp"

namespace cw::inv {

using codes::BudgetError;
using gf::Bits;
using gf::FieldCtx;
using poly::Key;
using poly::Poly;
using poly::PolyZ;

namespace {

void monomials_rec(int nvars, int var, int rem, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if (var == nvars - 1) {
    cur[var] = rem;
    out.push_back(cur);
    return;
  }
  for (int e = rem; e >= 0; --e) {
    cur[var] = e;
    monomials_rec(nvars, var + 1, rem - e, cur, out);
  }
}

std::vector<std::vector<int>> monomials_of_degree(int nvars, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(nvars, 0);
  monomials_rec(nvars, 0, n, cur, out);
  return out;
}

// MacWilliams character matrix without the 2^(-f/2) scale.
std::vector<std::vector<int>> sign_matrix(const FieldCtx& ctx) {
  const int q = static_cast<int>(ctx.order());
  std::vector<std::vector<int>> s(q, std::vector<int>(q));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      s[a][b] = ctx.trace(ctx.mul(Bits(a), Bits(b))) ? -1 : 1;
  return s;
}

// Image of a single monomial under the unscaled character substitution,
// built by multiplying in one linear form per exponent unit.
PolyZ unscaled_h_monomial(const std::vector<int>& exps,
                          const std::vector<std::vector<int>>& sign) {
  const int q = static_cast<int>(exps.size());
  std::vector<PolyZ> linear;
  for (int a = 0; a < q; ++a) {
    PolyZ l(q);
    for (int b = 0; b < q; ++b) {
      std::vector<int> e(q, 0);
      e[b] = 1;
      l.add_term(poly::pack_exps(e), mpz_class(sign[a][b]));
    }
    linear.push_back(std::move(l));
  }
  PolyZ acc = PolyZ::constant(q, mpz_class(1));
  for (int a = 0; a < q; ++a)
    for (int rep = 0; rep < exps[a]; ++rep) acc = acc * linear[a];
  return acc;
}

InvariantBasis compute_invariant_space(const FieldCtx& ctx, int n,
                                       bool with_galois) {
  const int q = static_cast<int>(ctx.order());
  const int f = ctx.degree();
  InvariantBasis out;
  out.degree = n;
  if ((n * f) % 2 != 0) {
    // A rational eigenvector of the rational character matrix cannot
    // have the irrational eigenvalue 2^(nf/2): the fixed space is 0.
    return out;
  }
  const gf::ScBasis& scb = gf::pinned_sc_basis(ctx);

  // d_r condition: sum_a e_a phi(ar) = 0 mod 4, for every r != 0.
  std::vector<std::vector<int>> phase(q, std::vector<int>(q));
  for (int r = 1; r < q; ++r)
    for (int a = 0; a < q; ++a)
      phase[r][a] = gf::phi(ctx.mul(Bits(a), Bits(r)), scb);
  std::vector<std::vector<int>> filtered;
  for (auto& e : monomials_of_degree(q, n)) {
    bool ok = true;
    for (int r = 1; r < q && ok; ++r) {
      int s = 0;
      for (int a = 0; a < q; ++a) s += e[a] * phase[r][a];
      ok = s % 4 == 0;
    }
    if (ok) filtered.push_back(e);
  }

  // Orbits under the m_r variable permutations (and gamma).
  std::vector<std::vector<int>> perms;
  for (int r = 2; r < q; ++r) {
    std::vector<int> p(q);
    for (int a = 0; a < q; ++a) p[a] = static_cast<int>(ctx.mul(Bits(a), Bits(r)));
    perms.push_back(std::move(p));
  }
  if (with_galois) {
    std::vector<int> p(q);
    for (int a = 0; a < q; ++a) p[a] = static_cast<int>(ctx.frobenius(Bits(a), 1));
    perms.push_back(std::move(p));
  }
  std::unordered_map<Key, int> index;  // filtered monomial -> orbit id, -1 unseen
  for (auto& e : filtered) index.emplace(poly::pack_exps(e), -1);
  std::vector<PolyZ> orbit_sums;
  for (auto& e : filtered) {
    Key k0 = poly::pack_exps(e);
    if (index[k0] >= 0) continue;
    int id = static_cast<int>(orbit_sums.size());
    PolyZ s(q);
    std::vector<std::vector<int>> queue{e};
    index[k0] = id;
    s.add_term(k0, mpz_class(1));
    while (!queue.empty()) {
      auto cur = queue.back();
      queue.pop_back();
      for (const auto& p : perms) {
        std::vector<int> img(q, 0);
        for (int a = 0; a < q; ++a) img[p[a]] = cur[a];
        Key k = poly::pack_exps(img);
        auto it = index.find(k);
        if (it == index.end())
          throw std::logic_error("monomial orbit left the filtered set");
        if (it->second >= 0) continue;
        it->second = id;
        s.add_term(k, mpz_class(1));
        queue.push_back(std::move(img));
      }
    }
    orbit_sums.push_back(std::move(s));
  }

  // MacWilliams constraint: B s = 2^(nf/2) s on the span of orbit sums.
  const int J = static_cast<int>(orbit_sums.size());
  mpz_class scale(1);
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), n * f / 2);
  auto sign = sign_matrix(ctx);
  std::map<Key, int> rowidx;
  linalg::Mat a;
  auto row_of = [&](Key k) {
    auto [it, fresh] = rowidx.emplace(k, static_cast<int>(a.size()));
    if (fresh) a.emplace_back(J, 0);
    return it->second;
  };
  for (int j = 0; j < J; ++j) {
    PolyZ w(q);
    for (const auto& [k, c] : orbit_sums[j].terms()) {
      auto exps = poly::unpack_exps(k, q);
      PolyZ img = unscaled_h_monomial(exps, sign);
      for (const auto& [ki, ci] : img.terms()) w.add_term(ki, c * ci);
      w.add_term(k, -c * scale);
    }
    for (const auto& [k, c] : w.terms()) a[row_of(k)][j] = mpq_class(c);
  }
  linalg::Mat combos = linalg::kernel(std::move(a), J);

  std::vector<Poly> raw;
  for (const auto& c : combos) {
    Poly v(q);
    for (int j = 0; j < J; ++j)
      if (c[j] != 0)
        for (const auto& [k, z] : orbit_sums[j].terms())
          v.add_term(k, c[j] * mpq_class(z));
    raw.push_back(std::move(v));
  }

  // Echelonize over the monomial keys in decreasing order, so the
  // first basis element pivots at x_0^n.
  std::set<Key, std::greater<Key>> keys;
  for (const auto& v : raw)
    for (const auto& [k, c] : v.terms()) keys.insert(k);
  std::vector<Key> cols(keys.begin(), keys.end());
  std::map<Key, int> colidx;
  for (std::size_t i = 0; i < cols.size(); ++i) colidx[cols[i]] = int(i);
  linalg::Mat m;
  for (const auto& v : raw) {
    linalg::Vec row(cols.size(), 0);
    for (const auto& [k, c] : v.terms()) row[colidx[k]] = c;
    m.push_back(std::move(row));
  }
  int rank = linalg::rref(m);
  for (int r = 0; r < rank; ++r) {
    Poly v(q);
    for (std::size_t i = 0; i < cols.size(); ++i)
      if (m[r][i] != 0) v.add_term(cols[i], m[r][i]);
    out.basis.push_back(std::move(v));
  }
  return out;
}

}  // namespace

const InvariantBasis& invariant_space(const FieldCtx& ctx, int n,
                                      bool with_galois, int cap) {
  if (n < 0) throw std::invalid_argument("negative degree");
  if (n > cap) throw BudgetError("invariant_space: degree cap exceeded");
  static std::mutex mu;
  static std::map<std::tuple<const FieldCtx*, int, bool>, InvariantBasis> cache;
  std::scoped_lock lock(mu);
  auto key = std::make_tuple(&ctx, n, with_galois);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, compute_invariant_space(ctx, n, with_galois)).first;
  return it->second;
}

Poly derivative(const Poly& p, int var) {
  Poly out(p.nvars());
  for (const auto& [k, c] : p.terms()) {
    auto e = poly::unpack_exps(k, p.nvars());
    if (e[var] == 0) continue;
    int ev = e[var];
    e[var] -= 1;
    out.add_term(poly::pack_exps(e), c * ev);
  }
  return out;
}

int jacobian_rank(const std::vector<Poly>& polys,
                  const std::vector<mpq_class>& point) {
  if (polys.empty()) return 0;
  const int nv = polys[0].nvars();
  if (static_cast<int>(point.size()) != nv)
    throw std::invalid_argument("point dimension mismatch");
  linalg::Mat m;
  for (const auto& p : polys) {
    linalg::Vec row(nv);
    for (int v = 0; v < nv; ++v) row[v] = poly::evaluate(derivative(p, v), point);
    m.push_back(std::move(row));
  }
  return linalg::rank(std::move(m));
}

int check_independence(const std::vector<Poly>& polys) {
  if (polys.empty()) return 0;
  static const int pts[] = {1, 2, 3, 5, 7, 11, 13, 17};
  const int nv = polys[0].nvars();
  if (nv > 8) throw std::invalid_argument("at most 8 variables");
  std::vector<mpq_class> point(pts, pts + nv);
  return jacobian_rank(polys, point);
}

const codes::LinearCode& qr_f4(int p) {
  static std::mutex mu;
  static std::map<int, codes::LinearCode> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(p);
  if (it == cache.end())
    it = cache.emplace(p, codes::extended_qr(FieldCtx::get(2), p)).first;
  return it->second;
}

const std::array<Poly, 4>& f4_qr_enumerators() {
  static const std::array<Poly, 4> gens = [] {
    return std::array<Poly, 4>{poly::cwe(qr_f4(3)), poly::cwe(qr_f4(7)),
                               poly::cwe(qr_f4(11)), poly::cwe(qr_f4(19))};
  }();
  return gens;
}

namespace {

// Rank of a set of polynomials viewed as vectors over their monomials.
int poly_rank(const std::vector<const Poly*>& polys) {
  std::set<Key> keys;
  for (const Poly* p : polys)
    for (const auto& [k, c] : p->terms()) keys.insert(k);
  std::vector<Key> cols(keys.begin(), keys.end());
  std::map<Key, int> colidx;
  for (std::size_t i = 0; i < cols.size(); ++i) colidx[cols[i]] = int(i);
  linalg::Mat m;
  for (const Poly* p : polys) {
    linalg::Vec row(cols.size(), 0);
    for (const auto& [k, c] : p->terms()) row[colidx[k]] = c;
    m.push_back(std::move(row));
  }
  return linalg::rank(std::move(m));
}

}  // namespace

bool product_span_check(int n) {
  if (n % 4 != 0 || n < 4 || n > 36)
    throw std::invalid_argument("product_span_check needs n = 0 mod 4, n <= 36");
  const FieldCtx& f4 = FieldCtx::get(2);
  const auto& g = f4_qr_enumerators();
  // Memoized powers of each generator (degrees 4, 8, 12, 20).
  std::array<std::vector<Poly>, 4> powers;
  auto power = [&](int gi, int e) -> const Poly& {
    auto& ladder = powers[gi];
    if (ladder.empty()) ladder.push_back(Poly::constant(4, 1));
    while (static_cast<int>(ladder.size()) <= e)
      ladder.push_back(ladder.back() * g[gi]);
    return ladder[e];
  };
  std::vector<Poly> prods;
  for (int i = 0; 4 * i <= n; ++i)
    for (int j = 0; 4 * i + 8 * j <= n; ++j)
      for (int k = 0; 4 * i + 8 * j + 12 * k <= n; ++k) {
        int rem = n - 4 * i - 8 * j - 12 * k;
        if (rem % 20 != 0) continue;
        int l = rem / 20;
        prods.push_back(power(0, i) * power(1, j) * power(2, k) * power(3, l));
      }
  const InvariantBasis& ib = invariant_space(f4, n, false);
  std::vector<const Poly*> ps;
  for (const auto& p : prods) ps.push_back(&p);
  if (poly_rank(ps) != ib.dim()) return false;
  // Containment: adding the basis must not raise the rank.
  for (const auto& b : ib.basis) ps.push_back(&b);
  return poly_rank(ps) == ib.dim();
}

std::string to_string(Obstruction o) {
  switch (o) {
    case Obstruction::NEGATIVE_COEFF: return "NEGATIVE_COEFF";
    case Obstruction::NOT_POWER_OF_TWO: return "NOT_POWER_OF_TWO";
    case Obstruction::NOT_DIV3: return "NOT_DIV3";
    case Obstruction::NO_SOLUTION: return "NO_SOLUTION";
  }
  return "?";
}

namespace {

// Value mod 3 of a rational whose denominator is prime to 3.
std::optional<int> mod3(const mpq_class& v) {
  mpz_class den = v.get_den();
  if (mpz_fdiv_ui(den.get_mpz_t(), 3) == 0) return std::nullopt;
  int num = static_cast<int>(mpz_fdiv_ui(mpz_class(v.get_num()).get_mpz_t(), 3));
  int d = static_cast<int>(mpz_fdiv_ui(den.get_mpz_t(), 3));
  // inverse of d mod 3: 1 -> 1, 2 -> 2
  return (num * d) % 3;
}

// Affine form a + sum b_i mu_i, constrained >= 0.
struct AffForm {
  mpq_class a;
  linalg::Vec b;
};

constexpr std::size_t kLatticeCap = 200'000;

// All integer points satisfying every constraint, by Fourier-Motzkin
// elimination of the last variable. The constraint polytopes here are
// bounded (coefficient sums are pinned), so one-sided systems indicate
// a logic error.
void enumerate_lattice(const std::vector<AffForm>& cons, int dim,
                       std::vector<std::vector<long>>& out) {
  if (dim == 0) {
    for (const auto& c : cons)
      if (c.a < 0) return;
    out.push_back({});
    return;
  }
  std::vector<const AffForm*> pos, neg;
  std::vector<AffForm> reduced;
  for (const auto& c : cons) {
    const mpq_class& t = c.b[dim - 1];
    if (t > 0)
      pos.push_back(&c);
    else if (t < 0)
      neg.push_back(&c);
    else
      reduced.push_back({c.a, linalg::Vec(c.b.begin(), c.b.end() - 1)});
  }
  if (pos.empty() || neg.empty())
    throw std::logic_error("unbounded coefficient polytope");
  for (const AffForm* l : pos)
    for (const AffForm* u : neg) {
      // (-t_u) * l + t_l * u eliminates the last variable.
      mpq_class cl = -u->b[dim - 1], cu = l->b[dim - 1];
      AffForm nc;
      nc.a = cl * l->a + cu * u->a;
      nc.b.resize(dim - 1);
      for (int i = 0; i < dim - 1; ++i)
        nc.b[i] = cl * l->b[i] + cu * u->b[i];
      reduced.push_back(std::move(nc));
    }
  std::vector<std::vector<long>> inner;
  enumerate_lattice(reduced, dim - 1, inner);
  for (auto& pt : inner) {
    // Tight rational interval for the last coordinate.
    std::optional<mpq_class> lo, hi;
    auto value = [&](const AffForm& c) {
      mpq_class v = c.a;
      for (int i = 0; i < dim - 1; ++i) v += c.b[i] * pt[i];
      return v;
    };
    for (const AffForm* l : pos) {
      mpq_class bound = -value(*l) / l->b[dim - 1];
      if (!lo || bound > *lo) lo = bound;
    }
    for (const AffForm* u : neg) {
      mpq_class bound = -value(*u) / u->b[dim - 1];
      if (!hi || bound < *hi) hi = bound;
    }
    mpz_class zlo, zhi;
    mpz_cdiv_q(zlo.get_mpz_t(), lo->get_num_mpz_t(), lo->get_den_mpz_t());
    mpz_fdiv_q(zhi.get_mpz_t(), hi->get_num_mpz_t(), hi->get_den_mpz_t());
    for (mpz_class t = zlo; t <= zhi; ++t) {
      if (!t.fits_slong_p()) throw BudgetError("lattice coordinate overflow");
      auto full = pt;
      full.push_back(t.get_si());
      out.push_back(std::move(full));
      if (out.size() > kLatticeCap)
        throw BudgetError("extremal_search: lattice point cap exceeded");
    }
  }
}

void add_note(ExtremalReport& rep, Obstruction kind, const std::string& detail) {
  for (const auto& n : rep.obstructions)
    if (n.kind == kind) return;
  rep.obstructions.push_back({kind, detail});
}

}  // namespace

ExtremalReport extremal_search(int n, int d) {
  if (n % 4 != 0 || n < 4 || n > 24)
    throw std::invalid_argument("extremal_search needs n = 0 mod 4, n <= 24");
  if (d < 1 || d > n) throw std::invalid_argument("need 1 <= d <= n");
  ExtremalReport rep;
  rep.n = n;
  rep.d = d;
  const FieldCtx& f4 = FieldCtx::get(2);
  const InvariantBasis& ib = invariant_space(f4, n, false);
  const int D = ib.dim();
  if (D == 0) {
    add_note(rep, Obstruction::NO_SOLUTION, "invariant space is zero");
    return rep;
  }

  // Linear system on the basis coordinates: x^d | p(1,x,x,x) - 1 and
  // p(1,1,1,1) = 2^n.
  std::vector<std::vector<mpq_class>> ham;
  for (const auto& b : ib.basis) {
    auto h = poly::hamming_specialize(b);
    h.resize(n + 1, 0);
    ham.push_back(std::move(h));
  }
  linalg::Mat A;
  linalg::Vec rhs;
  for (int t = 0; t < d && t <= n; ++t) {
    linalg::Vec row(D);
    for (int j = 0; j < D; ++j) row[j] = ham[j][t];
    A.push_back(std::move(row));
    rhs.push_back(t == 0 ? 1 : 0);
  }
  {
    linalg::Vec row(D);
    for (int j = 0; j < D; ++j) {
      mpq_class s = 0;
      for (int t = 0; t <= n; ++t) s += ham[j][t];
      row[j] = s;
    }
    A.push_back(std::move(row));
    mpz_class pow2(1);
    mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), n);
    rhs.push_back(mpq_class(pow2));
  }
  auto sol = linalg::solve_affine(std::move(A), rhs);
  if (!sol.consistent) {
    add_note(rep, Obstruction::NO_SOLUTION,
             "the linear conditions from c) and e) are inconsistent");
    return rep;
  }
  const int F = static_cast<int>(sol.free_cols.size());

  // Shift the particular solution so the free coordinates are zero;
  // integer coefficients force the free coordinates (which equal pivot
  // coefficients of the echelonized basis) to be integers, so integer
  // parameter vectors exhaust all integral solutions.
  linalg::Vec lam0 = sol.particular;
  for (int i = 0; i < F; ++i) {
    mpq_class s = sol.particular[sol.free_cols[i]];
    for (int j = 0; j < D; ++j) lam0[j] -= s * sol.nullspace[i][j];
  }

  // Mod-3 pretest on p(1,1,0,0): if the affine form is identically 0
  // mod 3, condition d) can never hold.
  {
    std::vector<mpq_class> at1100;
    for (const auto& b : ib.basis)
      at1100.push_back(poly::evaluate(b, {1, 1, 0, 0}));
    mpq_class alpha = 0;
    for (int j = 0; j < D; ++j) alpha += lam0[j] * at1100[j];
    bool all3 = true;
    auto m = mod3(alpha);
    all3 = m && *m == 0;
    for (int i = 0; i < F && all3; ++i) {
      mpq_class beta = 0;
      for (int j = 0; j < D; ++j) beta += sol.nullspace[i][j] * at1100[j];
      auto mb = mod3(beta);
      all3 = mb && *mb == 0;
    }
    if (all3) {
      add_note(rep, Obstruction::NOT_POWER_OF_TWO,
               "p(1,1,0,0) is divisible by 3 for every integral solution, "
               "hence never a power of 2");
      return rep;
    }
  }

  // Affine forms of the monomial coefficients over the parameters.
  std::set<Key> keys;
  for (const auto& b : ib.basis)
    for (const auto& [k, c] : b.terms()) keys.insert(k);
  std::vector<AffForm> coeff_forms;
  std::vector<Key> coeff_keys(keys.begin(), keys.end());
  for (Key k : coeff_keys) {
    AffForm cf;
    cf.a = 0;
    cf.b.assign(F, 0);
    for (int j = 0; j < D; ++j) {
      mpq_class c = ib.basis[j].coefficient(k);
      if (c == 0) continue;
      cf.a += lam0[j] * c;
      for (int i = 0; i < F; ++i) cf.b[i] += sol.nullspace[i][j] * c;
    }
    coeff_forms.push_back(std::move(cf));
  }

  std::vector<std::vector<long>> points;
  enumerate_lattice(coeff_forms, F, points);
  if (points.empty()) {
    add_note(rep, Obstruction::NEGATIVE_COEFF,
             F == 0 ? "the unique solution has a negative coefficient"
                    : "every integral solution has a negative coefficient");
    return rep;
  }

  for (const auto& pt : points) {
    linalg::Vec lam = lam0;
    for (int i = 0; i < F; ++i)
      for (int j = 0; j < D; ++j) lam[j] += pt[i] * sol.nullspace[i][j];
    Poly p(4);
    for (int j = 0; j < D; ++j)
      if (lam[j] != 0)
        for (const auto& [k, c] : ib.basis[j].terms()) p.add_term(k, lam[j] * c);

    // a) nonnegative integers (nonnegativity held by the polytope).
    bool ok = true;
    for (const auto& [k, c] : p.terms()) {
      if (c.get_den() != 1) {
        add_note(rep, Obstruction::NEGATIVE_COEFF,
                 "a solution has a non-integral coefficient");
        ok = false;
        break;
      }
      if (c < 0) throw std::logic_error("polytope admitted a negative coefficient");
    }
    if (!ok) continue;
    // b) coefficients of x0^a (x1 xw xw2)^b with b > 0 divisible by 3.
    for (const auto& [k, c] : p.terms()) {
      auto e = poly::unpack_exps(k, 4);
      if (e[1] == e[2] && e[2] == e[3] && e[1] > 0 &&
          mpz_fdiv_ui(mpz_class(c.get_num()).get_mpz_t(), 3) != 0) {
        add_note(rep, Obstruction::NOT_DIV3,
                 "a coefficient of shape x0^a (x1 xw xw2)^b is not divisible by 3");
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    // d) p(1,1,0,0) = 2^m, m <= n/2. (c and e hold by construction.)
    mpq_class v = poly::evaluate(p, {1, 1, 0, 0});
    mpz_class vz = v.get_num();
    bool pow2 = v.get_den() == 1 && vz > 0 &&
                mpz_popcount(vz.get_mpz_t()) == 1;
    int m = pow2 ? static_cast<int>(mpz_sizeinbase(vz.get_mpz_t(), 2)) - 1 : -1;
    if (!pow2 || m > n / 2) {
      add_note(rep, Obstruction::NOT_POWER_OF_TWO,
               "p(1,1,0,0) is not a power of 2 with exponent <= n/2");
      continue;
    }
    rep.candidates.push_back({std::move(p), m});
  }
  rep.feasible = !rep.candidates.empty();
  if (rep.feasible) rep.obstructions.clear();
  else if (rep.obstructions.empty())
    add_note(rep, Obstruction::NO_SOLUTION, "no candidate survived");
  return rep;
}

std::vector<TableRow> reproduce_table(std::uint64_t budget) {
  std::vector<TableRow> rows;
  for (int n : {4, 8, 12, 16, 20, 24}) {
    TableRow row;
    row.n = n;
    // Feasibility is monotone in d (x^d | q implies x^(d-1) | q), so
    // the first feasible d from the top is the maximum.
    for (int d = n; d >= 1; --d) {
      if (extremal_search(n, d).feasible) {
        row.feasible_d = d;
        break;
      }
    }
    codes::LinearCode c;
    switch (n) {
      case 4: c = qr_f4(3); row.witness = "Q4"; break;
      case 8: c = qr_f4(7); row.witness = "Q8"; break;
      case 12: c = qr_f4(11); row.witness = "Q12"; break;
      case 16:
        c = codes::sixteen_from_q20(qr_f4(19));
        row.witness = "shortened-Q20";
        break;
      case 20: c = qr_f4(19); row.witness = "Q20"; break;
      case 24: c = qr_f4(23); row.witness = "Q24"; break;
    }
    row.d = codes::min_distance(c, budget);
    row.witness_ok = codes::is_self_dual(c) && codes::is_doubly_even(c).ok;
    row.discrepancy = row.feasible_d != row.d;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cw::inv
