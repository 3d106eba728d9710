#include "cw/codes.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace cw::codes {

using gf::Bits;
using gf::FieldCtx;

namespace {

// In-place RREF: leftmost pivot, monic rows, eliminate above and below.
void rref(const FieldCtx& F, std::vector<std::vector<Bits>>& rows, int n) {
  std::size_t pr = 0;
  for (int c = 0; c < n && pr < rows.size(); ++c) {
    std::size_t piv = pr;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[pr], rows[piv]);
    Bits iv = F.inv(rows[pr][c]);
    if (iv != 1)
      for (auto& x : rows[pr]) x = F.mul(iv, x);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pr || rows[r][c] == 0) continue;
      Bits lam = rows[r][c];
      for (int j = 0; j < n; ++j)
        rows[r][j] ^= F.mul(lam, rows[pr][j]);
    }
    ++pr;
  }
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const std::vector<Bits>& r) {
                              return std::all_of(r.begin(), r.end(),
                                                 [](Bits x) { return x == 0; });
                            }),
             rows.end());
}

Bits dot(const FieldCtx& F, const std::vector<Bits>& a,
         const std::vector<Bits>& b) {
  Bits s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s ^= F.mul(a[i], b[i]);
  return s;
}

int phi_vec(const gf::ScBasis& basis, const std::vector<Bits>& v) {
  int s = 0;
  for (Bits x : v) s += gf::phi(x, basis);
  return s & 3;
}

}  // namespace

std::uint64_t LinearCode::size_bound() const {
  std::uint64_t s = 1;
  for (int i = 0; i < dim(); ++i) {
    if (s > (std::uint64_t{1} << 63) / ctx->order())
      return std::uint64_t{1} << 63;
    s *= ctx->order();
  }
  return s;
}

LinearCode make_code(const FieldCtx& ctx, int n,
                     std::vector<std::vector<Bits>> rows) {
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != n)
      throw std::invalid_argument("generator row length mismatch");
  rref(ctx, rows, n);
  return LinearCode{&ctx, n, std::move(rows)};
}

LinearCode dual(const LinearCode& c) {
  const FieldCtx& F = *c.ctx;
  const int n = c.n, k = c.dim();
  // Kernel of the generator matrix: free columns parametrize the dual.
  std::vector<int> pivot_col(k, -1);
  std::vector<bool> is_pivot(n, false);
  for (int r = 0; r < k; ++r) {
    for (int j = 0; j < n; ++j)
      if (c.gens[r][j] != 0) {
        pivot_col[r] = j;
        is_pivot[j] = true;
        break;
      }
  }
  std::vector<std::vector<Bits>> out;
  for (int j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    std::vector<Bits> v(n, 0);
    v[j] = 1;
    for (int r = 0; r < k; ++r) v[pivot_col[r]] = c.gens[r][j];
    out.push_back(std::move(v));
  }
  return make_code(F, n, std::move(out));
}

bool is_self_orthogonal(const LinearCode& c) {
  const FieldCtx& F = *c.ctx;
  for (int i = 0; i < c.dim(); ++i)
    for (int j = i; j < c.dim(); ++j)
      if (dot(F, c.gens[i], c.gens[j]) != 0) return false;
  return true;
}

bool is_self_dual(const LinearCode& c) {
  return 2 * c.dim() == c.n && is_self_orthogonal(c);
}

void enumerate_codewords(
    const LinearCode& c, std::uint64_t budget,
    const std::function<void(const std::vector<Bits>&)>& fn) {
  if (c.size_bound() > budget)
    throw BudgetError("codeword enumeration over budget for " +
                      c.ctx->name() + " [" + std::to_string(c.n) + "," +
                      std::to_string(c.dim()) + "]");
  const FieldCtx& F = *c.ctx;
  const int k = c.dim();
  const Bits q = static_cast<Bits>(F.order());
  // scaled[r][lam] = lam * row_r, precomputed.
  std::vector<std::vector<std::vector<Bits>>> scaled(k);
  for (int r = 0; r < k; ++r) {
    scaled[r].resize(q);
    for (Bits lam = 0; lam < q; ++lam) {
      scaled[r][lam].resize(c.n);
      for (int j = 0; j < c.n; ++j)
        scaled[r][lam][j] = F.mul(lam, c.gens[r][j]);
    }
  }
  std::vector<Bits> cur(c.n, 0);
  // Message digits in lexicographic order over the element ordering,
  // with incremental row updates.
  auto rec = [&](auto&& self, int r) -> void {
    if (r == k) {
      fn(cur);
      return;
    }
    for (Bits lam = 0;; ++lam) {
      self(self, r + 1);
      if (lam + 1 == q) break;
      // advance digit r from lam to lam+1
      const auto& cur_row = scaled[r][lam];
      const auto& nxt_row = scaled[r][lam + 1];
      for (int j = 0; j < c.n; ++j) cur[j] ^= cur_row[j] ^ nxt_row[j];
    }
    // restore digit r to 0
    const auto& last = scaled[r][q - 1];
    for (int j = 0; j < c.n; ++j) cur[j] ^= last[j];
  };
  rec(rec, 0);
}

DoublyEvenResult is_doubly_even(const LinearCode& c,
                                std::uint64_t full_check_bound) {
  const FieldCtx& F = *c.ctx;
  const gf::ScBasis& basis = gf::pinned_sc_basis(F);
  if (c.size_bound() <= full_check_bound) {
    DoublyEvenResult res{true, {}};
    enumerate_codewords(c, full_check_bound,
                        [&](const std::vector<Bits>& w) {
                          if (!res.ok) return;
                          if (phi_vec(basis, w) != 0) {
                            res.ok = false;
                            res.witness = w;
                          }
                        });
    return res;
  }
  // Polarization fast path: phi vanishes on the F2-span iff it vanishes
  // on each F2-generator and the trace form vanishes on each pair.
  std::vector<std::vector<Bits>> f2gens;
  for (const auto& row : c.gens)
    for (Bits lam = 1; lam < F.order(); ++lam) {
      std::vector<Bits> v(c.n);
      for (int j = 0; j < c.n; ++j) v[j] = F.mul(lam, row[j]);
      f2gens.push_back(std::move(v));
    }
  for (const auto& v : f2gens)
    if (phi_vec(basis, v) != 0) return {false, v};
  for (std::size_t i = 0; i < f2gens.size(); ++i)
    for (std::size_t j = i + 1; j < f2gens.size(); ++j)
      if (F.trace(dot(F, f2gens[i], f2gens[j])) != 0) {
        std::vector<Bits> w(c.n);
        for (int t = 0; t < c.n; ++t) w[t] = f2gens[i][t] ^ f2gens[j][t];
        return {false, w};
      }
  return {true, {}};
}

LinearCode extended_qr(const FieldCtx& F, int p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be an odd prime");
  for (int s = 3; s * s <= p; s += 2)
    if (p % s == 0) throw std::invalid_argument("p must be prime");
  const int f = F.degree();
  const int pm = p % 8;
  if ((pm == 3 || pm == 5) && f % 2 != 0)
    throw std::invalid_argument(
        "p = +-3 (mod 8) requires an even-degree field");

  // Splitting field: GF(2^L) with L = lcm(f, ord_p(2)).
  int t = 1;
  {
    int x = 2 % p;
    while (x != 1) {
      x = (2 * x) % p;
      ++t;
    }
  }
  const int L = f * t / std::gcd(f, t);
  const FieldCtx& E = FieldCtx::get(L);
  gf::FieldEmbedding emb(F, E);

  // zeta := inverse of g^((2^L-1)/p) for the least generator g; this
  // pins which of the two quadratic-residue codes is produced and makes
  // p=3 over F4 reproduce the standard Q4 generator matrix.
  const std::uint64_t cof = (E.order() - 1) / static_cast<std::uint64_t>(p);
  Bits zeta = E.inv(E.pow(E.generator(), cof));

  // g(X) = prod over nonzero squares a mod p of (X - zeta^a).
  std::vector<bool> is_square(p, false);
  for (int a = 1; a < p; ++a) is_square[(a * a) % p] = true;
  std::vector<Bits> g = {1};  // ascending coefficients
  for (int a = 1; a < p; ++a) {
    if (!is_square[a]) continue;
    Bits r = E.pow(zeta, a);
    std::vector<Bits> next(g.size() + 1, 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      next[i + 1] ^= g[i];
      next[i] ^= E.mul(r, g[i]);
    }
    g = std::move(next);
  }
  // Coefficients must drop into the base field.
  std::vector<Bits> gF(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto c = emb.to_sub(g[i]);
    if (!c)
      throw std::logic_error("QR generator polynomial not over " + F.name());
    gF[i] = *c;
  }

  const int k = (p + 1) / 2;
  std::vector<std::vector<Bits>> rows(k, std::vector<Bits>(p + 1, 0));
  for (int i = 0; i < k; ++i) {
    Bits parity = 0;
    for (std::size_t j = 0; j < gF.size(); ++j) {
      rows[i][i + j] = gF[j];
      parity ^= gF[j];
    }
    rows[i][p] = parity;  // extended row sums to zero
  }
  LinearCode c = make_code(F, p + 1, std::move(rows));
  if (c.dim() != k)
    throw std::logic_error("extended QR code has wrong dimension");
  return c;
}

int WeightProfile::min_nonzero_weight() const {
  for (std::size_t w = 1; w < dist.size(); ++w)
    if (dist[w]) return static_cast<int>(w);
  return 0;
}

WeightProfile weight_profile(const LinearCode& c, std::uint64_t budget) {
  WeightProfile wp;
  wp.dist.assign(c.n + 1, 0);
  enumerate_codewords(c, budget, [&](const std::vector<Bits>& w) {
    int wt = 0;
    for (Bits x : w) wt += (x != 0);
    ++wp.dist[wt];
  });
  return wp;
}

int min_distance(const LinearCode& c, std::uint64_t budget) {
  return weight_profile(c, budget).min_nonzero_weight();
}

LinearCode subfield_expand(const LinearCode& c, const FieldCtx& subctx,
                           const gf::ScBasis& basis) {
  const FieldCtx& F = *c.ctx;
  if (subctx.degree() != 1 && subctx.degree() != F.degree())
    throw std::invalid_argument("subfield expansion implemented for F2 only");
  if (subctx.degree() == F.degree()) return c;
  const int e = basis.size();
  std::vector<std::vector<Bits>> rows;
  for (const auto& row : c.gens)
    for (Bits lam = 1; lam < F.order(); ++lam) {
      std::vector<Bits> v(c.n * e);
      for (int j = 0; j < c.n; ++j) {
        auto coords = gf::expand(F.mul(lam, row[j]), basis);
        for (int i = 0; i < e; ++i)
          v[j * e + i] = static_cast<Bits>(coords[i]);
      }
      rows.push_back(std::move(v));
    }
  return make_code(subctx, c.n * e, std::move(rows));
}

LinearCode rational_subcode(const LinearCode& c, const FieldCtx& subctx) {
  const FieldCtx& F = *c.ctx;
  if (F.degree() % subctx.degree() != 0)
    throw std::invalid_argument("not a subfield");
  if (subctx.degree() == F.degree()) return c;
  gf::FieldEmbedding emb(subctx, F);
  const int m = F.degree(), n = c.n;
  // View C as an F2-space with basis {lam * row}; membership of a
  // coordinate in the subfield is the F2-linear condition
  // Phi(x) = x^|sub| + x = 0.
  std::vector<std::vector<Bits>> f2gens;
  for (const auto& row : c.gens)
    for (int tbit = 0; tbit < m; ++tbit) {
      Bits lam = Bits{1} << tbit;
      std::vector<Bits> v(n);
      for (int j = 0; j < n; ++j) v[j] = F.mul(lam, row[j]);
      f2gens.push_back(std::move(v));
    }
  const int nf2 = static_cast<int>(f2gens.size());  // = m*k
  if (nf2 > 64)
    throw BudgetError("rational subcode solver limited to m*k <= 64");
  // Constraint matrix over GF(2): one row per (position, field-bit) pair.
  auto phi_map = [&](Bits x) {
    return F.add(F.pow(x, subctx.order()), x);
  };
  std::vector<std::vector<int>> A(n * m, std::vector<int>(nf2, 0));
  for (int s = 0; s < nf2; ++s)
    for (int j = 0; j < n; ++j) {
      Bits y = phi_map(f2gens[s][j]);
      for (int b = 0; b < m; ++b)
        if ((y >> b) & 1) A[j * m + b][s] = 1;
    }
  // Kernel over GF(2).
  std::vector<std::uint64_t> rows64(n * m, 0);
  for (int r = 0; r < n * m; ++r)
    for (int s = 0; s < nf2; ++s)
      if (A[r][s]) rows64[r] |= std::uint64_t{1} << s;
  std::vector<int> pivot_of_col(nf2, -1);
  int rank = 0;
  for (int s = 0; s < nf2; ++s) {
    int piv = -1;
    for (int r = rank; r < n * m; ++r)
      if ((rows64[r] >> s) & 1) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows64[rank], rows64[piv]);
    for (int r = 0; r < n * m; ++r)
      if (r != rank && ((rows64[r] >> s) & 1)) rows64[r] ^= rows64[rank];
    pivot_of_col[s] = rank;
    ++rank;
  }
  std::vector<std::vector<Bits>> out;
  for (int s = 0; s < nf2; ++s) {
    if (pivot_of_col[s] >= 0) continue;
    // Free column: back-substitute a kernel vector.
    std::vector<int> mu(nf2, 0);
    mu[s] = 1;
    for (int s2 = 0; s2 < nf2; ++s2) {
      int r = pivot_of_col[s2];
      if (r >= 0 && ((rows64[r] >> s) & 1)) mu[s2] = 1;
    }
    std::vector<Bits> w(n, 0);
    for (int t2 = 0; t2 < nf2; ++t2)
      if (mu[t2])
        for (int j = 0; j < n; ++j) w[j] ^= f2gens[t2][j];
    // Map coordinates into the subfield representation.
    std::vector<Bits> ws(n);
    for (int j = 0; j < n; ++j) {
      auto sub = emb.to_sub(w[j]);
      if (!sub) throw std::logic_error("rational subcode solver inconsistency");
      ws[j] = *sub;
    }
    out.push_back(std::move(ws));
  }
  return make_code(subctx, n, std::move(out));
}

LinearCode shorten(const LinearCode& c, const std::vector<int>& positions) {
  const FieldCtx& F = *c.ctx;
  std::vector<bool> drop(c.n, false);
  for (int p : positions) {
    if (p < 0 || p >= c.n) throw std::invalid_argument("position out of range");
    drop[p] = true;
  }
  // Row-reduce with the dropped columns first so codewords vanishing
  // there appear as the trailing rows.
  std::vector<int> order;
  for (int j = 0; j < c.n; ++j)
    if (drop[j]) order.push_back(j);
  for (int j = 0; j < c.n; ++j)
    if (!drop[j]) order.push_back(j);
  std::vector<std::vector<Bits>> rows(c.dim(), std::vector<Bits>(c.n));
  for (int r = 0; r < c.dim(); ++r)
    for (int j = 0; j < c.n; ++j) rows[r][j] = c.gens[r][order[j]];
  rref(F, rows, c.n);
  const int nd = static_cast<int>(positions.size());
  std::vector<std::vector<Bits>> out;
  for (const auto& row : rows) {
    bool zero_prefix = true;
    for (int j = 0; j < nd; ++j)
      if (row[j] != 0) zero_prefix = false;
    if (!zero_prefix) continue;
    std::vector<Bits> v;
    for (int j = nd; j < c.n; ++j) v.push_back(row[j]);
    out.push_back(std::move(v));
  }
  // Undo the column permutation on the kept coordinates: kept columns were
  // appended in increasing original order, so they are already in order.
  return make_code(F, c.n - nd, std::move(out));
}

bool contains(const LinearCode& c, const std::vector<Bits>& v) {
  const FieldCtx& F = *c.ctx;
  std::vector<Bits> w = v;
  for (const auto& row : c.gens) {
    int piv = -1;
    for (int j = 0; j < c.n; ++j)
      if (row[j] != 0) {
        piv = j;
        break;
      }
    if (piv >= 0 && w[piv] != 0) {
      Bits lam = w[piv];
      for (int j = 0; j < c.n; ++j) w[j] ^= F.mul(lam, row[j]);
    }
  }
  return std::all_of(w.begin(), w.end(), [](Bits x) { return x == 0; });
}

LinearCode adjoin(const LinearCode& c, const std::vector<Bits>& v) {
  if (static_cast<int>(v.size()) != c.n)
    throw std::invalid_argument("vector length mismatch");
  if (contains(c, v))
    throw std::invalid_argument("adjoin: vector already lies in the code");
  auto rows = c.gens;
  rows.push_back(v);
  return make_code(*c.ctx, c.n, std::move(rows));
}

LinearCode sixteen_from_q20(const LinearCode& q20) {
  if (q20.n != 20) throw std::invalid_argument("expected a length-20 code");
  const FieldCtx& F2 = FieldCtx::get(1);
  std::vector<int> subset = {0, 1, 2, 3};
  auto next_subset = [&]() -> bool {
    int i = 3;
    while (i >= 0 && subset[i] == 20 - (4 - i)) --i;
    if (i < 0) return false;
    ++subset[i];
    for (int j = i + 1; j < 4; ++j) subset[j] = subset[j - 1] + 1;
    return true;
  };
  do {
    LinearCode s = shorten(q20, subset);
    if (s.dim() != 6) continue;
    std::vector<Bits> ones(16, 1);
    if (contains(s, ones)) continue;
    LinearCode c7 = adjoin(s, ones);
    if (!is_self_orthogonal(c7)) continue;
    // Candidate second vectors: 0/1-valued weight-8 words of the dual,
    // i.e. words of the F2-rational subcode of the dual.
    LinearCode dual_bin = rational_subcode(dual(c7), F2);
    std::vector<std::vector<Bits>> cands;
    enumerate_codewords(dual_bin, 1 << 20, [&](const std::vector<Bits>& w) {
      int wt = 0;
      for (Bits x : w) wt += (x != 0);
      if (wt == 8) cands.push_back(w);
    });
    for (const auto& w : cands) {
      if (contains(c7, w)) continue;
      LinearCode c8 = adjoin(c7, w);
      if (!is_self_dual(c8)) continue;
      if (!is_doubly_even(c8).ok) continue;
      if (min_distance(c8) != 6) continue;
      return c8;
    }
  } while (next_subset());
  throw std::logic_error("n=16 construction search failed");
}

}  // namespace cw::codes
