#include "cw/gf.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace cw::gf {

namespace poly2 {

int degree(std::uint64_t p) {
  if (p == 0) return -1;
  return 63 - __builtin_clzll(p);
}

static std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

static std::uint64_t mod(std::uint64_t a, std::uint64_t m) {
  int dm = degree(m);
  for (int d = degree(a); d >= dm; d = degree(a)) a ^= m << (d - dm);
  return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return mod(mul(a, b), m);
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a = mod(a, b);
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(std::uint64_t p) {
  int n = degree(p);
  if (n <= 0) return false;
  if (n == 1) return true;
  if (!(p & 1)) return false;  // divisible by x
  // x^(2^n) == x mod p, and gcd(x^(2^(n/r)) - x, p) == 1 for prime r | n.
  std::uint64_t x2k = 2;  // x^(2^0) = x
  std::vector<std::uint64_t> powers(n + 1);
  for (int k = 0; k <= n; ++k) {
    powers[k] = x2k;
    x2k = mulmod(x2k, x2k, p);
  }
  if (powers[n] != 2) return false;  // frobenius^n must fix x
  for (int r = 2; r <= n; ++r) {
    if (n % r) continue;
    bool prime = true;
    for (int s = 2; s * s <= r; ++s)
      if (r % s == 0) prime = false;
    if (!prime) continue;
    if (gcd(powers[n / r] ^ 2u, p) != 1) return false;
  }
  return true;
}

std::uint64_t canonical_irreducible(int n) {
  if (n == 1) return 0b10;  // x: GF(2) itself, never used for reduction
  // Candidates have constant term 1 and odd weight (even weight has root 1).
  for (int w = 3; w <= n + 1; w += 2) {
    // Enumerate degree-n polynomials of weight w in increasing value:
    // choose w-2 middle bits out of positions 1..n-1.
    std::vector<int> pos(w - 2);
    for (int i = 0; i < w - 2; ++i) pos[i] = i + 1;
    while (true) {
      std::uint64_t p = (std::uint64_t{1} << n) | 1;
      for (int i : pos) p |= std::uint64_t{1} << i;
      if (is_irreducible(p)) return p;
      // next combination (lexicographic on bit positions = increasing value)
      int i = w - 3;
      while (i >= 0 && pos[i] == n - 1 - (w - 3 - i)) --i;
      if (i < 0) break;
      ++pos[i];
      for (int j = i + 1; j < w - 2; ++j) pos[j] = pos[j - 1] + 1;
    }
  }
  throw std::logic_error("no irreducible polynomial of degree " +
                         std::to_string(n));
}

}  // namespace poly2

FieldCtx::FieldCtx(int m, Bits mod) : m_(m), mod_(mod) {
  if (m >= 2 && 2 * m <= 16) {
    multab_.resize(std::size_t{1} << (2 * m));
    for (Bits a = 0; a < order(); ++a)
      for (Bits b = 0; b < order(); ++b)
        multab_[(a << m_) | b] = mul_slow(a, b);
  }
}

Bits FieldCtx::mul_slow(Bits a, Bits b) const {
  if (m_ == 1) return a & b;
  std::uint64_t r = 0, aa = a;
  while (b) {
    if (b & 1) r ^= aa;
    aa <<= 1;
    b >>= 1;
  }
  int dm = m_;
  for (int d = poly2::degree(r); d >= dm; d = poly2::degree(r))
    r ^= std::uint64_t{mod_} << (d - dm);
  return static_cast<Bits>(r);
}

const FieldCtx& FieldCtx::get(int degree) {
  if (degree < 1 || degree > 31)
    throw std::invalid_argument("field degree out of range: " +
                                std::to_string(degree));
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FieldCtx>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(degree);
  if (it == cache.end()) {
    Bits mod = static_cast<Bits>(poly2::canonical_irreducible(degree));
    it = cache.emplace(degree, std::unique_ptr<FieldCtx>(
                                   new FieldCtx(degree, mod)))
             .first;
  }
  return *it->second;
}

const FieldCtx& FieldCtx::of_name(std::string_view name) {
  if (name.size() < 2 || name[0] != 'F')
    throw std::invalid_argument("bad field spec: " + std::string(name));
  std::uint64_t q = 0;
  for (char c : name.substr(1)) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("bad field spec: " + std::string(name));
    q = q * 10 + (c - '0');
  }
  int m = 0;
  while ((std::uint64_t{1} << m) < q) ++m;
  if ((std::uint64_t{1} << m) != q || m < 1)
    throw std::invalid_argument("field size must be a power of 2: " +
                                std::string(name));
  return get(m);
}

Bits FieldCtx::pow(Bits a, std::uint64_t e) const {
  Bits r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Bits FieldCtx::inv(Bits a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return pow(a, order() - 2);
}

Bits FieldCtx::frobenius(Bits a, int k) const {
  k %= m_;
  if (k < 0) k += m_;
  for (int i = 0; i < k; ++i) a = mul(a, a);
  return a;
}

int FieldCtx::trace(Bits a) const {
  Bits t = 0, x = a;
  for (int k = 0; k < m_; ++k) {
    t ^= x;
    x = mul(x, x);
  }
  // t lies in GF(2) = {0,1} by construction.
  if (t > 1) throw std::logic_error("trace escaped GF(2)");
  return static_cast<int>(t);
}

Bits FieldCtx::generator() const {
  if (generator_) return generator_;
  std::uint64_t n = order() - 1;
  std::vector<std::uint64_t> primes;
  std::uint64_t nn = n;
  for (std::uint64_t p = 2; p * p <= nn; ++p)
    if (nn % p == 0) {
      primes.push_back(p);
      while (nn % p == 0) nn /= p;
    }
  if (nn > 1) primes.push_back(nn);
  for (Bits g = 2; g < order(); ++g) {
    bool ok = true;
    for (auto p : primes)
      if (pow(g, n / p) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      generator_ = g;
      return g;
    }
  }
  if (order() == 2) return generator_ = 1;
  throw std::logic_error("no generator found");
}

int trace(const FieldElement& a) { return a.ctx->trace(a.bits); }

FieldElement frobenius(const FieldElement& a, int k) {
  return {a.ctx->frobenius(a.bits, k), *a.ctx};
}

ScBasis find_sc_basis(const FieldCtx& ctx) {
  const int f = ctx.degree();
  std::vector<Bits> chosen;
  // DFS in element order; the Gram condition forces linear independence.
  auto dfs = [&](auto&& self) -> bool {
    if (static_cast<int>(chosen.size()) == f) return true;
    for (Bits b = 1; b < ctx.order(); ++b) {
      if (ctx.trace(ctx.mul(b, b)) != 1) continue;
      bool ok = true;
      for (Bits c : chosen)
        if (ctx.trace(ctx.mul(b, c)) != 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(b);
      if (self(self)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!dfs(dfs))
    throw std::logic_error("no self-complementary basis in " + ctx.name());
  return ScBasis{&ctx, chosen};
}

const ScBasis& pinned_sc_basis(const FieldCtx& ctx) {
  static std::mutex mu;
  static std::map<int, ScBasis> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(ctx.degree());
  if (it == cache.end())
    it = cache.emplace(ctx.degree(), find_sc_basis(ctx)).first;
  return it->second;
}

std::vector<int> expand(Bits a, const ScBasis& basis) {
  // Trace-orthonormality gives the coordinates directly: a_i = tau(a b_i).
  std::vector<int> coords(basis.elems.size());
  for (std::size_t i = 0; i < basis.elems.size(); ++i)
    coords[i] = basis.ctx->trace(basis.ctx->mul(a, basis.elems[i]));
  return coords;
}

Bits combine(const std::vector<int>& coords, const ScBasis& basis) {
  if (coords.size() != basis.elems.size())
    throw std::invalid_argument("coordinate length mismatch");
  Bits a = 0;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i]) a ^= basis.elems[i];
  return a;
}

int phi(Bits a, const ScBasis& basis) {
  int w = 0;
  for (Bits b : basis.elems) w += basis.ctx->trace(basis.ctx->mul(a, b));
  return w & 3;
}

FieldEmbedding::FieldEmbedding(const FieldCtx& sub, const FieldCtx& big)
    : sub_(&sub), big_(&big) {
  if (big.degree() % sub.degree() != 0)
    throw std::invalid_argument("not a subfield: " + sub.name() + " into " +
                                big.name());
  const int s = sub.degree(), m = big.degree();
  if (s == m && sub.modulus() == big.modulus()) {
    root_ = static_cast<Bits>(2 % big.order());
  } else {
    // All roots of the subfield modulus live in the unique subfield of
    // size 2^s, i.e. among {0} and the powers of g^((2^m-1)/(2^s-1)).
    // Take the smallest root in element order.
    const std::uint64_t sub_order = std::uint64_t{1} << s;
    Bits u = big.pow(big.generator(), (big.order() - 1) / (sub_order - 1));
    std::vector<Bits> candidates = {0, 1};
    Bits x = u;
    while (x != 1) {
      candidates.push_back(x);
      x = big.mul(x, u);
    }
    std::optional<Bits> best;
    for (Bits c : candidates) {
      Bits v = 0, xp = 1;
      std::uint64_t modp = sub.modulus();
      for (int i = 0; i <= s; ++i) {
        if ((modp >> i) & 1) v ^= xp;
        xp = big.mul(xp, c);
      }
      if (v == 0 && (!best || c < *best)) best = c;
    }
    if (!best)
      throw std::logic_error("subfield modulus has no root in " + big.name());
    root_ = *best;
  }
  root_pows_.resize(s);
  root_pows_[0] = 1;
  for (int i = 1; i < s; ++i) root_pows_[i] = big.mul(root_pows_[i - 1], root_);

  // Gaussian elimination over GF(2) on [columns | identity tag bits]:
  // row r encodes sum of root powers selected by the high tag bits.
  // We store, for each pivot bit of the big field, a row that eliminates it.
  solver_rows_.assign(s, 0);
  solver_pivots_.assign(m, -1);
  std::vector<std::uint64_t> rows(s);
  for (int i = 0; i < s; ++i)
    rows[i] = (std::uint64_t{root_pows_[i]}) | (std::uint64_t{1} << (32 + i));
  int rank = 0;
  for (int bit = m - 1; bit >= 0 && rank < s; --bit) {
    int piv = -1;
    for (int r = rank; r < s; ++r)
      if ((rows[r] >> bit) & 1) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int r = 0; r < s; ++r)
      if (r != rank && ((rows[r] >> bit) & 1)) rows[r] ^= rows[rank];
    solver_pivots_[bit] = rank;
    ++rank;
  }
  if (rank != s) throw std::logic_error("subfield powers not independent");
  solver_rows_ = rows;
}

Bits FieldEmbedding::to_big(Bits a) const {
  Bits v = 0;
  for (int i = 0; i < sub_->degree(); ++i)
    if ((a >> i) & 1) v ^= root_pows_[i];
  return v;
}

std::optional<Bits> FieldEmbedding::to_sub(Bits a) const {
  std::uint64_t acc = a;
  for (int bit = big_->degree() - 1; bit >= 0; --bit) {
    if (!((acc >> bit) & 1)) continue;
    int r = solver_pivots_[bit];
    if (r < 0) return std::nullopt;
    acc ^= solver_rows_[r];
  }
  if (acc & 0xffffffffu) return std::nullopt;  // inconsistent residue
  Bits res = 0;
  for (int i = 0; i < sub_->degree(); ++i)
    if ((acc >> (32 + i)) & 1) res |= Bits{1} << i;
  return res;
}

}  // namespace cw::gf
