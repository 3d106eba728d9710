#ifndef CW_POLY_HPP
#define CW_POLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "cw/codes.hpp"

namespace cw::poly {

// Exponent vector for up to 8 variables, packed big-endian into a
// 64-bit key so that integer order equals lexicographic order on
// (e_0, ..., e_{q-1}) under the field-element variable ordering.
using Key = std::uint64_t;

inline Key pack_exps(const std::vector<int>& exps) {
  if (exps.size() > 8) throw std::invalid_argument("at most 8 variables");
  Key k = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > 255)
      throw std::invalid_argument("exponent out of range");
    k |= Key(exps[i]) << (8 * (7 - i));
  }
  return k;
}

inline std::vector<int> unpack_exps(Key k, int nvars) {
  std::vector<int> e(nvars);
  for (int i = 0; i < nvars; ++i) e[i] = int((k >> (8 * (7 - i))) & 0xff);
  return e;
}

inline int key_degree(Key k, int nvars) {
  int d = 0;
  for (int i = 0; i < nvars; ++i) d += int((k >> (8 * (7 - i))) & 0xff);
  return d;
}

struct TermCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultTermCap = 10'000'000;

// Sparse polynomial with exact coefficients. R must provide +, -, *,
// ==, and construction from int; zero coefficients are never stored.
template <class R>
class PolyT {
 public:
  explicit PolyT(int nvars = 1) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  const std::map<Key, R>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(Key k, const R& c) {
    if (c == R(0)) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second == R(0)) terms_.erase(it);
    }
  }

  static PolyT constant(int nvars, const R& c) {
    PolyT p(nvars);
    p.add_term(0, c);
    return p;
  }
  static PolyT variable(int nvars, int i) {
    PolyT p(nvars);
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    p.add_term(pack_exps(e), R(1));
    return p;
  }

  PolyT operator+(const PolyT& o) const {
    PolyT r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
  }
  PolyT operator-(const PolyT& o) const {
    PolyT r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, R(0) - c);
    return r;
  }
  PolyT operator*(const PolyT& o) const {
    PolyT r(nvars_);
    for (const auto& [k1, c1] : terms_)
      for (const auto& [k2, c2] : o.terms_) {
        R c = c1 * c2;
        if (c == R(0)) continue;
        r.add_term(k1 + k2, c);  // byte-wise add: exponents stay < 256
        if (r.terms_.size() > kDefaultTermCap)
          throw TermCapError("polynomial term cap exceeded");
      }
    return r;
  }
  PolyT operator*(const R& s) const {
    PolyT r(nvars_);
    if (s == R(0)) return r;
    for (const auto& [k, c] : terms_) r.add_term(k, c * s);
    return r;
  }
  bool operator==(const PolyT& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  // Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, key_degree(k, nvars_));
    return d;
  }
  bool is_homogeneous() const {
    int d = -2;
    for (const auto& [k, c] : terms_) {
      int kd = key_degree(k, nvars_);
      if (d == -2) d = kd;
      if (kd != d) return false;
    }
    return true;
  }

  R coefficient(Key k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? R(0) : it->second;
  }

  template <class S, class Conv>
  PolyT<S> map_coeffs(Conv conv) const {
    PolyT<S> r(nvars_);
    for (const auto& [k, c] : terms_) r.add_term(k, conv(c));
    return r;
  }

 private:
  int nvars_;
  std::map<Key, R> terms_;
};

using Poly = PolyT<mpq_class>;
using PolyZ = PolyT<mpz_class>;

// Complete weight enumerator: sum over codewords of prod_i x_{c_i}.
Poly cwe(const codes::LinearCode& c,
         std::uint64_t budget = codes::kDefaultCodewordBudget);

// p(1, x, ..., x): dense coefficient vector of the Hamming weight
// enumerator, indexed by weight.
std::vector<mpq_class> hamming_specialize(const Poly& p);

// Algebra-morphism substitution; images[i] replaces variable i.
template <class R>
PolyT<R> substitute(const PolyT<R>& p, const std::vector<PolyT<R>>& images) {
  if (static_cast<int>(images.size()) != p.nvars())
    throw std::invalid_argument("need one image per variable");
  const int nv = images.empty() ? p.nvars() : images[0].nvars();
  // Memoize image powers across terms.
  std::vector<std::vector<PolyT<R>>> powers(p.nvars());
  auto power = [&](int v, int e) -> const PolyT<R>& {
    auto& ladder = powers[v];
    if (ladder.empty()) ladder.push_back(PolyT<R>::constant(nv, R(1)));
    while (static_cast<int>(ladder.size()) <= e)
      ladder.push_back(ladder.back() * images[v]);
    return ladder[e];
  };
  PolyT<R> out(nv);
  for (const auto& [k, c] : p.terms()) {
    PolyT<R> t = PolyT<R>::constant(nv, c);
    auto exps = unpack_exps(k, p.nvars());
    for (int v = 0; v < p.nvars(); ++v)
      if (exps[v] > 0) t = t * power(v, exps[v]);
    out = out + t;
  }
  return out;
}

mpq_class evaluate(const Poly& p, const std::vector<mpq_class>& point);

}  // namespace cw::poly

#endif
