#include "cw/poly.hpp"

#include <unordered_map>

namespace cw::poly {

Poly cwe(const codes::LinearCode& c, std::uint64_t budget) {
  const int q = static_cast<int>(c.ctx->order());
  if (q > 8) throw std::invalid_argument("cwe limited to q <= 8");
  std::unordered_map<Key, unsigned long long> counts;
  codes::enumerate_codewords(c, budget, [&](const std::vector<gf::Bits>& w) {
    int occ[8] = {0};
    for (gf::Bits x : w) ++occ[x];
    Key k = 0;
    for (int a = 0; a < q; ++a) k |= Key(occ[a]) << (8 * (7 - a));
    ++counts[k];
  });
  Poly p(q);
  for (const auto& [k, cnt] : counts)
    p.add_term(k, mpq_class(static_cast<unsigned long>(cnt)));
  return p;
}

std::vector<mpq_class> hamming_specialize(const Poly& p) {
  std::vector<mpq_class> out(std::max(p.degree(), 0) + 1, mpq_class(0));
  for (const auto& [k, c] : p.terms()) {
    auto e = unpack_exps(k, p.nvars());
    int w = 0;
    for (int a = 1; a < p.nvars(); ++a) w += e[a];
    out[w] += c;
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

mpq_class evaluate(const Poly& p, const std::vector<mpq_class>& point) {
  if (static_cast<int>(point.size()) != p.nvars())
    throw std::invalid_argument("point length mismatch");
  mpq_class total(0);
  for (const auto& [k, c] : p.terms()) {
    mpq_class t = c;
    auto e = unpack_exps(k, p.nvars());
    for (int v = 0; v < p.nvars(); ++v)
      for (int i = 0; i < e[v]; ++i) t *= point[v];
    total += t;
  }
  return total;
}

}  // namespace cw::poly
