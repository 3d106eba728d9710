#ifndef CW_LINALG_HPP
#define CW_LINALG_HPP

#include <gmpxx.h>

#include <vector>

namespace cw::linalg {

using Vec = std::vector<mpq_class>;
using Mat = std::vector<Vec>;

// Reduced row echelon form in place; returns the rank. If pivots is
// non-null it receives the pivot column of each nonzero row.
inline int rref(Mat& m, std::vector<int>* pivots = nullptr) {
  if (pivots) pivots->clear();
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int pr = 0;
  for (int c = 0; c < cols && pr < rows; ++c) {
    int piv = -1;
    for (int r = pr; r < rows; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[pr], m[piv]);
    mpq_class iv = 1 / m[pr][c];
    for (auto& x : m[pr]) x *= iv;
    for (int r = 0; r < rows; ++r) {
      if (r == pr || m[r][c] == 0) continue;
      mpq_class lam = m[r][c];
      for (int j = c; j < cols; ++j) m[r][j] -= lam * m[pr][j];
    }
    if (pivots) pivots->push_back(c);
    ++pr;
  }
  return pr;
}

inline int rank(Mat m) { return rref(m); }

// Basis of the right kernel of a (rows x ncols); each vector has a unit
// entry at its free column.
inline Mat kernel(Mat a, int ncols) {
  std::vector<int> pivots;
  rref(a, &pivots);
  std::vector<int> pivot_of_col(ncols, -1);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    pivot_of_col[pivots[r]] = static_cast<int>(r);
  Mat out;
  for (int c = 0; c < ncols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    Vec v(ncols, 0);
    v[c] = 1;
    for (int c2 = 0; c2 < ncols; ++c2) {
      int r = pivot_of_col[c2];
      if (r >= 0) v[c2] = -a[r][c];
    }
    out.push_back(std::move(v));
  }
  return out;
}

struct AffineSolution {
  bool consistent = false;
  Vec particular;     // one solution
  Mat nullspace;      // basis of the homogeneous solutions
  std::vector<int> free_cols;
};

// Solves A x = b exactly.
inline AffineSolution solve_affine(Mat a, const Vec& b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  Mat aug = a;
  for (int r = 0; r < rows; ++r) aug[r].push_back(b[r]);
  std::vector<int> pivots;
  rref(aug, &pivots);
  AffineSolution sol;
  for (int p : pivots)
    if (p == cols) return sol;  // inconsistent
  sol.consistent = true;
  std::vector<int> pivot_of_col(cols, -1);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    pivot_of_col[pivots[r]] = static_cast<int>(r);
  sol.particular.assign(cols, 0);
  for (int c = 0; c < cols; ++c) {
    int r = pivot_of_col[c];
    if (r >= 0) sol.particular[c] = aug[r][cols];
  }
  for (int c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    sol.free_cols.push_back(c);
    Vec v(cols, 0);
    v[c] = 1;
    for (int c2 = 0; c2 < cols; ++c2) {
      int r = pivot_of_col[c2];
      if (r >= 0) v[c2] = -aug[r][c];
    }
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

}  // namespace cw::linalg

#endif
