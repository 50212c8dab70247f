#include "omnilie/matrix.hpp"

namespace omnilie {

RrefResult rref(const MatQ& m) {
  RrefResult res;
  res.reduced = m;
  MatQ& a = res.reduced;
  const int rows = a.rows(), cols = a.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!a(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols; ++j) std::swap(a(piv, j), a(r, j));
    Rat inv = a(r, c).inv();
    for (int j = c; j < cols; ++j) a(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Rat f = a(i, c);
      for (int j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;

  std::vector<bool> is_pivot(cols, false);
  for (int c : res.pivots) is_pivot[c] = true;
  res.kernel = MatQ(cols - res.rank, cols);
  int krow = 0;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    res.kernel(krow, c) = Rat(1);
    for (int i = 0; i < res.rank; ++i) res.kernel(krow, res.pivots[i]) = -a(i, c);
    ++krow;
  }
  return res;
}

int rank(const MatQ& m) { return rref(m).rank; }

std::optional<VecQ> solve(const MatQ& a, const VecQ& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw Error(ErrorKind::Dimension, "right-hand side length mismatch");
  MatQ aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  RrefResult rr = rref(aug);
  // inconsistent iff some pivot lands in the augmented column
  for (int c : rr.pivots)
    if (c == a.cols()) return std::nullopt;
  VecQ x(a.cols(), Rat(0));
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    x[rr.pivots[i]] = rr.reduced(static_cast<int>(i), a.cols());
  return x;
}

}  // namespace omnilie
