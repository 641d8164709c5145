#include "nfourier/linalg.hpp"

#include "nfourier/error.hpp"

namespace nfourier {

int rank(CycloMat m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pr = r;
    while (pr < rows && m[pr][c].is_zero()) ++pr;
    if (pr == rows) continue;
    std::swap(m[pr], m[r]);
    Cyclotomic inv = m[r][c].inverse();
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      Cyclotomic f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

bool is_identity(const CycloMat& m) {
  static const Cyclotomic one(1), zero(0);
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) return false;
    for (size_t j = 0; j < m[i].size(); ++j)
      if (m[i][j] != (i == j ? one : zero)) return false;
  }
  return true;
}

CycloMat mat_mul(const CycloMat& a, const CycloMat& b, bool parallel) {
  require_internal(!a.empty() && !b.empty() && a[0].size() == b.size(),
                   "matrix dimensions must agree");
  const int n = static_cast<int>(a.size());
  const int k = static_cast<int>(b.size());
  const int m = static_cast<int>(b[0].size());
  CycloMat out(n, CycloVec(m));
#pragma omp parallel for collapse(2) schedule(dynamic) if (parallel)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      Cyclotomic acc;
      for (int t = 0; t < k; ++t)
        if (!a[i][t].is_zero() && !b[t][j].is_zero()) acc += a[i][t] * b[t][j];
      out[i][j] = std::move(acc);
    }
  return out;
}

std::vector<int> independent_subset(const std::vector<CycloVec>& vectors) {
  std::vector<int> picked;
  CycloMat reduced;  // rows in echelon progression
  for (int idx = 0; idx < static_cast<int>(vectors.size()); ++idx) {
    CycloVec v = vectors[idx];
    for (const CycloVec& row : reduced) {
      // row has a leading 1 at its pivot position
      size_t piv = 0;
      while (piv < row.size() && row[piv].is_zero()) ++piv;
      if (piv < row.size() && !v[piv].is_zero()) {
        Cyclotomic f = v[piv];
        for (size_t j = piv; j < v.size(); ++j) v[j] -= f * row[j];
      }
    }
    size_t piv = 0;
    while (piv < v.size() && v[piv].is_zero()) ++piv;
    if (piv == v.size()) continue;  // dependent
    Cyclotomic inv = v[piv].inverse();
    for (size_t j = piv; j < v.size(); ++j) v[j] *= inv;
    reduced.push_back(std::move(v));
    picked.push_back(idx);
  }
  return picked;
}

}  // namespace nfourier
