// Copyright 2026 The topostab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "topostab/zk.hpp"

#include <stdexcept>

namespace topostab::zk {

Echelon row_reduce(Level level, Matrix m, size_t cols) {
  for (auto& row : m) {
    if (row.size() != cols) throw std::invalid_argument("row_reduce: ragged matrix");
    for (auto& v : row) v = level.mod(v);
  }
  Echelon e;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < m.size(); ++c) {
    size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    const int64_t inv = level.inverse(m[r][c]);
    for (auto& v : m[r]) v = v * inv % level.k();
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const int64_t f = m[i][c];
      for (size_t j = 0; j < cols; ++j) m[i][j] = level.mod(m[i][j] - f * m[r][j]);
    }
    e.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  e.rows = std::move(m);
  return e;
}

size_t rank(Level level, const Matrix& m, size_t cols) { return row_reduce(level, m, cols).rows.size(); }

Matrix nullspace(Level level, const Matrix& m, size_t cols) {
  Echelon e = row_reduce(level, m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (size_t p : e.pivots) is_pivot[p] = true;
  Matrix basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, 0);
    v[free] = 1;
    for (size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = level.mod(-e.rows[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(Level level, const Matrix& m, const Vector& rhs, size_t cols) {
  if (rhs.size() != m.size()) throw std::invalid_argument("solve: rhs size mismatch");
  Matrix aug = m;
  for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
  Echelon e = row_reduce(level, aug, cols + 1);
  Vector x(cols, 0);
  for (size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == cols) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][cols];
  }
  return x;
}

}  // namespace topostab::zk
