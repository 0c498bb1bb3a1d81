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

#ifndef TOPOSTAB_ZK_HPP
#define TOPOSTAB_ZK_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "topostab/cyclo.hpp"

// Linear algebra over the prime field Z_k.
namespace topostab::zk {

using Vector = std::vector<int64_t>;
using Matrix = std::vector<Vector>;

struct Echelon {
  Matrix rows;                // reduced row echelon form, nonzero rows only
  std::vector<size_t> pivots; // pivot column of each row
};

Echelon row_reduce(Level level, Matrix m, size_t cols);
size_t rank(Level level, const Matrix& m, size_t cols);
/// Basis of {x : m x = 0}.
Matrix nullspace(Level level, const Matrix& m, size_t cols);
/// Some x with m x = rhs, or nullopt when inconsistent.
std::optional<Vector> solve(Level level, const Matrix& m, const Vector& rhs, size_t cols);

}  // namespace topostab::zk

#endif  // TOPOSTAB_ZK_HPP
