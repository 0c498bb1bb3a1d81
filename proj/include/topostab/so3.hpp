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

#ifndef TOPOSTAB_SO3_HPP
#define TOPOSTAB_SO3_HPP

#include <cstdint>
#include <vector>

namespace topostab {

/// Integer-spin sector of level-r SU(2): anyons 0 .. (r-1)/2. The matching
/// Chern-Simons level is r + 3.
struct FusionTable {
  int r = 0;
  int anyons = 0;
  /// N_{ij}^l at (i * anyons + j) * anyons + l.
  std::vector<int> n;

  int at(int i, int j, int l) const { return n[(static_cast<size_t>(i) * anyons + j) * anyons + l]; }
  friend bool operator==(const FusionTable&, const FusionTable&) = default;
};

/// Throws std::invalid_argument unless r is an odd prime >= 5.
void check_so3_r(int r);

/// N_{ij}^l = 1 iff |i - j| <= l <= min(i + j, r - i - j).
FusionTable fusion_rules(int r);

/// Real orthogonal S-matrix, S_ab proportional to sin(pi (2a+1)(2b+1) / (r+2)).
std::vector<std::vector<double>> so3_s_matrix(int r);

/// Fusion coefficients from the Verlinde formula, rounded. Throws
/// std::runtime_error if any value is more than 1e-6 from an integer.
FusionTable verlinde_fusion(int r);

/// sum_a S_0a^{2 - 2g}, rounded with residue below 1e-6 (else
/// std::runtime_error). Throws std::invalid_argument for g < 0.
int64_t verlinde_dim(int r, int genus);

/// ((r+1)/2)^2 <= verlinde_dim(r, 2).
bool dimension_inequality(int r);

}  // namespace topostab

#endif  // TOPOSTAB_SO3_HPP
