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

#include "topostab/so3.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "topostab/cyclo.hpp"

namespace topostab {

namespace {

constexpr double kResidue = 1e-6;

int64_t round_checked(double x, const char* what) {
  const double r = std::round(x);
  if (std::abs(x - r) >= kResidue) {
    throw std::runtime_error(std::string(what) + " " + std::to_string(x) + " is not an integer");
  }
  return static_cast<int64_t>(r);
}

}  // namespace

void check_so3_r(int r) {
  if (r < 5 || r % 2 == 0 || !is_prime(r)) {
    throw std::invalid_argument("r must be an odd prime >= 5, got " + std::to_string(r));
  }
}

FusionTable fusion_rules(int r) {
  check_so3_r(r);
  FusionTable t{r, (r + 1) / 2, {}};
  const int m = t.anyons;
  t.n.assign(static_cast<size_t>(m) * m * m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const int hi = std::min(i + j, r - i - j);
      for (int l = std::abs(i - j); l <= hi && l < m; ++l) t.n[(static_cast<size_t>(i) * m + j) * m + l] = 1;
    }
  }
  return t;
}

std::vector<std::vector<double>> so3_s_matrix(int r) {
  check_so3_r(r);
  const int m = (r + 1) / 2;
  std::vector<std::vector<double>> s(m, std::vector<double>(m));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      s[a][b] = std::sin(std::numbers::pi * (2 * a + 1) * (2 * b + 1) / (r + 2));
    }
  }
  double row0 = 0;
  for (int b = 0; b < m; ++b) row0 += s[0][b] * s[0][b];
  const double scale = 1.0 / std::sqrt(row0);
  for (auto& row : s) {
    for (auto& v : row) v *= scale;
  }
  return s;
}

FusionTable verlinde_fusion(int r) {
  const auto s = so3_s_matrix(r);
  FusionTable t{r, (r + 1) / 2, {}};
  const int m = t.anyons;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int l = 0; l < m; ++l) {
        double acc = 0;
        for (int a = 0; a < m; ++a) acc += s[i][a] * s[j][a] * s[l][a] / s[0][a];
        t.n.push_back(static_cast<int>(round_checked(acc, "Verlinde coefficient")));
      }
    }
  }
  return t;
}

int64_t verlinde_dim(int r, int genus) {
  if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
  const auto s = so3_s_matrix(r);
  double acc = 0;
  for (const double s0a : s[0]) acc += std::pow(s0a, 2.0 - 2.0 * genus);
  return round_checked(acc, "Verlinde dimension");
}

bool dimension_inequality(int r) {
  const int64_t anyons = (r + 1) / 2;
  return anyons * anyons <= verlinde_dim(r, 2);
}

}  // namespace topostab
