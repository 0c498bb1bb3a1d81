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

#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>

using namespace topostab;

namespace {

// Counts the spins produced by an explicit SU(2) tensor product, keeping only
// integer spins below the level-r truncation.
int clebsch_count(int r, int i, int j, int l) {
  int hits = 0;
  for (int s = std::abs(i - j); s <= i + j; ++s)
    if (s == l && i + j + s <= r) ++hits;
  return hits;
}

int64_t sum_squares(const FusionTable& t) {
  int64_t total = 0;
  for (int v : t.n) total += int64_t(v) * v;
  return total;
}

const int kRs[] = {5, 7, 11, 13};

}  // namespace

TEST(fusion_rules, examples) {
  FusionTable t = fusion_rules(5);
  EXPECT_EQ(t.anyons, 3);
  for (int l = 0; l < 3; ++l) EXPECT_EQ(t.at(1, 1, l), 1);
  EXPECT_EQ(t.at(2, 2, 2), 0);
  EXPECT_EQ(t.at(2, 2, 0), 1);
  EXPECT_EQ(t.at(2, 2, 1), 1);
}

TEST(fusion_rules, invariants) {
  for (int r : kRs) {
    FusionTable t = fusion_rules(r);
    ASSERT_EQ(t.anyons, (r + 1) / 2);
    const int n = t.anyons;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        EXPECT_EQ(t.at(i, 0, j), i == j ? 1 : 0);
        bool any = false;
        for (int l = 0; l < n; ++l) {
          EXPECT_EQ(t.at(i, j, l), t.at(j, i, l));
          EXPECT_EQ(t.at(i, j, l), clebsch_count(r, i, j, l)) << r << " " << i << j << l;
          any = any || t.at(i, j, l) == 1;
        }
        EXPECT_TRUE(any);
      }
    }
  }
}

TEST(fusion_rules, associative) {
  for (int r : kRs) {
    FusionTable t = fusion_rules(r);
    const int n = t.anyons;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l)
          for (int p = 0; p < n; ++p) {
            int lhs = 0, rhs = 0;
            for (int m = 0; m < n; ++m) {
              lhs += t.at(i, j, m) * t.at(m, l, p);
              rhs += t.at(j, l, m) * t.at(i, m, p);
            }
            EXPECT_EQ(lhs, rhs);
          }
  }
}

TEST(fusion_rules, rejects_bad_r) {
  for (int r : {2, 3, 4, 9, 15, -5}) EXPECT_THROW(fusion_rules(r), std::invalid_argument) << r;
}

TEST(so3_s_matrix, orthogonal_and_symmetric) {
  for (int r : kRs) {
    auto s = so3_s_matrix(r);
    const size_t n = s.size();
    EXPECT_GT(s[0][0], 0.0);
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) {
        EXPECT_NEAR(s[a][b], s[b][a], 1e-12);
        double dot = 0;
        for (size_t c = 0; c < n; ++c) dot += s[a][c] * s[b][c];
        EXPECT_NEAR(dot, a == b ? 1.0 : 0.0, 1e-10);
      }
  }
}

TEST(verlinde, reconstructs_fusion_rules) {
  for (int r : kRs) EXPECT_EQ(verlinde_fusion(r), fusion_rules(r)) << r;
}

TEST(verlinde_dim, values) {
  EXPECT_EQ(verlinde_dim(5, 1), 3);
  EXPECT_EQ(verlinde_dim(5, 2), 14);
  for (int r : kRs) {
    EXPECT_EQ(verlinde_dim(r, 0), 1);
    EXPECT_EQ(verlinde_dim(r, 1), (r + 1) / 2);
    EXPECT_EQ(verlinde_dim(r, 2), sum_squares(fusion_rules(r)));
    for (int g = 0; g <= 3; ++g) EXPECT_GT(verlinde_dim(r, g), 0);
    EXPECT_GT(verlinde_dim(r, 3), verlinde_dim(r, 2));
  }
  EXPECT_THROW(verlinde_dim(5, -1), std::invalid_argument);
}

TEST(dimension_inequality, holds) {
  for (int r : kRs) {
    EXPECT_TRUE(dimension_inequality(r));
    const int64_t a = (r + 1) / 2;
    EXPECT_LE(a * a, verlinde_dim(r, 2));
  }
}
