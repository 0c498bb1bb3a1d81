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

#ifndef TOPOSTAB_TENSOR_HPP
#define TOPOSTAB_TENSOR_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "topostab/cyclo.hpp"

namespace topostab {

/// Dense exact tensor whose axes carry integer labels. Every axis has
/// dimension k; data is row-major over `labels`.
struct LabeledTensor {
  std::vector<int> labels;
  std::vector<CycScalar> data;
};

/// Collapses repeated labels onto their diagonal (first occurrence kept).
LabeledTensor take_diagonal(Level level, const LabeledTensor& t);

/// Sums over every label that occurs more than once on t (a self-loop).
LabeledTensor trace_repeated(Level level, const LabeledTensor& t);

/// Sums over all labels shared by a and b. Result axes: a's free labels then
/// b's free labels, each in original order.
LabeledTensor contract_tensors(Level level, const LabeledTensor& a, const LabeledTensor& b);

/// Reorders axes to `order` (a permutation of t.labels).
LabeledTensor transpose_to(Level level, const LabeledTensor& t, std::span<const int> order);

/// Contracts a whole network. Each internal label must appear on exactly two
/// axes; `open` lists the remaining labels in the desired output order.
///
/// By default pairs are merged greedily, smallest result rank first. With a
/// seed the merge order is drawn at random instead, which is only useful for
/// checking that the result is order independent.
LabeledTensor contract_network(Level level, std::vector<LabeledTensor> tensors,
                               std::span<const int> open,
                               std::optional<uint64_t> order_seed = std::nullopt);

}  // namespace topostab

#endif  // TOPOSTAB_TENSOR_HPP
