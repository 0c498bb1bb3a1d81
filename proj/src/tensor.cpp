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

#include "topostab/tensor.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include "topostab/dense.hpp"

namespace topostab {

namespace {

// Offsets into a row-major tensor for every assignment of the given axes.
std::vector<size_t> axis_offsets(int k, size_t rank, std::span<const size_t> axes) {
  std::vector<size_t> strides(rank, 1);
  for (size_t i = rank; i-- > 1;) strides[i - 1] = strides[i] * k;
  std::vector<size_t> offsets(ipow(k, axes.size()), 0);
  for (size_t cfg = 0; cfg < offsets.size(); ++cfg) {
    size_t rem = cfg, off = 0;
    for (size_t i = axes.size(); i-- > 0;) {
      off += (rem % k) * strides[axes[i]];
      rem /= k;
    }
    offsets[cfg] = off;
  }
  return offsets;
}

}  // namespace

LabeledTensor take_diagonal(Level level, const LabeledTensor& t) {
  const int k = level.k();
  std::vector<int> unique;
  std::vector<size_t> first_pos(t.labels.size());
  for (size_t i = 0; i < t.labels.size(); ++i) {
    auto it = std::find(unique.begin(), unique.end(), t.labels[i]);
    first_pos[i] = static_cast<size_t>(it - unique.begin());
    if (it == unique.end()) unique.push_back(t.labels[i]);
  }
  if (unique.size() == t.labels.size()) return t;
  LabeledTensor out{unique, std::vector<CycScalar>(ipow(k, unique.size()), CycScalar::zero(level))};
  for (size_t flat = 0; flat < out.data.size(); ++flat) {
    auto digits = unflatten(k, unique.size(), flat);
    size_t src = 0;
    for (size_t i = 0; i < t.labels.size(); ++i) src = src * k + digits[first_pos[i]];
    out.data[flat] = t.data[src];
  }
  return out;
}

LabeledTensor contract_tensors(Level level, const LabeledTensor& a, const LabeledTensor& b) {
  const int k = level.k();
  std::vector<size_t> a_shared, a_free, b_shared, b_free;
  std::vector<int> out_labels;
  for (size_t i = 0; i < a.labels.size(); ++i) {
    auto it = std::find(b.labels.begin(), b.labels.end(), a.labels[i]);
    if (it != b.labels.end()) {
      a_shared.push_back(i);
      b_shared.push_back(static_cast<size_t>(it - b.labels.begin()));
    } else {
      a_free.push_back(i);
      out_labels.push_back(a.labels[i]);
    }
  }
  for (size_t j = 0; j < b.labels.size(); ++j) {
    if (std::find(b_shared.begin(), b_shared.end(), j) == b_shared.end()) {
      b_free.push_back(j);
      out_labels.push_back(b.labels[j]);
    }
  }
  const size_t a_rank = a.labels.size();
  const size_t b_rank = b.labels.size();
  const auto b_shared_off = axis_offsets(k, b_rank, b_shared);
  const auto b_free_off = axis_offsets(k, b_rank, b_free);
  const size_t b_free_dim = b_free_off.size();

  LabeledTensor out{out_labels,
                    std::vector<CycScalar>(ipow(k, out_labels.size()), CycScalar::zero(level))};
  for (size_t fa = 0; fa < a.data.size(); ++fa) {
    const CycScalar& av = a.data[fa];
    if (av.is_zero()) continue;
    auto digits = unflatten(k, a_rank, fa);
    size_t shared_cfg = 0, free_cfg = 0;
    for (size_t i : a_shared) shared_cfg = shared_cfg * k + digits[i];
    for (size_t i : a_free) free_cfg = free_cfg * k + digits[i];
    const size_t base = b_shared_off[shared_cfg];
    const size_t out_base = free_cfg * b_free_dim;
    for (size_t cfg = 0; cfg < b_free_dim; ++cfg) {
      const CycScalar& bv = b.data[base + b_free_off[cfg]];
      if (bv.is_zero()) continue;
      out.data[out_base + cfg] += av * bv;
    }
  }
  return out;
}

LabeledTensor transpose_to(Level level, const LabeledTensor& t, std::span<const int> order) {
  const int k = level.k();
  if (order.size() != t.labels.size()) {
    throw std::invalid_argument("transpose_to: rank mismatch");
  }
  std::vector<size_t> axes;
  for (int label : order) {
    auto it = std::find(t.labels.begin(), t.labels.end(), label);
    if (it == t.labels.end()) {
      throw std::invalid_argument("transpose_to: unknown label " + std::to_string(label));
    }
    axes.push_back(static_cast<size_t>(it - t.labels.begin()));
  }
  const auto offsets = axis_offsets(k, t.labels.size(), axes);
  LabeledTensor out{std::vector<int>(order.begin(), order.end()), {}};
  out.data.reserve(offsets.size());
  for (size_t off : offsets) out.data.push_back(t.data[off]);
  return out;
}

LabeledTensor trace_repeated(Level level, const LabeledTensor& t) {
  std::vector<int> repeated;
  for (size_t i = 0; i < t.labels.size(); ++i) {
    if (std::count(t.labels.begin(), t.labels.end(), t.labels[i]) > 1 &&
        std::find(repeated.begin(), repeated.end(), t.labels[i]) == repeated.end()) {
      repeated.push_back(t.labels[i]);
    }
  }
  if (repeated.empty()) return t;
  LabeledTensor diag = take_diagonal(level, t);
  // Contracting with an all-ones vector sums the axis out.
  for (int label : repeated) {
    LabeledTensor ones{{label}, std::vector<CycScalar>(level.k(), CycScalar::one(level))};
    diag = contract_tensors(level, diag, ones);
  }
  return diag;
}

LabeledTensor contract_network(Level level, std::vector<LabeledTensor> tensors,
                               std::span<const int> open, std::optional<uint64_t> order_seed) {
  std::map<int, int> count;
  for (auto& t : tensors) {
    t = trace_repeated(level, t);
    for (int l : t.labels) ++count[l];
  }
  for (int l : open) {
    if (count[l] != 1) {
      throw std::invalid_argument("open label " + std::to_string(l) + " must appear exactly once");
    }
  }
  for (const auto& [label, c] : count) {
    bool is_open = std::find(open.begin(), open.end(), label) != open.end();
    if (!is_open && c != 2) {
      throw std::invalid_argument("internal label " + std::to_string(label) +
                                  " appears " + std::to_string(c) + " times");
    }
  }
  if (tensors.empty()) {
    return LabeledTensor{{}, {CycScalar::one(level)}};
  }

  std::mt19937_64 rng(order_seed.value_or(0));
  auto shared_count = [](const LabeledTensor& a, const LabeledTensor& b) {
    size_t s = 0;
    for (int l : a.labels) s += std::count(b.labels.begin(), b.labels.end(), l);
    return s;
  };

  while (tensors.size() > 1) {
    std::vector<std::pair<size_t, size_t>> candidates;
    size_t best_rank = SIZE_MAX;
    std::pair<size_t, size_t> best{0, 1};
    for (size_t i = 0; i < tensors.size(); ++i) {
      for (size_t j = i + 1; j < tensors.size(); ++j) {
        size_t s = shared_count(tensors[i], tensors[j]);
        if (s == 0) continue;
        candidates.emplace_back(i, j);
        size_t rank = tensors[i].labels.size() + tensors[j].labels.size() - 2 * s;
        if (rank < best_rank) {
          best_rank = rank;
          best = {i, j};
        }
      }
    }
    if (candidates.empty()) {
      // Disconnected pieces: outer product, smallest first.
      std::vector<size_t> idx(tensors.size());
      for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      std::stable_sort(idx.begin(), idx.end(), [&](size_t x, size_t y) {
        return tensors[x].labels.size() < tensors[y].labels.size();
      });
      best = {std::min(idx[0], idx[1]), std::max(idx[0], idx[1])};
    } else if (order_seed) {
      best = candidates[std::uniform_int_distribution<size_t>(0, candidates.size() - 1)(rng)];
    }
    LabeledTensor merged = contract_tensors(level, tensors[best.first], tensors[best.second]);
    tensors.erase(tensors.begin() + static_cast<std::ptrdiff_t>(best.second));
    tensors[best.first] = std::move(merged);
  }
  return transpose_to(level, tensors[0], open);
}

}  // namespace topostab
