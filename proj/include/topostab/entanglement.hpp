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

#ifndef TOPOSTAB_ENTANGLEMENT_HPP
#define TOPOSTAB_ENTANGLEMENT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "topostab/dense.hpp"

namespace topostab {

/// m copies of a state glued along its sites. Every region carries a
/// permutation of the copies: bra copy c of a site in the region is joined to
/// ket copy perm[c].
struct ReplicaSpec {
  int copies = 1;
  std::vector<std::vector<size_t>> regions;
  std::vector<std::vector<int>> perms;

  /// Every region glued by the identity.
  static ReplicaSpec identity(int copies, std::vector<std::vector<size_t>> regions);
  /// Two copies; `a` swapped and its complement glued straight.
  static ReplicaSpec swap(size_t num_sites, std::vector<size_t> a);
  /// Three copies; a cycled 1->2->3, b cycled 1->3->2, c untouched.
  static ReplicaSpec cyclic(std::vector<size_t> a, std::vector<size_t> b, std::vector<size_t> c);
};

/// Throws std::invalid_argument unless the regions partition 0..n-1 and each
/// perm is a permutation of 0..copies-1.
void validate_replica_spec(const ReplicaSpec& spec, size_t num_sites);

/// <s|^{(x)m} P |s>^{(x)m}, with P permuting copies region by region.
CycScalar replica_z(const DenseState& s, const ReplicaSpec& spec);

struct EntropyValue {
  double dits = 0.0;
  double nats = 0.0;
  /// Set when dits is an integer d and Z_2 k^d = Z_1^2 holds exactly.
  std::optional<int> exact_dits;
};

/// -log(Z_2 / Z_1^2) for the swap on `region`. Throws std::invalid_argument on
/// the zero state.
EntropyValue flat_entropy(const DenseState& s, std::span<const size_t> region);

/// S(A) + S(B) + S(C) + log_k(Z_3 / Z_1^3) in dits. Throws
/// std::invalid_argument if s fails is_stabilizer, and std::runtime_error if
/// the value is not within 1e-9 of an integer.
int ghz_count(const DenseState& s, std::span<const size_t> a, std::span<const size_t> b,
              std::span<const size_t> c);

/// rho_A = tr_{complement} |s><s|, a d_A x d_A row-major matrix; sites of A are
/// taken in the order given.
std::vector<CycScalar> reduced_density_matrix(const DenseState& s, std::span<const size_t> region);

/// True iff every nonzero eigenvalue of rho_A is the same. Decided exactly
/// through tr(rho) rho^2 == tr(rho^2) rho on the smaller side of the cut.
bool flat_spectrum_check(const DenseState& s, std::span<const size_t> region);

}  // namespace topostab

#endif  // TOPOSTAB_ENTANGLEMENT_HPP
