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

#ifndef TOPOSTAB_DENSE_HPP
#define TOPOSTAB_DENSE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "topostab/cyclo.hpp"

namespace topostab {

enum class Orientation { positive, negative };

inline Orientation flip(Orientation o) {
  return o == Orientation::positive ? Orientation::negative : Orientation::positive;
}

/// One torus boundary. Negatively oriented sites hold amplitudes in the dual
/// basis.
struct Site {
  std::string name;
  Orientation orientation = Orientation::positive;
  friend bool operator==(const Site&, const Site&) = default;
};

/// Row-major multi-index helpers over Z_k^n; the first index varies slowest.
size_t ipow(size_t base, size_t e);
size_t flat_index(int k, std::span<const int> digits);
std::vector<int> unflatten(int k, size_t n, size_t flat);

/// Unnormalized state on n torus boundaries with k^n exact amplitudes.
class DenseState {
 public:
  DenseState(Level level, std::vector<Site> sites, std::vector<CycScalar> amps);

  /// Computational basis vector |digits>.
  static DenseState basis(Level level, std::vector<Site> sites, std::span<const int> digits);
  /// The zero vector (flagged by is_zero()).
  static DenseState zeros(Level level, std::vector<Site> sites);
  /// Positively oriented sites named s0, s1, ...
  static std::vector<Site> default_sites(size_t n);

  Level level() const { return level_; }
  size_t num_sites() const { return sites_.size(); }
  const std::vector<Site>& sites() const { return sites_; }
  const std::vector<CycScalar>& amps() const { return amps_; }
  std::vector<CycScalar>& mutable_amps() { return amps_; }
  const CycScalar& amp(std::span<const int> digits) const;
  const CycScalar& operator[](size_t flat) const { return amps_[flat]; }

  /// Position of the site with this name; throws std::out_of_range if absent.
  size_t site_position(const std::string& name) const;
  bool is_zero() const;
  std::vector<std::complex<double>> to_complex() const;

  /// <this|this>, exact.
  CycScalar norm_squared() const;

 private:
  Level level_;
  std::vector<Site> sites_;
  std::vector<CycScalar> amps_;
};

/// True when both states live on the same sites and amps agree up to a
/// nonzero global scalar.
bool proportional(const DenseState& a, const DenseState& b);

/// Linear map from nin legs to nout legs; entries indexed (out, in) row-major.
class GateMatrix {
 public:
  GateMatrix(Level level, size_t nin, size_t nout, std::vector<CycScalar> entries);

  static GateMatrix identity(Level level, size_t legs);

  Level level() const { return level_; }
  size_t nin() const { return nin_; }
  size_t nout() const { return nout_; }
  size_t rows() const { return ipow(level_.k(), nout_); }
  size_t cols() const { return ipow(level_.k(), nin_); }
  const std::vector<CycScalar>& entries() const { return entries_; }
  const CycScalar& at(size_t row, size_t col) const { return entries_[row * cols() + col]; }

  GateMatrix adjoint() const;
  /// this * other (other applied first).
  GateMatrix compose(const GateMatrix& other) const;
  /// Kronecker product; this acts on the leading legs.
  GateMatrix kron(const GateMatrix& other) const;
  GateMatrix scaled(const CycScalar& c) const;
  GateMatrix power(int e) const;

  /// M^dagger M == identity exactly.
  bool is_unitary() const;
  /// M^dagger M == c * identity for some nonzero c.
  bool is_isometry_up_to_scalar() const;

  friend bool operator==(const GateMatrix&, const GateMatrix&);

 private:
  Level level_;
  size_t nin_, nout_;
  std::vector<CycScalar> entries_;
};

bool proportional(const GateMatrix& a, const GateMatrix& b);

/// Builds a GateMatrix from a state, reading the listed sites as outputs and
/// inputs. Every site must be listed exactly once.
GateMatrix gate_from_state(const DenseState& s, std::span<const size_t> out_sites,
                           std::span<const size_t> in_sites);

/// Reorders sites; new site i is old site perm[i].
DenseState permute_sites(const DenseState& s, std::span<const size_t> perm);

DenseState tensor_product(const DenseState& a, const DenseState& b);
/// Applies g (nin == nout == legs.size()) to the listed sites, in order.
DenseState apply_gate(const GateMatrix& g, const DenseState& s, std::span<const size_t> legs);
/// Sums over the index shared by two oppositely oriented sites and drops both.
DenseState contract_pair(const DenseState& s, size_t site_a, size_t site_b);
/// Conjugates amplitudes and flips every orientation.
DenseState dual(const DenseState& s);

}  // namespace topostab

#endif  // TOPOSTAB_DENSE_HPP
