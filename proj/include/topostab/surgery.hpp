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

#ifndef TOPOSTAB_SURGERY_HPP
#define TOPOSTAB_SURGERY_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "topostab/dense.hpp"
#include "topostab/stabilizer.hpp"
#include "topostab/zk.hpp"

namespace topostab {

enum class Role { boundary, surgery };

struct LinkComponent {
  std::string name;
  Role role = Role::boundary;
  /// Wilson-loop label; boundary components only.
  std::optional<int64_t> rep;
  friend bool operator==(const LinkComponent&, const LinkComponent&) = default;
};

/// Framed link in S^3. The symmetric linking matrix carries framings on its
/// diagonal.
class SurgeryPresentation {
 public:
  /// Throws std::invalid_argument for an empty link, an asymmetric or
  /// mis-sized matrix, or a rep label on a surgery component.
  SurgeryPresentation(Level level, std::vector<LinkComponent> components,
                      std::vector<std::vector<int64_t>> linking);

  Level level() const { return level_; }
  const std::vector<LinkComponent>& components() const { return components_; }
  const std::vector<std::vector<int64_t>>& linking() const { return linking_; }
  size_t size() const { return components_.size(); }
  int64_t framing(size_t i) const { return linking_[i][i]; }

  std::vector<size_t> surgery_indices() const;
  /// Boundary components without a rep label; these become the state's sites.
  std::vector<size_t> free_boundary_indices() const;

  friend bool operator==(const SurgeryPresentation&, const SurgeryPresentation&) = default;

 private:
  Level level_;
  std::vector<LinkComponent> components_;
  std::vector<std::vector<int64_t>> linking_;
};

/// Overall sign of the exponent: amplitudes omega^{-v L~ v} by default.
enum class SignConvention { standard, flipped };

/// Raised when a presentation prepares the zero state.
class IllDefinedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// L~ = ((1 + k^2) / 2) L mod k.
struct ReducedLinking {
  Level level;
  zk::Matrix matrix;
};
ReducedLinking reduced_linking(const SurgeryPresentation& p);

/// omega^{-sum_{a,b} j_a L~_ab j_b} for a link whose components all carry
/// labels. Throws std::invalid_argument on an unlabeled or surgery component.
CycScalar s3_expectation(const SurgeryPresentation& p,
                         SignConvention sign = SignConvention::standard);

/// Brute-force Gauss summation over surgery labels,
///   psi(j) = sum_m omega^{-(j,m) L~ (j,m)},
/// with labeled boundary components fixed to their label and dropped from the
/// sites. Surgery weights and the normalizing denominator are dropped. At most
/// kMaxBruteForceSurgery surgery components. The zero state is returned as is.
DenseState state_from_presentation(const SurgeryPresentation& p,
                                   SignConvention sign = SignConvention::standard);
inline constexpr size_t kMaxBruteForceSurgery = 8;

/// Result of integrating out the surgery labels one at a time:
///   psi(j) = prefactor * [constraints j = rhs] * omega^{j A j + linear.j + constant}
/// over the free boundary labels j, with A symmetric and the double-sum
/// convention of L~. `vanishes` is set when an unsatisfiable constraint appears.
struct QuadraticReduction {
  Level level;
  CycScalar prefactor;
  zk::Matrix quadratic;
  zk::Vector linear;
  int64_t constant = 0;
  zk::Matrix constraints;
  zk::Vector rhs;
  bool vanishes = false;
};
QuadraticReduction reduce_quadratic_form(const SurgeryPresentation& p,
                                         SignConvention sign = SignConvention::standard);
/// Evaluates the reduced form on every boundary configuration.
DenseState state_from_reduction(const QuadraticReduction& r, std::vector<Site> sites);

/// Stabilizer generators of the prepared state, read off the reduced form.
/// Throws IllDefinedError if the state is zero.
StabilizerTableau tableau_from_presentation(const SurgeryPresentation& p,
                                            SignConvention sign = SignConvention::standard);

struct WellDefinedness {
  bool ok = true;
  std::string diagnostic;
  /// sum_m omega^{-m L~_surgery m}, the surgery-only partition scalar.
  CycScalar denominator;
};
WellDefinedness well_definedness(const SurgeryPresentation& p,
                                 SignConvention sign = SignConvention::standard);

/// Random presentation with 1..max_boundary boundary and 0..max_surgery surgery
/// components, linking numbers and framings uniform in [-max_abs, max_abs].
SurgeryPresentation random_presentation(Level level, std::mt19937_64& rng, size_t max_boundary,
                                        size_t max_surgery, int64_t max_abs);

}  // namespace topostab

#endif  // TOPOSTAB_SURGERY_HPP
