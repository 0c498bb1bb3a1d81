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

#ifndef TOPOSTAB_STABILIZER_HPP
#define TOPOSTAB_STABILIZER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "topostab/dense.hpp"

namespace topostab {

/// Raised when a state is not a stabilizer state, or a tableau is inconsistent.
class NotStabilizerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// omega^phase * W(z, x), where W(a, b) = omega^{-a.b/2} Z^a X^b sitewise and
/// 1/2 is taken mod k. W has order k and W(u) W(v) = omega^{[u,v]/2} W(u+v)
/// with [u,v] = a.b' - a'.b.
struct PauliOp {
  std::vector<int64_t> z;
  std::vector<int64_t> x;
  int64_t phase = 0;

  size_t num_sites() const { return z.size(); }
  friend bool operator==(const PauliOp&, const PauliOp&) = default;
};

/// a.b' - a'.b mod k.
int64_t symplectic_form(Level level, const PauliOp& p, const PauliOp& q);
/// p * q, in the same normal form.
PauliOp compose(Level level, const PauliOp& p, const PauliOp& q);
/// p^m.
PauliOp pauli_power(Level level, const PauliOp& p, int64_t m);

/// Exact action on a state.
DenseState weyl_apply(Level level, const PauliOp& p, const DenseState& s);

/// `w^c Z[a1,...,an] X[b1,...,bn]`, the text format emitted by the CLI.
std::string to_string(const PauliOp& p);
/// Inverse of to_string; throws std::invalid_argument on malformed text.
PauliOp parse_pauli(Level level, const std::string& text);

/// n commuting, independent generators whose joint +1 eigenspace is a line.
class StabilizerTableau {
 public:
  /// Validates commutation and independence; throws NotStabilizerError.
  StabilizerTableau(Level level, std::vector<PauliOp> generators);

  Level level() const { return level_; }
  size_t num_sites() const { return n_; }
  const std::vector<PauliOp>& generators() const { return generators_; }
  /// Set when k = 3 mod 4, where the surgery converse is unproven.
  bool converse_unproven() const { return level_.residue_mod_4() == 3; }

  std::string to_string() const;

 private:
  Level level_;
  size_t n_;
  std::vector<PauliOp> generators_;
};

/// Wigner function on phase space Z_k^{2n}. Points are indexed by
/// (a_1..a_n, b_1..b_n) row-major, a the Z-exponent and b the X-exponent of the
/// phase-point operator A(a,b) = W(a,b) A_0 W(a,b)^dagger, A_0 the parity.
struct WignerTable {
  int k;
  size_t n;
  std::vector<double> values;
  /// Largest imaginary residue seen before discarding it.
  double max_imag = 0.0;
};

/// W(u) = k^{-n} tr(rho A_u) for rho = |s><s| / <s|s>. Throws on the zero state.
WignerTable wigner_function(const DenseState& s);

/// Verdict of the stabilizer test. `certificate` holds exactly verified
/// generators when the verdict is positive.
struct StabilizerCheck {
  bool wigner_ok = false;
  bool exact_ok = false;
  bool is_stabilizer() const { return wigner_ok && exact_ok; }
  std::optional<StabilizerTableau> certificate;
};

/// Hudson test with tolerance 1e-9 (values in {0, k^-n}, k^n of them nonzero)
/// together with an exact certificate: candidate stabilizers are read off the
/// characteristic function and n independent ones are verified in exact
/// arithmetic.
StabilizerCheck check_stabilizer(const DenseState& s);
bool is_stabilizer(const DenseState& s);

/// Brute force over all k^{2n} Weyl operators with exact arithmetic. Throws
/// NotStabilizerError if fewer than k^n operators stabilize s.
StabilizerTableau stabilizer_group_search(const DenseState& s);

/// The joint eigenstate, from the projector product applied to a fiducial state.
DenseState dense_from_tableau(const StabilizerTableau& t);

/// S(A) in dits: |A| - n + rank of the generators restricted to the complement.
int entropy_from_tableau(const StabilizerTableau& t, std::span<const size_t> region);

}  // namespace topostab

#endif  // TOPOSTAB_STABILIZER_HPP
