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

#ifndef TOPOSTAB_CYCLO_HPP
#define TOPOSTAB_CYCLO_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace topostab {

/// Odd prime level k. Sets the qudit dimension and the root of unity
/// omega = exp(2 pi i / k).
class Level {
 public:
  /// Throws std::invalid_argument unless k is an odd prime (3 <= k <= 97).
  explicit Level(int k);

  int k() const { return k_; }
  int residue_mod_4() const { return k_ % 4; }

  /// Reduces an arbitrary integer into [0, k).
  int64_t mod(int64_t x) const {
    int64_t r = x % k_;
    return r < 0 ? r + k_ : r;
  }
  /// Multiplicative inverse mod k; throws std::domain_error for x = 0 mod k.
  int64_t inverse(int64_t x) const;
  /// Inverse of 2 mod k, i.e. (k + 1) / 2.
  int64_t half() const { return (k_ + 1) / 2; }
  /// Legendre symbol (x / k) in {-1, 0, 1}.
  int legendre(int64_t x) const;

  friend bool operator==(const Level&, const Level&) = default;

 private:
  int k_;
};

bool is_prime(int64_t n);

namespace detail {
struct RingTables;
}

/// Exact element of Z[zeta][1/k], zeta = exp(2 pi i / 4k).
///
/// Stored as integer coordinates in the power basis 1, zeta, ...,
/// zeta^(2(k-1)-1) (residues modulo the 4k-th cyclotomic polynomial) divided by
/// k^kden. The form is canonical: kden is minimal, so equal values have equal
/// representations.
class CycScalar {
 public:
  CycScalar(Level level, int64_t value);

  static CycScalar zero(Level level) { return CycScalar(level, 0); }
  static CycScalar one(Level level) { return CycScalar(level, 1); }
  /// zeta^e with zeta the primitive 4k-th root of unity.
  static CycScalar zeta_power(Level level, int64_t e);
  /// Builds a value from raw power-basis coordinates and denominator exponent.
  static CycScalar from_coeffs(Level level, std::vector<int64_t> coeffs, int kden);

  Level level() const;
  int k() const;
  const std::vector<int64_t>& coeffs() const { return coeffs_; }
  int kden() const { return kden_; }

  bool is_zero() const;
  /// True when the value lies in Q (only the constant coordinate is set).
  bool is_rational() const;
  /// Numerator of a rational value, i.e. value * k^kden. Throws if not rational.
  int64_t rational_numerator() const;

  CycScalar operator-() const;
  CycScalar& operator+=(const CycScalar& other);
  CycScalar& operator-=(const CycScalar& other);
  CycScalar& operator*=(const CycScalar& other);
  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
  friend bool operator==(const CycScalar& a, const CycScalar& b);

  /// Multiplies in place by zeta^e. O(degree).
  CycScalar& mul_zeta(int64_t e);
  /// Multiplies in place by omega^e = zeta^(4e).
  CycScalar& mul_omega(int64_t e) { return mul_zeta(4 * e); }
  /// Divides in place by k^d.
  CycScalar& div_k_power(int d);
  /// Complex conjugation zeta -> zeta^-1.
  CycScalar conj() const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  CycScalar(const detail::RingTables* ring, std::vector<int64_t> coeffs, int kden);
  void normalize();
  void check_level(const CycScalar& other) const;

  const detail::RingTables* ring_;
  std::vector<int64_t> coeffs_;
  int kden_ = 0;
};

/// omega^(e mod k).
CycScalar omega_power(Level level, int64_t e);
/// The imaginary unit zeta^k.
CycScalar imag_unit(Level level);
/// G_k = sum_m omega^(m^2), by direct summation.
CycScalar gauss_sum(Level level);
/// sum_{m in Z_k} omega^(a m^2 + b m), evaluated in closed form.
CycScalar quadratic_gauss_sum(Level level, int64_t a, int64_t b);
/// Positive square root of k.
CycScalar sqrt_k(Level level);
/// 1 / sqrt(k) = sqrt(k) / k.
CycScalar inv_sqrt_k(Level level);

inline std::complex<double> to_complex(const CycScalar& a) { return a.to_complex(); }

/// Exact test for u = c v with c != 0, by cross products u_i v_j = u_j v_i.
/// The zero vector is proportional only to the zero vector.
bool proportional(std::span<const CycScalar> u, std::span<const CycScalar> v);

}  // namespace topostab

#endif  // TOPOSTAB_CYCLO_HPP
