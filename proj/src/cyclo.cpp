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

#include "topostab/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace topostab {

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Level::Level(int k) : k_(k) {
  if (k < 3 || k % 2 == 0 || !is_prime(k)) {
    throw std::invalid_argument("level must be an odd prime, got " + std::to_string(k));
  }
  if (k > 97) {
    throw std::invalid_argument("level " + std::to_string(k) + " exceeds the supported maximum 97");
  }
}

int64_t Level::inverse(int64_t x) const {
  int64_t a = mod(x);
  if (a == 0) throw std::domain_error("0 has no inverse mod " + std::to_string(k_));
  // Fermat: a^(k-2).
  int64_t result = 1, base = a, e = k_ - 2;
  while (e > 0) {
    if (e & 1) result = result * base % k_;
    base = base * base % k_;
    e >>= 1;
  }
  return result;
}

int Level::legendre(int64_t x) const {
  int64_t a = mod(x);
  if (a == 0) return 0;
  int64_t result = 1, base = a, e = (k_ - 1) / 2;
  while (e > 0) {
    if (e & 1) result = result * base % k_;
    base = base * base % k_;
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

namespace detail {

struct RingTables {
  int k;
  int deg;  // 2(k-1)
  std::vector<std::complex<double>> zeta;  // zeta^i for i < 4k
};

}  // namespace detail

namespace {

const detail::RingTables* ring_tables(int k) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<detail::RingTables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[k];
  if (!slot) {
    auto t = std::make_unique<detail::RingTables>();
    t->k = k;
    t->deg = 2 * (k - 1);
    t->zeta.resize(4 * k);
    for (int i = 0; i < 4 * k; ++i) {
      double angle = 2.0 * std::numbers::pi * i / (4.0 * k);
      t->zeta[i] = {std::cos(angle), std::sin(angle)};
    }
    slot = std::move(t);
  }
  return slot.get();
}

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

int64_t checked_pow(int64_t base, int e) {
  int64_t r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

// Reduces a buffer of length <= 2k (positions < 2k) modulo Phi_4k, in place,
// leaving the low deg = 2k-2 coordinates. Uses
//   x^(2k-2) = -sum_{i=0}^{k-2} (-1)^i x^(2i).
void reduce_top_two(std::vector<int64_t>& buf, int k) {
  const int deg = 2 * (k - 1);
  for (int top = static_cast<int>(buf.size()) - 1; top >= deg; --top) {
    int64_t c = buf[top];
    if (c == 0) continue;
    int shift = top - deg;
    for (int i = 0; i <= k - 2; ++i) {
      int64_t term = (i % 2 == 0) ? -c : c;
      buf[shift + 2 * i] = checked_add(buf[shift + 2 * i], term);
    }
    buf[top] = 0;
  }
  buf.resize(deg);
}

// Folds positions >= 2k using zeta^(2k) = -1, then reduces the remainder.
void reduce_full(std::vector<int64_t>& buf, int k) {
  for (int p = static_cast<int>(buf.size()) - 1; p >= 2 * k; --p) {
    if (buf[p] != 0) buf[p - 2 * k] = checked_add(buf[p - 2 * k], -buf[p]);
  }
  if (buf.size() > static_cast<size_t>(2 * k)) buf.resize(2 * k);
  if (buf.size() < static_cast<size_t>(2 * k)) buf.resize(2 * k, 0);
  reduce_top_two(buf, k);
}

}  // namespace

CycScalar::CycScalar(const detail::RingTables* ring, std::vector<int64_t> coeffs, int kden)
    : ring_(ring), coeffs_(std::move(coeffs)), kden_(kden) {
  normalize();
}

CycScalar::CycScalar(Level level, int64_t value)
    : ring_(ring_tables(level.k())), coeffs_(ring_->deg, 0), kden_(0) {
  coeffs_[0] = value;
}

CycScalar CycScalar::zeta_power(Level level, int64_t e) {
  CycScalar r = one(level);
  r.mul_zeta(e);
  return r;
}

CycScalar CycScalar::from_coeffs(Level level, std::vector<int64_t> coeffs, int kden) {
  if (kden < 0) throw std::invalid_argument("negative denominator exponent");
  const auto* ring = ring_tables(level.k());
  if (coeffs.size() > static_cast<size_t>(ring->deg)) {
    reduce_full(coeffs, level.k());
  } else {
    coeffs.resize(ring->deg, 0);
  }
  return CycScalar(ring, std::move(coeffs), kden);
}

Level CycScalar::level() const { return Level(ring_->k); }
int CycScalar::k() const { return ring_->k; }

bool CycScalar::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int64_t c) { return c == 0; });
}

bool CycScalar::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](int64_t c) { return c == 0; });
}

int64_t CycScalar::rational_numerator() const {
  if (!is_rational()) throw std::domain_error("value is not rational: " + to_string());
  return coeffs_[0];
}

void CycScalar::normalize() {
  if (is_zero()) {
    kden_ = 0;
    return;
  }
  const int k = ring_->k;
  while (kden_ > 0 &&
         std::all_of(coeffs_.begin(), coeffs_.end(), [k](int64_t c) { return c % k == 0; })) {
    for (auto& c : coeffs_) c /= k;
    --kden_;
  }
}

void CycScalar::check_level(const CycScalar& other) const {
  if (ring_ != other.ring_) {
    throw std::invalid_argument("level mismatch: " + std::to_string(ring_->k) + " vs " +
                                std::to_string(other.ring_->k));
  }
}

CycScalar CycScalar::operator-() const {
  CycScalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycScalar& CycScalar::operator+=(const CycScalar& other) {
  check_level(other);
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const int k = ring_->k;
  if (kden_ == other.kden_) {
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], other.coeffs_[i]);
  } else if (kden_ > other.kden_) {
    int64_t scale = checked_pow(k, kden_ - other.kden_);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      coeffs_[i] = checked_add(coeffs_[i], checked_mul(other.coeffs_[i], scale));
    }
  } else {
    int64_t scale = checked_pow(k, other.kden_ - kden_);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      coeffs_[i] = checked_add(checked_mul(coeffs_[i], scale), other.coeffs_[i]);
    }
    kden_ = other.kden_;
  }
  normalize();
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& other) { return *this += -other; }

CycScalar& CycScalar::operator*=(const CycScalar& other) {
  check_level(other);
  if (is_zero()) return *this;
  if (other.is_zero()) return *this = other;
  const int k = ring_->k;
  const int deg = ring_->deg;
  std::vector<int64_t> buf(2 * deg - 1, 0);
  for (int i = 0; i < deg; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; j < deg; ++j) {
      if (other.coeffs_[j] == 0) continue;
      buf[i + j] = checked_add(buf[i + j], checked_mul(coeffs_[i], other.coeffs_[j]));
    }
  }
  reduce_full(buf, k);
  coeffs_ = std::move(buf);
  kden_ += other.kden_;
  normalize();
  return *this;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  a.check_level(b);
  return a.kden_ == b.kden_ && a.coeffs_ == b.coeffs_;
}

CycScalar& CycScalar::mul_zeta(int64_t e) {
  const int k = ring_->k;
  int64_t r = e % (4 * k);
  if (r < 0) r += 4 * k;
  bool negate = false;
  if (r >= 2 * k) {
    r -= 2 * k;
    negate = true;
  }
  if (r == 0) {
    if (negate) {
      for (auto& c : coeffs_) c = -c;
    }
    return *this;
  }
  // Shift by r < 2k; positions reach deg - 1 + r < 4k - 2.
  std::vector<int64_t> buf(ring_->deg + r, 0);
  for (int i = 0; i < ring_->deg; ++i) buf[i + r] = negate ? -coeffs_[i] : coeffs_[i];
  reduce_full(buf, k);
  coeffs_ = std::move(buf);
  return *this;
}

CycScalar& CycScalar::div_k_power(int d) {
  if (d < 0) throw std::invalid_argument("negative power");
  if (!is_zero()) kden_ += d;
  normalize();
  return *this;
}

CycScalar CycScalar::conj() const {
  const int k = ring_->k;
  // zeta^-i = -zeta^(2k - i) for 0 < i < 2k.
  std::vector<int64_t> buf(2 * k, 0);
  buf[0] = coeffs_[0];
  for (int i = 1; i < ring_->deg; ++i) buf[2 * k - i] = -coeffs_[i];
  reduce_top_two(buf, k);
  return CycScalar(ring_, std::move(buf), kden_);
}

std::complex<double> CycScalar::to_complex() const {
  std::complex<double> acc = 0.0;
  for (int i = 0; i < ring_->deg; ++i) {
    if (coeffs_[i] != 0) acc += static_cast<double>(coeffs_[i]) * ring_->zeta[i];
  }
  return acc / std::pow(static_cast<double>(ring_->k), kden_);
}

std::string CycScalar::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ",";
    os << coeffs_[i];
  }
  os << "]";
  if (kden_ > 0) os << "/" << ring_->k << "^" << kden_;
  return os.str();
}

CycScalar omega_power(Level level, int64_t e) {
  return CycScalar::zeta_power(level, 4 * level.mod(e));
}

CycScalar imag_unit(Level level) { return CycScalar::zeta_power(level, level.k()); }

CycScalar gauss_sum(Level level) {
  CycScalar g = CycScalar::zero(level);
  for (int64_t m = 0; m < level.k(); ++m) g += omega_power(level, m * m);
  return g;
}

CycScalar quadratic_gauss_sum(Level level, int64_t a, int64_t b) {
  a = level.mod(a);
  b = level.mod(b);
  if (a == 0) return CycScalar(level, b == 0 ? level.k() : 0);
  // Completing the square: a (m + b/2a)^2 - b^2 / 4a.
  int64_t shift = level.mod(-(b * b % level.k()) * level.inverse(4 * a));
  CycScalar r = gauss_sum(level);
  r.mul_omega(shift);
  return level.legendre(a) == 1 ? r : -r;
}

CycScalar sqrt_k(Level level) {
  CycScalar g = gauss_sum(level);
  if (level.residue_mod_4() == 1) return g;
  // G_k = i sqrt(k) for k = 3 mod 4.
  return g.mul_zeta(-level.k());
}

CycScalar inv_sqrt_k(Level level) { return sqrt_k(level).div_k_power(1); }

bool proportional(std::span<const CycScalar> u, std::span<const CycScalar> v) {
  if (u.size() != v.size()) throw std::invalid_argument("proportional: length mismatch");
  size_t pivot = u.size();
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero() != v[i].is_zero()) return false;
    if (pivot == u.size() && !v[i].is_zero()) pivot = i;
  }
  if (pivot == u.size()) return true;
  const CycScalar& up = u[pivot];
  const CycScalar& vp = v[pivot];
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    if (!(u[i] * vp == up * v[i])) return false;
  }
  return true;
}

}  // namespace topostab
