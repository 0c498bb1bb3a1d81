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

#include "topostab/dense.hpp"

#include <algorithm>
#include <stdexcept>

namespace topostab {

size_t ipow(size_t base, size_t e) {
  size_t r = 1;
  for (size_t i = 0; i < e; ++i) r *= base;
  return r;
}

size_t flat_index(int k, std::span<const int> digits) {
  size_t flat = 0;
  for (int d : digits) flat = flat * k + static_cast<size_t>(d);
  return flat;
}

std::vector<int> unflatten(int k, size_t n, size_t flat) {
  std::vector<int> digits(n);
  for (size_t i = n; i-- > 0;) {
    digits[i] = static_cast<int>(flat % k);
    flat /= k;
  }
  return digits;
}

DenseState::DenseState(Level level, std::vector<Site> sites, std::vector<CycScalar> amps)
    : level_(level), sites_(std::move(sites)), amps_(std::move(amps)) {
  if (amps_.size() != ipow(level_.k(), sites_.size())) {
    throw std::invalid_argument("state needs k^n = " +
                                std::to_string(ipow(level_.k(), sites_.size())) +
                                " amplitudes, got " + std::to_string(amps_.size()));
  }
  for (const auto& a : amps_) {
    if (a.k() != level_.k()) throw std::invalid_argument("amplitude level mismatch");
  }
}

DenseState DenseState::basis(Level level, std::vector<Site> sites, std::span<const int> digits) {
  if (digits.size() != sites.size()) throw std::invalid_argument("basis: digit count mismatch");
  std::vector<CycScalar> amps(ipow(level.k(), sites.size()), CycScalar::zero(level));
  std::vector<int> reduced(digits.begin(), digits.end());
  for (auto& d : reduced) d = static_cast<int>(level.mod(d));
  amps[flat_index(level.k(), reduced)] = CycScalar::one(level);
  return DenseState(level, std::move(sites), std::move(amps));
}

DenseState DenseState::zeros(Level level, std::vector<Site> sites) {
  std::vector<CycScalar> amps(ipow(level.k(), sites.size()), CycScalar::zero(level));
  return DenseState(level, std::move(sites), std::move(amps));
}

std::vector<Site> DenseState::default_sites(size_t n) {
  std::vector<Site> sites;
  for (size_t i = 0; i < n; ++i) sites.push_back({"s" + std::to_string(i), Orientation::positive});
  return sites;
}

const CycScalar& DenseState::amp(std::span<const int> digits) const {
  return amps_[flat_index(level_.k(), digits)];
}

size_t DenseState::site_position(const std::string& name) const {
  for (size_t i = 0; i < sites_.size(); ++i) {
    if (sites_[i].name == name) return i;
  }
  throw std::out_of_range("no site named '" + name + "'");
}

bool DenseState::is_zero() const {
  return std::all_of(amps_.begin(), amps_.end(), [](const CycScalar& a) { return a.is_zero(); });
}

std::vector<std::complex<double>> DenseState::to_complex() const {
  std::vector<std::complex<double>> out;
  out.reserve(amps_.size());
  for (const auto& a : amps_) out.push_back(a.to_complex());
  return out;
}

CycScalar DenseState::norm_squared() const {
  CycScalar acc = CycScalar::zero(level_);
  for (const auto& a : amps_) {
    if (!a.is_zero()) acc += a.conj() * a;
  }
  return acc;
}

bool proportional(const DenseState& a, const DenseState& b) {
  if (a.level() != b.level() || a.num_sites() != b.num_sites()) return false;
  return proportional(std::span<const CycScalar>(a.amps()), std::span<const CycScalar>(b.amps()));
}

GateMatrix::GateMatrix(Level level, size_t nin, size_t nout, std::vector<CycScalar> entries)
    : level_(level), nin_(nin), nout_(nout), entries_(std::move(entries)) {
  if (entries_.size() != ipow(level.k(), nin + nout)) {
    throw std::invalid_argument("gate needs k^(nin+nout) entries");
  }
}

GateMatrix GateMatrix::identity(Level level, size_t legs) {
  size_t dim = ipow(level.k(), legs);
  std::vector<CycScalar> e(dim * dim, CycScalar::zero(level));
  for (size_t i = 0; i < dim; ++i) e[i * dim + i] = CycScalar::one(level);
  return GateMatrix(level, legs, legs, std::move(e));
}

GateMatrix GateMatrix::adjoint() const {
  size_t r = rows(), c = cols();
  std::vector<CycScalar> e;
  e.reserve(r * c);
  for (size_t i = 0; i < c; ++i) {
    for (size_t j = 0; j < r; ++j) e.push_back(at(j, i).conj());
  }
  return GateMatrix(level_, nout_, nin_, std::move(e));
}

GateMatrix GateMatrix::compose(const GateMatrix& other) const {
  if (level_ != other.level_) throw std::invalid_argument("compose: level mismatch");
  if (nin_ != other.nout_) throw std::invalid_argument("compose: leg-count mismatch");
  size_t r = rows(), mid = cols(), c = other.cols();
  std::vector<CycScalar> e(r * c, CycScalar::zero(level_));
  for (size_t i = 0; i < r; ++i) {
    for (size_t m = 0; m < mid; ++m) {
      const CycScalar& a = at(i, m);
      if (a.is_zero()) continue;
      for (size_t j = 0; j < c; ++j) {
        const CycScalar& b = other.at(m, j);
        if (!b.is_zero()) e[i * c + j] += a * b;
      }
    }
  }
  return GateMatrix(level_, other.nin_, nout_, std::move(e));
}

GateMatrix GateMatrix::kron(const GateMatrix& other) const {
  if (level_ != other.level_) throw std::invalid_argument("kron: level mismatch");
  size_t r1 = rows(), c1 = cols(), r2 = other.rows(), c2 = other.cols();
  std::vector<CycScalar> e(r1 * r2 * c1 * c2, CycScalar::zero(level_));
  for (size_t i1 = 0; i1 < r1; ++i1)
    for (size_t j1 = 0; j1 < c1; ++j1) {
      const CycScalar& a = at(i1, j1);
      if (a.is_zero()) continue;
      for (size_t i2 = 0; i2 < r2; ++i2)
        for (size_t j2 = 0; j2 < c2; ++j2) {
          const CycScalar& b = other.at(i2, j2);
          if (!b.is_zero()) e[(i1 * r2 + i2) * (c1 * c2) + j1 * c2 + j2] = a * b;
        }
    }
  return GateMatrix(level_, nin_ + other.nin_, nout_ + other.nout_, std::move(e));
}

GateMatrix GateMatrix::scaled(const CycScalar& c) const {
  std::vector<CycScalar> e = entries_;
  for (auto& x : e) x *= c;
  return GateMatrix(level_, nin_, nout_, std::move(e));
}

GateMatrix GateMatrix::power(int e) const {
  if (nin_ != nout_) throw std::invalid_argument("power of a non-square gate");
  if (e < 0) throw std::invalid_argument("negative gate power");
  GateMatrix r = identity(level_, nin_);
  for (int i = 0; i < e; ++i) r = compose(r);
  return r;
}

bool GateMatrix::is_unitary() const {
  return adjoint().compose(*this) == identity(level_, nin_);
}

bool GateMatrix::is_isometry_up_to_scalar() const {
  GateMatrix g = adjoint().compose(*this);
  const CycScalar& c = g.at(0, 0);
  if (c.is_zero()) return false;
  return g == identity(level_, nin_).scaled(c);
}

bool operator==(const GateMatrix& a, const GateMatrix& b) {
  return a.level_ == b.level_ && a.nin_ == b.nin_ && a.nout_ == b.nout_ && a.entries_ == b.entries_;
}

bool proportional(const GateMatrix& a, const GateMatrix& b) {
  if (a.level() != b.level() || a.nin() != b.nin() || a.nout() != b.nout()) return false;
  return proportional(std::span<const CycScalar>(a.entries()),
                      std::span<const CycScalar>(b.entries()));
}

DenseState permute_sites(const DenseState& s, std::span<const size_t> perm) {
  const size_t n = s.num_sites();
  if (perm.size() != n) throw std::invalid_argument("permute_sites: size mismatch");
  std::vector<bool> seen(n, false);
  for (size_t p : perm) {
    if (p >= n || seen[p]) throw std::invalid_argument("permute_sites: not a permutation");
    seen[p] = true;
  }
  const int k = s.level().k();
  std::vector<Site> sites;
  for (size_t p : perm) sites.push_back(s.sites()[p]);
  std::vector<CycScalar> amps(s.amps().size(), CycScalar::zero(s.level()));
  std::vector<int> old_digits(n);
  for (size_t flat = 0; flat < amps.size(); ++flat) {
    auto digits = unflatten(k, n, flat);
    for (size_t i = 0; i < n; ++i) old_digits[perm[i]] = digits[i];
    amps[flat] = s.amp(old_digits);
  }
  return DenseState(s.level(), std::move(sites), std::move(amps));
}

GateMatrix gate_from_state(const DenseState& s, std::span<const size_t> out_sites,
                           std::span<const size_t> in_sites) {
  std::vector<size_t> perm(out_sites.begin(), out_sites.end());
  perm.insert(perm.end(), in_sites.begin(), in_sites.end());
  DenseState p = permute_sites(s, perm);
  return GateMatrix(s.level(), in_sites.size(), out_sites.size(), p.amps());
}

DenseState tensor_product(const DenseState& a, const DenseState& b) {
  if (a.level() != b.level()) throw std::invalid_argument("tensor_product: level mismatch");
  std::vector<Site> sites = a.sites();
  sites.insert(sites.end(), b.sites().begin(), b.sites().end());
  std::vector<CycScalar> amps;
  amps.reserve(a.amps().size() * b.amps().size());
  for (const auto& x : a.amps()) {
    for (const auto& y : b.amps()) amps.push_back(x * y);
  }
  return DenseState(a.level(), std::move(sites), std::move(amps));
}

DenseState apply_gate(const GateMatrix& g, const DenseState& s, std::span<const size_t> legs) {
  if (g.level() != s.level()) throw std::invalid_argument("apply_gate: level mismatch");
  if (g.nin() != legs.size() || g.nout() != legs.size()) {
    throw std::invalid_argument("apply_gate: leg-count mismatch");
  }
  const int k = s.level().k();
  const size_t n = s.num_sites();
  for (size_t l : legs) {
    if (l >= n) throw std::out_of_range("apply_gate: leg out of range");
  }
  std::vector<CycScalar> amps(s.amps().size(), CycScalar::zero(s.level()));
  const size_t dim = g.cols();
  std::vector<int> sub(legs.size());
  for (size_t flat = 0; flat < amps.size(); ++flat) {
    const CycScalar& a = s[flat];
    if (a.is_zero()) continue;
    auto digits = unflatten(k, n, flat);
    for (size_t i = 0; i < legs.size(); ++i) sub[i] = digits[legs[i]];
    size_t col = flat_index(k, sub);
    for (size_t row = 0; row < dim; ++row) {
      const CycScalar& m = g.at(row, col);
      if (m.is_zero()) continue;
      auto out = unflatten(k, legs.size(), row);
      for (size_t i = 0; i < legs.size(); ++i) digits[legs[i]] = out[i];
      amps[flat_index(k, digits)] += m * a;
    }
  }
  return DenseState(s.level(), s.sites(), std::move(amps));
}

DenseState contract_pair(const DenseState& s, size_t site_a, size_t site_b) {
  const size_t n = s.num_sites();
  if (site_a >= n || site_b >= n || site_a == site_b) {
    throw std::invalid_argument("contract_pair: bad site positions");
  }
  if (s.sites()[site_a].orientation == s.sites()[site_b].orientation) {
    throw std::invalid_argument("contract_pair: orientation mismatch between '" +
                                s.sites()[site_a].name + "' and '" + s.sites()[site_b].name + "'");
  }
  const int k = s.level().k();
  std::vector<Site> sites;
  for (size_t i = 0; i < n; ++i) {
    if (i != site_a && i != site_b) sites.push_back(s.sites()[i]);
  }
  std::vector<CycScalar> amps(ipow(k, n - 2), CycScalar::zero(s.level()));
  for (size_t flat = 0; flat < s.amps().size(); ++flat) {
    const CycScalar& a = s[flat];
    if (a.is_zero()) continue;
    auto digits = unflatten(k, n, flat);
    if (digits[site_a] != digits[site_b]) continue;
    size_t out = 0;
    for (size_t i = 0; i < n; ++i) {
      if (i != site_a && i != site_b) out = out * k + digits[i];
    }
    amps[out] += a;
  }
  return DenseState(s.level(), std::move(sites), std::move(amps));
}

DenseState dual(const DenseState& s) {
  std::vector<Site> sites = s.sites();
  for (auto& site : sites) site.orientation = flip(site.orientation);
  std::vector<CycScalar> amps;
  amps.reserve(s.amps().size());
  for (const auto& a : s.amps()) amps.push_back(a.conj());
  return DenseState(s.level(), std::move(sites), std::move(amps));
}

}  // namespace topostab
