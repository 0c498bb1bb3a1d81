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

#include "topostab/stabilizer.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <regex>
#include <sstream>

#include "topostab/zk.hpp"

namespace topostab {

namespace {

void check_sizes(const PauliOp& p, size_t n) {
  if (p.z.size() != n || p.x.size() != n) {
    throw std::invalid_argument("Pauli operator acts on " + std::to_string(p.z.size()) +
                                " sites, expected " + std::to_string(n));
  }
}

int64_t dot(Level level, const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
  int64_t acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc = level.mod(acc + level.mod(a[i]) * level.mod(b[i]));
  return acc;
}

zk::Vector symplectic_row(const PauliOp& p) {
  zk::Vector row = p.z;
  row.insert(row.end(), p.x.begin(), p.x.end());
  return row;
}

// In-place DFT along every axis of a k^n array: out[f] = sum_x w^{sign f x} in[x].
// Plain complex product, skipping the inf/nan recovery of operator*.
inline std::complex<double> cmul(std::complex<double> a, std::complex<double> b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

void dft_all_axes(std::vector<std::complex<double>>& data, int k, size_t n, int sign) {
  std::vector<std::complex<double>> tw(k);
  for (int m = 0; m < k; ++m) {
    double angle = sign * 2.0 * std::numbers::pi * m / k;
    tw[m] = {std::cos(angle), std::sin(angle)};
  }
  std::vector<std::complex<double>> in(k), out(k);
  size_t stride = 1;
  for (size_t axis = 0; axis < n; ++axis) {
    const size_t block = stride * k;
    for (size_t base = 0; base < data.size(); base += block) {
      for (size_t off = 0; off < stride; ++off) {
        for (int x = 0; x < k; ++x) in[x] = data[base + off + x * stride];
        for (int f = 0; f < k; ++f) {
          std::complex<double> acc = 0.0;
          int t = 0;
          for (int x = 0; x < k; ++x) {
            acc += cmul(tw[t], in[x]);
            t += f;
            if (t >= k) t -= k;
          }
          out[f] = acc;
        }
        for (int f = 0; f < k; ++f) data[base + off + f * stride] = out[f];
      }
    }
    stride *= k;
  }
}

// Flat index of digits (a - b) or (a + b) mod k, digit-wise.
size_t shifted_index(int k, const std::vector<int>& a, const std::vector<int>& b, int sign) {
  size_t flat = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int d = (a[i] + sign * b[i]) % k;
    if (d < 0) d += k;
    flat = flat * k + d;
  }
  return flat;
}

// Digits of every flat index in Z_k^n, n per row.
class DigitTable {
 public:
  DigitTable(int k, size_t n) : k_(k), n_(n), digits_(ipow(k, n) * n) {
    for (size_t flat = 0; flat < digits_.size() / std::max<size_t>(n, 1); ++flat) {
      size_t rest = flat;
      for (size_t i = n; i-- > 0;) {
        digits_[flat * n + i] = static_cast<int>(rest % k);
        rest /= k;
      }
    }
  }
  const int* operator[](size_t flat) const { return &digits_[flat * n_]; }
  // Flat index of a + sign * b, digit-wise mod k.
  size_t shifted(size_t fa, size_t fb, int sign) const {
    const int* a = (*this)[fa];
    const int* b = (*this)[fb];
    size_t flat = 0;
    for (size_t i = 0; i < n_; ++i) {
      int d = a[i] + sign * b[i];
      if (d >= k_) d -= k_;
      if (d < 0) d += k_;
      flat = flat * k_ + d;
    }
    return flat;
  }

 private:
  int k_;
  size_t n_;
  std::vector<int> digits_;
};

}  // namespace

int64_t symplectic_form(Level level, const PauliOp& p, const PauliOp& q) {
  return level.mod(dot(level, p.z, q.x) - dot(level, q.z, p.x));
}

PauliOp compose(Level level, const PauliOp& p, const PauliOp& q) {
  check_sizes(q, p.num_sites());
  PauliOp r;
  for (size_t i = 0; i < p.num_sites(); ++i) {
    r.z.push_back(level.mod(p.z[i] + q.z[i]));
    r.x.push_back(level.mod(p.x[i] + q.x[i]));
  }
  r.phase = level.mod(p.phase + q.phase + level.half() * symplectic_form(level, p, q));
  return r;
}

PauliOp pauli_power(Level level, const PauliOp& p, int64_t m) {
  m = level.mod(m);
  PauliOp r;
  for (size_t i = 0; i < p.num_sites(); ++i) {
    r.z.push_back(level.mod(p.z[i] * m));
    r.x.push_back(level.mod(p.x[i] * m));
  }
  r.phase = level.mod(p.phase * m);
  return r;
}

DenseState weyl_apply(Level level, const PauliOp& p, const DenseState& s) {
  const size_t n = s.num_sites();
  check_sizes(p, n);
  if (s.level() != level) throw std::invalid_argument("weyl_apply: level mismatch");
  const int k = level.k();
  std::vector<int> b(n);
  for (size_t i = 0; i < n; ++i) b[i] = static_cast<int>(level.mod(p.x[i]));
  const int64_t base_phase = level.mod(p.phase - level.half() * dot(level, p.z, p.x));
  std::vector<CycScalar> amps;
  amps.reserve(s.amps().size());
  for (size_t flat = 0; flat < s.amps().size(); ++flat) {
    auto j = unflatten(k, n, flat);
    CycScalar a = s[shifted_index(k, j, b, -1)];
    if (!a.is_zero()) {
      int64_t e = base_phase;
      for (size_t i = 0; i < n; ++i) e += level.mod(p.z[i]) * j[i];
      a.mul_omega(level.mod(e));
    }
    amps.push_back(std::move(a));
  }
  return DenseState(level, s.sites(), std::move(amps));
}

std::string to_string(const PauliOp& p) {
  std::ostringstream os;
  os << "w^" << p.phase << " Z[";
  for (size_t i = 0; i < p.z.size(); ++i) os << (i ? "," : "") << p.z[i];
  os << "] X[";
  for (size_t i = 0; i < p.x.size(); ++i) os << (i ? "," : "") << p.x[i];
  os << "]";
  return os.str();
}

PauliOp parse_pauli(Level level, const std::string& text) {
  static const std::regex re(R"(^\s*w\^(-?\d+)\s+Z\[([-\d,\s]*)\]\s+X\[([-\d,\s]*)\]\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw std::invalid_argument("malformed Pauli operator: '" + text + "'");
  auto ints = [&](const std::string& list) {
    std::vector<int64_t> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.find_first_not_of(" \t") == std::string::npos) continue;
      out.push_back(level.mod(std::stoll(item)));
    }
    return out;
  };
  PauliOp p{ints(m[2]), ints(m[3]), level.mod(std::stoll(m[1]))};
  if (p.z.size() != p.x.size()) throw std::invalid_argument("Z and X parts differ in length: '" + text + "'");
  return p;
}

StabilizerTableau::StabilizerTableau(Level level, std::vector<PauliOp> generators)
    : level_(level), n_(generators.size()), generators_(std::move(generators)) {
  zk::Matrix rows;
  for (auto& g : generators_) {
    check_sizes(g, n_);
    for (auto& v : g.z) v = level.mod(v);
    for (auto& v : g.x) v = level.mod(v);
    g.phase = level.mod(g.phase);
    rows.push_back(symplectic_row(g));
  }
  for (size_t i = 0; i < n_; ++i) {
    for (size_t j = i + 1; j < n_; ++j) {
      if (symplectic_form(level, generators_[i], generators_[j]) != 0) {
        throw NotStabilizerError("generators " + std::to_string(i) + " and " + std::to_string(j) +
                                 " do not commute");
      }
    }
  }
  if (zk::rank(level, rows, 2 * n_) != n_) throw NotStabilizerError("generators are not independent");
}

std::string StabilizerTableau::to_string() const {
  std::string out;
  for (const auto& g : generators_) out += topostab::to_string(g) + "\n";
  return out;
}

WignerTable wigner_function(const DenseState& s) {
  const Level level = s.level();
  const int k = level.k();
  const size_t n = s.num_sites();
  const auto psi = s.to_complex();
  double norm = 0.0;
  for (const auto& a : psi) norm += std::norm(a);
  if (s.is_zero() || norm == 0.0) throw std::invalid_argument("Wigner function of the zero state");

  const size_t dim = psi.size();
  WignerTable w{k, n, std::vector<double>(dim * dim, 0.0), 0.0};
  const double scale = 1.0 / (std::pow(static_cast<double>(k), static_cast<double>(n)) * norm);
  std::vector<std::complex<double>> g(dim);
  // a -> 2a mod k on each digit selects the frequency.
  std::vector<size_t> doubled(dim);
  for (size_t fa = 0; fa < dim; ++fa) {
    auto a = unflatten(k, n, fa);
    for (auto& d : a) d = (2 * d) % k;
    doubled[fa] = flat_index(k, a);
  }
  const DigitTable digits(k, n);
  // Columns b are produced in batches so the (a, b) table is written in runs.
  constexpr size_t kBatch = 64;
  std::vector<std::complex<double>> batch(kBatch * dim);
  for (size_t b0 = 0; b0 < dim; b0 += kBatch) {
    const size_t nb = std::min(kBatch, dim - b0);
    for (size_t t = 0; t < nb; ++t) {
      const size_t fb = b0 + t;
      for (size_t fx = 0; fx < dim; ++fx) {
        g[fx] = cmul(psi[digits.shifted(fb, fx, +1)], std::conj(psi[digits.shifted(fb, fx, -1)]));
      }
      dft_all_axes(g, k, n, -1);
      std::copy(g.begin(), g.end(), batch.begin() + t * dim);
    }
    for (size_t fa = 0; fa < dim; ++fa) {
      for (size_t t = 0; t < nb; ++t) {
        const std::complex<double> v = batch[t * dim + doubled[fa]] * scale;
        w.values[fa * dim + b0 + t] = v.real();
        w.max_imag = std::max(w.max_imag, std::abs(v.imag()));
      }
    }
  }
  return w;
}

namespace {

constexpr double kHudsonTolerance = 1e-9;

bool hudson_ok(const WignerTable& w) {
  const double target = 1.0 / std::pow(static_cast<double>(w.k), static_cast<double>(w.n));
  size_t support = 0;
  for (double v : w.values) {
    if (v < -kHudsonTolerance) return false;
    if (std::abs(v) <= kHudsonTolerance) continue;
    if (std::abs(v - target) > kHudsonTolerance) return false;
    ++support;
  }
  return support == static_cast<size_t>(std::llround(1.0 / target));
}

// omega^phase W(z, x) psi == psi, exactly.
bool stabilizes(Level level, const PauliOp& p, const DenseState& s) {
  return weyl_apply(level, p, s).amps() == s.amps();
}

}  // namespace

StabilizerCheck check_stabilizer(const DenseState& s) {
  if (s.is_zero()) throw std::invalid_argument("stabilizer test of the zero state");
  const Level level = s.level();
  const int k = level.k();
  const size_t n = s.num_sites();
  StabilizerCheck out;
  out.wigner_ok = hudson_ok(wigner_function(s));

  // Characteristic function chi(a, b) = <psi| W(a, b) |psi>; stabilizers are
  // the points with |chi| = <psi|psi>.
  const auto psi = s.to_complex();
  double norm = 0.0;
  for (const auto& a : psi) norm += std::norm(a);
  const size_t dim = psi.size();
  std::vector<std::complex<double>> g(dim);
  zk::Matrix chosen_rows;
  std::vector<PauliOp> generators;
  const DigitTable digits(k, n);
  for (size_t fb = 0; fb < dim && generators.size() < n; ++fb) {
    auto b = unflatten(k, n, fb);
    for (size_t fj = 0; fj < dim; ++fj) {
      g[fj] = cmul(std::conj(psi[fj]), psi[digits.shifted(fj, fb, -1)]);
    }
    dft_all_axes(g, k, n, +1);
    for (size_t fa = 0; fa < dim && generators.size() < n; ++fa) {
      if (std::abs(std::abs(g[fa]) - norm) > 1e-6 * norm) continue;
      auto a = unflatten(k, n, fa);
      PauliOp p;
      for (size_t i = 0; i < n; ++i) {
        p.z.push_back(a[i]);
        p.x.push_back(b[i]);
      }
      zk::Matrix trial = chosen_rows;
      trial.push_back(symplectic_row(p));
      if (zk::rank(level, trial, 2 * n) != trial.size()) continue;
      // chi = omega^{-ab/2} G(a) is the eigenvalue of W(a, b) times <psi|psi>.
      double angle = std::arg(g[fa]) - 2.0 * std::numbers::pi * level.half() * dot(level, p.z, p.x) / k;
      int64_t e = std::llround(angle * k / (2.0 * std::numbers::pi));
      p.phase = level.mod(-e);
      if (!stabilizes(level, p, s)) continue;
      chosen_rows = std::move(trial);
      generators.push_back(std::move(p));
    }
  }
  if (generators.size() == n) {
    out.exact_ok = true;
    out.certificate.emplace(level, std::move(generators));
  }
  return out;
}

bool is_stabilizer(const DenseState& s) { return check_stabilizer(s).is_stabilizer(); }

StabilizerTableau stabilizer_group_search(const DenseState& s) {
  if (s.is_zero()) throw NotStabilizerError("the zero state has no stabilizer group");
  const Level level = s.level();
  const int k = level.k();
  const size_t n = s.num_sites();
  const size_t dim = s.amps().size();
  size_t pivot = 0;
  while (s[pivot].is_zero()) ++pivot;

  std::vector<PauliOp> group;
  for (size_t fa = 0; fa < dim; ++fa) {
    for (size_t fb = 0; fb < dim; ++fb) {
      auto a = unflatten(k, n, fa), b = unflatten(k, n, fb);
      PauliOp p{std::vector<int64_t>(a.begin(), a.end()), std::vector<int64_t>(b.begin(), b.end()), 0};
      DenseState moved = weyl_apply(level, p, s);
      // The eigenvalue, if any, is fixed by the pivot amplitude.
      const CycScalar& target = moved[pivot];
      if (target.is_zero()) continue;
      std::optional<int64_t> eig;
      for (int64_t e = 0; e < k && !eig; ++e) {
        CycScalar c = s[pivot];
        if (c.mul_omega(e) == target) eig = e;
      }
      if (!eig) continue;
      p.phase = level.mod(-*eig);
      if (stabilizes(level, p, s)) group.push_back(std::move(p));
    }
  }
  if (group.size() != dim) {
    throw NotStabilizerError("stabilizer group has " + std::to_string(group.size()) +
                             " elements, expected " + std::to_string(dim));
  }
  zk::Matrix rows;
  std::vector<PauliOp> generators;
  for (auto& p : group) {
    rows.push_back(symplectic_row(p));
    if (zk::rank(level, rows, 2 * n) == rows.size()) {
      generators.push_back(p);
    } else {
      rows.pop_back();
    }
    if (generators.size() == n) break;
  }
  return StabilizerTableau(level, std::move(generators));
}

DenseState dense_from_tableau(const StabilizerTableau& t) {
  const Level level = t.level();
  const int k = level.k();
  const size_t n = t.num_sites();
  const size_t dim = ipow(k, n);
  auto project = [&](DenseState phi) {
    for (const auto& g : t.generators()) {
      DenseState acc = phi;
      DenseState term = phi;
      for (int m = 1; m < k; ++m) {
        term = weyl_apply(level, g, term);
        for (size_t i = 0; i < dim; ++i) acc.mutable_amps()[i] += term[i];
      }
      phi = std::move(acc);
    }
    return phi;
  };
  std::vector<Site> sites = DenseState::default_sites(n);
  DenseState uniform(level, sites, std::vector<CycScalar>(dim, CycScalar::one(level)));
  DenseState out = project(uniform);
  for (size_t fiducial = 0; out.is_zero() && fiducial < dim; ++fiducial) {
    auto digits = unflatten(k, n, fiducial);
    out = project(DenseState::basis(level, sites, digits));
  }
  if (out.is_zero()) throw NotStabilizerError("inconsistent tableau: projector vanishes");
  return out;
}

int entropy_from_tableau(const StabilizerTableau& t, std::span<const size_t> region) {
  const size_t n = t.num_sites();
  std::vector<bool> in_a(n, false);
  for (size_t s : region) {
    if (s >= n) throw std::out_of_range("region site " + std::to_string(s) + " out of range");
    if (in_a[s]) throw std::invalid_argument("region lists site " + std::to_string(s) + " twice");
    in_a[s] = true;
  }
  if (region.empty()) return 0;
  std::vector<size_t> complement;
  for (size_t i = 0; i < n; ++i) {
    if (!in_a[i]) complement.push_back(i);
  }
  zk::Matrix rows;
  for (const auto& g : t.generators()) {
    zk::Vector row;
    for (size_t i : complement) row.push_back(g.z[i]);
    for (size_t i : complement) row.push_back(g.x[i]);
    rows.push_back(std::move(row));
  }
  const size_t r = complement.empty() ? 0 : zk::rank(t.level(), rows, 2 * complement.size());
  return static_cast<int>(region.size()) - static_cast<int>(n) + static_cast<int>(r);
}

}  // namespace topostab
