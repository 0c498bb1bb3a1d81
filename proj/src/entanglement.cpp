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

#include "topostab/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "topostab/stabilizer.hpp"
#include "topostab/tensor.hpp"

namespace topostab {

namespace {

std::vector<int> identity_perm(int m) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<size_t> complement(size_t n, std::span<const size_t> region) {
  std::vector<bool> in(n, false);
  for (size_t s : region) {
    if (s >= n) throw std::invalid_argument("region names site " + std::to_string(s) + " of " + std::to_string(n));
    if (in[s]) throw std::invalid_argument("region lists site " + std::to_string(s) + " twice");
    in[s] = true;
  }
  std::vector<size_t> out;
  for (size_t i = 0; i < n; ++i) {
    if (!in[i]) out.push_back(i);
  }
  return out;
}

}  // namespace

ReplicaSpec ReplicaSpec::identity(int copies, std::vector<std::vector<size_t>> regions) {
  ReplicaSpec spec{copies, std::move(regions), {}};
  spec.perms.assign(spec.regions.size(), identity_perm(copies));
  return spec;
}

ReplicaSpec ReplicaSpec::swap(size_t num_sites, std::vector<size_t> a) {
  std::vector<size_t> rest = complement(num_sites, a);
  return ReplicaSpec{2, {std::move(a), std::move(rest)}, {{1, 0}, {0, 1}}};
}

ReplicaSpec ReplicaSpec::cyclic(std::vector<size_t> a, std::vector<size_t> b, std::vector<size_t> c) {
  return ReplicaSpec{3, {std::move(a), std::move(b), std::move(c)}, {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}};
}

void validate_replica_spec(const ReplicaSpec& spec, size_t num_sites) {
  if (spec.copies < 1 || spec.copies > 3) throw std::invalid_argument("replica copies must be 1, 2 or 3");
  if (spec.perms.size() != spec.regions.size()) {
    throw std::invalid_argument("one permutation per region is required");
  }
  for (const auto& p : spec.perms) {
    if (p.size() != static_cast<size_t>(spec.copies)) throw std::invalid_argument("permutation has the wrong length");
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity_perm(spec.copies)) throw std::invalid_argument("not a permutation of the copies");
  }
  std::vector<int> seen(num_sites, 0);
  for (const auto& r : spec.regions) {
    for (size_t s : r) {
      if (s >= num_sites) throw std::invalid_argument("region names site " + std::to_string(s) + " of " + std::to_string(num_sites));
      ++seen[s];
    }
  }
  for (size_t s = 0; s < num_sites; ++s) {
    if (seen[s] != 1) throw std::invalid_argument("regions do not partition the sites (site " + std::to_string(s) + ")");
  }
}

CycScalar replica_z(const DenseState& s, const ReplicaSpec& spec) {
  const size_t n = s.num_sites();
  validate_replica_spec(spec, n);
  const int m = spec.copies;
  std::vector<const std::vector<int>*> perm_of(n);
  for (size_t r = 0; r < spec.regions.size(); ++r) {
    for (size_t site : spec.regions[r]) perm_of[site] = &spec.perms[r];
  }
  auto label = [&](size_t site, int copy) { return static_cast<int>(site) * m + copy; };

  std::vector<CycScalar> conj_amps;
  conj_amps.reserve(s.amps().size());
  for (const auto& a : s.amps()) conj_amps.push_back(a.conj());

  std::vector<LabeledTensor> tensors;
  for (int c = 0; c < m; ++c) {
    LabeledTensor ket{{}, s.amps()};
    LabeledTensor bra{{}, conj_amps};
    for (size_t site = 0; site < n; ++site) {
      ket.labels.push_back(label(site, c));
      bra.labels.push_back(label(site, (*perm_of[site])[c]));
    }
    tensors.push_back(std::move(ket));
    tensors.push_back(std::move(bra));
  }
  LabeledTensor out = contract_network(s.level(), std::move(tensors), std::span<const int>());
  return out.data.at(0);
}

EntropyValue flat_entropy(const DenseState& s, std::span<const size_t> region) {
  if (s.is_zero()) throw std::invalid_argument("entropy of the zero state");
  const Level level = s.level();
  const CycScalar z1 = s.norm_squared();
  const CycScalar z2 = replica_z(s, ReplicaSpec::swap(s.num_sites(), {region.begin(), region.end()}));
  const double z1_re = z1.to_complex().real();
  const double ratio = z2.to_complex().real() / (z1_re * z1_re);
  EntropyValue v;
  v.nats = -std::log(ratio);
  v.dits = v.nats / std::log(static_cast<double>(level.k()));
  const double rounded = std::round(v.dits);
  if (std::abs(v.dits - rounded) < 1e-9 && rounded >= 0) {
    const int d = static_cast<int>(rounded);
    CycScalar lhs = z2;
    for (int i = 0; i < d; ++i) lhs *= CycScalar(level, level.k());
    if (lhs == z1 * z1) v.exact_dits = d;
  }
  return v;
}

int ghz_count(const DenseState& s, std::span<const size_t> a, std::span<const size_t> b,
              std::span<const size_t> c) {
  if (s.is_zero()) throw std::invalid_argument("GHZ count of the zero state");
  ReplicaSpec spec = ReplicaSpec::cyclic({a.begin(), a.end()}, {b.begin(), b.end()}, {c.begin(), c.end()});
  validate_replica_spec(spec, s.num_sites());
  if (!is_stabilizer(s)) throw std::invalid_argument("GHZ count needs a stabilizer state");
  const double log_k = std::log(static_cast<double>(s.level().k()));
  const std::complex<double> z1 = s.norm_squared().to_complex();
  const std::complex<double> z3 = replica_z(s, spec).to_complex();
  if (std::abs(z3.imag()) > 1e-9 * std::abs(z3)) {
    throw std::runtime_error("three-copy contraction is not real");
  }
  const double g = flat_entropy(s, a).dits + flat_entropy(s, b).dits + flat_entropy(s, c).dits +
                   std::log(z3.real() / std::pow(z1.real(), 3)) / log_k;
  const double rounded = std::round(g);
  if (std::abs(g - rounded) > 1e-9) {
    throw std::runtime_error("GHZ count " + std::to_string(g) + " is not an integer");
  }
  return static_cast<int>(rounded);
}

std::vector<CycScalar> reduced_density_matrix(const DenseState& s, std::span<const size_t> region) {
  const int k = s.level().k();
  const size_t n = s.num_sites();
  const std::vector<size_t> rest = complement(n, region);
  const size_t da = ipow(k, region.size());
  const size_t db = ipow(k, rest.size());
  // m[ia * db + ib] = psi(ia, ib)
  std::vector<const CycScalar*> m(da * db);
  for (size_t flat = 0; flat < s.amps().size(); ++flat) {
    auto j = unflatten(k, n, flat);
    size_t ia = 0, ib = 0;
    for (size_t site : region) ia = ia * k + j[site];
    for (size_t site : rest) ib = ib * k + j[site];
    m[ia * db + ib] = &s[flat];
  }
  std::vector<CycScalar> rho(da * da, CycScalar::zero(s.level()));
  for (size_t x = 0; x < da; ++x) {
    for (size_t y = x; y < da; ++y) {
      CycScalar acc = CycScalar::zero(s.level());
      for (size_t ib = 0; ib < db; ++ib) {
        const CycScalar& u = *m[x * db + ib];
        const CycScalar& v = *m[y * db + ib];
        if (u.is_zero() || v.is_zero()) continue;
        acc += u * v.conj();
      }
      rho[y * da + x] = acc.conj();
      rho[x * da + y] = std::move(acc);
    }
  }
  return rho;
}

bool flat_spectrum_check(const DenseState& s, std::span<const size_t> region) {
  std::vector<size_t> side(region.begin(), region.end());
  std::vector<size_t> rest = complement(s.num_sites(), region);
  if (rest.size() < side.size()) side = rest;
  const Level level = s.level();
  const std::vector<CycScalar> rho = reduced_density_matrix(s, side);
  const size_t d = ipow(level.k(), side.size());

  std::vector<CycScalar> sq(d * d, CycScalar::zero(level));
  for (size_t x = 0; x < d; ++x) {
    for (size_t z = 0; z < d; ++z) {
      const CycScalar& a = rho[x * d + z];
      if (a.is_zero()) continue;
      for (size_t y = 0; y < d; ++y) {
        const CycScalar& b = rho[z * d + y];
        if (!b.is_zero()) sq[x * d + y] += a * b;
      }
    }
  }
  CycScalar tr = CycScalar::zero(level), tr2 = CycScalar::zero(level);
  for (size_t x = 0; x < d; ++x) {
    tr += rho[x * d + x];
    tr2 += sq[x * d + x];
  }
  for (size_t i = 0; i < d * d; ++i) {
    if (!(tr * sq[i] == tr2 * rho[i])) return false;
  }
  return true;
}

}  // namespace topostab
