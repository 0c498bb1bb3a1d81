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

#include "topostab/surgery.hpp"

#include <algorithm>

namespace topostab {

SurgeryPresentation::SurgeryPresentation(Level level, std::vector<LinkComponent> components,
                                         std::vector<std::vector<int64_t>> linking)
    : level_(level), components_(std::move(components)), linking_(std::move(linking)) {
  const size_t n = components_.size();
  if (n == 0) throw std::invalid_argument("a link needs at least one component");
  if (linking_.size() != n) throw std::invalid_argument("linking matrix has the wrong size");
  for (const auto& row : linking_) {
    if (row.size() != n) throw std::invalid_argument("linking matrix has the wrong size");
  }
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a + 1; b < n; ++b) {
      if (linking_[a][b] != linking_[b][a]) {
        throw std::invalid_argument("linking matrix is not symmetric at (" + components_[a].name +
                                    ", " + components_[b].name + ")");
      }
    }
    if (components_[a].role == Role::surgery && components_[a].rep) {
      throw std::invalid_argument("rep label only on boundary components ('" +
                                  components_[a].name + "')");
    }
    for (size_t b = 0; b < a; ++b) {
      if (components_[a].name == components_[b].name) {
        throw std::invalid_argument("duplicate component name '" + components_[a].name + "'");
      }
    }
  }
}

std::vector<size_t> SurgeryPresentation::surgery_indices() const {
  std::vector<size_t> out;
  for (size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].role == Role::surgery) out.push_back(i);
  }
  return out;
}

std::vector<size_t> SurgeryPresentation::free_boundary_indices() const {
  std::vector<size_t> out;
  for (size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].role == Role::boundary && !components_[i].rep) out.push_back(i);
  }
  return out;
}

ReducedLinking reduced_linking(const SurgeryPresentation& p) {
  const Level level = p.level();
  const int64_t k = level.k();
  const int64_t weight = level.mod((1 + k * k) / 2);
  ReducedLinking r{level, zk::Matrix(p.size(), zk::Vector(p.size(), 0))};
  for (size_t a = 0; a < p.size(); ++a) {
    for (size_t b = 0; b < p.size(); ++b) r.matrix[a][b] = level.mod(weight * level.mod(p.linking()[a][b]));
  }
  return r;
}

namespace {

int64_t sign_factor(SignConvention sign) { return sign == SignConvention::standard ? -1 : 1; }

// sign * v^T L~ v mod k, double sum over ordered pairs.
int64_t exponent(const ReducedLinking& l, const std::vector<int64_t>& v, int64_t sign) {
  int64_t acc = 0;
  const size_t n = v.size();
  for (size_t a = 0; a < n; ++a) {
    if (v[a] == 0) continue;
    int64_t row = 0;
    for (size_t b = 0; b < n; ++b) row += l.matrix[a][b] * v[b];
    acc = l.level.mod(acc + v[a] * l.level.mod(row));
  }
  return l.level.mod(sign * acc);
}

CycScalar from_histogram(Level level, const std::vector<int64_t>& counts) {
  CycScalar acc = CycScalar::zero(level);
  for (int64_t e = 0; e < level.k(); ++e) {
    if (counts[e] == 0) continue;
    acc += CycScalar(level, counts[e]) * omega_power(level, e);
  }
  return acc;
}

}  // namespace

CycScalar s3_expectation(const SurgeryPresentation& p, SignConvention sign) {
  std::vector<int64_t> v;
  for (const auto& c : p.components()) {
    if (c.role == Role::surgery) throw std::invalid_argument("s3_expectation: surgery component '" + c.name + "'");
    if (!c.rep) throw std::invalid_argument("s3_expectation: unlabeled component '" + c.name + "'");
    v.push_back(p.level().mod(*c.rep));
  }
  return omega_power(p.level(), exponent(reduced_linking(p), v, sign_factor(sign)));
}

DenseState state_from_presentation(const SurgeryPresentation& p, SignConvention sign) {
  const Level level = p.level();
  const int k = level.k();
  const auto free = p.free_boundary_indices();
  const auto surg = p.surgery_indices();
  if (surg.size() > kMaxBruteForceSurgery) {
    throw std::invalid_argument("brute-force summation supports at most " +
                                std::to_string(kMaxBruteForceSurgery) +
                                " surgery components; use tableau_from_presentation");
  }
  const ReducedLinking l = reduced_linking(p);
  const int64_t s = sign_factor(sign);
  std::vector<int64_t> v(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (p.components()[i].rep) v[i] = level.mod(*p.components()[i].rep);
  }
  std::vector<Site> sites;
  for (size_t i : free) sites.push_back({p.components()[i].name, Orientation::positive});

  // Split the form into outer (boundary) and surgery blocks:
  //   v L v = o L_oo o + 2 o L_om m + m L_mm m.
  std::vector<size_t> outer;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p.components()[i].role == Role::boundary) outer.push_back(i);
  }
  const size_t ns = surg.size();
  const size_t surgery_dim = ipow(k, ns);
  std::vector<int> m_digits(surgery_dim * ns);
  std::vector<int64_t> m_quad(surgery_dim);
  for (size_t fm = 0; fm < surgery_dim; ++fm) {
    auto m = unflatten(k, ns, fm);
    std::copy(m.begin(), m.end(), m_digits.begin() + fm * ns);
    std::vector<int64_t> vm(p.size(), 0);
    for (size_t i = 0; i < ns; ++i) vm[surg[i]] = m[i];
    m_quad[fm] = exponent(l, vm, s);
  }

  const size_t boundary_dim = ipow(k, free.size());
  std::vector<CycScalar> amps;
  amps.reserve(boundary_dim);
  std::vector<int64_t> counts(k);
  std::vector<int64_t> cross(ns);
  for (size_t fj = 0; fj < boundary_dim; ++fj) {
    auto j = unflatten(k, free.size(), fj);
    for (size_t i = 0; i < free.size(); ++i) v[free[i]] = j[i];
    std::vector<int64_t> vo(p.size(), 0);
    for (size_t i : outer) vo[i] = v[i];
    const int64_t q_outer = exponent(l, vo, s);
    for (size_t t = 0; t < ns; ++t) {
      int64_t acc = 0;
      for (size_t i : outer) acc += l.matrix[i][surg[t]] * vo[i];
      cross[t] = level.mod(2 * s * level.mod(acc));
    }
    std::fill(counts.begin(), counts.end(), 0);
    for (size_t fm = 0; fm < surgery_dim; ++fm) {
      const int* m = &m_digits[fm * ns];
      int64_t e = q_outer + m_quad[fm];
      for (size_t t = 0; t < ns; ++t) e += cross[t] * m[t];
      ++counts[e % k];
    }
    amps.push_back(from_histogram(level, counts));
  }
  return DenseState(level, std::move(sites), std::move(amps));
}

QuadraticReduction reduce_quadratic_form(const SurgeryPresentation& p, SignConvention sign) {
  const Level level = p.level();
  const size_t n = p.size();
  const ReducedLinking l = reduced_linking(p);
  const int64_t s = sign_factor(sign);

  zk::Matrix a(n, zk::Vector(n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = level.mod(s * l.matrix[i][j]);
  }
  zk::Vector lin(n, 0);
  int64_t constant = 0;
  std::vector<bool> alive(n, true);
  CycScalar prefactor = CycScalar::one(level);
  zk::Matrix constraints;
  zk::Vector rhs;

  // v_u := sum_b coef_b v_b + c0, for alive b != u.
  auto substitute = [&](size_t u, const zk::Vector& coef, int64_t c0) {
    for (size_t b = 0; b < n; ++b) {
      if (!alive[b] || b == u) continue;
      for (size_t c = 0; c < n; ++c) {
        if (!alive[c] || c == u) continue;
        a[b][c] = level.mod(a[b][c] + a[u][c] * coef[b] + a[b][u] * coef[c] +
                            level.mod(a[u][u] * coef[b]) * coef[c]);
      }
    }
    for (size_t b = 0; b < n; ++b) {
      if (!alive[b] || b == u) continue;
      lin[b] = level.mod(lin[b] + level.mod(2 * c0) * a[u][b] +
                         level.mod(2 * a[u][u] * c0) * coef[b] + lin[u] * coef[b]);
    }
    constant = level.mod(constant + level.mod(a[u][u] * c0) * c0 + lin[u] * c0);
    alive[u] = false;
  };

  for (size_t i = 0; i < n; ++i) {
    if (p.components()[i].rep) substitute(i, zk::Vector(n, 0), level.mod(*p.components()[i].rep));
  }

  QuadraticReduction out{level, CycScalar::zero(level), {}, {}, 0, {}, {}, false};
  for (size_t t : p.surgery_indices()) {
    if (!alive[t]) continue;
    const int64_t alpha = a[t][t];
    alive[t] = false;
    if (alpha != 0) {
      // sum_m omega^{alpha m^2 + beta m} = (alpha/k) G_k omega^{-beta^2 / 4 alpha},
      // beta = 2 sum_b a_tb v_b + lin_t.
      const int64_t inv = level.inverse(alpha);
      for (size_t b = 0; b < n; ++b) {
        if (!alive[b]) continue;
        for (size_t c = 0; c < n; ++c) {
          if (!alive[c]) continue;
          a[b][c] = level.mod(a[b][c] - level.mod(inv * a[t][b]) * a[t][c]);
        }
        lin[b] = level.mod(lin[b] - level.mod(inv * lin[t]) * a[t][b]);
      }
      constant = level.mod(constant - level.mod(level.inverse(4 * alpha) * lin[t]) * lin[t]);
      CycScalar g = quadratic_gauss_sum(level, alpha, 0);
      prefactor *= g;
      continue;
    }
    // No quadratic term: the sum is k times a delta on beta.
    prefactor *= CycScalar(level, level.k());
    zk::Vector gamma(n, 0);
    bool any = false;
    std::optional<size_t> pivot;
    for (size_t b = 0; b < n; ++b) {
      if (!alive[b]) continue;
      gamma[b] = level.mod(2 * a[t][b]);
      if (gamma[b] == 0) continue;
      any = true;
      if (!pivot && p.components()[b].role == Role::surgery) pivot = b;
    }
    if (!any) {
      if (lin[t] != 0) {
        out.vanishes = true;
        return out;
      }
      continue;
    }
    if (pivot) {
      const size_t u = *pivot;
      const int64_t inv = level.inverse(gamma[u]);
      zk::Vector coef(n, 0);
      for (size_t b = 0; b < n; ++b) {
        if (alive[b] && b != u) coef[b] = level.mod(-inv * gamma[b]);
      }
      substitute(u, coef, level.mod(-inv * lin[t]));
    } else {
      zk::Vector row;
      for (size_t b : p.free_boundary_indices()) row.push_back(gamma[b]);
      constraints.push_back(std::move(row));
      rhs.push_back(level.mod(-lin[t]));
    }
  }

  const auto free = p.free_boundary_indices();
  out.prefactor = prefactor;
  out.quadratic.assign(free.size(), zk::Vector(free.size(), 0));
  for (size_t i = 0; i < free.size(); ++i) {
    for (size_t j = 0; j < free.size(); ++j) out.quadratic[i][j] = a[free[i]][free[j]];
    out.linear.push_back(lin[free[i]]);
  }
  out.constant = constant;
  if (!constraints.empty() && !zk::solve(level, constraints, rhs, free.size())) {
    out.vanishes = true;
  }
  out.constraints = std::move(constraints);
  out.rhs = std::move(rhs);
  return out;
}

DenseState state_from_reduction(const QuadraticReduction& r, std::vector<Site> sites) {
  const Level level = r.level;
  const int k = level.k();
  const size_t n = sites.size();
  if (r.quadratic.size() != n) throw std::invalid_argument("state_from_reduction: site count mismatch");
  std::vector<CycScalar> amps(ipow(k, n), CycScalar::zero(level));
  if (r.vanishes) return DenseState(level, std::move(sites), std::move(amps));
  for (size_t flat = 0; flat < amps.size(); ++flat) {
    auto j = unflatten(k, n, flat);
    bool ok = true;
    for (size_t c = 0; c < r.constraints.size() && ok; ++c) {
      int64_t acc = 0;
      for (size_t i = 0; i < n; ++i) acc += r.constraints[c][i] * j[i];
      ok = level.mod(acc - r.rhs[c]) == 0;
    }
    if (!ok) continue;
    int64_t e = r.constant;
    for (size_t a = 0; a < n; ++a) {
      e += r.linear[a] * j[a];
      for (size_t b = 0; b < n; ++b) e += level.mod(r.quadratic[a][b] * j[a]) * j[b];
    }
    amps[flat] = r.prefactor * omega_power(level, level.mod(e));
  }
  return DenseState(level, std::move(sites), std::move(amps));
}

StabilizerTableau tableau_from_presentation(const SurgeryPresentation& p, SignConvention sign) {
  const Level level = p.level();
  QuadraticReduction r = reduce_quadratic_form(p, sign);
  if (r.vanishes) throw IllDefinedError("presentation prepares the zero state");
  const size_t n = r.quadratic.size();
  std::vector<PauliOp> gens;

  // Constraints c.j = d become Z-type generators omega^{-d} Z^c.
  zk::Matrix aug = r.constraints;
  for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(r.rhs[i]);
  zk::Echelon e = zk::row_reduce(level, aug, n + 1);
  for (const auto& row : e.rows) {
    PauliOp g{zk::Vector(row.begin(), row.begin() + n), zk::Vector(n, 0), level.mod(-row[n])};
    gens.push_back(std::move(g));
  }
  // Shifts v along the support become omega^c Z^{2Av} X^v.
  for (const auto& v : zk::nullspace(level, r.constraints, n)) {
    zk::Vector z(n, 0);
    int64_t vav = 0, lv = 0;
    for (size_t a = 0; a < n; ++a) {
      int64_t row = 0;
      for (size_t b = 0; b < n; ++b) row += r.quadratic[a][b] * v[b];
      z[a] = level.mod(2 * row);
      vav = level.mod(vav + level.mod(row) * v[a]);
      lv = level.mod(lv + r.linear[a] * v[a]);
    }
    int64_t zx = 0;
    for (size_t a = 0; a < n; ++a) zx = level.mod(zx + z[a] * v[a]);
    // omega^c Z^a X^b = omega^{c + a.b/2} W(a, b).
    int64_t phase = level.mod(-vav + lv + level.half() * zx);
    gens.push_back(PauliOp{std::move(z), v, phase});
  }
  return StabilizerTableau(level, std::move(gens));
}

WellDefinedness well_definedness(const SurgeryPresentation& p, SignConvention sign) {
  const Level level = p.level();
  const auto surg = p.surgery_indices();
  std::vector<LinkComponent> comps;
  std::vector<std::vector<int64_t>> link;
  for (size_t a : surg) {
    comps.push_back(p.components()[a]);
    std::vector<int64_t> row;
    for (size_t b : surg) row.push_back(p.linking()[a][b]);
    link.push_back(std::move(row));
  }
  WellDefinedness out{true, "", CycScalar::one(level)};
  if (!surg.empty()) {
    SurgeryPresentation closed(level, std::move(comps), std::move(link));
    if (surg.size() <= kMaxBruteForceSurgery) {
      out.denominator = state_from_presentation(closed, sign)[0];
    } else {
      QuadraticReduction r = reduce_quadratic_form(closed, sign);
      out.denominator = r.vanishes ? CycScalar::zero(level)
                                   : r.prefactor * omega_power(level, r.constant);
    }
  }
  if (out.denominator.is_zero()) {
    out.ok = false;
    out.diagnostic = "surgery denominator vanishes";
    return out;
  }
  if (reduce_quadratic_form(p, sign).vanishes) {
    out.ok = false;
    out.diagnostic = "presentation prepares the zero state";
  }
  return out;
}

SurgeryPresentation random_presentation(Level level, std::mt19937_64& rng, size_t max_boundary,
                                        size_t max_surgery, int64_t max_abs) {
  const size_t nb = std::uniform_int_distribution<size_t>(1, max_boundary)(rng);
  const size_t ns = std::uniform_int_distribution<size_t>(0, max_surgery)(rng);
  std::uniform_int_distribution<int64_t> entry(-max_abs, max_abs);
  std::vector<LinkComponent> comps;
  for (size_t i = 0; i < nb; ++i) comps.push_back({"b" + std::to_string(i), Role::boundary, std::nullopt});
  for (size_t i = 0; i < ns; ++i) comps.push_back({"s" + std::to_string(i), Role::surgery, std::nullopt});
  const size_t n = nb + ns;
  std::vector<std::vector<int64_t>> link(n, std::vector<int64_t>(n, 0));
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a; b < n; ++b) link[a][b] = link[b][a] = entry(rng);
  }
  return SurgeryPresentation(level, std::move(comps), std::move(link));
}

}  // namespace topostab
