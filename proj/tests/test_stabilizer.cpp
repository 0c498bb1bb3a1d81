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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "topostab/gates.hpp"
#include "topostab/tensornet.hpp"

using namespace topostab;

namespace {

DenseState from_ints(Level l, size_t n, const std::vector<int64_t>& v) {
  std::vector<CycScalar> amps;
  for (auto x : v) amps.push_back(CycScalar(l, x));
  return DenseState(l, DenseState::default_sites(n), amps);
}

DenseState hopf(Level l) {
  const int k = l.k();
  std::vector<CycScalar> amps;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) amps.push_back(omega_power(l, -a * b));
  return DenseState(l, DenseState::default_sites(2), amps);
}

DenseState random_state(Level l, size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3), e(0, l.k() - 1);
  std::vector<CycScalar> amps;
  for (size_t i = 0; i < ipow(l.k(), n); ++i) amps.push_back(CycScalar(l, c(rng)) * omega_power(l, e(rng)));
  return DenseState(l, DenseState::default_sites(n), amps);
}

PauliOp random_pauli(Level l, size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int64_t> d(0, l.k() - 1);
  PauliOp p;
  for (size_t i = 0; i < n; ++i) {
    p.z.push_back(d(rng));
    p.x.push_back(d(rng));
  }
  p.phase = d(rng);
  return p;
}

// omega^c omega^{-ab/2} Z^a X^b as a float matrix on one site.
oracle::Mat pauli_matrix(int k, const PauliOp& p) {
  oracle::Mat z = oracle::Mat::Identity(k, k), x = oracle::Mat::Identity(k, k);
  for (int i = 0; i < p.z[0]; ++i) z = oracle::z_gate(k) * z;
  for (int i = 0; i < p.x[0]; ++i) x = oracle::x_gate(k) * x;
  const long long half = (k + 1) / 2;
  return oracle::omega(k, p.phase - half * p.z[0] * p.x[0]) * z * x;
}

}  // namespace

TEST(weyl, z_on_basis) {
  Level l(3);
  const int one[] = {1};
  DenseState s = DenseState::basis(l, DenseState::default_sites(1), one);
  DenseState out = weyl_apply(l, PauliOp{{1}, {0}, 0}, s);
  std::vector<CycScalar> expect{CycScalar::zero(l), omega_power(l, 1), CycScalar::zero(l)};
  EXPECT_EQ(out.amps(), expect);
}

TEST(weyl, x_has_order_k) {
  std::mt19937_64 rng(1);
  for (int k : {3, 5, 7}) {
    Level l(k);
    DenseState s = random_state(l, 2, rng);
    DenseState t = s;
    for (int i = 0; i < k; ++i) t = weyl_apply(l, PauliOp{{0, 0}, {1, 0}, 0}, t);
    EXPECT_EQ(t.amps(), s.amps());
  }
}

TEST(weyl, composition_rule_against_matrices) {
  std::mt19937_64 rng(2);
  const int k = 5;
  Level l(k);
  for (int t = 0; t < 50; ++t) {
    PauliOp p = random_pauli(l, 1, rng), q = random_pauli(l, 1, rng);
    oracle::Mat prod = pauli_matrix(k, p) * pauli_matrix(k, q);
    oracle::Mat composed = pauli_matrix(k, compose(l, p, q));
    EXPECT_LT((prod - composed).norm(), 1e-9);
    // And on states, exactly.
    DenseState s = random_state(l, 1, rng);
    EXPECT_EQ(weyl_apply(l, p, weyl_apply(l, q, s)).amps(), weyl_apply(l, compose(l, p, q), s).amps());
  }
}

TEST(weyl, apply_matches_matrix) {
  std::mt19937_64 rng(4);
  const int k = 7;
  Level l(k);
  for (int t = 0; t < 10; ++t) {
    PauliOp p = random_pauli(l, 1, rng);
    DenseState s = random_state(l, 1, rng);
    oracle::Vec expect = pauli_matrix(k, p) * oracle::to_vec(s.to_complex());
    auto got = weyl_apply(l, p, s).to_complex();
    for (int i = 0; i < k; ++i) EXPECT_LT(std::abs(got[i] - expect(i)), 1e-9);
  }
}

TEST(weyl, size_mismatch_throws) {
  Level l(3);
  EXPECT_THROW(weyl_apply(l, PauliOp{{1}, {0}, 0}, DenseState::zeros(l, DenseState::default_sites(2))),
               std::invalid_argument);
}

TEST(pauli_text, round_trip) {
  Level l(5);
  PauliOp p{{1, 4}, {0, 2}, 3};
  EXPECT_EQ(to_string(p), "w^3 Z[1,4] X[0,2]");
  EXPECT_EQ(parse_pauli(l, to_string(p)), p);
  EXPECT_EQ(parse_pauli(l, "w^-1 Z[-1] X[6]"), (PauliOp{{4}, {1}, 4}));
  EXPECT_THROW(parse_pauli(l, "Z[1] X[0]"), std::invalid_argument);
}

TEST(wigner, basis_state) {
  Level l(3);
  WignerTable w = wigner_function(from_ints(l, 1, {1, 0, 0}));
  int nonzero = 0;
  for (double v : w.values) {
    EXPECT_GT(v, -1e-12);
    if (std::abs(v) > 1e-9) {
      EXPECT_NEAR(v, 1.0 / 3, 1e-12);
      ++nonzero;
    }
  }
  EXPECT_EQ(nonzero, 3);
}

TEST(wigner, matches_phase_point_operators) {
  std::mt19937_64 rng(6);
  for (int k : {3, 5}) {
    Level l(k);
    for (int t = 0; t < 5; ++t) {
      DenseState s = random_state(l, 1, rng);
      if (s.is_zero()) continue;
      WignerTable w = wigner_function(s);
      auto expect = oracle::wigner_single_site(s.to_complex(), k);
      double sum = 0;
      for (size_t i = 0; i < expect.size(); ++i) {
        EXPECT_NEAR(w.values[i], expect[i], 1e-10);
        sum += w.values[i];
      }
      EXPECT_NEAR(sum, 1.0, 1e-10);
      EXPECT_LT(w.max_imag, 1e-10);
    }
  }
}

TEST(wigner, superposition_is_negative) {
  WignerTable w = wigner_function(from_ints(Level(3), 1, {1, 1, 0}));
  EXPECT_LT(*std::min_element(w.values.begin(), w.values.end()), -1e-3);
}

TEST(wigner, quadratic_phase_state) {
  Level l(5);
  std::vector<CycScalar> amps;
  for (int j = 0; j < 5; ++j) amps.push_back(omega_power(l, -j * j));
  WignerTable w = wigner_function(DenseState(l, DenseState::default_sites(1), amps));
  for (double v : w.values) EXPECT_TRUE(std::abs(v) < 1e-9 || std::abs(v - 0.2) < 1e-9);
}

TEST(wigner, zero_state_throws) {
  EXPECT_THROW(wigner_function(DenseState::zeros(Level(3), DenseState::default_sites(1))), std::invalid_argument);
}

TEST(is_stabilizer, examples) {
  EXPECT_TRUE(is_stabilizer(fusion_state(Level(3))));
  Level l5(5);
  std::vector<int64_t> zero_plus(25, 0);
  for (int j = 0; j < 5; ++j) zero_plus[j] = 1;  // |0> (x) sum_j |j>
  EXPECT_TRUE(is_stabilizer(from_ints(l5, 2, zero_plus)));
  EXPECT_FALSE(is_stabilizer(from_ints(l5, 1, {1, 1, 0, 0, 0})));
  EXPECT_THROW(is_stabilizer(DenseState::zeros(l5, DenseState::default_sites(1))), std::invalid_argument);
}

TEST(is_stabilizer, agrees_with_group_search) {
  std::mt19937_64 rng(8);
  for (int k : {3, 5}) {
    Level l(k);
    for (int t = 0; t < 10; ++t) {
      const size_t n = 1 + t % 2;
      DenseState s = stabilizer_state_from_word(l, random_clifford_word(rng, n, 8), n);
      StabilizerCheck c = check_stabilizer(s);
      EXPECT_TRUE(c.is_stabilizer());
      EXPECT_NO_THROW(stabilizer_group_search(s));
      // A generic state fails both.
      DenseState r = random_state(l, n, rng);
      if (r.is_zero()) continue;
      bool searched = true;
      try {
        stabilizer_group_search(r);
      } catch (const NotStabilizerError&) {
        searched = false;
      }
      EXPECT_EQ(is_stabilizer(r), searched);
    }
  }
}

TEST(group_search, hopf_generators) {
  Level l(3);
  DenseState s = hopf(l);
  StabilizerTableau t = stabilizer_group_search(s);
  // X (x) Z^{-1} and Z^{-1} (x) X must lie in the group: they fix the state.
  EXPECT_EQ(weyl_apply(l, PauliOp{{0, 2}, {1, 0}, 0}, s).amps(), s.amps());
  EXPECT_EQ(weyl_apply(l, PauliOp{{2, 0}, {0, 1}, 0}, s).amps(), s.amps());
  for (const auto& g : t.generators()) EXPECT_EQ(weyl_apply(l, g, s).amps(), s.amps());
  EXPECT_TRUE(proportional(dense_from_tableau(t).amps(), s.amps()));
}

TEST(group_search, ket_zero) {
  Level l(5);
  StabilizerTableau t = stabilizer_group_search(from_ints(l, 1, {1, 0, 0, 0, 0}));
  ASSERT_EQ(t.generators().size(), 1u);
  EXPECT_EQ(t.generators()[0].x, std::vector<int64_t>{0});
  EXPECT_NE(t.generators()[0].z[0], 0);
}

TEST(group_search, fusion_state_round_trip) {
  Level l(3);
  DenseState f = fusion_state(l);
  StabilizerTableau t = stabilizer_group_search(f);
  for (size_t i = 0; i < t.generators().size(); ++i)
    for (size_t j = 0; j < t.generators().size(); ++j)
      EXPECT_EQ(symplectic_form(l, t.generators()[i], t.generators()[j]), 0);
  EXPECT_TRUE(proportional(dense_from_tableau(t).amps(), f.amps()));
}

TEST(group_search, rejects_non_stabilizer) {
  EXPECT_THROW(stabilizer_group_search(from_ints(Level(5), 1, {1, 1, 0, 0, 0})), NotStabilizerError);
}

TEST(dense_from_tableau, examples) {
  Level l(5);
  StabilizerTableau tz(l, {PauliOp{{1}, {0}, 0}});
  EXPECT_TRUE(proportional(dense_from_tableau(tz).amps(), from_ints(l, 1, {1, 0, 0, 0, 0}).amps()));
  StabilizerTableau tx(l, {PauliOp{{0}, {1}, 0}});
  EXPECT_TRUE(proportional(dense_from_tableau(tx).amps(), from_ints(l, 1, {1, 1, 1, 1, 1}).amps()));
}

TEST(dense_from_tableau, round_trip_random) {
  std::mt19937_64 rng(12);
  Level l(5);
  for (int t = 0; t < 20; ++t) {
    const size_t n = 1 + t % 3;
    DenseState s = stabilizer_state_from_word(l, random_clifford_word(rng, n, 10), n);
    StabilizerCheck c = check_stabilizer(s);
    ASSERT_TRUE(c.certificate);
    EXPECT_TRUE(proportional(dense_from_tableau(*c.certificate).amps(), s.amps()));
    if (n <= 2) EXPECT_TRUE(proportional(dense_from_tableau(stabilizer_group_search(s)).amps(), s.amps()));
  }
}

TEST(tableau, validation) {
  Level l(5);
  EXPECT_THROW(StabilizerTableau(l, {PauliOp{{1, 0}, {0, 0}, 0}, PauliOp{{0, 0}, {1, 0}, 0}}), NotStabilizerError);
  EXPECT_THROW(StabilizerTableau(l, {PauliOp{{1, 0}, {0, 0}, 0}, PauliOp{{2, 0}, {0, 0}, 0}}), NotStabilizerError);
  EXPECT_TRUE(StabilizerTableau(Level(7), {PauliOp{{1}, {0}, 0}}).converse_unproven());
  EXPECT_FALSE(StabilizerTableau(l, {PauliOp{{1}, {0}, 0}}).converse_unproven());
}

TEST(entropy_from_tableau, examples_and_dense_oracle) {
  Level l(3);
  StabilizerTableau f = stabilizer_group_search(fusion_state(l));
  for (size_t i = 0; i < 3; ++i) {
    const size_t region[] = {i};
    EXPECT_EQ(entropy_from_tableau(f, region), 1);
  }
  StabilizerTableau prod(l, {PauliOp{{1, 0}, {0, 0}, 0}, PauliOp{{0, 1}, {0, 0}, 0}});
  const size_t first[] = {0};
  EXPECT_EQ(entropy_from_tableau(prod, first), 0);
  EXPECT_EQ(entropy_from_tableau(prod, std::span<const size_t>()), 0);
  StabilizerTableau h = stabilizer_group_search(hopf(l));
  EXPECT_EQ(entropy_from_tableau(h, first), 1);
  EXPECT_EQ(oracle::entropy_dits(hopf(l), {0}), 1);

  std::mt19937_64 rng(14);
  for (int t = 0; t < 15; ++t) {
    DenseState s = stabilizer_state_from_word(Level(5), random_clifford_word(rng, 3, 12), 3);
    StabilizerTableau tab = *check_stabilizer(s).certificate;
    for (std::vector<size_t> region : {std::vector<size_t>{0}, {1}, {2}, {0, 1}, {0, 2}}) {
      EXPECT_EQ(entropy_from_tableau(tab, region), oracle::entropy_dits(s, region));
    }
  }
}
