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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace topostab;

namespace {

LinkComponent bnd(std::string name, std::optional<int64_t> rep = std::nullopt) {
  return {std::move(name), Role::boundary, rep};
}
LinkComponent srg(std::string name) { return {std::move(name), Role::surgery, std::nullopt}; }

SurgeryPresentation hopf(Level l) { return SurgeryPresentation(l, {bnd("a"), bnd("b")}, {{0, 1}, {1, 0}}); }

std::vector<Site> sites_of(const SurgeryPresentation& p) {
  std::vector<Site> out;
  for (size_t i : p.free_boundary_indices()) out.push_back({p.components()[i].name, Orientation::positive});
  return out;
}

// Float evaluation of sum_m omega^{-v L~ v}, straight from the definition.
std::vector<oracle::cd> float_state(const SurgeryPresentation& p) {
  const int k = p.level().k();
  const long long w = ((1 + static_cast<long long>(k) * k) / 2) % k;
  std::vector<size_t> free = p.free_boundary_indices(), surg = p.surgery_indices();
  std::vector<oracle::cd> out;
  const size_t n = p.size();
  for (size_t fj = 0; fj < ipow(k, free.size()); ++fj) {
    oracle::cd acc = 0;
    for (size_t fm = 0; fm < ipow(k, surg.size()); ++fm) {
      std::vector<long long> v(n, 0);
      for (size_t i = 0; i < n; ++i)
        if (p.components()[i].rep) v[i] = *p.components()[i].rep;
      auto j = unflatten(k, free.size(), fj);
      auto m = unflatten(k, surg.size(), fm);
      for (size_t i = 0; i < free.size(); ++i) v[free[i]] = j[i];
      for (size_t i = 0; i < surg.size(); ++i) v[surg[i]] = m[i];
      long long e = 0;
      for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) e += v[a] * w * p.linking()[a][b] * v[b];
      acc += oracle::omega(k, -e);
    }
    out.push_back(acc);
  }
  return out;
}

}  // namespace

TEST(presentation, validation) {
  Level l(5);
  EXPECT_THROW(SurgeryPresentation(l, {}, {}), std::invalid_argument);
  EXPECT_THROW(SurgeryPresentation(l, {bnd("a"), bnd("b")}, {{0, 1}, {2, 0}}), std::invalid_argument);
  EXPECT_THROW(SurgeryPresentation(l, {bnd("a"), bnd("b")}, {{0, 1}}), std::invalid_argument);
  EXPECT_THROW(SurgeryPresentation(l, {{"m", Role::surgery, 1}}, {{0}}), std::invalid_argument);
  EXPECT_THROW(SurgeryPresentation(l, {bnd("a"), bnd("a")}, {{0, 0}, {0, 0}}), std::invalid_argument);
}

TEST(reduced_linking, examples) {
  EXPECT_EQ(reduced_linking(hopf(Level(3))).matrix[0][1], 2);
  SurgeryPresentation zero(Level(5), {bnd("a"), bnd("b")}, {{0, 0}, {0, 0}});
  EXPECT_EQ(reduced_linking(zero).matrix, (zk::Matrix{{0, 0}, {0, 0}}));
  SurgeryPresentation framed(Level(5), {bnd("a")}, {{1}});
  EXPECT_EQ(reduced_linking(framed).matrix[0][0], 3);
}

TEST(s3_expectation, examples) {
  Level l(3);
  for (int j = 0; j < 3; ++j) {
    SurgeryPresentation unknot(l, {bnd("a", j)}, {{0}});
    EXPECT_EQ(s3_expectation(unknot), CycScalar::one(l));
  }
  SurgeryPresentation h(l, {bnd("a", 1), bnd("b", 1)}, {{0, 1}, {1, 0}});
  EXPECT_EQ(s3_expectation(h), omega_power(l, 2));
  Level l5(5);
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) {
      SurgeryPresentation split(l5, {bnd("a", a), bnd("b", b)}, {{1, 0}, {0, 2}});
      SurgeryPresentation ua(l5, {bnd("a", a)}, {{1}}), ub(l5, {bnd("b", b)}, {{2}});
      EXPECT_EQ(s3_expectation(split), s3_expectation(ua) * s3_expectation(ub));
    }
  }
  EXPECT_THROW(s3_expectation(hopf(l)), std::invalid_argument);
}

TEST(s3_expectation, even_under_label_negation) {
  std::mt19937_64 rng(3);
  Level l(7);
  std::uniform_int_distribution<int> d(0, 6);
  for (int t = 0; t < 30; ++t) {
    SurgeryPresentation p = random_presentation(l, rng, 3, 0, 3);
    std::vector<LinkComponent> pos, neg;
    for (const auto& c : p.components()) {
      const int j = d(rng);
      pos.push_back(bnd(c.name, j));
      neg.push_back(bnd(c.name, (7 - j) % 7));
    }
    EXPECT_EQ(s3_expectation(SurgeryPresentation(l, pos, p.linking())),
              s3_expectation(SurgeryPresentation(l, neg, p.linking())));
  }
}

TEST(state_from_presentation, examples) {
  Level l5(5);
  DenseState unknot = state_from_presentation(SurgeryPresentation(l5, {bnd("a")}, {{0}}));
  EXPECT_EQ(unknot.amps(), std::vector<CycScalar>(5, CycScalar::one(l5)));

  Level l3(3);
  DenseState h = state_from_presentation(hopf(l3));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) EXPECT_EQ(h[a * 3 + b], omega_power(l3, -a * b));
  EXPECT_EQ(oracle::entropy_dits(h, {0}), 1);

  DenseState framed = state_from_presentation(SurgeryPresentation(l5, {bnd("a")}, {{1}}));
  for (int j = 0; j < 5; ++j) EXPECT_EQ(framed[j], omega_power(l5, -3 * j * j));
}

TEST(state_from_presentation, matches_float_definition) {
  std::mt19937_64 rng(5);
  for (int k : {3, 5, 7}) {
    for (int t = 0; t < 10; ++t) {
      SurgeryPresentation p = random_presentation(Level(k), rng, 2, 2, 3);
      auto got = state_from_presentation(p).to_complex();
      auto expect = float_state(p);
      for (size_t i = 0; i < got.size(); ++i) EXPECT_LT(std::abs(got[i] - expect[i]), 1e-8);
    }
  }
}

TEST(state_from_presentation, sign_flip_conjugates) {
  std::mt19937_64 rng(6);
  Level l(5);
  for (int t = 0; t < 10; ++t) {
    SurgeryPresentation p = random_presentation(l, rng, 2, 2, 3);
    DenseState a = state_from_presentation(p);
    DenseState b = state_from_presentation(p, SignConvention::flipped);
    for (size_t i = 0; i < a.amps().size(); ++i) EXPECT_EQ(a[i].conj(), b[i]);
  }
}

TEST(state_from_presentation, wilson_label_projects) {
  Level l(5);
  DenseState full = state_from_presentation(hopf(l));
  for (int j = 0; j < 5; ++j) {
    SurgeryPresentation labeled(l, {bnd("a"), bnd("b", j)}, {{0, 1}, {1, 0}});
    DenseState s = state_from_presentation(labeled);
    ASSERT_EQ(s.num_sites(), 1u);
    EXPECT_EQ(s.sites()[0].name, "a");
    for (int a = 0; a < 5; ++a) EXPECT_EQ(s[a], full[a * 5 + j]);
  }
}

TEST(state_from_presentation, surgery_cutoff) {
  Level l(3);
  std::vector<LinkComponent> comps{bnd("a")};
  for (int i = 0; i < 9; ++i) comps.push_back(srg("m" + std::to_string(i)));
  std::vector<std::vector<int64_t>> link(10, std::vector<int64_t>(10, 0));
  for (int i = 0; i < 10; ++i) link[i][i] = 1;
  SurgeryPresentation p(l, comps, link);
  EXPECT_THROW(state_from_presentation(p), std::invalid_argument);
  EXPECT_NO_THROW(tableau_from_presentation(p));
}

TEST(stabilization, split_unknot_is_global_scalar) {
  std::mt19937_64 rng(8);
  for (int k : {3, 5, 7}) {
    Level l(k);
    for (int t = 0; t < 10; ++t) {
      SurgeryPresentation p = random_presentation(l, rng, 2, 2, 3);
      std::vector<LinkComponent> comps = p.components();
      comps.push_back(srg("extra"));
      std::vector<std::vector<int64_t>> link = p.linking();
      for (auto& row : link) row.push_back(0);
      link.push_back(std::vector<int64_t>(comps.size(), 0));
      DenseState a = state_from_presentation(p);
      DenseState b = state_from_presentation(SurgeryPresentation(l, comps, link));
      EXPECT_TRUE(proportional(a.amps(), b.amps()));
      if (!a.is_zero()) EXPECT_FALSE(b.is_zero());
    }
  }
}

TEST(reduction, equals_brute_force_exactly) {
  std::mt19937_64 rng(10);
  for (int k : {3, 5, 7, 13}) {
    for (int t = 0; t < 40; ++t) {
      SurgeryPresentation p = random_presentation(Level(k), rng, 3, 3, 3);
      for (auto sign : {SignConvention::standard, SignConvention::flipped}) {
        DenseState brute = state_from_presentation(p, sign);
        DenseState reduced = state_from_reduction(reduce_quadratic_form(p, sign), sites_of(p));
        EXPECT_EQ(brute.amps(), reduced.amps());
      }
    }
  }
}

TEST(tableau_from_presentation, hopf) {
  Level l(3);
  StabilizerTableau t = tableau_from_presentation(hopf(l));
  DenseState s = state_from_presentation(hopf(l));
  EXPECT_TRUE(proportional(dense_from_tableau(t).amps(), s.amps()));
  // Same group as the one found by brute force.
  StabilizerTableau g = stabilizer_group_search(s);
  for (const auto& gen : t.generators()) EXPECT_EQ(weyl_apply(l, gen, s).amps(), s.amps());
  EXPECT_EQ(t.generators().size(), g.generators().size());
  EXPECT_EQ(weyl_apply(l, PauliOp{{0, 2}, {1, 0}, 0}, s).amps(), s.amps());
}

TEST(tableau_from_presentation, unknot_and_framed) {
  Level l(5);
  StabilizerTableau u = tableau_from_presentation(SurgeryPresentation(l, {bnd("a")}, {{0}}));
  ASSERT_EQ(u.generators().size(), 1u);
  EXPECT_EQ(u.generators()[0], (PauliOp{{0}, {1}, 0}));
  SurgeryPresentation framed(l, {bnd("a")}, {{1}});
  StabilizerTableau f = tableau_from_presentation(framed);
  ASSERT_EQ(f.generators().size(), 1u);
  EXPECT_EQ(f.generators()[0].x, std::vector<int64_t>{1});
  EXPECT_TRUE(proportional(dense_from_tableau(f).amps(), state_from_presentation(framed).amps()));
}

TEST(tableau_from_presentation, round_trip_random) {
  std::mt19937_64 rng(12);
  for (int k : {3, 5, 7}) {
    Level l(k);
    int nonzero = 0;
    for (int t = 0; t < 100; ++t) {
      SurgeryPresentation p = random_presentation(l, rng, 3, 3, 3);
      DenseState s = state_from_presentation(p);
      if (s.is_zero()) {
        EXPECT_THROW(tableau_from_presentation(p), IllDefinedError);
        EXPECT_FALSE(well_definedness(p).ok);
        continue;
      }
      ++nonzero;
      EXPECT_TRUE(proportional(dense_from_tableau(tableau_from_presentation(p)).amps(), s.amps()));
    }
    EXPECT_GT(nonzero, 50);
  }
}

TEST(converse, presentations_are_stabilizer_when_k_is_1_mod_4) {
  std::mt19937_64 rng(14);
  for (int k : {5, 13}) {
    for (int t = 0; t < 15; ++t) {
      DenseState s = state_from_presentation(random_presentation(Level(k), rng, 3, 3, 3));
      if (!s.is_zero()) EXPECT_TRUE(is_stabilizer(s));
    }
  }
}

TEST(converse, reported_when_k_is_3_mod_4) {
  std::mt19937_64 rng(15);
  int failures = 0, total = 0;
  for (int k : {3, 7}) {
    for (int t = 0; t < 20; ++t) {
      DenseState s = state_from_presentation(random_presentation(Level(k), rng, 3, 2, 3));
      if (s.is_zero()) continue;
      ++total;
      failures += !is_stabilizer(s);
    }
  }
  RecordProperty("k_3_mod_4_failures", failures);
  std::cout << "k = 3 mod 4: " << failures << " of " << total << " presentations failed is_stabilizer\n";
}

TEST(well_definedness, examples) {
  EXPECT_TRUE(well_definedness(hopf(Level(5))).ok);
  SurgeryPresentation m(Level(5), {bnd("a"), srg("m")}, {{0, 0}, {0, 0}});
  WellDefinedness w = well_definedness(m);
  EXPECT_TRUE(w.ok);
  EXPECT_EQ(w.denominator, CycScalar(Level(5), 5));
  for (int k : {3, 5, 7}) {
    for (int f = -10; f <= 10; ++f) {
      SurgeryPresentation framed(Level(k), {bnd("a"), srg("m")}, {{0, 0}, {0, f}});
      WellDefinedness wf = well_definedness(framed);
      EXPECT_TRUE(wf.ok);
      EXPECT_FALSE(wf.denominator.is_zero());
    }
  }
  SurgeryPresentation zero(Level(5), {bnd("w", 1), srg("m")}, {{0, 1}, {1, 0}});
  WellDefinedness wz = well_definedness(zero);
  EXPECT_FALSE(wz.ok);
  EXPECT_FALSE(wz.diagnostic.empty());
  EXPECT_TRUE(state_from_presentation(zero).is_zero());
  EXPECT_THROW(tableau_from_presentation(zero), IllDefinedError);
}
