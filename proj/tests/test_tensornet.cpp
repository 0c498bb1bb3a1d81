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

#include "topostab/tensornet.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "topostab/gates.hpp"
#include "topostab/stabilizer.hpp"
#include "topostab/tensor.hpp"

using namespace topostab;
using Kind = CliffordLetter::Kind;

namespace {

// Dense float matrix of a word acting on n sites, first letter applied first.
oracle::Mat word_matrix(int k, const std::vector<CliffordLetter>& word, size_t n) {
  const size_t dim = ipow(k, n);
  oracle::Mat u = oracle::Mat::Identity(dim, dim);
  for (const auto& l : word) {
    oracle::Mat step = oracle::Mat::Zero(dim, dim);
    if (l.kind == Kind::C_ADD) {
      for (size_t col = 0; col < dim; ++col) {
        auto d = unflatten(k, n, col);
        d[l.target] = (d[l.target] + d[l.site]) % k;
        step(flat_index(k, d), col) = 1;
      }
    } else {
      oracle::Mat g = l.kind == Kind::S   ? oracle::s_gate(k)
                      : l.kind == Kind::P ? oracle::p_gate(k)
                      : l.kind == Kind::X ? oracle::x_gate(k)
                                          : oracle::z_gate(k);
      for (size_t col = 0; col < dim; ++col) {
        auto d = unflatten(k, n, col);
        const int in = d[l.site];
        for (int out = 0; out < k; ++out) {
          d[l.site] = out;
          step(flat_index(k, d), col) += g(out, in);
        }
      }
    }
    u = step * u;
  }
  return u;
}

std::vector<oracle::cd> gate_entries(const GateMatrix& g) {
  std::vector<oracle::cd> out;
  for (auto& e : g.entries()) out.push_back(e.to_complex());
  return out;
}

std::vector<oracle::cd> mat_entries(const oracle::Mat& m) {
  std::vector<oracle::cd> out;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
  return out;
}

}  // namespace

TEST(network, single_ket) {
  Level l(5);
  TensorNetwork net(l);
  net.add_node("k", NodeKind::ket, 0);
  net.add_open({"k", "out"});
  DenseState s = contract(net);
  const int zero[] = {0};
  EXPECT_EQ(s.amps(), DenseState::basis(l, DenseState::default_sites(1), zero).amps());
  EXPECT_EQ(s.sites()[0].name, "k.out");
}

TEST(network, shift_tensor_is_x) {
  for (int k : {3, 5, 7}) {
    Level l(k);
    TensorNetwork net(l);
    net.add_node("f", NodeKind::fusion);
    net.add_node("k1", NodeKind::ket, 1);
    net.add_wire({"k1", "out"}, {"f", "in2"});
    net.add_open({"f", "in1"});
    net.add_open({"f", "out"});
    EXPECT_TRUE(proportional(contract_to_gate(net), modular_gate(l, ModularKind::X)));
  }
}

TEST(network, c_add_from_fusion_and_copy) {
  for (int k : {3, 5}) {
    Level l(k);
    EXPECT_TRUE(proportional(c_add(l), c_add_closed_form(l)));
  }
}

TEST(network, wiring_errors) {
  Level l(3);
  TensorNetwork net(l);
  net.add_node("f", NodeKind::fusion);
  net.add_node("k", NodeKind::ket, 0);
  EXPECT_THROW(net.add_node("f", NodeKind::S), std::invalid_argument);
  EXPECT_THROW(net.add_wire({"k", "out"}, {"f", "in9"}), std::invalid_argument);
  EXPECT_THROW(net.add_wire({"f", "in1"}, {"f", "in2"}), std::invalid_argument);
  net.add_wire({"k", "out"}, {"f", "in1"});
  try {
    net.add_open({"f", "in1"});
    FAIL() << "expected a throw";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("port already wired"), std::string::npos);
  }
  EXPECT_THROW(net.validate(), std::invalid_argument);
}

TEST(network, cup_cap_zigzag) {
  for (int k : {3, 5}) {
    Level l(k);
    TensorNetwork net(l);
    net.add_node("u", NodeKind::cup);
    net.add_node("a", NodeKind::cap);
    net.add_open({"a", "in1"});
    net.add_wire({"u", "out1"}, {"a", "in2"});
    net.add_open({"u", "out2"});
    EXPECT_TRUE(proportional(contract_to_gate(net), GateMatrix::identity(l, 1)));
  }
}

TEST(network, cup_is_conjugate_pair) {
  Level l(5);
  TensorNetwork net(l);
  net.add_node("u", NodeKind::cup);
  net.add_open({"u", "out1"});
  net.add_open({"u", "out2"});
  DenseState s = contract(net);
  for (size_t flat = 0; flat < s.amps().size(); ++flat) {
    auto j = unflatten(5, 2, flat);
    EXPECT_EQ(s[flat].is_zero(), (j[0] + j[1]) % 5 != 0);
  }
}

TEST(network, contraction_order_independent) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<size_t> sites(2, 3);
  for (int t = 0; t < 50; ++t) {
    const size_t n = sites(rng);
    TensorNetwork net = clifford_word(Level(3), random_clifford_word(rng, n, 6), n);
    DenseState a = contract(net, rng());
    DenseState b = contract(net, rng());
    EXPECT_EQ(a.amps(), b.amps());
    EXPECT_EQ(a.amps(), contract(net).amps());
  }
}

TEST(clifford_word, empty_word_is_identity) {
  Level l(5);
  EXPECT_TRUE(proportional(contract_to_gate(clifford_word(l, {}, 1)), GateMatrix::identity(l, 1)));
}

TEST(clifford_word, single_s) {
  Level l(5);
  EXPECT_TRUE(proportional(contract_to_gate(clifford_word(l, {{Kind::S, 0, 0}}, 1)),
                           modular_gate(l, ModularKind::S)));
}

TEST(clifford_word, c_add_has_order_k) {
  Level l(3);
  std::vector<CliffordLetter> word(3, CliffordLetter{Kind::C_ADD, 0, 1});
  EXPECT_TRUE(proportional(contract_to_gate(clifford_word(l, word, 2)), GateMatrix::identity(l, 2)));
  std::vector<CliffordLetter> once(1, CliffordLetter{Kind::C_ADD, 0, 1});
  EXPECT_FALSE(proportional(contract_to_gate(clifford_word(l, once, 2)), GateMatrix::identity(l, 2)));
}

TEST(clifford_word, matches_dense_product) {
  std::mt19937_64 rng(17);
  for (int k : {3, 5}) {
    for (int t = 0; t < 15; ++t) {
      const size_t n = 1 + t % 3;
      auto word = random_clifford_word(rng, n, 8);
      GateMatrix g = contract_to_gate(clifford_word(Level(k), word, n));
      EXPECT_TRUE(oracle::proportional(gate_entries(g), mat_entries(word_matrix(k, word, n))));
    }
  }
}

TEST(clifford_word, bad_site_throws) {
  EXPECT_THROW(clifford_word(Level(3), {{Kind::S, 2, 0}}, 2), std::out_of_range);
}

TEST(stabilizer_states, plus_state) {
  Level l(5);
  DenseState s = stabilizer_state_from_word(l, {{Kind::S, 0, 0}}, 1);
  EXPECT_TRUE(proportional(s.amps(), std::vector<CycScalar>(5, CycScalar::one(l))));
}

TEST(stabilizer_states, bell_pair) {
  Level l(5);
  DenseState s = stabilizer_state_from_word(l, {{Kind::S, 0, 0}, {Kind::C_ADD, 0, 1}}, 2);
  std::vector<CycScalar> expect(25, CycScalar::zero(l));
  for (int j = 0; j < 5; ++j) expect[j * 5 + j] = CycScalar::one(l);
  EXPECT_TRUE(proportional(s.amps(), expect));
  EXPECT_EQ(oracle::entropy_dits(s, {0}), 1);
}

TEST(stabilizer_states, random_words_are_stabilizer) {
  std::mt19937_64 rng(99);
  Level l(5);
  for (int t = 0; t < 40; ++t) {
    const size_t n = 1 + t % 3;
    DenseState s = stabilizer_state_from_word(l, random_clifford_word(rng, n, 10), n);
    EXPECT_TRUE(is_stabilizer(s));
  }
}

TEST(tensor_engine, self_loop_is_traced) {
  Level l(3);
  // t[a, a] = identity, traced -> k
  LabeledTensor t{{7, 7}, {}};
  for (int i = 0; i < 9; ++i) t.data.push_back(CycScalar(l, i % 4 == 0 ? 1 : 0));
  LabeledTensor out = contract_network(l, {t}, std::span<const int>());
  EXPECT_EQ(out.data.at(0), CycScalar(l, 3));
}

TEST(tensor_engine, label_count_validation) {
  Level l(3);
  LabeledTensor a{{1, 2}, std::vector<CycScalar>(9, CycScalar::one(l))};
  const int open[] = {1};
  EXPECT_THROW(contract_network(l, {a}, open), std::invalid_argument);
}
