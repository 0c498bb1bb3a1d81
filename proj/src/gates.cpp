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

#include "topostab/gates.hpp"

#include <stdexcept>

#include "topostab/tensornet.hpp"

namespace topostab {

namespace {

GateMatrix diagonal_gate(Level level, auto exponent_of) {
  const int k = level.k();
  std::vector<CycScalar> e(static_cast<size_t>(k) * k, CycScalar::zero(level));
  for (int j = 0; j < k; ++j) e[j * k + j] = omega_power(level, exponent_of(j));
  return GateMatrix(level, 1, 1, std::move(e));
}

}  // namespace

GateMatrix modular_gate(Level level, ModularKind kind) {
  const int k = level.k();
  switch (kind) {
    case ModularKind::S: {
      const CycScalar norm = inv_sqrt_k(level);
      std::vector<CycScalar> e;
      e.reserve(static_cast<size_t>(k) * k);
      for (int j = 0; j < k; ++j) {
        for (int jp = 0; jp < k; ++jp) e.push_back(omega_power(level, j * jp) * norm);
      }
      return GateMatrix(level, 1, 1, std::move(e));
    }
    case ModularKind::T:
      // j(j+k) is even for odd k.
      return diagonal_gate(level, [k](int64_t j) { return j * (j + k) / 2; });
    case ModularKind::X: {
      std::vector<CycScalar> e(static_cast<size_t>(k) * k, CycScalar::zero(level));
      for (int j = 0; j < k; ++j) e[((j + 1) % k) * k + j] = CycScalar::one(level);
      return GateMatrix(level, 1, 1, std::move(e));
    }
    case ModularKind::Z:
      return diagonal_gate(level, [](int64_t j) { return j; });
    case ModularKind::P:
      return modular_gate(level, ModularKind::Z)
          .power((k - 1) / 2)
          .compose(modular_gate(level, ModularKind::T));
  }
  throw std::invalid_argument("unknown modular gate");
}

GateMatrix fusion_tensor(Level level) {
  const int k = level.k();
  std::vector<CycScalar> e(ipow(k, 3), CycScalar::zero(level));
  for (int j1 = 0; j1 < k; ++j1) {
    for (int j2 = 0; j2 < k; ++j2) e[((j1 + j2) % k) * k * k + j1 * k + j2] = CycScalar::one(level);
  }
  return GateMatrix(level, 2, 1, std::move(e));
}

GateMatrix cofusion_tensor(Level level) { return fusion_tensor(level).adjoint(); }

GateMatrix copy_tensor(Level level) {
  TensorNetwork net(level);
  net.add_node("a", NodeKind::Sdag);
  net.add_node("c", NodeKind::cofusion);
  net.add_node("s1", NodeKind::S);
  net.add_node("s2", NodeKind::S);
  net.add_wire({"a", "out"}, {"c", "in"});
  net.add_wire({"c", "out1"}, {"s1", "in"});
  net.add_wire({"c", "out2"}, {"s2", "in"});
  net.add_open({"a", "in"});
  net.add_open({"s1", "out"});
  net.add_open({"s2", "out"});
  return contract_to_gate(net);
}

GateMatrix c_add(Level level) {
  TensorNetwork net(level);
  // Copy the control in the Fourier-rotated basis, then fuse into the target.
  net.add_node("a", NodeKind::Sdag);
  net.add_node("c", NodeKind::cofusion);
  net.add_node("s1", NodeKind::S);
  net.add_node("s2", NodeKind::S);
  net.add_node("f", NodeKind::fusion);
  net.add_wire({"a", "out"}, {"c", "in"});
  net.add_wire({"c", "out1"}, {"s1", "in"});
  net.add_wire({"c", "out2"}, {"s2", "in"});
  net.add_wire({"s2", "out"}, {"f", "in2"});
  net.add_open({"a", "in"});
  net.add_open({"f", "in1"});
  net.add_open({"s1", "out"});
  net.add_open({"f", "out"});
  return contract_to_gate(net);
}

GateMatrix perfect_tensor(Level level) {
  TensorNetwork net(level);
  // Left column carries j, right column i; v1 and v4 are copies, v2 and v3
  // fusions. Outputs: i + j on the right, i + 2j on the left.
  net.add_node("a1", NodeKind::Sdag);
  net.add_node("v1", NodeKind::cofusion);
  net.add_node("s13", NodeKind::S);
  net.add_node("s12", NodeKind::S);
  net.add_node("v2", NodeKind::fusion);
  net.add_node("d24", NodeKind::Sdag);
  net.add_node("v4", NodeKind::cofusion);
  net.add_node("s4", NodeKind::S);
  net.add_node("s43", NodeKind::S);
  net.add_node("v3", NodeKind::fusion);
  net.add_wire({"a1", "out"}, {"v1", "in"});
  net.add_wire({"v1", "out1"}, {"s13", "in"});
  net.add_wire({"s13", "out"}, {"v3", "in1"});
  net.add_wire({"v1", "out2"}, {"s12", "in"});
  net.add_wire({"s12", "out"}, {"v2", "in2"});
  net.add_wire({"v2", "out"}, {"d24", "in"});
  net.add_wire({"d24", "out"}, {"v4", "in"});
  net.add_wire({"v4", "out1"}, {"s4", "in"});
  net.add_wire({"v4", "out2"}, {"s43", "in"});
  net.add_wire({"s43", "out"}, {"v3", "in2"});
  net.add_open({"v2", "in1"});
  net.add_open({"a1", "in"});
  net.add_open({"s4", "out"});
  net.add_open({"v3", "out"});
  return contract_to_gate(net);
}

GateMatrix c_add_closed_form(Level level) {
  const int k = level.k();
  const size_t dim = ipow(k, 2);
  std::vector<CycScalar> e(dim * dim, CycScalar::zero(level));
  for (int j = 0; j < k; ++j) {
    for (int l = 0; l < k; ++l) {
      size_t in = j * k + l, out = j * k + (l + j) % k;
      e[out * dim + in] = CycScalar::one(level);
    }
  }
  return GateMatrix(level, 2, 2, std::move(e));
}

GateMatrix perfect_tensor_closed_form(Level level) {
  const int k = level.k();
  const size_t dim = ipow(k, 2);
  std::vector<CycScalar> e(dim * dim, CycScalar::zero(level));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      size_t in = i * k + j, out = ((i + j) % k) * k + (i + 2 * j) % k;
      e[out * dim + in] = CycScalar::one(level);
    }
  }
  return GateMatrix(level, 2, 2, std::move(e));
}

bool is_perfect_tensor(const GateMatrix& g) {
  if (g.nin() != 2 || g.nout() != 2) throw std::invalid_argument("expected a 2 -> 2 tensor");
  DenseState legs(g.level(), DenseState::default_sites(4), g.entries());
  // Every proper subset, with the smaller side as the input of the map.
  for (unsigned mask = 1; mask < 15; ++mask) {
    std::vector<size_t> in, out;
    for (size_t leg = 0; leg < 4; ++leg) ((mask >> leg) & 1 ? in : out).push_back(leg);
    if (in.size() > out.size()) continue;
    if (!gate_from_state(legs, out, in).is_isometry_up_to_scalar()) return false;
  }
  return true;
}

DenseState fusion_state(Level level) {
  std::vector<Site> sites = {{"in1", Orientation::negative},
                             {"in2", Orientation::negative},
                             {"out", Orientation::positive}};
  const int k = level.k();
  std::vector<CycScalar> amps(ipow(k, 3), CycScalar::zero(level));
  for (int j1 = 0; j1 < k; ++j1) {
    for (int j2 = 0; j2 < k; ++j2) amps[(j1 * k + j2) * k + (j1 + j2) % k] = CycScalar::one(level);
  }
  return DenseState(level, std::move(sites), std::move(amps));
}

}  // namespace topostab
