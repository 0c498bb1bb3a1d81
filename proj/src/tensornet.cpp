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

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "topostab/gates.hpp"
#include "topostab/tensor.hpp"

namespace topostab {

namespace {

struct KindInfo {
  NodeKind kind;
  std::string_view word;
  std::vector<std::string> ins;
  std::vector<std::string> outs;
};

const std::array<KindInfo, 13>& kind_table() {
  static const std::array<KindInfo, 13> table = {{
      {NodeKind::fusion, "fusion", {"in1", "in2"}, {"out"}},
      {NodeKind::cofusion, "cofusion", {"in"}, {"out1", "out2"}},
      {NodeKind::S, "S", {"in"}, {"out"}},
      {NodeKind::Sdag, "Sdag", {"in"}, {"out"}},
      {NodeKind::T, "T", {"in"}, {"out"}},
      {NodeKind::Tdag, "Tdag", {"in"}, {"out"}},
      {NodeKind::X, "X", {"in"}, {"out"}},
      {NodeKind::Z, "Z", {"in"}, {"out"}},
      {NodeKind::P, "P", {"in"}, {"out"}},
      {NodeKind::ket, "ket", {}, {"out"}},
      {NodeKind::bra, "bra", {"in"}, {}},
      {NodeKind::cup, "cup", {}, {"out1", "out2"}},
      {NodeKind::cap, "cap", {"in1", "in2"}, {}},
  }};
  return table;
}

const KindInfo& info(NodeKind kind) {
  for (const auto& i : kind_table()) {
    if (i.kind == kind) return i;
  }
  throw std::invalid_argument("unknown node kind");
}

// Node tensor over ports ins ++ outs, from a map with matching leg counts.
LabeledTensor tensor_from_gate(const GateMatrix& g) {
  LabeledTensor t;
  const size_t rows = g.rows(), cols = g.cols();
  t.data.reserve(rows * cols);
  for (size_t in = 0; in < cols; ++in) {
    for (size_t out = 0; out < rows; ++out) t.data.push_back(g.at(out, in));
  }
  return t;
}

LabeledTensor pair_delta(Level level, bool negate_second) {
  const int k = level.k();
  LabeledTensor t;
  t.data.assign(ipow(k, 2), CycScalar::zero(level));
  for (int j = 0; j < k; ++j) {
    int partner = negate_second ? static_cast<int>(level.mod(-j)) : j;
    t.data[j * k + partner] = CycScalar::one(level);
  }
  return t;
}

LabeledTensor node_tensor(Level level, const TensorNode& node) {
  switch (node.kind) {
    case NodeKind::fusion:
      return tensor_from_gate(fusion_tensor(level));
    case NodeKind::cofusion:
      return tensor_from_gate(cofusion_tensor(level));
    case NodeKind::S:
      return tensor_from_gate(modular_gate(level, ModularKind::S));
    case NodeKind::Sdag:
      return tensor_from_gate(modular_gate(level, ModularKind::S).adjoint());
    case NodeKind::T:
      return tensor_from_gate(modular_gate(level, ModularKind::T));
    case NodeKind::Tdag:
      return tensor_from_gate(modular_gate(level, ModularKind::T).adjoint());
    case NodeKind::X:
      return tensor_from_gate(modular_gate(level, ModularKind::X));
    case NodeKind::Z:
      return tensor_from_gate(modular_gate(level, ModularKind::Z));
    case NodeKind::P:
      return tensor_from_gate(modular_gate(level, ModularKind::P));
    case NodeKind::ket:
    case NodeKind::bra: {
      LabeledTensor t;
      t.data.assign(level.k(), CycScalar::zero(level));
      t.data[level.mod(node.value)] = CycScalar::one(level);
      return t;
    }
    case NodeKind::cup:
    case NodeKind::cap:
      return pair_delta(level, true);
  }
  throw std::invalid_argument("unknown node kind");
}

}  // namespace

std::string_view to_string(NodeKind kind) { return info(kind).word; }

std::optional<NodeKind> node_kind_from_string(std::string_view word) {
  for (const auto& i : kind_table()) {
    if (i.word == word) return i.kind;
  }
  return std::nullopt;
}

bool takes_value(NodeKind kind) { return kind == NodeKind::ket || kind == NodeKind::bra; }

const std::vector<std::string>& in_ports(NodeKind kind) { return info(kind).ins; }
const std::vector<std::string>& out_ports(NodeKind kind) { return info(kind).outs; }

void TensorNetwork::add_node(std::string name, NodeKind kind, int value) {
  if (find_node(name)) throw std::invalid_argument("duplicate node name '" + name + "'");
  nodes_.push_back({std::move(name), kind, value});
}

const TensorNode* TensorNetwork::find_node(std::string_view name) const {
  for (const auto& n : nodes_) {
    if (n.name == name) return &n;
  }
  return nullptr;
}

void TensorNetwork::check_port(const PortRef& p) const {
  const TensorNode* node = find_node(p.node);
  if (!node) throw std::invalid_argument("unknown node in port '" + p.str() + "'");
  const auto& ins = in_ports(node->kind);
  const auto& outs = out_ports(node->kind);
  if (std::find(ins.begin(), ins.end(), p.port) == ins.end() &&
      std::find(outs.begin(), outs.end(), p.port) == outs.end()) {
    throw std::invalid_argument("no port '" + p.str() + "' on a " +
                                std::string(to_string(node->kind)) + " node");
  }
}

bool TensorNetwork::is_out_port(const PortRef& p) const {
  check_port(p);
  const auto& outs = out_ports(find_node(p.node)->kind);
  return std::find(outs.begin(), outs.end(), p.port) != outs.end();
}

void TensorNetwork::claim(const PortRef& p) {
  if (std::find(used_.begin(), used_.end(), p) != used_.end()) {
    throw std::invalid_argument("port already wired: '" + p.str() + "'");
  }
  used_.push_back(p);
}

void TensorNetwork::add_wire(const PortRef& from, const PortRef& to) {
  if (!is_out_port(from)) throw std::invalid_argument("wire must start at an out-port: '" + from.str() + "'");
  if (is_out_port(to)) throw std::invalid_argument("wire must end at an in-port: '" + to.str() + "'");
  claim(from);
  claim(to);
  wires_.push_back({from, to});
}

void TensorNetwork::add_open(const PortRef& leg) {
  check_port(leg);
  claim(leg);
  open_.push_back(leg);
}

void TensorNetwork::validate() const {
  for (const auto& node : nodes_) {
    for (const auto* ports : {&in_ports(node.kind), &out_ports(node.kind)}) {
      for (const auto& port : *ports) {
        PortRef p{node.name, port};
        if (std::find(used_.begin(), used_.end(), p) == used_.end()) {
          throw std::invalid_argument("dangling port '" + p.str() + "' is neither wired nor open");
        }
      }
    }
  }
}

DenseState contract(const TensorNetwork& net, std::optional<uint64_t> order_seed) {
  net.validate();
  const Level level = net.level();
  std::map<std::string, int> label_of;
  int next = 0;
  for (const auto& node : net.nodes()) {
    for (const auto* ports : {&in_ports(node.kind), &out_ports(node.kind)}) {
      for (const auto& port : *ports) label_of[PortRef{node.name, port}.str()] = next++;
    }
  }
  for (const auto& w : net.wires()) label_of[w.to.str()] = label_of[w.from.str()];

  std::vector<LabeledTensor> tensors;
  tensors.reserve(net.nodes().size());
  for (const auto& node : net.nodes()) {
    LabeledTensor t = node_tensor(level, node);
    for (const auto* ports : {&in_ports(node.kind), &out_ports(node.kind)}) {
      for (const auto& port : *ports) t.labels.push_back(label_of[PortRef{node.name, port}.str()]);
    }
    tensors.push_back(std::move(t));
  }

  std::vector<int> open;
  std::vector<Site> sites;
  for (const auto& leg : net.open_legs()) {
    open.push_back(label_of[leg.str()]);
    sites.push_back({leg.str(), net.is_out_port(leg) ? Orientation::positive : Orientation::negative});
  }
  LabeledTensor result = contract_network(level, std::move(tensors), open, order_seed);
  return DenseState(level, std::move(sites), std::move(result.data));
}

GateMatrix contract_to_gate(const TensorNetwork& net) {
  DenseState s = contract(net);
  std::vector<size_t> ins, outs;
  for (size_t i = 0; i < net.open_legs().size(); ++i) {
    (net.is_out_port(net.open_legs()[i]) ? outs : ins).push_back(i);
  }
  return gate_from_state(s, outs, ins);
}

namespace {

class WordBuilder {
 public:
  WordBuilder(Level level, size_t n, bool with_kets) : net_(level), starts_(n), ends_(n), set_(n, false) {
    if (with_kets) {
      for (size_t i = 0; i < n; ++i) {
        std::string name = fresh();
        net_.add_node(name, NodeKind::ket, 0);
        ends_[i] = {name, "out"};
        set_[i] = true;
      }
    }
  }

  void single(size_t site, NodeKind kind) {
    check(site);
    std::string name = fresh();
    net_.add_node(name, kind);
    attach(site, {name, "in"});
    ends_[site] = {name, "out"};
  }

  void controlled_add(size_t control, size_t target) {
    check(control);
    check(target);
    if (control == target) throw std::invalid_argument("C_ADD needs two distinct sites");
    std::string a = fresh(), c = fresh(), s1 = fresh(), s2 = fresh(), f = fresh();
    net_.add_node(a, NodeKind::Sdag);
    net_.add_node(c, NodeKind::cofusion);
    net_.add_node(s1, NodeKind::S);
    net_.add_node(s2, NodeKind::S);
    net_.add_node(f, NodeKind::fusion);
    net_.add_wire({a, "out"}, {c, "in"});
    net_.add_wire({c, "out1"}, {s1, "in"});
    net_.add_wire({c, "out2"}, {s2, "in"});
    net_.add_wire({s2, "out"}, {f, "in2"});
    attach(control, {a, "in"});
    attach(target, {f, "in1"});
    ends_[control] = {s1, "out"};
    ends_[target] = {f, "out"};
  }

  TensorNetwork finish(bool with_kets) {
    for (size_t i = 0; i < ends_.size(); ++i) {
      if (!set_[i]) {
        // Idle site: S followed by S^dagger.
        single(i, NodeKind::S);
        single(i, NodeKind::Sdag);
      }
    }
    if (!with_kets) {
      for (const auto& p : starts_) net_.add_open(p);
    }
    for (const auto& p : ends_) net_.add_open(p);
    return std::move(net_);
  }

 private:
  void check(size_t site) const {
    if (site >= ends_.size()) {
      throw std::out_of_range("Clifford letter site " + std::to_string(site) + " out of range for " +
                              std::to_string(ends_.size()) + " sites");
    }
  }
  void attach(size_t site, const PortRef& in) {
    if (set_[site]) {
      net_.add_wire(ends_[site], in);
    } else {
      starts_[site] = in;
      set_[site] = true;
    }
  }
  std::string fresh() { return "g" + std::to_string(counter_++); }

  TensorNetwork net_;
  std::vector<PortRef> starts_, ends_;
  std::vector<bool> set_;
  int counter_ = 0;
};

TensorNetwork build_word(Level level, const std::vector<CliffordLetter>& word, size_t n,
                         bool with_kets) {
  WordBuilder b(level, n, with_kets);
  for (const auto& letter : word) {
    switch (letter.kind) {
      case CliffordLetter::Kind::S:
        b.single(letter.site, NodeKind::S);
        break;
      case CliffordLetter::Kind::P:
        b.single(letter.site, NodeKind::P);
        break;
      case CliffordLetter::Kind::X:
        b.single(letter.site, NodeKind::X);
        break;
      case CliffordLetter::Kind::Z:
        b.single(letter.site, NodeKind::Z);
        break;
      case CliffordLetter::Kind::C_ADD:
        b.controlled_add(letter.site, letter.target);
        break;
    }
  }
  return b.finish(with_kets);
}

}  // namespace

TensorNetwork clifford_word(Level level, const std::vector<CliffordLetter>& word, size_t n) {
  return build_word(level, word, n, false);
}

DenseState stabilizer_state_from_word(Level level, const std::vector<CliffordLetter>& word,
                                      size_t n) {
  DenseState raw = contract(build_word(level, word, n, true));
  return DenseState(level, DenseState::default_sites(n), raw.amps());
}

std::vector<CliffordLetter> random_clifford_word(std::mt19937_64& rng, size_t n, size_t length) {
  if (n == 0) throw std::invalid_argument("random_clifford_word: no sites");
  using Kind = CliffordLetter::Kind;
  std::vector<Kind> kinds{Kind::S, Kind::P, Kind::X, Kind::Z};
  if (n > 1) kinds.push_back(Kind::C_ADD);
  std::uniform_int_distribution<size_t> pick_kind(0, kinds.size() - 1);
  std::uniform_int_distribution<size_t> pick_site(0, n - 1);
  std::vector<CliffordLetter> word;
  for (size_t i = 0; i < length; ++i) {
    CliffordLetter l{kinds[pick_kind(rng)], pick_site(rng), 0};
    if (l.kind == Kind::C_ADD) {
      do {
        l.target = pick_site(rng);
      } while (l.target == l.site);
    }
    word.push_back(l);
  }
  return word;
}

}  // namespace topostab
