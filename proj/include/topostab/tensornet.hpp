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

#ifndef TOPOSTAB_TENSORNET_HPP
#define TOPOSTAB_TENSORNET_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "topostab/dense.hpp"

namespace topostab {

enum class NodeKind { fusion, cofusion, S, Sdag, T, Tdag, X, Z, P, ket, bra, cup, cap };

std::string_view to_string(NodeKind kind);
/// Parses a node keyword; returns nullopt for unknown keywords.
std::optional<NodeKind> node_kind_from_string(std::string_view word);
/// Whether the kind takes a basis value (ket, bra).
bool takes_value(NodeKind kind);

/// Port names per kind:
///   fusion  in1 in2 -> out        cofusion  in -> out1 out2
///   gates   in -> out             ket -> out      bra  in
///   cup     -> out1 out2          cap  in1 in2
const std::vector<std::string>& in_ports(NodeKind kind);
const std::vector<std::string>& out_ports(NodeKind kind);

struct TensorNode {
  std::string name;
  NodeKind kind;
  int value = 0;  // basis label for ket / bra
};

struct PortRef {
  std::string node;
  std::string port;
  std::string str() const { return node + "." + port; }
  friend bool operator==(const PortRef&, const PortRef&) = default;
};

struct Wire {
  PortRef from;  // out-port
  PortRef to;    // in-port
};

/// Network of typed nodes. Wires run from an out-port to an in-port and sum
/// over Z_k; each port is wired or left open exactly once.
class TensorNetwork {
 public:
  explicit TensorNetwork(Level level) : level_(level) {}

  Level level() const { return level_; }
  const std::vector<TensorNode>& nodes() const { return nodes_; }
  const std::vector<Wire>& wires() const { return wires_; }
  const std::vector<PortRef>& open_legs() const { return open_; }

  /// Throws std::invalid_argument on a duplicate name.
  void add_node(std::string name, NodeKind kind, int value = 0);
  /// Throws on unknown ports, wrong polarity or a port already in use.
  void add_wire(const PortRef& from, const PortRef& to);
  void add_open(const PortRef& leg);

  const TensorNode* find_node(std::string_view name) const;
  bool is_out_port(const PortRef& p) const;
  /// Throws std::invalid_argument if a port is neither wired nor open.
  void validate() const;

 private:
  void check_port(const PortRef& p) const;
  void claim(const PortRef& p);

  Level level_;
  std::vector<TensorNode> nodes_;
  std::vector<Wire> wires_;
  std::vector<PortRef> open_;
  std::vector<PortRef> used_;
};

/// Exact contraction onto the open legs, in their listed order. Open out-ports
/// become positive sites and open in-ports negative (dual) sites named
/// "node.port". An order seed selects a random pairwise merge order.
DenseState contract(const TensorNetwork& net, std::optional<uint64_t> order_seed = std::nullopt);

/// Contraction read as a gate: open in-ports are inputs, open out-ports are
/// outputs, each in listed order.
GateMatrix contract_to_gate(const TensorNetwork& net);

/// One generator of a Clifford word. Sites are zero based.
struct CliffordLetter {
  enum class Kind { S, P, C_ADD, X, Z } kind;
  size_t site = 0;
  size_t target = 0;  // C_ADD only
};

/// Network for the product of the letters, applied left to right (the first
/// letter acts first). Open legs are the n input ports followed by the n output
/// ports, in site order. Throws std::out_of_range on a bad site index.
TensorNetwork clifford_word(Level level, const std::vector<CliffordLetter>& word, size_t n);

/// The word applied to |0...0>, as a positively oriented n-site state.
DenseState stabilizer_state_from_word(Level level, const std::vector<CliffordLetter>& word,
                                      size_t n);

/// `length` letters drawn uniformly from {S, P, C_ADD, X, Z} on uniformly
/// chosen sites (C_ADD on two distinct sites; never drawn when n = 1).
std::vector<CliffordLetter> random_clifford_word(std::mt19937_64& rng, size_t n, size_t length);

}  // namespace topostab

#endif  // TOPOSTAB_TENSORNET_HPP
