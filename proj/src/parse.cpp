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

#include "topostab/parse.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

namespace topostab {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

struct Token {
  std::string text;
  int column;
};

struct Statement {
  int line;
  std::vector<Token> tokens;

  [[noreturn]] void fail(size_t token, const std::string& message) const {
    const int column = token < tokens.size() ? tokens[token].column
                                             : tokens.back().column + static_cast<int>(tokens.back().text.size());
    throw ParseError(line, column, message);
  }
  const std::string& at(size_t i, const char* what) const {
    if (i >= tokens.size()) fail(i, std::string("expected ") + what);
    return tokens[i].text;
  }
  void expect_size(size_t lo, size_t hi) const {
    if (tokens.size() < lo) fail(tokens.size(), "too few fields for '" + tokens[0].text + "'");
    if (tokens.size() > hi) fail(hi, "unexpected '" + tokens[hi].text + "'");
  }
};

std::vector<Statement> tokenize(std::string_view text) {
  std::vector<Statement> out;
  int line = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++line;
    if (size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Statement st{line, {}};
    size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) st.tokens.push_back({std::string(raw.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    if (!st.tokens.empty()) out.push_back(std::move(st));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

int64_t parse_int(const Statement& st, size_t i, const char* what) {
  const std::string& s = st.at(i, what);
  int64_t v = 0;
  const char* first = s.data();
  if (!s.empty() && s[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || first == s.data() + s.size()) {
    st.fail(i, std::string("expected ") + what + ", got '" + s + "'");
  }
  return v;
}

Level parse_level(const Statement& st) {
  st.expect_size(2, 2);
  const int64_t k = parse_int(st, 1, "an integer level");
  if (k < 3 || k % 2 == 0 || !is_prime(k)) st.fail(1, "level must be an odd prime");
  try {
    return Level(static_cast<int>(k));
  } catch (const std::exception& e) {
    st.fail(1, e.what());
  }
}

// Splits the statements at the leading `level` line.
Level take_level(std::vector<Statement>& sts, std::optional<int> default_level) {
  if (!sts.empty() && sts[0].tokens[0].text == "level") {
    Level level = parse_level(sts[0]);
    sts.erase(sts.begin());
    return level;
  }
  if (default_level) {
    try {
      return Level(*default_level);
    } catch (const std::exception& e) {
      throw ParseError(1, 1, e.what());
    }
  }
  if (sts.empty()) throw ParseError(1, 1, "missing level statement");
  sts[0].fail(0, "the first statement must be 'level <k>'");
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) return false;
  }
  return true;
}

}  // namespace

SurgeryPresentation parse_manifold(std::string_view text, std::optional<int> default_level) {
  std::vector<Statement> sts = tokenize(text);
  const Level level = take_level(sts, default_level);

  std::vector<LinkComponent> comps;
  std::map<std::string, size_t> index;
  std::map<std::pair<size_t, size_t>, int64_t> links;
  auto lookup = [&](const Statement& st, size_t i) {
    const std::string& name = st.at(i, "a component name");
    auto it = index.find(name);
    if (it == index.end()) st.fail(i, "unknown component '" + name + "'");
    return it->second;
  };
  auto set_entry = [&](const Statement& st, size_t a, size_t b, int64_t v) {
    auto key = std::minmax(a, b);
    auto [it, fresh] = links.emplace(key, v);
    if (!fresh && it->second != v) {
      st.fail(st.tokens.size() - 1, "conflicting redeclaration of link (" + comps[key.first].name + ", " +
                                        comps[key.second].name + "): " + std::to_string(it->second) +
                                        " vs " + std::to_string(v));
    }
  };

  for (const auto& st : sts) {
    const std::string& kw = st.tokens[0].text;
    if (kw == "level") {
      st.fail(0, "duplicate level statement");
    } else if (kw == "component") {
      st.expect_size(3, 5);
      const std::string& name = st.tokens[1].text;
      if (!valid_name(name)) st.fail(1, "invalid component name '" + name + "'");
      if (index.count(name)) st.fail(1, "duplicate component name '" + name + "'");
      const std::string& role = st.tokens[2].text;
      LinkComponent c{name, Role::boundary, std::nullopt};
      if (role == "surgery") {
        c.role = Role::surgery;
        if (st.tokens.size() > 3) {
          if (st.tokens[3].text == "rep") st.fail(3, "rep label only on boundary components");
          st.fail(3, "unexpected '" + st.tokens[3].text + "'");
        }
      } else if (role == "boundary") {
        if (st.tokens.size() > 3) {
          if (st.tokens[3].text != "rep") st.fail(3, "expected 'rep', got '" + st.tokens[3].text + "'");
          c.rep = parse_int(st, 4, "an integer rep label");
        }
      } else {
        st.fail(2, "expected 'boundary' or 'surgery', got '" + role + "'");
      }
      index[name] = comps.size();
      comps.push_back(std::move(c));
    } else if (kw == "link") {
      st.expect_size(4, 4);
      const size_t a = lookup(st, 1), b = lookup(st, 2);
      if (a == b) st.fail(2, "a component cannot link itself; use 'frame'");
      set_entry(st, a, b, parse_int(st, 3, "an integer linking number"));
    } else if (kw == "frame") {
      st.expect_size(3, 3);
      const size_t a = lookup(st, 1);
      set_entry(st, a, a, parse_int(st, 2, "an integer framing"));
    } else {
      st.fail(0, "unknown statement '" + kw + "'");
    }
  }
  if (comps.empty()) {
    throw ParseError(sts.empty() ? 1 : sts.back().line, 1, "no components declared");
  }
  std::vector<std::vector<int64_t>> linking(comps.size(), std::vector<int64_t>(comps.size(), 0));
  for (const auto& [key, v] : links) linking[key.first][key.second] = linking[key.second][key.first] = v;
  return SurgeryPresentation(level, std::move(comps), std::move(linking));
}

namespace {

PortRef parse_port(const Statement& st, size_t i) {
  const std::string& s = st.at(i, "a port <node>.<port>");
  const size_t dot = s.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == s.size() || s.find('.', dot + 1) != std::string::npos) {
    st.fail(i, "expected <node>.<port>, got '" + s + "'");
  }
  return PortRef{s.substr(0, dot), s.substr(dot + 1)};
}

}  // namespace

TensorNetwork parse_network(std::string_view text, std::optional<int> default_level) {
  std::vector<Statement> sts = tokenize(text);
  const Level level = take_level(sts, default_level);
  TensorNetwork net(level);
  for (const auto& st : sts) {
    const std::string& kw = st.tokens[0].text;
    if (kw == "level") {
      st.fail(0, "duplicate level statement");
    } else if (kw == "node") {
      st.expect_size(3, 4);
      const std::string& name = st.tokens[1].text;
      if (!valid_name(name)) st.fail(1, "invalid node name '" + name + "'");
      auto kind = node_kind_from_string(st.tokens[2].text);
      if (!kind) st.fail(2, "unknown node kind '" + st.tokens[2].text + "'");
      int value = 0;
      if (takes_value(*kind)) {
        value = static_cast<int>(level.mod(parse_int(st, 3, "a basis label")));
      } else if (st.tokens.size() > 3) {
        st.fail(3, "node kind '" + st.tokens[2].text + "' takes no value");
      }
      try {
        net.add_node(name, *kind, value);
      } catch (const std::invalid_argument& e) {
        st.fail(1, e.what());
      }
    } else if (kw == "wire") {
      st.expect_size(3, 3);
      PortRef a = parse_port(st, 1), b = parse_port(st, 2);
      size_t blame = 1;
      try {
        if (!net.find_node(a.node)) throw std::invalid_argument("unknown node in port '" + a.str() + "'");
        blame = 2;
        if (!net.find_node(b.node)) throw std::invalid_argument("unknown node in port '" + b.str() + "'");
        blame = 1;
        const bool a_out = net.is_out_port(a);
        if (!a_out && net.is_out_port(b)) std::swap(a, b);
        net.add_wire(a, b);
      } catch (const std::invalid_argument& e) {
        st.fail(blame, e.what());
      }
    } else if (kw == "open") {
      st.expect_size(2, st.tokens.size());
      for (size_t i = 1; i < st.tokens.size(); ++i) {
        try {
          net.add_open(parse_port(st, i));
        } catch (const std::invalid_argument& e) {
          st.fail(i, e.what());
        }
      }
    } else {
      st.fail(0, "unknown statement '" + kw + "'");
    }
  }
  try {
    net.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(sts.empty() ? 1 : sts.back().line + 1, 1, std::string("at end of input: ") + e.what());
  }
  return net;
}

std::string print_manifold(const SurgeryPresentation& p) {
  std::ostringstream os;
  os << "level " << p.level().k() << "\n";
  for (const auto& c : p.components()) {
    os << "component " << c.name << (c.role == Role::surgery ? " surgery" : " boundary");
    if (c.rep) os << " rep " << *c.rep;
    os << "\n";
  }
  for (size_t a = 0; a < p.size(); ++a) {
    for (size_t b = a + 1; b < p.size(); ++b) {
      if (p.linking()[a][b] != 0) {
        os << "link " << p.components()[a].name << " " << p.components()[b].name << " " << p.linking()[a][b] << "\n";
      }
    }
  }
  for (size_t a = 0; a < p.size(); ++a) {
    if (p.framing(a) != 0) os << "frame " << p.components()[a].name << " " << p.framing(a) << "\n";
  }
  return os.str();
}

std::string print_network(const TensorNetwork& net) {
  std::ostringstream os;
  os << "level " << net.level().k() << "\n";
  for (const auto& n : net.nodes()) {
    os << "node " << n.name << " " << to_string(n.kind);
    if (takes_value(n.kind)) os << " " << n.value;
    os << "\n";
  }
  for (const auto& w : net.wires()) os << "wire " << w.from.str() << " " << w.to.str() << "\n";
  if (!net.open_legs().empty()) {
    os << "open";
    for (const auto& leg : net.open_legs()) os << " " << leg.str();
    os << "\n";
  }
  return os.str();
}

DocKind detect_doc_kind(std::string_view text) {
  for (const auto& st : tokenize(text)) {
    const std::string& kw = st.tokens[0].text;
    if (kw == "component" || kw == "link" || kw == "frame") return DocKind::manifold;
    if (kw == "node" || kw == "wire" || kw == "open") return DocKind::network;
  }
  throw ParseError(1, 1, "cannot tell a manifold file from a network file: no component or node statements");
}

}  // namespace topostab
