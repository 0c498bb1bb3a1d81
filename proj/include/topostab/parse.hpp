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

#ifndef TOPOSTAB_PARSE_HPP
#define TOPOSTAB_PARSE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "topostab/surgery.hpp"
#include "topostab/tensornet.hpp"

namespace topostab {

/// Syntax or validation error in a description file. what() reads
/// "line L, column C: message"; both positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_, column_;
  std::string message_;
};

/// Manifold files, one statement per line, '#' starts a comment:
///   level <int>
///   component <name> boundary [rep <int>]
///   component <name> surgery
///   link <name> <name> <int>
///   frame <name> <int>
/// `level` must come before anything else unless default_level is given.
SurgeryPresentation parse_manifold(std::string_view text, std::optional<int> default_level = std::nullopt);

/// Network files:
///   level <int>
///   node <name> <kind> [<int>]
///   wire <node>.<port> <node>.<port>
///   open <node>.<port> ...
/// Kinds: fusion cofusion S Sdag T Tdag X Z P ket bra cup cap. A wire may list
/// its ends in either order.
TensorNetwork parse_network(std::string_view text, std::optional<int> default_level = std::nullopt);

/// Canonical text: declarations in order, then links (upper triangle, nonzero
/// only), then frames (nonzero only).
std::string print_manifold(const SurgeryPresentation& p);
std::string print_network(const TensorNetwork& net);

enum class DocKind { manifold, network };
/// Decides from the first statement keyword that only one grammar has.
/// Throws ParseError if there is none.
DocKind detect_doc_kind(std::string_view text);

}  // namespace topostab

#endif  // TOPOSTAB_PARSE_HPP
