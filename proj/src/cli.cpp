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

#include "topostab/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <random>
#include <sstream>

#include "topostab/entanglement.hpp"
#include "topostab/parse.hpp"
#include "topostab/so3.hpp"
#include "topostab/stabilizer.hpp"
#include "topostab/surgery.hpp"
#include "topostab/tensornet.hpp"

namespace topostab {

namespace {

using Json = nlohmann::ordered_json;

// Bad flag values and unreadable files.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  bool json = false;
  bool sign_flip = false;
  uint64_t seed = 1;
  std::vector<std::string> region, a, b, c;
  int r = 5;
  std::optional<int> genus;
  int count = 20;
  int level = 5;
};

struct Loaded {
  DocKind kind;
  std::optional<SurgeryPresentation> presentation;
  std::optional<TensorNetwork> network;
  std::optional<DenseState> state;
};

SignConvention sign_of(const Options& o) {
  return o.sign_flip ? SignConvention::flipped : SignConvention::standard;
}

std::string read_file(const std::string& path) {
  if (path.empty()) throw UsageError("-f: an input file is required");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("-f: cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DenseState state_of_presentation(const SurgeryPresentation& p, SignConvention sign) {
  WellDefinedness wd = well_definedness(p, sign);
  if (!wd.ok) throw IllDefinedError(wd.diagnostic);
  if (p.surgery_indices().size() <= kMaxBruteForceSurgery) return state_from_presentation(p, sign);
  std::vector<Site> sites;
  for (size_t i : p.free_boundary_indices()) sites.push_back({p.components()[i].name, Orientation::positive});
  return state_from_reduction(reduce_quadratic_form(p, sign), std::move(sites));
}

Loaded load(const Options& o) {
  const std::string text = read_file(o.file);
  Loaded l{detect_doc_kind(text), std::nullopt, std::nullopt, std::nullopt};
  if (l.kind == DocKind::manifold) {
    l.presentation = parse_manifold(text);
    l.state = state_of_presentation(*l.presentation, sign_of(o));
  } else {
    l.network = parse_network(text);
    l.state = contract(*l.network);
    if (l.state->is_zero()) throw IllDefinedError("network contracts to the zero state");
  }
  return l;
}

std::vector<size_t> resolve_region(const DenseState& s, const std::vector<std::string>& names,
                                   const std::string& flag) {
  std::vector<size_t> out;
  for (const auto& field : names) {
    std::stringstream ss(field);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (name.empty()) continue;
      try {
        out.push_back(s.site_position(name));
      } catch (const std::out_of_range&) {
        std::string known;
        for (const auto& site : s.sites()) known += (known.empty() ? "" : ", ") + site.name;
        throw UsageError(flag + ": unknown site '" + name + "' (sites: " + known + ")");
      }
    }
  }
  return out;
}

std::vector<std::string> site_names(const DenseState& s, std::span<const size_t> region) {
  std::vector<std::string> out;
  for (size_t i : region) out.push_back(s.sites()[i].name);
  return out;
}

std::string fmt(double x) {
  if (std::abs(x) < 1e-12) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double snap(double x) { return std::abs(x) < 1e-12 ? 0.0 : x; }

Json amplitude_json(const CycScalar& a, const std::vector<int>& index) {
  const auto z = a.to_complex();
  return Json{{"index", index}, {"coeffs", a.coeffs()}, {"kden", a.kden()}, {"value", {snap(z.real()), snap(z.imag())}}};
}

Json sites_json(const DenseState& s) {
  Json out = Json::array();
  for (const auto& site : s.sites()) {
    out.push_back({{"name", site.name}, {"orientation", site.orientation == Orientation::positive ? "+" : "-"}});
  }
  return out;
}

std::string list(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ",") + s;
  return out;
}

std::string cmd_eval(const Options& o) {
  const Loaded l = load(o);
  const DenseState& s = *l.state;
  const int k = s.level().k();
  if (o.json) {
    Json amps = Json::array();
    for (size_t flat = 0; flat < s.amps().size(); ++flat) {
      if (!s[flat].is_zero()) amps.push_back(amplitude_json(s[flat], unflatten(k, s.num_sites(), flat)));
    }
    return Json{{"command", "eval"}, {"level", k}, {"sites", sites_json(s)}, {"amplitudes", amps}}.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "level " << k << "\nsites";
  for (const auto& site : s.sites()) os << " " << site.name << (site.orientation == Orientation::positive ? "+" : "-");
  os << "\n";
  for (size_t flat = 0; flat < s.amps().size(); ++flat) {
    if (s[flat].is_zero()) continue;
    auto idx = unflatten(k, s.num_sites(), flat);
    os << "|";
    for (size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
    const auto z = s[flat].to_complex();
    os << "> " << s[flat].to_string() << " = " << fmt(z.real()) << (z.imag() < 0 ? " - " : " + ")
       << fmt(std::abs(z.imag())) << "i\n";
  }
  return os.str();
}

std::string cmd_entropy(const Options& o) {
  if (o.region.empty()) throw UsageError("--region: at least one site is required");
  const Loaded l = load(o);
  const auto region = resolve_region(*l.state, o.region, "--region");
  const EntropyValue v = flat_entropy(*l.state, region);
  const bool flat = flat_spectrum_check(*l.state, region);
  if (o.json) {
    Json j{{"command", "entropy"}, {"region", site_names(*l.state, region)}, {"dits", snap(v.dits)},
           {"nats", snap(v.nats)}, {"exact", v.exact_dits.has_value()}, {"flat_spectrum", flat}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "S(" << list(site_names(*l.state, region)) << ") = " << fmt(v.dits) << " dits = " << fmt(v.nats) << " nats";
  if (v.exact_dits) os << " (exact)";
  os << "\nflat spectrum: " << (flat ? "yes" : "no") << "\n";
  return os.str();
}

std::string cmd_ghz(const Options& o) {
  if (o.a.empty()) throw UsageError("--A: at least one site is required");
  if (o.b.empty()) throw UsageError("--B: at least one site is required");
  const Loaded l = load(o);
  const DenseState& s = *l.state;
  const auto a = resolve_region(s, o.a, "--A");
  const auto b = resolve_region(s, o.b, "--B");
  std::vector<size_t> c = resolve_region(s, o.c, "--C");
  if (o.c.empty()) {
    for (size_t i = 0; i < s.num_sites(); ++i) {
      if (std::find(a.begin(), a.end(), i) == a.end() && std::find(b.begin(), b.end(), i) == b.end()) c.push_back(i);
    }
  }
  const int g = ghz_count(s, a, b, c);
  if (o.json) {
    Json j{{"command", "ghz"}, {"A", site_names(s, a)}, {"B", site_names(s, b)}, {"C", site_names(s, c)}, {"g", g}};
    return j.dump(2) + "\n";
  }
  return "g = " + std::to_string(g) + "\n";
}

Json tableau_json(const StabilizerTableau& t) {
  Json gens = Json::array();
  for (const auto& g : t.generators()) {
    gens.push_back({{"phase", g.phase}, {"z", g.z}, {"x", g.x}, {"text", to_string(g)}});
  }
  return gens;
}

std::string cmd_check_single(const Options& o) {
  const Loaded l = load(o);
  const StabilizerCheck c = check_stabilizer(*l.state);
  const bool unproven = l.state->level().residue_mod_4() == 3;
  if (o.json) {
    Json j{{"command", "check-stabilizer"}, {"level", l.state->level().k()}, {"stabilizer", c.is_stabilizer()},
           {"wigner_ok", c.wigner_ok}, {"exact_ok", c.exact_ok}, {"converse_unproven", unproven}};
    j["generators"] = c.certificate ? tableau_json(*c.certificate) : Json::array();
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "stabilizer: " << (c.is_stabilizer() ? "yes" : "no") << "\n";
  os << "wigner: " << (c.wigner_ok ? "ok" : "fails") << "\n";
  os << "exact certificate: " << (c.exact_ok ? "ok" : "none") << "\n";
  if (unproven) os << "converse-unproven: level is 3 mod 4\n";
  if (c.certificate) os << c.certificate->to_string();
  return os.str();
}

std::string cmd_check_sweep(const Options& o) {
  const Level level(o.level);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<size_t> sites(1, 3);
  int words_ok = 0, links_ok = 0;
  for (int i = 0; i < o.count; ++i) {
    const size_t n = sites(rng);
    if (is_stabilizer(stabilizer_state_from_word(level, random_clifford_word(rng, n, 10), n))) ++words_ok;
    const SurgeryPresentation p = random_presentation(level, rng, 3, 3, 3);
    const DenseState s = state_from_presentation(p, sign_of(o));
    if (!s.is_zero() && is_stabilizer(s)) ++links_ok;
  }
  const bool unproven = level.residue_mod_4() == 3;
  if (o.json) {
    Json j{{"command", "check-stabilizer"}, {"level", o.level},        {"seed", o.seed},
           {"count", o.count},              {"clifford_words", words_ok}, {"presentations", links_ok},
           {"converse_unproven", unproven}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "level " << o.level << ", seed " << o.seed << "\n";
  os << "clifford words: " << words_ok << "/" << o.count << " stabilizer\n";
  os << "surgery presentations: " << links_ok << "/" << o.count << " stabilizer\n";
  if (unproven) os << "converse-unproven: level is 3 mod 4\n";
  return os.str();
}

std::string cmd_tableau(const Options& o) {
  const Loaded l = load(o);
  std::optional<StabilizerTableau> t;
  if (l.presentation) {
    t = tableau_from_presentation(*l.presentation, sign_of(o));
  } else {
    StabilizerCheck c = check_stabilizer(*l.state);
    if (!c.is_stabilizer()) throw NotStabilizerError("the network does not prepare a stabilizer state");
    t = std::move(c.certificate);
  }
  if (o.json) {
    Json j{{"command", "tableau"}, {"level", t->level().k()}, {"sites", sites_json(*l.state)},
           {"generators", tableau_json(*t)}};
    return j.dump(2) + "\n";
  }
  return t->to_string();
}

std::string cmd_verlinde(const Options& o) {
  try {
    check_so3_r(o.r);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--r: ") + e.what());
  }
  std::vector<int> genera;
  if (o.genus) {
    if (*o.genus < 0) throw UsageError("--genus: must be nonnegative");
    genera.push_back(*o.genus);
  } else {
    genera = {0, 1, 2, 3};
  }
  const int anyons = (o.r + 1) / 2;
  const bool ineq = dimension_inequality(o.r);
  if (o.json) {
    Json dims = Json::array();
    for (int g : genera) dims.push_back({{"genus", g}, {"dim", verlinde_dim(o.r, g)}});
    Json j{{"command", "verlinde"}, {"r", o.r},   {"k", o.r + 3}, {"anyons", anyons},
           {"dims", dims},          {"torus_pair", anyons * anyons}, {"inequality", ineq}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "r " << o.r << " (k = " << o.r + 3 << ")\nanyons " << anyons << "\n";
  for (int g : genera) os << "genus " << g << ": " << verlinde_dim(o.r, g) << "\n";
  os << "inequality " << anyons * anyons << " <= " << verlinde_dim(o.r, 2) << ": " << (ineq ? "holds" : "fails")
     << "\n";
  return os.str();
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  RunResult result;
  Options o;
  CLI::App app{"Exact U(1)_k state preparation from surgery links and tensor networks", "topostab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-f,--file", o.file, "Input manifold (.mfd) or network (.net) file");
  app.add_flag("--json", o.json, "Emit JSON");
  app.add_flag("--sign-flip", o.sign_flip, "Flip the sign of the surgery exponent");
  app.add_option("--seed", o.seed, "Seed for property sweeps");

  auto* eval = app.add_subcommand("eval", "Print the prepared state");
  auto* entropy = app.add_subcommand("entropy", "Entanglement entropy of a region");
  entropy->add_option("--region", o.region, "Sites of the region, comma separated");
  auto* ghz = app.add_subcommand("ghz", "GHZ count of a tripartition");
  ghz->add_option("--A", o.a, "Sites of region A");
  ghz->add_option("--B", o.b, "Sites of region B");
  ghz->add_option("--C", o.c, "Sites of region C (default: the rest)");
  auto* check = app.add_subcommand("check-stabilizer", "Stabilizer test of a file, or a random sweep without -f");
  check->add_option("--count", o.count, "Sweep size")->check(CLI::PositiveNumber);
  check->add_option("--level", o.level, "Sweep level");
  auto* tableau = app.add_subcommand("tableau", "Stabilizer generators of the prepared state");
  auto* verlinde = app.add_subcommand("verlinde", "SO(3) Verlinde dimensions");
  verlinde->add_option("--r", o.r, "Odd prime r >= 5");
  verlinde->add_option("--genus", o.genus, "Surface genus (default: 0..3)");

  std::ostringstream out, err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.status = code == 0 ? kExitOk : kExitUsage;
    return result;
  }

  try {
    if (eval->parsed()) {
      result.out = cmd_eval(o);
    } else if (entropy->parsed()) {
      result.out = cmd_entropy(o);
    } else if (ghz->parsed()) {
      result.out = cmd_ghz(o);
    } else if (check->parsed()) {
      if (o.file.empty()) {
        try {
          Level validated(o.level);
        } catch (const std::exception& e) {
          throw UsageError(std::string("--level: ") + e.what());
        }
        result.out = cmd_check_sweep(o);
      } else {
        result.out = cmd_check_single(o);
      }
    } else if (tableau->parsed()) {
      result.out = cmd_tableau(o);
    } else if (verlinde->parsed()) {
      result.out = cmd_verlinde(o);
    }
  } catch (const IllDefinedError& e) {
    result.status = kExitIllDefined;
    result.err = std::string("ill-defined: ") + e.what() + "\n";
  } catch (const ParseError& e) {
    result.status = kExitUsage;
    result.err = o.file + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.message() + "\n";
  } catch (const std::exception& e) {
    result.status = kExitUsage;
    result.err = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace topostab
