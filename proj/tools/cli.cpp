// Copyright 2026 The p22 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "p22/audit.hpp"
#include "p22/canonical.hpp"
#include "p22/constructions.hpp"
#include "p22/detect.hpp"
#include "p22/error.hpp"
#include "p22/io.hpp"
#include "p22/recognizer.hpp"
#include "p22/search.hpp"

namespace p22::cli {
namespace {

class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument values that CLI11 cannot validate on its own.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OutputOptions {
  std::string format = "json";
  std::string path;
};

struct Options {
  int formula_n = 0;

  std::string family;
  int n = 0;
  std::optional<int> c;
  std::optional<int> v4;
  std::optional<std::string> variant;
  std::optional<int> s1;
  std::optional<int> s2;
  std::optional<std::string> left;
  std::optional<std::string> right;
  int index = 0;
  OutputOptions output;

  std::string file;

  bool exhaustive = false;
  bool bnb = false;
  bool seed_family = false;
  std::int64_t limit = 0;
  std::int64_t time_limit_ms = 0;
  bool all_witnesses = false;
  bool print_witnesses = false;

  std::optional<int> vertex;
  std::string audit_format = "text";
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw FileError("error reading " + path);
  return buffer.str();
}

Digraph LoadDigraph(const std::string& path) {
  return decode_json(ReadFile(path));
}

void Emit(const std::string& text, const OutputOptions& options,
          std::ostream& out) {
  if (options.path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(options.path, std::ios::binary);
  if (!file) throw FileError("cannot write " + options.path);
  file << text;
  if (!file) throw FileError("error writing " + options.path);
}

std::string Render(const DigraphDocument& doc, const std::string& format) {
  if (format == "dot") return encode_dot(doc.digraph);
  return encode_json(doc) + "\n";
}

// "2,1,0" -> {2,1,0}; "" -> {}.
Arborescence ParseShape(const std::string& text) {
  Arborescence shape;
  if (text.empty()) return shape;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    int value = 0;
    const char* first = text.data() + start;
    const char* last = text.data() + comma;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || value < 0) {
      throw UsageError("bad arborescence shape '" + text + "'");
    }
    shape.push_back(value);
    start = comma + 1;
  }
  return shape;
}

FamilyParams SelectParams(const Options& o) {
  const auto family = parse_family(o.family);
  if (!family) throw UsageError("unknown family '" + o.family + "'");
  std::optional<D8Variant> variant;
  if (o.variant) {
    variant = *o.variant == "a" ? D8Variant::kAvoidCentre
                                : D8Variant::kAvoidMatched;
  }
  std::optional<Arborescence> left;
  std::optional<Arborescence> right;
  if (o.left) left = ParseShape(*o.left);
  if (o.right) right = ParseShape(*o.right);

  std::vector<FamilyParams> candidates;
  for (FamilyParams& p : enumerate_params(*family, o.n)) {
    if (o.c && p.c != *o.c) continue;
    if (o.v4 && p.v4_size != *o.v4) continue;
    if (variant && p.variant != *variant) continue;
    if (o.s1 && p.s1 != *o.s1) continue;
    if (o.s2 && p.s2 != *o.s2) continue;
    if (left && p.left != *left) continue;
    if (right && p.right != *right) continue;
    candidates.push_back(std::move(p));
  }
  if (candidates.empty()) {
    throw DomainError("no " + to_string(*family) + " member of order " +
                      std::to_string(o.n) + " matches the given parameters");
  }
  if (o.index < 0 || o.index >= static_cast<int>(candidates.size())) {
    throw DomainError("--index must be below " +
                      std::to_string(candidates.size()));
  }
  return candidates[static_cast<std::size_t>(o.index)];
}

int RunFormula(const Options& o, std::ostream& out) {
  out << ex_formula(o.formula_n) << '\n';
  return kOk;
}

int RunBuild(const Options& o, std::ostream& out) {
  const FamilyParams params = SelectParams(o);
  DigraphDocument doc{build_family(params), {}};
  doc.meta.family = to_string(params.family);
  doc.meta.params = to_string(params);
  doc.meta.provenance = "p22 build";
  Emit(Render(doc, o.output.format), o.output, out);
  return kOk;
}

int RunRemark(const Options& o, std::ostream& out) {
  DigraphDocument doc{remark_digraph(), {}};
  doc.meta.provenance = "p22 remark";
  Emit(Render(doc, o.output.format), o.output, out);
  return kOk;
}

int RunCheck(const Options& o, std::ostream& out) {
  const Digraph d = LoadDigraph(o.file);
  const auto w = find_witness(d);
  if (!w) {
    out << "FREE\n";
    return kOk;
  }
  out << "P22 " << w->u1 << ' ' << w->u2 << ' ' << w->u3 << ' ' << w->u4
      << '\n';
  return kWitnessFound;
}

int RunSearch(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.exhaustive && o.bnb) {
    throw UsageError("--exhaustive and --bnb are mutually exclusive");
  }
  const bool exhaustive = o.exhaustive || (!o.bnb && o.n <= 5);
  SearchResult result;
  if (exhaustive) {
    if (o.seed_family) throw UsageError("--seed-family needs --bnb");
    result = max_free_exhaustive(o.n);
  } else {
    SearchConfig config;
    config.n = o.n;
    config.node_limit = o.limit;
    config.time_limit = std::chrono::milliseconds(o.time_limit_ms);
    config.collect_witnesses = o.all_witnesses;
    if (o.seed_family) config.seed_witness = extremal_member(o.n);
    result = max_free_branch_and_bound(config);
  }
  out << "best_arcs=" << result.best_arcs << '\n'
      << "optimal=" << (result.optimal ? "true" : "false") << '\n'
      << "witnesses=" << result.witnesses.size() << '\n';
  if (o.print_witnesses) {
    for (const Digraph& w : result.witnesses) out << encode_json(w) << '\n';
  }
  err << "nodes=" << result.nodes << '\n';
  return kOk;
}

int RunRecognize(const Options& o, std::ostream& out) {
  const Classification c = classify(LoadDigraph(o.file));
  out << c.to_string() << '\n';
  return c.is_member() ? kOk : kNotExtremal;
}

int RunAudit(const Options& o, std::ostream& out) {
  const Digraph d = LoadDigraph(o.file);
  VertexSet vertices;
  if (o.vertex) {
    if (*o.vertex < 0 || *o.vertex >= d.order()) {
      throw RangeError("vertex " + std::to_string(*o.vertex) +
                       " outside the digraph");
    }
    vertices.insert(*o.vertex);
  }
  const AuditReport report = audit_all(d, vertices);
  out << (o.audit_format == "kv" ? report.to_key_values() : report.to_text());
  return kOk;
}

int RunCanon(const Options& o, std::ostream& out) {
  out << canonical_form(LoadDigraph(o.file)).to_hex() << '\n';
  return kOk;
}

void AddOutputOptions(CLI::App* cmd, OutputOptions& output) {
  cmd->add_option("--format", output.format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  cmd->add_option("-o,--output", output.path, "write to file, not stdout");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app("Extremal digraphs without P(2,2) subgraphs", "p22");
  app.require_subcommand(1);

  auto* formula = app.add_subcommand("formula", "print ex(n) for n >= 13");
  formula->add_option("n", o.formula_n)->required();

  auto* build = app.add_subcommand("build", "emit a member of a family");
  build->add_option("family", o.family, "D1..D10")->required();
  build->add_option("--n", o.n, "order")->required();
  build->add_option("--c", o.c, "extra 2-cycles");
  build->add_option("--v4", o.v4, "bottom vertices on 2-cycles");
  build->add_option("--variant", o.variant, "D8 variant")
      ->check(CLI::IsMember({"a", "b"}));
  build->add_option("--s1", o.s1, "D5 first star order");
  build->add_option("--s2", o.s2, "D5 second star order");
  build->add_option("--left", o.left, "D4 left shape, e.g. 2,0");
  build->add_option("--right", o.right, "D4 right shape");
  build->add_option("--index", o.index, "pick among matching members");
  AddOutputOptions(build, o.output);

  auto* check = app.add_subcommand("check", "test P(2,2)-freeness");
  check->add_option("file", o.file)->required();

  auto* search = app.add_subcommand("search", "maximum P(2,2)-free size");
  search->add_option("--n", o.n)->required()->check(CLI::Range(1, 64));
  search->add_flag("--exhaustive", o.exhaustive, "enumerate all digraphs");
  search->add_flag("--bnb", o.bnb, "branch and bound");
  search->add_flag("--seed-family", o.seed_family,
                   "seed with the family member of order n");
  search->add_option("--limit", o.limit, "node limit (0 = none)")
      ->check(CLI::NonNegativeNumber);
  search->add_option("--time-limit", o.time_limit_ms, "milliseconds")
      ->check(CLI::NonNegativeNumber);
  search->add_flag("--all-witnesses", o.all_witnesses,
                   "collect every optimal class");
  search->add_flag("--print-witnesses", o.print_witnesses,
                   "print witnesses as JSON lines");

  auto* recognize = app.add_subcommand("recognize", "classify against EX(n)");
  recognize->add_option("file", o.file)->required();

  auto* audit = app.add_subcommand("audit", "run the structural audits");
  audit->add_option("file", o.file)->required();
  audit->add_option("--vertex", o.vertex, "audit this vertex");
  audit->add_option("--format", o.audit_format, "text or kv")
      ->check(CLI::IsMember({"text", "kv"}));

  auto* remark = app.add_subcommand("remark", "emit the 12-arc order-5 digraph");
  AddOutputOptions(remark, o.output);

  auto* canon = app.add_subcommand("canon", "print the canonical form");
  canon->add_option("file", o.file)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsage;
  }

  try {
    if (formula->parsed()) return RunFormula(o, out);
    if (build->parsed()) return RunBuild(o, out);
    if (check->parsed()) return RunCheck(o, out);
    if (search->parsed()) return RunSearch(o, out, err);
    if (recognize->parsed()) return RunRecognize(o, out);
    if (audit->parsed()) return RunAudit(o, out);
    if (remark->parsed()) return RunRemark(o, out);
    if (canon->parsed()) return RunCanon(o, out);
  } catch (const UsageError& e) {
    err << "p22: " << e.what() << '\n';
    return kUsage;
  } catch (const FileError& e) {
    err << "p22: " << e.what() << '\n';
    return kFileError;
  } catch (const Error& e) {
    err << "p22: " << e.what() << '\n';
    return kDataError;
  }
  return kUsage;
}

}  // namespace p22::cli
