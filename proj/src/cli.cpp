// Copyright 2026 The Hypercode Authors
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

#include "hypercode/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hypercode/chain.hpp"
#include "hypercode/css.hpp"
#include "hypercode/hypermap.hpp"
#include "hypercode/io.hpp"
#include "hypercode/reduce.hpp"
#include "hypercode/verify.hpp"

namespace hypercode::cli {

namespace {

// Parse failure already carrying its "source:line:col: message" text.
struct SourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string file;
  std::size_t darts = 0;
  std::string alpha;
  std::string sigma;
  std::optional<std::string> special;
};

struct Loaded {
  Hypermap hypermap;
  std::optional<std::vector<Dart>> special;
};

void add_input_options(CLI::App *cmd, InputOptions &in) {
  cmd->add_option("file", in.file, "Hypermap file ('-' reads stdin)");
  cmd->add_option("--darts", in.darts, "Dart count for an inline hypermap");
  cmd->add_option("--alpha", in.alpha, "Inline alpha in 1-based cycle notation");
  cmd->add_option("--sigma", in.sigma, "Inline sigma in 1-based cycle notation");
}

void add_special_option(CLI::App *cmd, InputOptions &in) {
  cmd->add_option("--special", in.special,
                  "Special darts, 1-based and space separated; overrides the file");
}

std::string read_source(const std::string &path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw SourceError(path + ": cannot open file");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

Loaded load(const InputOptions &in) {
  Loaded loaded{Hypermap(Permutation::identity(1), Permutation::identity(1)), std::nullopt};
  if (!in.file.empty()) {
    const std::string text = read_source(in.file);
    try {
      auto parsed = io::parse_hypermap_file(text);
      loaded.hypermap = std::move(parsed.hypermap);
      loaded.special = std::move(parsed.special);
    } catch (const io::ParseError &e) {
      throw SourceError(in.file + ":" + e.what());
    }
  } else {
    if (in.darts == 0 || in.alpha.empty() || in.sigma.empty()) {
      throw SourceError("input: give a hypermap file or --darts, --alpha and --sigma");
    }
    auto perm = [&](const std::string &name, const std::string &text) {
      try {
        return parse_cycles(text, in.darts);
      } catch (const CycleParseError &e) {
        throw SourceError(name + ":1:" + std::to_string(e.column()) + ": " + e.what());
      }
    };
    loaded.hypermap = Hypermap(perm("--alpha", in.alpha), perm("--sigma", in.sigma));
  }
  if (in.special) {
    try {
      loaded.special = io::parse_label_list(*in.special, loaded.hypermap.darts());
    } catch (const io::ParseError &e) {
      throw SourceError(std::string("--special:") + e.what());
    }
  }
  return loaded;
}

SpecialDarts resolve_special(const Loaded &loaded, SpecialKind kind) {
  if (loaded.special) return make_special_darts(loaded.hypermap, kind, *loaded.special);
  return default_special_darts(loaded.hypermap, kind);
}

chain::CodeKind parse_kind(const std::string &kind) {
  if (kind == "face") return chain::CodeKind::kFace;
  if (kind == "edge") return chain::CodeKind::kEdge;
  return chain::CodeKind::kFull;
}

chain::QuotientCode build_code(const Loaded &loaded, chain::CodeKind kind) {
  switch (kind) {
    case chain::CodeKind::kFace:
      return chain::face_code(loaded.hypermap, resolve_special(loaded, SpecialKind::kPerEdge));
    case chain::CodeKind::kEdge:
      return chain::edge_code(loaded.hypermap, resolve_special(loaded, SpecialKind::kPerFace));
    case chain::CodeKind::kFull:
      return chain::full_code(loaded.hypermap);
  }
  throw std::logic_error("unhandled code kind");
}

std::string cycles_line(const std::vector<Cycle> &cycles) {
  std::string out;
  for (const auto &c : cycles) out += format_cycle(c);
  return out;
}

std::string labels_line(const std::vector<Dart> &labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(labels[i] + 1);
  }
  return out;
}

void print_info(const Hypermap &h, std::ostream &out) {
  out << "darts: " << h.darts() << "\n";
  out << "alpha: " << format_cycles(h.alpha()) << "\n";
  out << "sigma: " << format_cycles(h.sigma()) << "\n";
  out << "vertices: " << h.vertices().size() << " " << cycles_line(h.vertices().cycles) << "\n";
  out << "edges: " << h.edges().size() << " " << cycles_line(h.edges().cycles) << "\n";
  out << "faces: " << h.faces().size() << " " << cycles_line(h.faces().cycles) << "\n";
  out << "euler characteristic: " << euler_characteristic(h) << "\n";
  out << "genus: " << genus(h) << "\n";
}

void print_code(const chain::QuotientCode &q, const css::CssCode &c, std::ostream &out) {
  out << "kind: " << chain::to_string(q.kind) << "\n";
  if (q.kind != chain::CodeKind::kFull) out << "special: " << labels_line(q.special.darts) << "\n";
  out << "qubits: " << labels_line(c.qubit_labels) << "\n";
  out << "n: " << c.n << "\n";
  out << "k: " << c.k << "\n";
  out << "H_X:\n" << c.hx.to_string();
  out << "H_Z:\n" << c.hz.to_string();
  out << "generators:\n";
  for (const auto &s : css::stabilizer_strings(c)) out << s << "\n";
}

std::string class_text(const css::ClassDistance &d, std::size_t budget) {
  if (d.exact) return std::to_string(d.weight);
  return ">= " + std::to_string(d.weight) + " (search budget " + std::to_string(budget) +
         " exhausted)";
}

void print_distance(const css::CssCode &c, const css::DistanceResult &d, std::ostream &out) {
  out << "n: " << c.n << "\n";
  out << "k: " << c.k << "\n";
  if (!d.has_logicals) {
    out << "distance: no logical operators\n";
    return;
  }
  out << "d_X: " << class_text(d.x, d.max_weight) << "\n";
  out << "d_Z: " << class_text(d.z, d.max_weight) << "\n";
  out << "d: " << class_text(d.d, d.max_weight) << "\n";
}

void print_complex(const reduce::CellComplex &c, std::ostream &out) {
  out << "0-cells: " << c.zero_cells.size() << " " << cycles_line(c.zero_cells) << "\n";
  out << "1-cells: " << c.one_cells.size() << " " << labels_line(c.one_cells) << "\n";
  out << "2-cells: " << c.two_cells.size() << " " << cycles_line(c.two_cells) << "\n";
  out << "incidence21:\n";
  for (const auto &row : c.incidence21) {
    for (auto v : row) out << v;
    out << "\n";
  }
  out << "incidence10:\n" << c.incidence10.to_string();
  out << "euler characteristic: " << reduce::euler_characteristic(c) << "\n";
  out << reduce::validate_surface(c).to_string();
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Quantum CSS codes from combinatorial hypermaps", "hypercode"};
  app.require_subcommand(1);

  InputOptions in;
  std::string format;
  std::string kind = "face";
  std::size_t budget = 6;
  bool allow_large = false;
  verify::VerifyOptions vopts;
  std::size_t random_darts = 8;
  std::uint64_t random_seed = 1;

  const std::vector<std::string> text_json = {"text", "json"};

  auto *info = app.add_subcommand("info", "Vertices, edges, faces and genus");
  add_input_options(info, in);
  info->add_option("--format", format)->check(CLI::IsMember(text_json));

  auto *dual_cmd = app.add_subcommand("dual", "Dual hypermap (alpha^-1, alpha^-1 sigma)");
  auto *tri_cmd = app.add_subcommand("tri-dual", "Triangle dual (sigma^-1 alpha, sigma^-1)");
  auto *contrary_cmd = app.add_subcommand("contrary", "Swap alpha and sigma");
  for (auto *cmd : {dual_cmd, tri_cmd, contrary_cmd}) {
    add_input_options(cmd, in);
    cmd->add_option("--format", format)->check(CLI::IsMember(text_json));
  }

  auto *code_cmd = app.add_subcommand("code", "Build a face, edge or full code");
  add_input_options(code_cmd, in);
  add_special_option(code_cmd, in);
  code_cmd->add_option("--kind", kind)->required()->check(CLI::IsMember({"face", "edge", "full"}));
  code_cmd->add_option("--format", format)->check(CLI::IsMember(text_json));

  auto *reduce_cmd = app.add_subcommand("reduce", "Surface cell complex of the face code");
  add_input_options(reduce_cmd, in);
  add_special_option(reduce_cmd, in);
  reduce_cmd->add_option("--format", format)->check(CLI::IsMember(text_json));

  auto *distance_cmd = app.add_subcommand("distance", "Minimum logical weight by search");
  add_input_options(distance_cmd, in);
  add_special_option(distance_cmd, in);
  distance_cmd->add_option("--kind", kind)->check(CLI::IsMember({"face", "edge", "full"}));
  distance_cmd->add_option("--budget", budget, "Largest weight searched (default 6)");
  distance_cmd->add_flag("--allow-large", allow_large, "Permit codes with more than 28 qubits");
  distance_cmd->add_option("--format", format)->check(CLI::IsMember(text_json));

  auto *verify_cmd = app.add_subcommand("verify", "Check duality identities on random hypermaps");
  verify_cmd->add_option("--trials", vopts.trials);
  verify_cmd->add_option("--max-darts", vopts.max_darts)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", vopts.seed);
  verify_cmd->add_option("--format", format)->check(CLI::IsMember(text_json));

  auto *random_cmd = app.add_subcommand("random", "Sample a random transitive hypermap");
  random_cmd->add_option("--darts", random_darts)->check(CLI::PositiveNumber);
  random_cmd->add_option("--seed", random_seed);
  random_cmd->add_option("--format", format)->check(CLI::IsMember(text_json));

  auto *export_cmd = app.add_subcommand("export", "Walsh graph as DOT, or hypermap JSON");
  add_input_options(export_cmd, in);
  export_cmd->add_option("--format", format)->required()->check(CLI::IsMember({"dot", "json"}));

  std::vector<std::string> argv_store = {"hypercode"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char *> argv;
  for (const auto &a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kParseError;
  }
  // Formats default to text everywhere except reduce.
  if (format.empty()) format = reduce_cmd->parsed() ? "json" : "text";
  const bool json = format == "json";

  try {
    if (info->parsed()) {
      const Loaded loaded = load(in);
      if (json) {
        out << io::export_json(loaded.hypermap);
      } else {
        print_info(loaded.hypermap, out);
      }
    } else if (dual_cmd->parsed() || tri_cmd->parsed() || contrary_cmd->parsed()) {
      const Loaded loaded = load(in);
      const Hypermap result = dual_cmd->parsed()  ? dual(loaded.hypermap)
                              : tri_cmd->parsed() ? triangle_dual(loaded.hypermap)
                                                  : contrary(loaded.hypermap);
      out << (json ? io::export_json(result) : io::format_hypermap_file(result));
    } else if (code_cmd->parsed()) {
      const Loaded loaded = load(in);
      const chain::QuotientCode q = build_code(loaded, parse_kind(kind));
      const css::CssCode c = css::assemble(q);
      if (json) {
        out << io::export_json(c, &q);
      } else {
        print_code(q, c, out);
      }
    } else if (reduce_cmd->parsed()) {
      const Loaded loaded = load(in);
      const reduce::CellComplex c = reduce::reduce_to_surface(
          loaded.hypermap, resolve_special(loaded, SpecialKind::kPerEdge));
      if (json) {
        out << io::export_json(c);
      } else {
        print_complex(c, out);
      }
    } else if (distance_cmd->parsed()) {
      const Loaded loaded = load(in);
      const chain::QuotientCode q = build_code(loaded, parse_kind(kind));
      css::CssCode c = css::assemble(q);
      css::DistanceOptions opts;
      opts.max_weight = budget;
      opts.allow_large = allow_large;
      c.distance = css::distance(c, opts);
      if (json) {
        out << io::export_json(c, &q);
      } else {
        print_distance(c, *c.distance, out);
      }
    } else if (verify_cmd->parsed()) {
      const verify::VerifyReport report = verify::run_verification(vopts);
      out << (json ? report.to_json() : report.to_text());
      if (!report.ok()) {
        err << "verify: one or more checks failed\n";
        return kInternalError;
      }
    } else if (random_cmd->parsed()) {
      const Hypermap h = random_hypermap(random_darts, random_seed);
      out << (json ? io::export_json(h) : io::format_hypermap_file(h));
    } else if (export_cmd->parsed()) {
      const Loaded loaded = load(in);
      out << (format == "dot" ? io::walsh_dot(loaded.hypermap) : io::export_json(loaded.hypermap));
    }
  } catch (const SourceError &e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const css::InvariantError &e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kSuccess;
}

}  // namespace hypercode::cli
