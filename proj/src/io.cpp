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

#include "hypercode/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "json.hpp"

namespace hypercode::io {

using Json = nlohmann::ordered_json;

ParseError::ParseError(std::size_t line, std::size_t column, const std::string &message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

struct Field {
  std::string value;
  std::size_t line = 0;
  std::size_t value_column = 0;  // 1-based column of value[0]
};

bool is_blank(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::vector<Dart> parse_labels(std::string_view text, std::size_t darts, std::size_t line,
                               std::size_t column0) {
  std::vector<Dart> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_blank(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !is_blank(text[i])) ++i;
    const std::string_view token = text.substr(start, i - start);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(line, column0 + start, "expected a dart label, got '" +
                                                  std::string(token) + "'");
    }
    if (value == 0 || value > darts) {
      throw ParseError(line, column0 + start,
                       "dart label " + std::string(token) + " outside 1.." + std::to_string(darts));
    }
    out.push_back(static_cast<Dart>(value - 1));
  }
  return out;
}

Json cycles_json(const std::vector<Cycle> &cycles) {
  Json out = Json::array();
  for (const auto &cycle : cycles) {
    Json c = Json::array();
    for (Dart d : cycle) c.push_back(d + 1);
    out.push_back(std::move(c));
  }
  return out;
}

Json labels_json(const std::vector<Dart> &labels) {
  Json out = Json::array();
  for (Dart d : labels) out.push_back(d + 1);
  return out;
}

Json header(const char *type) {
  Json j;
  j["version"] = kFormatVersion;
  j["type"] = type;
  j["indexing"] = "1-based";
  return j;
}

std::pair<std::size_t, std::size_t> position_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Json parse_document(std::string_view text, const char *type) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error &e) {
    auto [line, column] = position_of(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(line, column, "invalid JSON");
  }
  if (!j.is_object() || !j.contains("type") || j["type"] != type) {
    throw ParseError(1, 1, std::string("expected a JSON object of type '") + type + "'");
  }
  if (!j.contains("version") || j["version"] != kFormatVersion) {
    throw ParseError(1, 1, "unsupported format version");
  }
  return j;
}

template <typename Fn>
auto with_json_errors(Fn &&fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception &e) {
    throw ParseError(1, 1, std::string("malformed document: ") + e.what());
  } catch (const std::invalid_argument &e) {
    // Raised by constructors of the parsed values.
    if (dynamic_cast<const NotTransitiveError *>(&e)) throw;
    throw ParseError(1, 1, std::string("malformed document: ") + e.what());
  }
}

std::vector<Dart> labels_from(const Json &j, std::size_t limit) {
  std::vector<Dart> out;
  for (const auto &v : j) {
    const auto label = v.get<std::uint64_t>();
    if (label == 0 || label > limit) throw ParseError(1, 1, "label out of range");
    out.push_back(static_cast<Dart>(label - 1));
  }
  return out;
}

std::vector<Cycle> cycles_from(const Json &j, std::size_t limit) {
  std::vector<Cycle> out;
  for (const auto &c : j) out.push_back(labels_from(c, limit));
  return out;
}

std::vector<std::string> strings_from(const Json &j) {
  return j.get<std::vector<std::string>>();
}

Json distance_json(const css::DistanceResult &d) {
  auto cls = [](const css::ClassDistance &c) {
    Json j;
    j["weight"] = c.weight;
    j["exact"] = c.exact;
    return j;
  };
  Json j;
  j["has_logicals"] = d.has_logicals;
  j["max_weight"] = d.max_weight;
  if (d.has_logicals) {
    j["d_x"] = cls(d.x);
    j["d_z"] = cls(d.z);
    j["d"] = cls(d.d);
  }
  return j;
}

css::DistanceResult distance_from(const Json &j) {
  auto cls = [](const Json &c) {
    return css::ClassDistance{c.at("weight").get<std::size_t>(), c.at("exact").get<bool>()};
  };
  css::DistanceResult d;
  d.has_logicals = j.at("has_logicals").get<bool>();
  d.max_weight = j.at("max_weight").get<std::size_t>();
  if (d.has_logicals) {
    d.x = cls(j.at("d_x"));
    d.z = cls(j.at("d_z"));
    d.d = cls(j.at("d"));
  }
  return d;
}

}  // namespace

std::vector<Dart> parse_label_list(std::string_view text, std::size_t darts) {
  return parse_labels(text, darts, 1, 1);
}

HypermapFile parse_hypermap_file(std::string_view text) {
  static constexpr std::array<std::string_view, 4> kKeys = {"darts", "alpha", "sigma",
                                                             "special"};
  std::map<std::string, Field, std::less<>> fields;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    pos = end + 1;

    std::size_t first = 0;
    while (first < line.size() && is_blank(line[first])) ++first;
    if (first == line.size() || line[first] == '#') continue;

    const std::size_t colon = line.find(':', first);
    if (colon == std::string_view::npos) {
      throw ParseError(line_no, first + 1, "expected 'key: value'");
    }
    std::string_view key = line.substr(first, colon - first);
    while (!key.empty() && is_blank(key.back())) key.remove_suffix(1);
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      throw ParseError(line_no, first + 1, "unknown key '" + std::string(key) + "'");
    }
    if (fields.count(key)) {
      throw ParseError(line_no, first + 1, "duplicate key '" + std::string(key) + "'");
    }
    fields[std::string(key)] =
        Field{std::string(line.substr(colon + 1)), line_no, colon + 2};
  }

  auto require = [&](const char *key) -> const Field & {
    auto it = fields.find(key);
    if (it == fields.end()) {
      throw ParseError(line_no, 1, std::string("missing '") + key + ":' line");
    }
    return it->second;
  };

  const Field &darts_field = require("darts");
  std::size_t darts = 0;
  {
    std::string_view v = darts_field.value;
    std::size_t lead = 0;
    while (lead < v.size() && is_blank(v[lead])) ++lead;
    std::size_t trail = v.size();
    while (trail > lead && is_blank(v[trail - 1])) --trail;
    const std::string_view digits = v.substr(lead, trail - lead);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), darts);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || darts == 0) {
      throw ParseError(darts_field.line, darts_field.value_column + lead,
                       "dart count must be a positive integer");
    }
  }

  auto permutation = [&](const char *key) {
    const Field &f = require(key);
    try {
      return parse_cycles(f.value, darts);
    } catch (const CycleParseError &e) {
      throw ParseError(f.line, f.value_column + e.column() - 1, e.what());
    }
  };
  Permutation alpha = permutation("alpha");
  Permutation sigma = permutation("sigma");

  HypermapFile out{Hypermap(std::move(alpha), std::move(sigma)), std::nullopt};
  if (auto it = fields.find("special"); it != fields.end()) {
    out.special = parse_labels(it->second.value, darts, it->second.line, it->second.value_column);
  }
  return out;
}

std::string format_hypermap_file(const Hypermap &h,
                                 const std::optional<std::vector<Dart>> &special) {
  std::string out = "darts: " + std::to_string(h.darts()) + "\n";
  out += "alpha: " + format_cycles(h.alpha()) + "\n";
  out += "sigma: " + format_cycles(h.sigma()) + "\n";
  if (special) {
    out += "special:";
    for (Dart d : *special) out += " " + std::to_string(d + 1);
    out += "\n";
  }
  return out;
}

std::string walsh_dot(const Hypermap &h) {
  std::ostringstream out;
  out << "graph walsh {\n";
  out << "  node [shape=circle];\n";
  for (std::size_t v = 0; v < h.vertices().size(); ++v) out << "  v" << v + 1 << ";\n";
  out << "  node [shape=box];\n";
  for (std::size_t e = 0; e < h.edges().size(); ++e) out << "  e" << e + 1 << ";\n";
  for (Dart d = 0; d < h.darts(); ++d) {
    out << "  v" << h.vertex_of(d) + 1 << " -- e" << h.edge_of(d) + 1 << " [label=\"" << d + 1
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_json(const Hypermap &h) {
  Json j = header("hypermap");
  j["darts"] = h.darts();
  j["alpha"] = cycles_json(cycle_decomposition(h.alpha()).cycles);
  j["sigma"] = cycles_json(cycle_decomposition(h.sigma()).cycles);
  j["vertices"] = cycles_json(h.vertices().cycles);
  j["edges"] = cycles_json(h.edges().cycles);
  j["faces"] = cycles_json(h.faces().cycles);
  j["euler_characteristic"] = euler_characteristic(h);
  j["genus"] = genus(h);
  return j.dump(2) + "\n";
}

std::string export_json(const css::CssCode &c, const chain::QuotientCode *source) {
  Json j = header("css_code");
  if (source) {
    j["kind"] = chain::to_string(source->kind);
    j["special"] = labels_json(source->special.darts);
  }
  j["n"] = c.n;
  j["k"] = c.k;
  j["qubits"] = labels_json(c.qubit_labels);
  j["x_checks"] = c.x_check_names;
  j["z_checks"] = c.z_check_names;
  j["hx"] = c.hx.row_strings();
  j["hz"] = c.hz.row_strings();
  j["stabilizers"] = css::stabilizer_strings(c);
  j["distance"] = c.distance ? distance_json(*c.distance) : Json(nullptr);
  return j.dump(2) + "\n";
}

std::string export_json(const reduce::CellComplex &c) {
  Json j = header("cell_complex");
  j["zero_cells"] = cycles_json(c.zero_cells);
  j["one_cells"] = labels_json(c.one_cells);
  j["two_cells"] = cycles_json(c.two_cells);
  j["incidence21"] = c.incidence21;
  j["incidence10"] = c.incidence10.row_strings();
  j["euler_characteristic"] = reduce::euler_characteristic(c);
  j["source_euler_characteristic"] = c.source_euler;
  return j.dump(2) + "\n";
}

Hypermap parse_hypermap_json(std::string_view text) {
  const Json j = parse_document(text, "hypermap");
  return with_json_errors([&] {
    const auto darts = j.at("darts").get<std::size_t>();
    auto alpha = Permutation::from_cycles(darts, cycles_from(j.at("alpha"), darts));
    auto sigma = Permutation::from_cycles(darts, cycles_from(j.at("sigma"), darts));
    return Hypermap(std::move(alpha), std::move(sigma));
  });
}

css::CssCode parse_code_json(std::string_view text) {
  const Json j = parse_document(text, "css_code");
  return with_json_errors([&] {
    const auto n = j.at("n").get<std::size_t>();
    auto qubits = labels_from(j.at("qubits"), std::numeric_limits<Dart>::max());
    auto hx = gf2::BitMatrix::from_rows(strings_from(j.at("hx")), n);
    auto hz = gf2::BitMatrix::from_rows(strings_from(j.at("hz")), n);
    css::CssCode c = css::make_code(std::move(hx), std::move(hz), std::move(qubits),
                                    strings_from(j.at("x_checks")),
                                    strings_from(j.at("z_checks")));
    if (c.k != j.at("k").get<std::size_t>()) throw ParseError(1, 1, "k disagrees with matrices");
    if (j.contains("distance") && !j["distance"].is_null()) c.distance = distance_from(j["distance"]);
    return c;
  });
}

reduce::CellComplex parse_complex_json(std::string_view text) {
  const Json j = parse_document(text, "cell_complex");
  return with_json_errors([&] {
    constexpr auto kAny = std::numeric_limits<Dart>::max();
    reduce::CellComplex c;
    c.zero_cells = cycles_from(j.at("zero_cells"), kAny);
    c.one_cells = labels_from(j.at("one_cells"), kAny);
    c.two_cells = cycles_from(j.at("two_cells"), kAny);
    c.incidence21 = j.at("incidence21").get<std::vector<std::vector<std::uint32_t>>>();
    c.incidence10 = gf2::BitMatrix::from_rows(strings_from(j.at("incidence10")), c.one_cells.size());
    c.source_euler = j.at("source_euler_characteristic").get<int>();
    return c;
  });
}

}  // namespace hypercode::io
