#include "specat/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace specat::io {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::string cell_label(const Json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError(where + ": expected an element label");
}

std::vector<std::string> label_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(cell_label(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<HeytingTable::Element> lattice_table(const Json& j, const std::vector<std::string>& labels,
                                                 const std::string& where) {
  const std::size_t n = labels.size();
  if (!j.is_array() || j.size() != n)
    throw ParseError(where + ": expected a " + std::to_string(n) + "x" + std::to_string(n) + " table");
  std::vector<HeytingTable::Element> out;
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n)
      throw ParseError(where + ": row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) {
      const auto at = where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]";
      const auto label = cell_label(j[r][c], at);
      std::size_t k = 0;
      while (k < n && labels[k] != label) ++k;
      if (k == n) throw UnknownElement(at + ": unknown element '" + label + "'");
      out.push_back(static_cast<HeytingTable::Element>(k));
    }
  }
  return out;
}

Carrier carrier_from(const Json& j, const std::string& where) {
  try {
    return Carrier(label_list(j, where));
  } catch (const PreconditionError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

AlgebraPtr resolve_lattice(std::string_view spec) {
  std::string_view name = spec;
  if (name.starts_with("builtin:")) name.remove_prefix(8);
  if (name == "bool") return share(HeytingTable::boolean());
  if (name == "b4") return share(HeytingTable::b4());
  if (name.starts_with("chain:")) {
    const auto digits = name.substr(6);
    std::size_t k = 0;
    const auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc() || p != digits.data() + digits.size() || k < 2)
      throw ParseError("lattice '" + std::string(spec) + "': chain size must be an integer >= 2");
    return share(HeytingTable::chain(k));
  }
  if (spec.starts_with("builtin:")) throw ParseError("unknown builtin lattice '" + std::string(spec) + "'");
  const std::string path(spec);
  return share(lattice_from_json(parse_json(read_file(path), path)));
}

HeytingTable lattice_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("lattice: expected an object");
  for (const char* key : {"elements", "meet", "join"})
    if (!j.contains(key)) throw ParseError(std::string("lattice: missing '") + key + "'");
  const auto labels = label_list(j["elements"], "lattice.elements");
  auto meet = lattice_table(j["meet"], labels, "lattice.meet");
  auto join = lattice_table(j["join"], labels, "lattice.join");
  const std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "custom";
  return HeytingTable::create(name, labels, std::move(meet), std::move(join));
}

Json lattice_to_json(const HeytingTable& t) {
  Json out;
  out["name"] = t.name();
  out["elements"] = t.labels();
  auto table = [&](auto op) {
    Json rows = Json::array();
    for (HeytingTable::Element x = 0; x < t.size(); ++x) {
      Json row = Json::array();
      for (HeytingTable::Element y = 0; y < t.size(); ++y) row.push_back(t.label(op(x, y)));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  out["meet"] = table([&](auto x, auto y) { return t.meet(x, y); });
  out["join"] = table([&](auto x, auto y) { return t.join(x, y); });
  return out;
}

Carrier object_from_json(const RelCategory&, const Json& j, const std::string& where) { return carrier_from(j, where); }

Json object_to_json(const RelCategory&, const Carrier& c) { return c.labels(); }

LRelation arrow_from_json(const RelCategory& cat, const Json& j, const Carrier& src, const Carrier& tgt,
                          const std::string& where) {
  const auto& alg = *cat.algebra();
  expect_grid(j, tgt.size(), src.size(), where);
  std::vector<LRelation::Element> values;
  for (std::size_t t = 0; t < tgt.size(); ++t) {
    for (std::size_t s = 0; s < src.size(); ++s) {
      const auto at = where + "[" + std::to_string(t) + "][" + std::to_string(s) + "]";
      const auto label = cell_label(j[t][s], at);
      if (!alg.contains(label))
        throw UnknownElement(at + ": '" + label + "' is not an element of lattice '" + alg.name() + "'");
      values.push_back(alg.index_of(label));
    }
  }
  return LRelation(cat.algebra(), src, tgt, std::move(values));
}

Json arrow_to_json(const RelCategory&, const LRelation& f) {
  Json rows = Json::array();
  for (std::size_t t = 0; t < f.target().size(); ++t) {
    Json row = Json::array();
    for (std::size_t s = 0; s < f.source().size(); ++s) row.push_back(f.algebra()->label(f.at(t, s)));
    rows.push_back(std::move(row));
  }
  return rows;
}

LRelation relation_from_json(const Json& j, const AlgebraPtr& algebra) {
  if (!j.is_object()) throw ParseError("relation: expected an object");
  Carrier src, tgt;
  if (j.contains("carrier")) {
    src = tgt = carrier_from(j["carrier"], "relation.carrier");
  } else {
    if (!j.contains("source") || !j.contains("target"))
      throw ParseError("relation: needs 'carrier' or both 'source' and 'target'");
    src = carrier_from(j["source"], "relation.source");
    tgt = carrier_from(j["target"], "relation.target");
  }
  const RelCategory cat(algebra);
  if (j.contains("values")) return arrow_from_json(cat, j["values"], src, tgt, "relation.values");
  if (j.contains("pairs")) {
    const auto& pairs = j["pairs"];
    if (!pairs.is_array()) throw ParseError("relation.pairs: expected an array of [target, source] pairs");
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto at = "relation.pairs[" + std::to_string(i) + "]";
      if (!pairs[i].is_array() || pairs[i].size() != 2) throw ParseError(at + ": expected [target, source]");
      out.emplace_back(cell_label(pairs[i][0], at), cell_label(pairs[i][1], at));
    }
    return LRelation::from_pairs(algebra, src, tgt, out);
  }
  throw ParseError("relation: needs 'values' or 'pairs'");
}

Json relation_to_json(const LRelation& f) {
  Json out;
  out["source"] = f.source().labels();
  out["target"] = f.target().labels();
  out["values"] = arrow_to_json(RelCategory(f.algebra()), f);
  return out;
}

LatticeHom hom_from_spec(std::string_view spec, const AlgebraPtr& source) {
  std::string_view name = spec;
  if (name.starts_with("builtin:")) {
    name.remove_prefix(8);
    if (name == "identity") return LatticeHom::identity(source);
    if (name.starts_with("threshold:")) return LatticeHom::threshold(source, source->index_of(name.substr(10)));
    throw ParseError("unknown builtin hom '" + std::string(spec) + "'");
  }
  const std::string path(spec);
  return hom_from_json(parse_json(read_file(path), path), source);
}

LatticeHom hom_from_json(const Json& j, const AlgebraPtr& source, bool validate) {
  if (!j.is_object() || !j.contains("target") || !j.contains("map") || !j["map"].is_object())
    throw ParseError("hom: expected {\"target\": .., \"map\": {..}}");
  AlgebraPtr target;
  if (j["target"].is_string())
    target = resolve_lattice(j["target"].get<std::string>());
  else
    target = share(lattice_from_json(j["target"]));
  std::vector<LatticeHom::Element> map(source->size());
  std::vector<bool> seen(source->size(), false);
  for (const auto& [key, value] : j["map"].items()) {
    const auto x = source->index_of(key);
    map[x] = target->index_of(cell_label(value, "hom.map." + key));
    seen[x] = true;
  }
  for (std::size_t x = 0; x < seen.size(); ++x)
    if (!seen[x]) throw ParseError("hom.map: no image for '" + source->label(static_cast<LatticeHom::Element>(x)) + "'");
  return validate ? LatticeHom::create(source, target, std::move(map))
                  : LatticeHom::unchecked(source, target, std::move(map));
}

EdgeList edges_from_text(std::string_view text) {
  EdgeList out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool any = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw ParseError("edge list line " + std::to_string(lineno) + ": expected \"u v\", got " +
                       std::to_string(tokens.size()) + " fields");
    std::size_t uv[2];
    for (int k = 0; k < 2; ++k) {
      const auto& t = tokens[k];
      const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), uv[k]);
      if (ec != std::errc() || p != t.data() + t.size())
        throw ParseError("edge list line " + std::to_string(lineno) + ", field " + std::to_string(k + 1) +
                         ": '" + t + "' is not a vertex index");
    }
    out.edges.emplace_back(uv[0], uv[1]);
    out.vertices = std::max({out.vertices, uv[0] + 1, uv[1] + 1});
    any = true;
  }
  if (!any) throw ParseError("edge list: no edges");
  return out;
}

Partition partition_from_json(const Json& j, std::size_t n) {
  if (!j.is_array()) throw ParseError("partition: expected an array of cells");
  std::vector<std::vector<std::size_t>> cells;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array()) throw ParseError("partition[" + std::to_string(i) + "]: expected an array of vertices");
    std::vector<std::size_t> cell;
    for (const auto& v : j[i]) {
      if (!v.is_number_unsigned()) throw ParseError("partition[" + std::to_string(i) + "]: vertices are 0-based integers");
      cell.push_back(v.get<std::size_t>());
    }
    cells.push_back(std::move(cell));
  }
  return Partition(n, std::move(cells));
}

Json partition_to_json(const Partition& p) { return p.cells(); }

std::optional<std::pair<std::size_t, std::size_t>> grid_shape(const Json& j) {
  if (!j.is_array()) return std::nullopt;
  if (j.empty()) return std::pair<std::size_t, std::size_t>{0, 0};
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  for (const auto& row : j)
    if (!row.is_array() || row.size() != cols) return std::nullopt;
  return std::pair{j.size(), cols};
}

void expect_grid(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  const auto shape = grid_shape(j);
  if (!shape) throw ParseError(where + ": expected a rectangular grid of rows");
  // [] stands for any grid with no cells when rows == 0.
  if (shape->first == rows && (shape->second == cols || rows == 0)) return;
  throw TypeMismatch(where + ": expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " arrow, got " +
                     std::to_string(shape->first) + "x" + std::to_string(shape->second));
}

Json scalar_to_json(double x) {
  if (x == 0.0) return 0.0;  // drops the sign of -0
  return x;
}

Json scalar_to_json(std::complex<double> x) { return Json::array({scalar_to_json(x.real()), scalar_to_json(x.imag())}); }

Json law_report_to_json(const LawReport& r) {
  Json out = Json::array();
  for (const auto& v : r.verdicts()) {
    Json e;
    e["law"] = v.name;
    e["passed"] = v.passed;
    e["checks"] = v.checks;
    e["failures"] = v.failures;
    if (std::isfinite(v.max_residual))
      e["max_residual"] = v.max_residual;
    else
      e["max_residual"] = "inf";
    if (!v.counterexample.empty()) e["counterexample"] = v.counterexample;
    out.push_back(std::move(e));
  }
  return out;
}

double parse_real(std::string_view token, std::string_view where) {
  const std::string t = trim(token);
  double x = 0.0;
  const char* begin = t.data();
  if (!t.empty() && t.front() == '+') ++begin;
  const auto [p, ec] = std::from_chars(begin, t.data() + t.size(), x);
  if (t.empty() || ec != std::errc() || p != t.data() + t.size())
    throw ParseError(std::string(where) + ": '" + t + "' is not a number");
  if (!std::isfinite(x)) throw ParseError(std::string(where) + ": '" + t + "' is not finite");
  return x;
}

std::complex<double> parse_complex(std::string_view token, std::string_view where) {
  std::string t = trim(token);
  if (t.empty() || (t.back() != 'i' && t.back() != 'j')) return {parse_real(t, where), 0.0};
  t.pop_back();
  // Split at the last sign that is not part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;)
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split = k;
      break;
    }
  auto imag_part = [&](std::string s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s, where);
  };
  if (split == std::string::npos) return {0.0, imag_part(t)};
  return {parse_real(t.substr(0, split), where), imag_part(t.substr(split))};
}

std::vector<CsvRow> split_csv(std::string_view text) {
  std::vector<CsvRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      const auto comma = line.find(',', start);
      fields.push_back(trim(std::string_view(line).substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back({lineno, std::move(fields)});
  }
  return rows;
}

}  // namespace specat::io
