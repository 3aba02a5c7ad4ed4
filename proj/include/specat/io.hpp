#pragma once

// File formats: JSON lattice tables, L-relations, decompositions and reports;
// CSV scalar matrices; whitespace edge lists for graphs.

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include <json.hpp>

#include "specat/error.hpp"
#include "specat/functors.hpp"
#include "specat/heyting.hpp"
#include "specat/law_report.hpp"
#include "specat/matcat.hpp"
#include "specat/partition.hpp"
#include "specat/relcat.hpp"
#include "specat/spectral.hpp"

namespace specat::io {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path);
Json parse_json(std::string_view text, std::string_view what);

// "builtin:bool", "builtin:b4", "builtin:chain:k" (the "builtin:" prefix is
// optional) or a path to a JSON lattice table.
AlgebraPtr resolve_lattice(std::string_view spec);
// {"name": .., "elements": [..], "meet": [[label..]..], "join": [[label..]..]}
HeytingTable lattice_from_json(const Json& j);
Json lattice_to_json(const HeytingTable& t);

// {"source": [..], "target": [..], "values": [[label..]..]} with one row per
// target element; "carrier" may replace source/target for endo-relations and
// "pairs": [[target, source]..] may replace "values" for crisp relations.
LRelation relation_from_json(const Json& j, const AlgebraPtr& algebra);
Json relation_to_json(const LRelation& f);

// Hom file: {"target": <lattice spec or table>, "map": {"src label": "tgt label", ..}}.
// Also accepts "builtin:identity" and "builtin:threshold:<label>".
LatticeHom hom_from_spec(std::string_view spec, const AlgebraPtr& source);
LatticeHom hom_from_json(const Json& j, const AlgebraPtr& source, bool validate = true);

struct EdgeList {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};
// "u v" per line, 0-based; '#' starts a comment. Vertex count = max index + 1.
EdgeList edges_from_text(std::string_view text);

// [[0, 1], [2]]
Partition partition_from_json(const Json& j, std::size_t n);
Json partition_to_json(const Partition& p);

Json law_report_to_json(const LawReport& r);

// ---- scalar matrices ------------------------------------------------------

double parse_real(std::string_view token, std::string_view where);
std::complex<double> parse_complex(std::string_view token, std::string_view where);

template <ScalarDomain D>
typename D::Scalar parse_scalar(std::string_view token, std::string_view where) {
  if constexpr (std::is_same_v<typename D::Scalar, std::complex<double>>)
    return parse_complex(token, where);
  else
    return parse_real(token, where);
}

struct CsvRow {
  std::size_t line = 0;  // 1-based
  std::vector<std::string> fields;
};
std::vector<CsvRow> split_csv(std::string_view text);

// One matrix row per CSV line; blank lines and '#' comments are skipped.
// Complex entries use "a+bi" form.
template <ScalarDomain D>
ScalarMatrix<D> matrix_from_csv(std::string_view text) {
  const auto rows = split_csv(text);
  const std::size_t cols = rows.empty() ? 0 : rows.front().fields.size();
  std::vector<typename D::Scalar> data;
  for (const auto& row : rows) {
    const std::string at = "csv line " + std::to_string(row.line);
    if (row.fields.size() != cols)
      throw ParseError(at + ": " + std::to_string(row.fields.size()) + " fields, expected " + std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) {
      const std::string where = at + ", field " + std::to_string(j + 1);
      const auto v = parse_scalar<D>(row.fields[j], where);
      if (!D::admissible(v))
        throw DomainError(where + ": " + format_scalar(v) + " is not a valid " + std::string(D::name) + " scalar");
      data.push_back(v);
    }
  }
  return ScalarMatrix<D>(rows.size(), cols, std::move(data));
}

template <ScalarDomain D>
std::string matrix_to_csv(const ScalarMatrix<D>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      const auto v = m(i, j);
      if constexpr (std::is_same_v<typename D::Scalar, std::complex<double>>) {
        out += format_scalar(v.real());
        out += v.imag() < 0 ? "-" : "+";
        out += format_scalar(std::abs(v.imag())) + "i";
      } else {
        out += format_scalar(v);
      }
    }
    out += '\n';
  }
  return out;
}

Json scalar_to_json(double x);
Json scalar_to_json(std::complex<double> x);

template <ScalarDomain D>
typename D::Scalar scalar_from_json(const Json& j, const std::string& where) {
  if constexpr (std::is_same_v<typename D::Scalar, std::complex<double>>) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
      return {j[0].get<double>(), j[1].get<double>()};
    if (j.is_string()) return parse_complex(j.get<std::string>(), where);
    throw ParseError(where + ": expected a number, [re, im] or \"a+bi\"");
  } else {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return parse_real(j.get<std::string>(), where);
    throw ParseError(where + ": expected a number");
  }
}

// Rows x columns of a rectangular array of arrays; nullopt otherwise. An
// empty array counts as 0 x 0.
std::optional<std::pair<std::size_t, std::size_t>> grid_shape(const Json& j);

// ParseError for a malformed grid, TypeMismatch for a rectangular grid of the
// wrong shape.
void expect_grid(const Json& j, std::size_t rows, std::size_t cols, const std::string& where);

// Grid of expected shape rows x cols. A 0-row grid is [] and rows of a
// 0-column grid are [].
template <ScalarDomain D>
ScalarMatrix<D> matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  expect_grid(j, rows, cols, where);
  std::vector<typename D::Scalar> data;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < cols; ++k)
      data.push_back(scalar_from_json<D>(j[i][k], where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
  }
  try {
    return ScalarMatrix<D>(rows, cols, std::move(data));
  } catch (const DomainError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

// Shape read from the grid itself (rows x width of first row).
template <ScalarDomain D>
ScalarMatrix<D> matrix_from_json(const Json& j, const std::string& where) {
  const auto shape = grid_shape(j);
  if (!shape) throw ParseError(where + ": expected a rectangular grid");
  return matrix_from_json<D>(j, shape->first, shape->second, where);
}

template <ScalarDomain D>
Json matrix_to_json(const ScalarMatrix<D>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_to_json(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

// ---- instance-dispatched arrow/object codecs --------------------------------

template <ScalarDomain D>
std::size_t object_from_json(const MatCategory<D>&, const Json& j, const std::string& where) {
  if (!j.is_number_unsigned()) throw ParseError(where + ": expected a non-negative dimension");
  return j.get<std::size_t>();
}
template <ScalarDomain D>
Json object_to_json(const MatCategory<D>&, std::size_t n) {
  return n;
}
template <ScalarDomain D>
ScalarMatrix<D> arrow_from_json(const MatCategory<D>&, const Json& j, const std::size_t& src, const std::size_t& tgt,
                                const std::string& where) {
  return matrix_from_json<D>(j, tgt, src, where);
}
template <ScalarDomain D>
Json arrow_to_json(const MatCategory<D>&, const ScalarMatrix<D>& f) {
  return matrix_to_json(f);
}

Carrier object_from_json(const RelCategory&, const Json& j, const std::string& where);
Json object_to_json(const RelCategory&, const Carrier& c);
LRelation arrow_from_json(const RelCategory& cat, const Json& j, const Carrier& src, const Carrier& tgt,
                          const std::string& where);
Json arrow_to_json(const RelCategory&, const LRelation& f);

// {"carrier": obj, "f": grid?, "blocks": [{"object", "rho", "kappa", "lambda"}..]}
template <CMonCategory C>
SpectralDecomposition<C> decomposition_from_json(const C& cat, const Json& j) {
  if (!j.is_object() || !j.contains("carrier") || !j.contains("blocks") || !j["blocks"].is_array())
    throw ParseError("decomposition: expected an object with 'carrier' and 'blocks'");
  SpectralDecomposition<C> dec;
  dec.carrier = object_from_json(cat, j["carrier"], "carrier");
  for (std::size_t i = 0; i < j["blocks"].size(); ++i) {
    const auto& b = j["blocks"][i];
    const std::string at = "blocks[" + std::to_string(i) + "]";
    for (const char* key : {"object", "rho", "kappa", "lambda"})
      if (!b.contains(key)) throw ParseError(at + ": missing '" + key + "'");
    auto x = object_from_json(cat, b["object"], at + ".object");
    auto rho = arrow_from_json(cat, b["rho"], dec.carrier, x, at + ".rho");
    auto kappa = arrow_from_json(cat, b["kappa"], x, dec.carrier, at + ".kappa");
    auto lambda = arrow_from_json(cat, b["lambda"], x, x, at + ".lambda");
    dec.blocks.push_back({std::move(x), std::move(rho), std::move(kappa), std::move(lambda)});
  }
  return dec;
}

template <CMonCategory C>
Json decomposition_to_json(const C& cat, const SpectralDecomposition<C>& dec) {
  Json out;
  out["carrier"] = object_to_json(cat, dec.carrier);
  out["blocks"] = Json::array();
  for (const auto& b : dec.blocks) {
    Json block;
    block["object"] = object_to_json(cat, b.object);
    block["rho"] = arrow_to_json(cat, b.rho);
    block["kappa"] = arrow_to_json(cat, b.kappa);
    block["lambda"] = arrow_to_json(cat, b.lambda);
    out["blocks"].push_back(std::move(block));
  }
  return out;
}

}  // namespace specat::io
