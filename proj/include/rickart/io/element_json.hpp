#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "rickart/lattice/riemann.hpp"
#include "rickart/lattice/spectral_family.hpp"
#include "rickart/lattice/sup_increasing.hpp"
#include "rickart/core/series.hpp"
#include "rickart/io/to_json.hpp"
#include "rickart/matrix/model.hpp"
#include "rickart/stepfn/model.hpp"

namespace rickart::io {

using nlohmann::json;

/// Malformed input document. what() is "<field>: <problem>".
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string field, const std::string& problem)
      : std::runtime_error(field + ": " + problem), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

using Element = std::variant<matrix::MatrixElement, stepfn::StepFunction>;

namespace detail {

inline std::string join_path(const std::string& prefix, const std::string& field) {
  return prefix.empty() ? field : prefix + "." + field;
}

inline const json& require(const json& doc, const std::string& key, const std::string& prefix) {
  if (!doc.is_object()) throw SchemaError(prefix.empty() ? "document" : prefix, "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) throw SchemaError(join_path(prefix, key), "missing");
  return *it;
}

inline double number(const json& v, const std::string& field) {
  if (!v.is_number()) throw SchemaError(field, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw SchemaError(field, "expected a finite number");
  return d;
}

inline std::vector<double> number_list(const json& v, const std::string& field) {
  if (!v.is_array()) throw SchemaError(field, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(number(v[k], field + "[" + std::to_string(k) + "]"));
  return out;
}

inline matrix::Complex complex(const json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 2) throw SchemaError(field, "expected [re, im]");
  return {number(v[0], field + "[0]"), number(v[1], field + "[1]")};
}

}  // namespace detail

inline matrix::MatrixElement parse_matrix(const json& doc, const std::string& prefix = {}) {
  using detail::join_path;
  const json& n_field = detail::require(doc, "n", prefix);
  if (!n_field.is_number_integer()) throw SchemaError(join_path(prefix, "n"), "expected an integer");
  const auto n = n_field.get<long long>();
  if (n < 1 || n > static_cast<long long>(matrix::kMaxDim))
    throw SchemaError(join_path(prefix, "n"), "expected 1 <= n <= " + std::to_string(matrix::kMaxDim));
  const json& entries = detail::require(doc, "entries", prefix);
  const std::string ef = join_path(prefix, "entries");
  if (!entries.is_array()) throw SchemaError(ef, "expected an array");
  if (entries.size() != static_cast<std::size_t>(n * n)) throw SchemaError(ef, "expected " + std::to_string(n * n));
  const auto k = static_cast<Eigen::Index>(n);
  matrix::Dense m(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) {
      const auto idx = static_cast<std::size_t>(i * k + j);
      m(i, j) = detail::complex(entries[idx], ef + "[" + std::to_string(idx) + "]");
    }
  return matrix::MatrixElement(std::move(m));
}

inline stepfn::StepFunction parse_stepfn(const json& doc, const std::string& prefix = {}) {
  using detail::join_path;
  const matrix::Complex def = detail::complex(detail::require(doc, "default", prefix), join_path(prefix, "default"));
  std::map<stepfn::Point, matrix::Complex> exc;
  if (auto it = doc.find("exceptions"); it != doc.end() && !it->is_null()) {
    const std::string xf = join_path(prefix, "exceptions");
    if (!it->is_object()) throw SchemaError(xf, "expected an object of label: [re, im]");
    for (const auto& [label, v] : it->items()) {
      const std::string field = xf + "." + label;
      const auto point = stepfn::Point::parse(label);
      if (!point) throw SchemaError(field, "label is not an exact decimal or fraction in [0, 1]");
      if (!exc.emplace(*point, detail::complex(v, field)).second)
        throw SchemaError(field, "duplicate point (same rational as another label)");
    }
  }
  std::optional<stepfn::TailExpr> tail;
  if (auto it = doc.find("tail"); it != doc.end() && !it->is_null()) {
    const std::string tf = join_path(prefix, "tail");
    if (!it->is_string()) throw SchemaError(tf, "expected an expression string or null");
    try {
      tail = stepfn::TailExpr::parse(it->get<std::string>());
    } catch (const Error& e) {
      throw SchemaError(tf, e.what());
    }
  }
  return stepfn::StepFunction(def, std::move(exc), std::move(tail));
}

inline Element parse_element(const json& doc, const std::string& prefix = {}) {
  const json& kind = detail::require(doc, "kind", prefix);
  const std::string kf = detail::join_path(prefix, "kind");
  if (!kind.is_string()) throw SchemaError(kf, "expected \"matrix\" or \"stepfn\"");
  const auto k = kind.get<std::string>();
  if (k == "matrix") return parse_matrix(doc, prefix);
  if (k == "stepfn") return parse_stepfn(doc, prefix);
  throw SchemaError(kf, "expected \"matrix\" or \"stepfn\", got \"" + k + "\"");
}

inline json to_json(const Element& e) {
  return std::visit([](const auto& x) { return element_json(x); }, e);
}

/// Extracts the alternative E or reports a kind mismatch at `field`.
template <class E>
E expect(const Element& e, const std::string& field) {
  if (const auto* p = std::get_if<E>(&e)) return *p;
  throw SchemaError(field, "element kind differs from the other operands");
}

/// {"grid": [...], "samples": [...]}
inline Partition parse_partition(const json& doc) {
  auto grid = detail::number_list(detail::require(doc, "grid", {}), "grid");
  auto samples = detail::number_list(detail::require(doc, "samples", {}), "samples");
  if (grid.size() < 2) throw SchemaError("grid", "expected at least 2 points");
  if (samples.size() + 1 != grid.size()) throw SchemaError("samples", "expected " + std::to_string(grid.size() - 1));
  return {std::move(grid), std::move(samples)};
}

inline json to_json(const Partition& p) { return {{"grid", p.grid()}, {"samples", p.samples()}}; }

/// Sequence document:
///   {"kind": "sequence", "terms": [element, ...],
///    "eps": [...],                                   (dominated series)
///    "geometric_tail": {"ratio", "term", "eps"},     (dominated series, optional)
///    "limit": {"element", "schedule": "harmonic" | "geometric", "ratio"}}
///                                                   (increasing sequence, optional)
struct SequenceDocument {
  std::vector<Element> terms;
  std::optional<std::vector<double>> eps;
  std::optional<double> tail_ratio;
  std::optional<Element> tail_term;
  std::optional<double> tail_eps;
  std::optional<Element> limit;
  Schedule schedule = Schedule::Harmonic;
  double limit_ratio = 0.5;
};

inline SequenceDocument parse_sequence(const json& doc) {
  SequenceDocument out;
  const json& kind = detail::require(doc, "kind", {});
  if (kind != "sequence") throw SchemaError("kind", "expected \"sequence\"");
  const json& terms = detail::require(doc, "terms", {});
  if (!terms.is_array() || terms.empty()) throw SchemaError("terms", "expected a nonempty array of elements");
  for (std::size_t k = 0; k < terms.size(); ++k) {
    out.terms.push_back(parse_element(terms[k], "terms[" + std::to_string(k) + "]"));
    if (out.terms.back().index() != out.terms.front().index())
      throw SchemaError("terms[" + std::to_string(k) + "]", "element kind differs from terms[0]");
  }
  if (auto it = doc.find("eps"); it != doc.end() && !it->is_null()) {
    out.eps = detail::number_list(*it, "eps");
    if (out.eps->size() != out.terms.size()) throw SchemaError("eps", "expected " + std::to_string(out.terms.size()));
  }
  if (auto it = doc.find("geometric_tail"); it != doc.end() && !it->is_null()) {
    out.tail_ratio = detail::number(detail::require(*it, "ratio", "geometric_tail"), "geometric_tail.ratio");
    out.tail_term = parse_element(detail::require(*it, "term", "geometric_tail"), "geometric_tail.term");
    out.tail_eps = detail::number(detail::require(*it, "eps", "geometric_tail"), "geometric_tail.eps");
    if (out.tail_term->index() != out.terms.front().index())
      throw SchemaError("geometric_tail.term", "element kind differs from terms[0]");
  }
  if (auto it = doc.find("limit"); it != doc.end() && !it->is_null()) {
    out.limit = parse_element(detail::require(*it, "element", "limit"), "limit.element");
    if (out.limit->index() != out.terms.front().index())
      throw SchemaError("limit.element", "element kind differs from terms[0]");
    if (auto s = it->find("schedule"); s != it->end()) {
      if (*s == "harmonic") out.schedule = Schedule::Harmonic;
      else if (*s == "geometric") out.schedule = Schedule::Geometric;
      else throw SchemaError("limit.schedule", "expected \"harmonic\" or \"geometric\"");
    }
    if (auto r = it->find("ratio"); r != it->end()) {
      out.limit_ratio = detail::number(*r, "limit.ratio");
      if (!(out.limit_ratio > 0 && out.limit_ratio < 1)) throw SchemaError("limit.ratio", "expected 0 < ratio < 1");
    }
  }
  return out;
}

template <class E>
DominatedSeries<E> to_series(const SequenceDocument& doc) {
  if (!doc.eps) throw SchemaError("eps", "missing (required for a dominated series)");
  DominatedSeries<E> s;
  for (const auto& t : doc.terms) s.terms.push_back(std::get<E>(t));
  s.eps = *doc.eps;
  if (doc.tail_term) s.tail = GeometricTail<E>{*doc.tail_ratio, std::get<E>(*doc.tail_term), *doc.tail_eps};
  return s;
}

template <class E>
IncreasingSequence<E> to_increasing(const SequenceDocument& doc) {
  IncreasingSequence<E> s;
  for (const auto& t : doc.terms) s.prefix.push_back(std::get<E>(t));
  if (doc.limit) s.limit = LimitDescriptor<E>{std::get<E>(*doc.limit), doc.schedule, doc.limit_ratio};
  return s;
}

template <class E>
json to_json(const SpectralFamily<E>& fam) {
  json steps = json::array();
  const auto& bps = fam.breakpoints();
  for (std::size_t k = 0; k < fam.steps().size(); ++k) {
    json lo = k == 0 ? json(nullptr) : json(bps[k - 1]);
    json hi = k < bps.size() ? json(bps[k]) : json(nullptr);
    steps.push_back({{"above", lo}, {"up_to", hi}, {"projection", element_json(fam.steps()[k])}});
  }
  return {{"breakpoints", bps}, {"steps", std::move(steps)}};
}

/// Parses JSON text, mapping syntax errors to a SchemaError on `document`.
inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("document", "invalid JSON at byte " + std::to_string(e.byte));
  }
}

}  // namespace rickart::io
