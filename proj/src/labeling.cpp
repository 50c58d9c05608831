#include "pstr/labeling.hpp"

#include <charconv>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pstr {

VertexSet VertexSet::of(int n, std::span<const Vertex> members) {
  VertexSet s(n);
  for (Vertex v : members) s.insert(v);
  return s;
}

int VertexSet::size() const {
  int count = 0;
  for (bool b : bits_) count += b ? 1 : 0;
  return count;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

LabelFunction::LabelFunction(std::vector<int> labels) : labels_(std::move(labels)) {
  for (int x : labels_) {
    if (x < 0) throw std::invalid_argument("labels must be nonnegative");
  }
}

LabelFunction LabelFunction::constant(int n, int value) {
  return LabelFunction(std::vector<int>(static_cast<std::size_t>(n), value));
}

std::int64_t LabelFunction::weight() const {
  return std::accumulate(labels_.begin(), labels_.end(), std::int64_t{0});
}

VertexSet LabelFunction::zero_set() const {
  VertexSet s(size());
  for (Vertex v = 0; v < size(); ++v) {
    if (labels_[v] == 0) s.insert(v);
  }
  return s;
}

std::vector<Vertex> LabelFunction::b0() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < size(); ++v) if (labels_[v] == 0) out.push_back(v);
  return out;
}

std::vector<Vertex> LabelFunction::b1() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < size(); ++v) if (labels_[v] == 1) out.push_back(v);
  return out;
}

std::vector<Vertex> LabelFunction::b2() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < size(); ++v) if (labels_[v] >= 2) out.push_back(v);
  return out;
}

LabelFunction parse_labels(std::string_view text) {
  std::vector<int> labels;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
    if (ec != std::errc{} || ptr != text.data() + j || value < 0) {
      throw std::invalid_argument("bad label '" + std::string(text.substr(i, j - i)) + "'");
    }
    labels.push_back(value);
    i = j;
  }
  return LabelFunction(std::move(labels));
}

std::string write_labels(const LabelFunction& f) {
  std::ostringstream out;
  for (Vertex v = 0; v < f.size(); ++v) out << (v ? " " : "") << f[v];
  out << '\n';
  return out.str();
}

int threshold(const Graph& g, const VertexSet& zero_set, Vertex v, int p) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  if (zero_set.contains(v)) throw std::invalid_argument("threshold of a zero-labelled vertex");
  int zeros = 0;
  for (Vertex w : g.neighbors(v)) zeros += zero_set.contains(w) ? 1 : 0;
  return 1 + ceil_div(zeros, p);
}

std::string_view reason_name(ViolationReason r) {
  return r == ViolationReason::undefended_zero ? "undefended_zero" : "label_exceeds_max";
}

ValidationReport validate(const Graph& g, int p, const LabelFunction& f) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  if (f.size() != g.order()) {
    throw std::invalid_argument("label count " + std::to_string(f.size()) +
                                " does not match n=" + std::to_string(g.order()));
  }
  ValidationReport report;
  report.weight = f.weight();
  report.max_label = max_label(g.max_degree(), p);
  const VertexSet zeros = f.zero_set();

  std::vector<bool> adequate(static_cast<std::size_t>(g.order()), false);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f[v] > 0) adequate[v] = f[v] >= threshold(g, zeros, v, p);
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f[v] > report.max_label) {
      report.violations.push_back({v, ViolationReason::label_exceeds_max});
    }
    if (f[v] == 0) {
      bool defended = false;
      for (Vertex w : g.neighbors(v)) defended = defended || adequate[w];
      if (!defended) report.violations.push_back({v, ViolationReason::undefended_zero});
    }
  }
  report.valid = report.violations.empty();
  return report;
}

std::string_view model_class_name(ModelClass c) {
  switch (c) {
    case ModelClass::trivial: return "trivial";
    case ModelClass::strong_roman: return "strong_roman";
    case ModelClass::p_strong: return "p_strong";
    case ModelClass::roman: return "roman";
  }
  return "unknown";
}

ModelClass classify_p(const Graph& g, int p) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  if (p == 1) return ModelClass::trivial;
  if (p == 2) return ModelClass::strong_roman;
  if (p >= g.max_degree()) return ModelClass::roman;
  return ModelClass::p_strong;
}

}  // namespace pstr
