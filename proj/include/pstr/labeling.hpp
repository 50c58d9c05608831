#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pstr/graph.hpp"

namespace pstr {

/// ceil(a / b) for a >= 0, b > 0.
constexpr int ceil_div(int a, int b) { return (a + b - 1) / b; }

/// Largest label a p-strong Roman dominating function may use: ceil(D/p) + 1.
constexpr int max_label(int max_degree, int p) { return ceil_div(max_degree, p) + 1; }

/// Membership bitmap over the vertices of one graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : bits_(static_cast<std::size_t>(n), false) {}
  static VertexSet of(int n, std::span<const Vertex> members);

  int universe() const { return static_cast<int>(bits_.size()); }
  bool contains(Vertex v) const { return bits_.at(static_cast<std::size_t>(v)); }
  void insert(Vertex v) { bits_.at(static_cast<std::size_t>(v)) = true; }
  void erase(Vertex v) { bits_.at(static_cast<std::size_t>(v)) = false; }
  int size() const;
  std::vector<Vertex> members() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<bool> bits_;
};

/**
 * Vertex labelling f: V -> {0, 1, 2, ...}. Induces B0 = {f = 0},
 * B1 = {f = 1}, B2 = {f >= 2} and the weight w(f) = sum of labels.
 */
class LabelFunction {
 public:
  LabelFunction() = default;
  /// Throws std::invalid_argument on a negative label.
  explicit LabelFunction(std::vector<int> labels);
  static LabelFunction constant(int n, int value);

  int size() const { return static_cast<int>(labels_.size()); }
  int operator[](Vertex v) const { return labels_.at(static_cast<std::size_t>(v)); }
  std::span<const int> labels() const { return labels_; }
  std::int64_t weight() const;

  VertexSet zero_set() const;
  /// Members of B0, B1, B2 in ascending order.
  std::vector<Vertex> b0() const;
  std::vector<Vertex> b1() const;
  std::vector<Vertex> b2() const;

  friend bool operator==(const LabelFunction&, const LabelFunction&) = default;

 private:
  std::vector<int> labels_;
};

/// Whitespace-separated labels, vertex i taking the i-th value.
LabelFunction parse_labels(std::string_view text);
std::string write_labels(const LabelFunction& f);

/// 1 + ceil(|N(v) n zero_set| / p): the least label that lets v defend every
/// zero neighbour at once. Throws std::invalid_argument if v is in zero_set
/// or p < 1.
int threshold(const Graph& g, const VertexSet& zero_set, Vertex v, int p);

enum class ViolationReason { undefended_zero, label_exceeds_max };

struct Violation {
  Vertex vertex;
  ViolationReason reason;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  bool valid = false;
  std::int64_t weight = 0;
  std::vector<Violation> violations;
  int max_label = 0;
};

std::string_view reason_name(ViolationReason r);

/**
 * Checks the p-strong Roman condition: each zero vertex needs a neighbour v
 * with f(v) >= threshold(v), and every label is at most ceil(D/p) + 1. A
 * zero on an isolated vertex is undefended. Throws std::invalid_argument on
 * a length mismatch or p < 1.
 */
ValidationReport validate(const Graph& g, int p, const LabelFunction& f);

enum class ModelClass { trivial, strong_roman, p_strong, roman };

std::string_view model_class_name(ModelClass c);

/// p = 1 is trivial (value n), p = 2 is strong Roman domination, p >= D is
/// classical Roman domination; everything else is the genuinely new regime.
ModelClass classify_p(const Graph& g, int p);

}  // namespace pstr
