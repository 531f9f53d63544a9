#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ldal/graph.hpp"

namespace ldal {

/// Bijection from vertices 0..n-1 onto {1..n}.
class Labeling {
 public:
  Labeling() = default;
  /// Throws LabelingError unless `labels` is a permutation of 1..labels.size().
  explicit Labeling(std::vector<Label> labels);

  /// f(v) = v + 1.
  static Labeling identity(int order);

  std::size_t size() const noexcept { return labels_.size(); }
  Label operator[](Vertex v) const { return labels_.at(v); }
  std::span<const Label> labels() const noexcept { return labels_; }

  bool operator==(const Labeling&) const = default;

 private:
  std::vector<Label> labels_;
};

/// True iff `labels` is a permutation of 1..labels.size().
bool is_bijective(std::span<const Label> labels);

/// Vertex weights w(v) = sum of labels over the open neighbourhood, with the
/// induced colour count and every monochromatic edge.
struct WeightProfile {
  std::vector<Weight> weights;
  std::size_t distinct_count = 0;
  std::vector<Edge> conflicts;

  bool valid() const noexcept { return conflicts.empty(); }
};

/// Always computes the full profile, even when conflicts exist.
/// Throws LabelingError if the labeling size differs from the graph order.
WeightProfile weigh(const Graph& g, const Labeling& f);

struct Verdict {
  bool valid = false;
  std::size_t colors = 0;
};

/// Local distance antimagic check. `colors` is reported whether or not the
/// labeling is valid.
Verdict is_ldal(const Graph& g, const Labeling& f);

/// Number of distinct values in a weight vector.
std::size_t count_distinct(std::span<const Weight> weights);

/// Labeling file: one "vertex label" pair per line (0-based vertex, 1-based
/// label); '#' comment and blank lines are skipped. Every vertex must appear
/// exactly once. Throws ParseError for malformed/duplicate/out-of-range lines
/// and LabelingError when the labels are not a bijection onto 1..order.
Labeling parse_labeling(std::string_view text, int order);
std::string serialize_labeling(const Labeling& f);

}  // namespace ldal
