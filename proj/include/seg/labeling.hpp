// Edge labelings of RT trees, induced vertex sums, and the super
// edge-graceful check.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "seg/tree_model.hpp"

namespace seg {

using Label = std::int64_t;

class LabelingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Edge index -> label. Edges are indexed by child vertex id - 1, so a
/// labeling for a tree with q edges has q slots; unset slots are allowed
/// while building and are reported as a domain mismatch by verify.
class EdgeLabeling {
 public:
  EdgeLabeling() = default;
  explicit EdgeLabeling(int edge_count) : labels_(static_cast<std::size_t>(edge_count)) {}
  explicit EdgeLabeling(const std::vector<Label>& labels);

  int edge_count() const noexcept { return static_cast<int>(labels_.size()); }
  bool is_total() const noexcept;
  bool has(int edge) const { return labels_.at(static_cast<std::size_t>(edge)).has_value(); }
  Label at(int edge) const;
  void set(int edge, Label value) { labels_.at(static_cast<std::size_t>(edge)) = value; }
  /// Labels in edge order; throws LabelingError when not total.
  std::vector<Label> values() const;

  bool operator==(const EdgeLabeling&) const = default;

 private:
  std::vector<std::optional<Label>> labels_;
};

/// Vertex id -> induced label.
using VertexLabeling = std::vector<Label>;

/// {0, +-1, ..., +-(q-1)/2} for odd q, {+-1, ..., +-q/2} for even q; ascending.
std::vector<Label> edge_label_target(int q);
/// Same shape as edge_label_target, for p vertices.
std::vector<Label> vertex_label_target(int p);

/// Sum of incident edge labels at every vertex. Throws LabelingError when f
/// does not cover exactly the tree's edges.
VertexLabeling induce(const RootedTree& tree, const EdgeLabeling& f);

EdgeLabeling negate(const EdgeLabeling& f);

struct Violation {
  enum class Kind { EdgeLabelsNotTargetSet, VertexLabelsNotTargetSet, DomainMismatch };
  Kind kind;
  std::vector<Label> surplus;  // values present more often than the target allows
  std::vector<Label> missing;  // target values not hit (with multiplicity)
  std::string detail;
};

struct VerificationReport {
  bool is_seg = false;
  std::vector<Violation> violations;
};

VerificationReport verify(const RootedTree& tree, const EdgeLabeling& f);

std::string_view to_string(Violation::Kind kind);
std::string describe(const Violation& violation);

}  // namespace seg
