#include "seg/labeling.hpp"

#include <algorithm>
#include <sstream>

namespace seg {

EdgeLabeling::EdgeLabeling(const std::vector<Label>& labels) : labels_(labels.begin(), labels.end()) {}

bool EdgeLabeling::is_total() const noexcept {
  return std::all_of(labels_.begin(), labels_.end(), [](const auto& l) { return l.has_value(); });
}

Label EdgeLabeling::at(int edge) const {
  const auto& slot = labels_.at(static_cast<std::size_t>(edge));
  if (!slot) throw LabelingError("edge " + std::to_string(edge) + " is unlabeled");
  return *slot;
}

std::vector<Label> EdgeLabeling::values() const {
  std::vector<Label> out;
  out.reserve(labels_.size());
  for (int e = 0; e < edge_count(); ++e) out.push_back(at(e));
  return out;
}

namespace {

std::vector<Label> symmetric_target(int size) {
  std::vector<Label> out;
  out.reserve(static_cast<std::size_t>(size));
  const Label half = size / 2;
  for (Label x = -half; x <= half; ++x)
    if (x != 0 || size % 2 == 1) out.push_back(x);
  return out;
}

// Multiset difference of two ascending sequences.
std::vector<Label> difference(const std::vector<Label>& a, const std::vector<Label>& b) {
  std::vector<Label> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::optional<Violation> compare_to_target(std::vector<Label> values, const std::vector<Label>& target,
                                           Violation::Kind kind) {
  std::sort(values.begin(), values.end());
  if (values == target) return std::nullopt;
  return Violation{kind, difference(values, target), difference(target, values), {}};
}

}  // namespace

std::vector<Label> edge_label_target(int q) {
  if (q < 1) throw std::invalid_argument("edge count must be positive");
  return symmetric_target(q);
}

std::vector<Label> vertex_label_target(int p) {
  if (p < 2) throw std::invalid_argument("vertex count must be at least 2");
  return symmetric_target(p);
}

VertexLabeling induce(const RootedTree& tree, const EdgeLabeling& f) {
  if (f.edge_count() != tree.edge_count())
    throw LabelingError("labeling has " + std::to_string(f.edge_count()) + " edges, tree has " +
                        std::to_string(tree.edge_count()));
  if (!f.is_total()) throw LabelingError("labeling is not total on the tree's edges");
  VertexLabeling sums(static_cast<std::size_t>(tree.vertex_count()), 0);
  for (int e = 0; e < tree.edge_count(); ++e) {
    const VertexId child = RootedTree::edge_child(e);
    const Label x = f.at(e);
    sums[static_cast<std::size_t>(child)] += x;
    sums[static_cast<std::size_t>(tree.parent(child))] += x;
  }
  return sums;
}

EdgeLabeling negate(const EdgeLabeling& f) {
  EdgeLabeling out(f.edge_count());
  for (int e = 0; e < f.edge_count(); ++e)
    if (f.has(e)) out.set(e, -f.at(e));
  return out;
}

VerificationReport verify(const RootedTree& tree, const EdgeLabeling& f) {
  VerificationReport report;
  if (f.edge_count() != tree.edge_count() || !f.is_total()) {
    std::ostringstream detail;
    detail << "labeling covers ";
    int covered = 0;
    for (int e = 0; e < f.edge_count(); ++e) covered += f.has(e) ? 1 : 0;
    detail << covered << " edges of a tree with " << tree.edge_count();
    std::string missing_edges;
    for (int e = 0; e < std::min(f.edge_count(), tree.edge_count()); ++e)
      if (!f.has(e)) missing_edges += (missing_edges.empty() ? "" : ",") + tree.vertex_name(RootedTree::edge_child(e));
    if (!missing_edges.empty()) detail << "; unlabeled: " << missing_edges;
    report.violations.push_back({Violation::Kind::DomainMismatch, {}, {}, detail.str()});
    return report;
  }
  if (auto v = compare_to_target(f.values(), edge_label_target(tree.edge_count()),
                                 Violation::Kind::EdgeLabelsNotTargetSet))
    report.violations.push_back(std::move(*v));
  if (auto v = compare_to_target(induce(tree, f), vertex_label_target(tree.vertex_count()),
                                 Violation::Kind::VertexLabelsNotTargetSet))
    report.violations.push_back(std::move(*v));
  report.is_seg = report.violations.empty();
  return report;
}

std::string_view to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::EdgeLabelsNotTargetSet: return "EdgeLabelsNotTargetSet";
    case Violation::Kind::VertexLabelsNotTargetSet: return "VertexLabelsNotTargetSet";
    case Violation::Kind::DomainMismatch: return "DomainMismatch";
  }
  return "?";
}

std::string describe(const Violation& violation) {
  std::ostringstream out;
  out << to_string(violation.kind);
  auto list = [&out](const char* name, const std::vector<Label>& values) {
    if (values.empty()) return;
    out << ' ' << name << " [";
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
    out << ']';
  };
  list("surplus", violation.surplus);
  list("missing", violation.missing);
  if (!violation.detail.empty()) out << ": " << violation.detail;
  return out.str();
}

}  // namespace seg
