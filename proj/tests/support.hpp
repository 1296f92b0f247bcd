// Shared helpers for the unit tests and the acceptance driver.
#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <functional>
#include <map>

#include "seg/constructive.hpp"
#include "seg/labeling.hpp"
#include "seg/tree_model.hpp"

namespace seg::testing {

inline std::string golden_path(const std::string& name) { return std::string(SEG_GOLDEN_DIR) + "/" + name; }

/// Independent oracle: tries every ordering of the edge target. Only for
/// tiny trees (q <= 9 is already 362880 orderings).
inline std::uint64_t brute_force_count(const RootedTree& tree) {
  std::vector<Label> labels = edge_label_target(tree.edge_count());
  std::vector<Label> want = vertex_label_target(tree.vertex_count());
  std::uint64_t hits = 0;
  std::vector<Label> sums(static_cast<std::size_t>(tree.vertex_count()));
  do {
    std::fill(sums.begin(), sums.end(), 0);
    for (int e = 0; e < tree.edge_count(); ++e) {
      const VertexId child = RootedTree::edge_child(e);
      sums[static_cast<std::size_t>(child)] += labels[static_cast<std::size_t>(e)];
      sums[static_cast<std::size_t>(tree.parent(child))] += labels[static_cast<std::size_t>(e)];
    }
    std::sort(sums.begin(), sums.end());
    hits += sums == want ? 1 : 0;
  } while (std::next_permutation(labels.begin(), labels.end()));
  return hits;
}

/// Every multiset of child counts with a_i <= 7 (so b_i <= 3) and spine
/// length 2..7, in canonical form.
inline std::vector<TreeSpec> sweep_specs() {
  std::vector<TreeSpec> out;
  std::vector<int> raw;
  std::function<void(int)> extend = [&](int lo) {
    if (raw.size() >= 2 && std::count_if(raw.begin(), raw.end(), [](int a) { return a > 0; }) >= 2)
      out.push_back(TreeSpec::canonicalize(raw));
    if (raw.size() == 7) return;
    for (int a = lo; a <= 7; ++a) {
      raw.push_back(a);
      extend(a);
      raw.pop_back();
    }
  };
  extend(0);
  return out;
}

struct SweepResult {
  std::map<std::string, int> per_lemma;  // lemma tag -> verified instances
  std::vector<std::string> failures;
  int instances = 0;
};

/// Runs every constructive arm with r, s, t <= 3 over sweep_specs().
inline SweepResult constructive_sweep() {
  SweepResult result;
  for (const TreeSpec& spec : sweep_specs()) {
    const Dispatch d = classify(spec).dispatch;
    if (d.kind != DispatchKind::Constructive || d.r > 3 || d.s > 3 || d.t > 3) continue;
    ++result.instances;
    std::string tag = dispatch_tag(d);
    if (d.case_no) tag += " case " + std::to_string(d.case_no);
    try {
      const LabelOutcome out = label_any(spec);
      if (out.status == LabelOutcome::Status::Labeled && verify(RootedTree(spec), *out.labeling).is_seg)
        ++result.per_lemma[tag];
      else
        result.failures.push_back(format_spec(spec) + " (" + tag + ")");
    } catch (const std::exception& e) {
      result.failures.push_back(format_spec(spec) + " (" + tag + "): " + e.what());
    }
  }
  return result;
}

}  // namespace seg::testing
