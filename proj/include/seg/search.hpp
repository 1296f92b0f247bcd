// Exhaustive backtracking search for super edge-graceful labelings.
//
// Variables are the spine edges e_{0,1..n} followed by the leaf edges grouped
// by parent; labels are tried in ascending order, so the first solution met
// is the lexicographically smallest accepted one. Three symmetries may be
// quotiented out: negation, permutations of leaves under one parent, and
// permutations of spine vertices with equal child counts. Counts are always
// reported re-expanded to raw labelings.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "seg/labeling.hpp"
#include "seg/tree_model.hpp"

namespace seg {

enum class SearchMode { FindOne, CountAll, ExhaustAll };

struct SearchConfig {
  std::uint64_t node_budget = 100'000'000;
  bool break_negation = true;
  bool break_leaf_permutations = true;
  bool break_equal_spine_vertices = true;
  bool prune_pendant_zero = true;
  SearchMode mode = SearchMode::FindOne;
  int workers = 1;
  bool override_guard = false;
};

struct SearchOutcome {
  enum class Status { Found, ExhaustedNone, BudgetExceeded };

  Status status = Status::ExhaustedNone;
  std::optional<EdgeLabeling> labeling;  // set iff Found
  std::uint64_t nodes_visited = 0;
  std::optional<std::uint64_t> count;  // raw SEG labelings; CountAll / ExhaustAll only

  bool operator==(const SearchOutcome&) const = default;
};

class SearchError : public std::runtime_error {
 public:
  enum class Kind { GuardRefused, BudgetExceeded, SolutionExists, InvalidConfig };

  SearchError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Largest edge count accepted without override_guard.
inline constexpr int kSearchGuardEdges = 24;
/// Hard limit of the bitset representation.
inline constexpr int kSearchMaxEdges = 60;
/// Largest edge count for which raw counts fit in 64 bits.
inline constexpr int kCountMaxEdges = 20;

SearchOutcome search(const RootedTree& tree, const SearchConfig& config);

/// Exact number of SEG labelings. Throws SearchError::BudgetExceeded.
std::uint64_t count_all(const RootedTree& tree, SearchConfig config);

struct Certificate {
  std::string spec;
  int edges = 0;
  std::vector<Label> edge_target;
  std::vector<Label> vertex_target;
  bool break_negation = false;
  bool break_leaf_permutations = false;
  bool break_equal_spine_vertices = false;
  bool prune_pendant_zero = false;
  std::uint64_t nodes_visited = 0;
  std::string outcome = "none";
  std::string artifact_version;

  bool operator==(const Certificate&) const = default;
};

/// Runs a full traversal and returns a non-existence record. Throws
/// SearchError::BudgetExceeded, or SearchError::SolutionExists when a
/// labeling is found.
Certificate certify_not_seg(const RootedTree& tree, SearchConfig config);

std::string_view to_string(SearchOutcome::Status status);

}  // namespace seg
