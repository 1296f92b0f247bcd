#include "seg/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <climits>
#include <thread>

#include "seg/version.hpp"

namespace seg {

namespace {

using Mask = std::uint64_t;

struct Variable {
  int spine = 0;         // spine index of the edge's lower endpoint's owner
  bool is_leaf = false;
  bool pendant = false;  // the edge ends at a degree-1 vertex
  bool closes_group = false;  // last leaf of its parent
  int remaining = 0;     // leaves still to place under the same parent after this one
  bool ordered_after_previous = false;  // symmetry constraint: label > previous variable's label
};

struct BranchResult {
  bool valid = false;
  bool aborted = false;
  std::uint64_t nodes = 0;
  std::uint64_t weight = 0;
  std::optional<std::vector<Label>> first;
};

std::uint64_t factorial(int n) {
  std::uint64_t out = 1;
  for (int i = 2; i <= n; ++i) out *= static_cast<std::uint64_t>(i);
  return out;
}

class Problem {
 public:
  Problem(const RootedTree& tree, const SearchConfig& config)
      : tree_(tree), config_(config), q_(tree.edge_count()), n_(tree.spine_size()) {
    labels_ = edge_label_target(q_);
    vertex_half_ = tree.vertex_count() / 2;
    const auto vt = vertex_label_target(tree.vertex_count());
    for (Label v : vt) vertex_target_ |= Mask{1} << slot(v);

    const TreeSpec& spec = tree.spec();
    vars_.resize(static_cast<std::size_t>(q_));
    for (int e = 0; e < q_; ++e) {
      const VertexId child = RootedTree::edge_child(e);
      Variable& v = vars_[static_cast<std::size_t>(e)];
      v.spine = tree.spine_index(child);
      v.is_leaf = tree.is_leaf(child);
      v.pendant = tree.is_pendant(child);
      if (v.is_leaf) {
        const int m = child - tree.leaf(v.spine, 1) + 1;
        v.remaining = spec.count(v.spine) - m;
        v.closes_group = v.remaining == 0;
        v.ordered_after_previous = config.break_leaf_permutations && m > 1;
      } else {
        v.ordered_after_previous =
            config.break_equal_spine_vertices && v.spine > 1 && spec.count(v.spine - 1) == spec.count(v.spine);
      }
    }

    symmetry_weight_ = 1;
    if (config.break_leaf_permutations)
      for (int i = 1; i <= n_; ++i) symmetry_weight_ *= factorial(spec.count(i));
    if (config.break_equal_spine_vertices) {
      for (int i = 1; i <= n_;) {
        int run = 1;
        while (i + run <= n_ && spec.count(i + run) == spec.count(i)) ++run;
        symmetry_weight_ *= factorial(run);
        i += run;
      }
    }
  }

  int edges() const { return q_; }
  const SearchConfig& config() const { return config_; }
  Label label(int idx) const { return labels_[static_cast<std::size_t>(idx)]; }

  BranchResult run_branch(int first_label) const;

 private:
  friend class Walker;

  int slot(Label v) const { return static_cast<int>(v + vertex_half_); }
  bool vertex_allowed(Label v, Mask used) const {
    if (v < -vertex_half_ || v > vertex_half_) return false;
    const Mask bit = Mask{1} << slot(v);
    return (vertex_target_ & bit) && !(used & bit);
  }

  const RootedTree& tree_;
  SearchConfig config_;
  int q_;
  int n_;
  std::vector<Label> labels_;
  Label vertex_half_ = 0;
  Mask vertex_target_ = 0;
  std::vector<Variable> vars_;
  std::uint64_t symmetry_weight_ = 1;
};

class Walker {
 public:
  explicit Walker(const Problem& problem)
      : p_(problem),
        value_(static_cast<std::size_t>(problem.q_), 0),
        spine_sum_(static_cast<std::size_t>(problem.n_) + 1, 0),
        stop_at_first_(problem.config_.mode == SearchMode::FindOne) {}

  /// Places label index idx at depth d; returns false if a constraint fails.
  /// On success the caller must call undo(d, idx) afterwards.
  bool place(int d, int idx) {
    const Variable& v = p_.vars_[static_cast<std::size_t>(d)];
    const Label x = p_.label(idx);
    const SearchConfig& cfg = p_.config_;

    if (v.ordered_after_previous && x <= value_[static_cast<std::size_t>(d - 1)]) return false;
    if (v.pendant && x == 0 && cfg.prune_pendant_zero) return false;
    if (!v.is_leaf && cfg.break_negation && !cfg.break_equal_spine_vertices && x < 0 && !nonzero_seen(d))
      return false;

    Mask marks = 0;
    if (v.pendant) {
      if (!p_.vertex_allowed(x, vert_used_)) return false;
      marks |= Mask{1} << p_.slot(x);
    }

    if (!v.is_leaf) {
      const Label root = root_sum_ + x;
      if (v.spine == p_.n_) {
        reserve_pendant_labels(x);
        if (!p_.vertex_allowed(root, vert_used_ | marks | reserved_)) return false;
        marks |= Mask{1} << p_.slot(root);
      }
      root_sum_ = root;
      spine_sum_[static_cast<std::size_t>(v.spine)] = x;
    } else {
      Label& sum = spine_sum_[static_cast<std::size_t>(v.spine)];
      const Label next = sum + x;
      if (v.closes_group) {
        if (!p_.vertex_allowed(next, vert_used_ | marks | reserved_)) return false;
        marks |= Mask{1} << p_.slot(next);
      } else if (!reachable(next, v.remaining, edge_used_ | (Mask{1} << idx),
                            cfg.break_leaf_permutations ? idx : -1)) {
        return false;
      }
      sum = next;
    }

    edge_used_ |= Mask{1} << idx;
    vert_used_ |= marks;
    marks_[static_cast<std::size_t>(d)] = marks;
    value_[static_cast<std::size_t>(d)] = x;
    return true;
  }

  void undo(int d, int idx) {
    const Variable& v = p_.vars_[static_cast<std::size_t>(d)];
    const Label x = value_[static_cast<std::size_t>(d)];
    edge_used_ &= ~(Mask{1} << idx);
    vert_used_ &= ~marks_[static_cast<std::size_t>(d)];
    if (!v.is_leaf) {
      root_sum_ -= x;
      spine_sum_[static_cast<std::size_t>(v.spine)] = 0;
    } else {
      spine_sum_[static_cast<std::size_t>(v.spine)] -= x;
    }
  }

  /// Depth-first walk below depth d. Returns true when the walk should stop.
  bool walk(int d) {
    if (++nodes_ > p_.config_.node_budget) {
      aborted_ = true;
      return true;
    }
    if (d == p_.q_) return accept();
    for (int idx = 0; idx < p_.q_; ++idx) {
      if (edge_used_ & (Mask{1} << idx)) continue;
      if (!place(d, idx)) continue;
      const bool stop = walk(d + 1);
      undo(d, idx);
      if (stop) return true;
    }
    return false;
  }

  std::uint64_t nodes() const { return nodes_; }
  bool aborted() const { return aborted_; }
  std::uint64_t weight() const { return weight_; }
  const std::optional<std::vector<Label>>& first() const { return first_; }

 private:
  // A pendant vertex's label is its edge label. Once the spine is fixed, every
  // label not on a non-pendant spine edge ends on a pendant edge, so those
  // values are off limits for the root and for the group sums.
  void reserve_pendant_labels(Label last_spine) {
    reserved_ = 0;
    for (int idx = 0; idx < p_.q_; ++idx) {
      const Label x = p_.label(idx);
      if (x >= -p_.vertex_half_ && x <= p_.vertex_half_) reserved_ |= Mask{1} << p_.slot(x);
    }
    for (int d = 0; d < p_.n_; ++d) {
      if (p_.vars_[static_cast<std::size_t>(d)].pendant) continue;
      const Label x = d + 1 == p_.n_ ? last_spine : value_[static_cast<std::size_t>(d)];
      if (x >= -p_.vertex_half_ && x <= p_.vertex_half_) reserved_ &= ~(Mask{1} << p_.slot(x));
    }
  }

  bool nonzero_seen(int d) const {
    for (int i = 0; i < d; ++i)
      if (value_[static_cast<std::size_t>(i)] != 0) return true;
    return false;
  }

  // Can `count` more distinct free labels bring `sum` into the vertex range?
  // With leaf ordering active the remaining labels must exceed label index `above`.
  bool reachable(Label sum, int count, Mask used, int above) const {
    Label low = sum;
    Label high = sum;
    int taken = 0;
    for (int idx = above + 1; idx < p_.q_ && taken < count; ++idx)
      if (!(used & (Mask{1} << idx))) {
        low += p_.label(idx);
        ++taken;
      }
    if (taken < count) return false;
    taken = 0;
    for (int idx = p_.q_ - 1; idx > above && taken < count; --idx)
      if (!(used & (Mask{1} << idx))) {
        high += p_.label(idx);
        ++taken;
      }
    return low <= p_.vertex_half_ && high >= -p_.vertex_half_;
  }

  // Canonical form of -f under the active automorphism quotient.
  std::vector<Label> canonical_negation() const {
    const TreeSpec& spec = p_.tree_.spec();
    struct Block {
      Label spine_label;
      std::vector<Label> leaves;
    };
    std::vector<Block> blocks(static_cast<std::size_t>(p_.n_));
    std::size_t cursor = static_cast<std::size_t>(p_.n_);
    for (int i = 1; i <= p_.n_; ++i) {
      Block& b = blocks[static_cast<std::size_t>(i - 1)];
      b.spine_label = -value_[static_cast<std::size_t>(i - 1)];
      for (int m = 0; m < spec.count(i); ++m) b.leaves.push_back(-value_[cursor++]);
      if (p_.config_.break_leaf_permutations) std::sort(b.leaves.begin(), b.leaves.end());
    }
    for (int i = 1; i <= p_.n_;) {
      int run = 1;
      while (i + run <= p_.n_ && spec.count(i + run) == spec.count(i)) ++run;
      auto first = blocks.begin() + (i - 1);
      std::sort(first, first + run, [](const Block& a, const Block& b) { return a.spine_label < b.spine_label; });
      i += run;
    }
    std::vector<Label> out;
    out.reserve(value_.size());
    for (const Block& b : blocks) out.push_back(b.spine_label);
    for (const Block& b : blocks) out.insert(out.end(), b.leaves.begin(), b.leaves.end());
    return out;
  }

  bool accept() {
    std::uint64_t w = p_.symmetry_weight_;
    const SearchConfig& cfg = p_.config_;
    if (cfg.break_negation) {
      if (cfg.break_equal_spine_vertices) {
        const auto mirror = canonical_negation();
        if (value_ < mirror) return false;
        if (value_ != mirror) w *= 2;
      } else {
        w *= 2;
      }
    }
    weight_ += w;
    if (!first_) first_ = value_;
    return stop_at_first_;
  }

  const Problem& p_;
  std::vector<Label> value_;
  std::vector<Label> spine_sum_;
  std::array<Mask, kSearchMaxEdges> marks_{};
  Label root_sum_ = 0;
  Mask edge_used_ = 0;
  Mask vert_used_ = 0;
  Mask reserved_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t weight_ = 0;
  bool aborted_ = false;
  bool stop_at_first_;
  std::optional<std::vector<Label>> first_;
};

BranchResult Problem::run_branch(int first_label) const {
  BranchResult result;
  Walker walker(*this);
  if (!walker.place(0, first_label)) return result;
  result.valid = true;
  walker.walk(1);
  result.aborted = walker.aborted();
  result.nodes = walker.nodes();
  result.weight = walker.weight();
  result.first = walker.first();
  return result;
}

std::vector<BranchResult> run_branches(const Problem& problem) {
  const int branches = problem.edges();
  std::vector<BranchResult> results(static_cast<std::size_t>(branches));
  const bool find_one = problem.config().mode == SearchMode::FindOne;
  std::atomic<int> next{0};
  std::atomic<int> best{INT_MAX};

  auto work = [&] {
    for (int b = next.fetch_add(1); b < branches; b = next.fetch_add(1)) {
      if (find_one && best.load() < b) continue;
      BranchResult r = problem.run_branch(b);
      if (find_one && r.first) {
        int current = best.load();
        while (b < current && !best.compare_exchange_weak(current, b)) {
        }
      }
      results[static_cast<std::size_t>(b)] = std::move(r);
    }
  };

  const int workers = std::clamp(problem.config().workers, 1, branches);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return results;
}

SearchOutcome finish(const RootedTree& tree, const std::vector<Label>& values, std::uint64_t nodes,
                     std::optional<std::uint64_t> count) {
  EdgeLabeling f(values);
  if (!verify(tree, f).is_seg) throw std::logic_error("search produced a labeling that fails verification");
  return SearchOutcome{SearchOutcome::Status::Found, std::move(f), nodes, count};
}

}  // namespace

SearchOutcome search(const RootedTree& tree, const SearchConfig& config) {
  const int q = tree.edge_count();
  if (config.node_budget < 1) throw SearchError(SearchError::Kind::InvalidConfig, "node budget must be >= 1");
  if (config.workers < 1) throw SearchError(SearchError::Kind::InvalidConfig, "workers must be >= 1");
  if (q > kSearchMaxEdges)
    throw SearchError(SearchError::Kind::GuardRefused, "search supports at most " +
                                                           std::to_string(kSearchMaxEdges) + " edges");
  if (q > kSearchGuardEdges && !config.override_guard)
    throw SearchError(SearchError::Kind::GuardRefused,
                      "refusing search on " + std::to_string(q) + " edges without override");
  const bool counting = config.mode != SearchMode::FindOne;
  if (counting && q > kCountMaxEdges)
    throw SearchError(SearchError::Kind::InvalidConfig,
                      "counting supports at most " + std::to_string(kCountMaxEdges) + " edges");

  const Problem problem(tree, config);
  const auto results = run_branches(problem);

  const auto exceeded = [&] {
    return SearchOutcome{SearchOutcome::Status::BudgetExceeded, std::nullopt, config.node_budget, std::nullopt};
  };

  std::uint64_t nodes = 1;
  if (nodes > config.node_budget) return exceeded();
  std::uint64_t count = 0;
  const std::vector<Label>* first = nullptr;
  for (const BranchResult& r : results) {
    if (!r.valid) continue;
    if (r.aborted || r.nodes > config.node_budget - nodes) return exceeded();
    nodes += r.nodes;
    count += r.weight;
    if (r.first && !first) {
      first = &*r.first;
      if (!counting) return finish(tree, *first, nodes, std::nullopt);
    }
  }
  const std::optional<std::uint64_t> reported = counting ? std::optional(count) : std::nullopt;
  if (first) return finish(tree, *first, nodes, reported);
  return SearchOutcome{SearchOutcome::Status::ExhaustedNone, std::nullopt, nodes, reported};
}

std::uint64_t count_all(const RootedTree& tree, SearchConfig config) {
  config.mode = SearchMode::CountAll;
  const SearchOutcome out = search(tree, config);
  if (out.status == SearchOutcome::Status::BudgetExceeded)
    throw SearchError(SearchError::Kind::BudgetExceeded, "node budget exhausted while counting");
  return *out.count;
}

Certificate certify_not_seg(const RootedTree& tree, SearchConfig config) {
  config.mode = SearchMode::ExhaustAll;
  const SearchOutcome out = search(tree, config);
  if (out.status == SearchOutcome::Status::BudgetExceeded)
    throw SearchError(SearchError::Kind::BudgetExceeded, "node budget exhausted before the search space was covered");
  if (out.status == SearchOutcome::Status::Found)
    throw SearchError(SearchError::Kind::SolutionExists, format_spec(tree.spec()) + " has a SEG labeling");
  Certificate c;
  c.spec = format_spec(tree.spec());
  c.edges = tree.edge_count();
  c.edge_target = edge_label_target(tree.edge_count());
  c.vertex_target = vertex_label_target(tree.vertex_count());
  c.break_negation = config.break_negation;
  c.break_leaf_permutations = config.break_leaf_permutations;
  c.break_equal_spine_vertices = config.break_equal_spine_vertices;
  c.prune_pendant_zero = config.prune_pendant_zero;
  c.nodes_visited = out.nodes_visited;
  c.artifact_version = std::string(kVersion);
  return c;
}

std::string_view to_string(SearchOutcome::Status status) {
  switch (status) {
    case SearchOutcome::Status::Found: return "found";
    case SearchOutcome::Status::ExhaustedNone: return "none";
    case SearchOutcome::Status::BudgetExceeded: return "budget";
  }
  return "?";
}

}  // namespace seg
