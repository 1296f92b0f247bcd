// Diameter-4 rooted trees RT(a_1, ..., a_n): specs, explicit trees, and the
// family/dispatch classification used by the constructive labelers.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seg {

class SpecError : public std::runtime_error {
 public:
  enum class Kind { Syntax, NotDiameterFour, EmptySpec, EmptyRange };

  SpecError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Child-count sequence of a height-2 rooted tree, kept in canonical order:
/// zeros, then positive evens nondecreasing, then positive odds nondecreasing.
class TreeSpec {
 public:
  /// Sorts `raw` into canonical order. Throws SpecError::NotDiameterFour
  /// when fewer than two entries are positive.
  static TreeSpec canonicalize(std::vector<int> raw);

  std::span<const int> counts() const noexcept { return counts_; }
  /// 1-based child count a_i.
  int count(int i) const { return counts_.at(static_cast<std::size_t>(i - 1)); }
  int size() const noexcept { return static_cast<int>(counts_.size()); }

  int zeros() const noexcept { return zeros_; }
  int evens() const noexcept { return evens_; }
  int odds() const noexcept { return odds_; }

  int edge_count() const noexcept { return edges_; }
  int vertex_count() const noexcept { return edges_ + 1; }

  bool operator==(const TreeSpec&) const = default;
  auto operator<=>(const TreeSpec&) const = default;

 private:
  explicit TreeSpec(std::vector<int> counts);

  std::vector<int> counts_;
  int zeros_ = 0;
  int evens_ = 0;
  int odds_ = 0;
  int edges_ = 0;
};

/// Accepts "RT(0^4,2,6)", "rt( 0,0,0,0,2,6 )" or a bare item list.
TreeSpec parse_spec(std::string_view text);

/// Renders RT(...) with runs of equal entries folded into m^n.
std::string format_spec(const TreeSpec& spec);

/// Every canonical spec with 4 <= q <= q_max, ordered by (q, counts).
/// Throws SpecError::EmptyRange when q_max < 4.
std::vector<TreeSpec> enumerate_specs(int q_max);

using VertexId = int;

/// Explicit vertex structure of RT(a_1..a_n). Vertex 0 is the root, 1..n are
/// the spine vertices, leaves follow grouped by parent. Every non-root vertex
/// identifies its parent edge, so edges are indexed by child vertex id - 1.
class RootedTree {
 public:
  explicit RootedTree(TreeSpec spec);

  const TreeSpec& spec() const noexcept { return spec_; }
  int spine_size() const noexcept { return spec_.size(); }
  int edge_count() const noexcept { return spec_.edge_count(); }
  int vertex_count() const noexcept { return spec_.vertex_count(); }

  static constexpr VertexId root() noexcept { return 0; }
  VertexId spine(int i) const;
  VertexId leaf(int i, int m) const;
  VertexId parent(VertexId v) const;
  /// Spine index i for v_i or v_{i,m}; 0 for the root.
  int spine_index(VertexId v) const;
  bool is_leaf(VertexId v) const noexcept { return v > spine_size(); }
  bool is_pendant(VertexId v) const;
  int degree(VertexId v) const;

  /// Edge index of the edge joining v to its parent.
  static int parent_edge(VertexId v) { return v - 1; }
  static VertexId edge_child(int edge) { return edge + 1; }

  /// "v0", "v3", "v3.2" (1-based spine and leaf indices).
  std::string vertex_name(VertexId v) const;
  std::optional<VertexId> find_vertex(std::string_view name) const;

 private:
  TreeSpec spec_;
  std::vector<VertexId> first_leaf_;  // first_leaf_[i] for spine index i (1-based)
  std::vector<int> owner_;            // spine index of each vertex
};

// ---------------------------------------------------------------------------
// Classification

enum class Family { EvenCaterpillar, OddCaterpillar, EvenLobster, OddLobster };

/// One tag per construction or non-existence result of the case analysis.
enum class Lemma {
  EvenSameParity,     // e,sameparity
  OddOppParity,       // o,oppparity
  EvenOppParity,      // e,oppparity
  OddEvenEven,        // o,e,e
  NonSegCaterpillar,  // nonSEGcaterpillars
  OddLeadingOne,      // a_{j+1}=1
  OddOddOdd,          // o,o,o
  AllOdd,             // j,k,l-odd
  JkEvenLOdd,         // j,k-even,l-odd
  AllEven,            // j,k,l-even
  JkOddLEven,         // j,k-odd,l-even
  JEvenKlOdd,         // j-even,k,l-odd
  JlEvenKOdd,         // j,l-even,k-odd
  BadLobster,         // badlobsters
  JOddKlEven,         // j-odd,k,l-even
};

enum class DispatchKind { Constructive, NotSeg, Conjectured, Uncovered };

struct Dispatch {
  DispatchKind kind = DispatchKind::Uncovered;
  std::optional<Lemma> lemma;  // Constructive / NotSeg
  int conjecture = 0;          // 1..3 for Conjectured
  int case_no = 0;             // construction case, 0 when the lemma has one
  // Substitution parameters in the lemma's own convention (j = 2r, 2r - 1 or
  // 2r + 1 etc.); unused ones stay 0.
  int r = 0;
  int s = 0;
  int t = 0;

  bool operator==(const Dispatch&) const = default;
};

struct Classification {
  Family family = Family::EvenCaterpillar;
  int zeros = 0;  // j
  int evens = 0;  // k
  int odds = 0;   // l
  bool even_size = false;
  Dispatch dispatch;
  /// b_i with a_i = 2 b_i (even) or 2 b_i + 1 (odd), 1-based; halves[0] unused.
  std::vector<int> halves;

  int half(int i) const { return halves.at(static_cast<std::size_t>(i)); }
  bool operator==(const Classification&) const = default;
};

Classification classify(const TreeSpec& spec);

std::string_view to_string(Family family);
std::string_view to_string(DispatchKind kind);
/// Short lemma label such as "e,sameparity".
std::string_view lemma_tag(Lemma lemma);
/// "L-e,sameparity", "conjecture-2", "uncovered".
std::string dispatch_tag(const Dispatch& dispatch);
bool is_caterpillar(Family family) noexcept;

}  // namespace seg
