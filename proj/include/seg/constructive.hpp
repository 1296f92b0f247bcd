// Explicit SEG labelings for the diameter-4 families that admit a direct
// construction, and the non-existence results for the families that don't.
// Every labeling is re-verified before it leaves this module.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "seg/labeling.hpp"
#include "seg/search.hpp"
#include "seg/tree_model.hpp"

namespace seg {

/// Thrown when a construction fails its own verification. Carries the
/// lemma, parameters and the violation so the formula can be located.
class ConstructionFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A labeler was called on a spec outside its family.
class WrongFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct LabelOutcome {
  enum class Status { Labeled, ProvedNotSeg, Unknown };
  enum class Source { Lemma, Search, Exhaustion, None };

  Status status = Status::Unknown;
  Source source = Source::None;
  std::optional<EdgeLabeling> labeling;  // Labeled only
  Dispatch dispatch;                     // the classification arm that governed the call
  std::optional<SearchOutcome> search;   // set when the search fallback ran

  /// "L-o,e,e", "search", "exhaustion", "conjecture-1", "uncovered".
  std::string tag() const;
};

LabelOutcome label_even_caterpillar(const TreeSpec& spec);
LabelOutcome label_odd_caterpillar(const TreeSpec& spec);
LabelOutcome label_even_lobster(const TreeSpec& spec);
LabelOutcome label_odd_lobster(const TreeSpec& spec);

/// Dispatches by classify(). When the theory leaves the spec open and a
/// search config is supplied, the search oracle decides it.
LabelOutcome label_any(const TreeSpec& spec, const std::optional<SearchConfig>& fallback = std::nullopt);

std::string_view to_string(LabelOutcome::Status status);

}  // namespace seg
