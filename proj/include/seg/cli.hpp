// Command-line front end. Exit codes: 0 positive result, 1 usage or parse
// error, 2 undecided (budget, conjecture, uncovered), 3 verified negative.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "seg/search.hpp"
#include "seg/tree_model.hpp"

namespace seg::cli {

enum ExitCode : int { kPositive = 0, kUsage = 1, kUndecided = 2, kNegative = 3 };

struct SurveyRow {
  enum class Theory { Seg, NotSeg, Conjectured, Uncovered };
  enum class Oracle { Found, None, Skipped, Budget };
  enum class Agreement { Agree, Disagree, Informational, Undecided };

  std::string spec;
  int zeros = 0;
  int evens = 0;
  int odds = 0;
  int edges = 0;
  std::string dispatch;
  Theory theory = Theory::Uncovered;
  Oracle oracle = Oracle::Skipped;
  Agreement agreement = Agreement::Informational;
  std::uint64_t nodes = 0;

  /// True unless the row is a disagreement or undecided.
  bool agrees() const { return agreement == Agreement::Agree || agreement == Agreement::Informational; }
};

/// Classifies every spec with q <= max_size, constructs or refutes it from
/// theory, and runs the search oracle (FindOne) on it.
std::vector<SurveyRow> survey(int max_size, const SearchConfig& config);

std::string_view to_string(SurveyRow::Theory theory);
std::string_view to_string(SurveyRow::Oracle oracle);
std::string_view to_string(SurveyRow::Agreement agreement);

/// Parses "12345" or "10^7".
std::uint64_t parse_budget(const std::string& text);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seg::cli
