// Acceptance driver: one PASS/FAIL line per criterion, exit status 0 only
// when all eight pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "seg/cli.hpp"
#include "seg/constructive.hpp"
#include "seg/io.hpp"
#include "seg/search.hpp"
#include "support.hpp"

using namespace seg;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string secs(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", t);
  return buf;
}

const std::pair<const char*, const char*> kFigures[] = {
    {"RT(0^4,2,6)", "fig_0p4_2_6.json"},     {"RT(0^3,2,5)", "fig_0p3_2_5.json"},
    {"RT(0^3,2,4)", "fig_0p3_2_4.json"},     {"RT(0^3,3,5)", "fig_0p3_3_5.json"},
    {"RT(0,2,3^2,5)", "fig_0_2_3p2_5.json"}, {"RT(2,3^2,5)", "fig_2_3p2_5.json"},
};

Verdict golden_figures() {
  const auto start = Clock::now();
  int ok = 0;
  std::string bad;
  for (const auto& [spec, file] : kFigures) {
    const LabelingDocument doc = load_labeling_file(testing::golden_path(file));
    if (doc.spec == parse_spec(spec) && verify_document(doc).is_seg) ++ok;
    else bad += std::string(" ") + spec;
  }
  const double t = seconds_since(start);
  std::ostringstream s;
  s << ok << "/6 verify SEG in " << secs(t) << (bad.empty() ? "" : ";  failing:" + bad);
  return {ok == 6 && t < 1.0, s.str()};
}

Verdict figure_fidelity() {
  const auto start = Clock::now();
  const char* designated[][3] = {{"RT(0^4,2,6)", "fig_0p4_2_6.json", "L-e,sameparity"},
                                 {"RT(0,2,3^2,5)", "fig_0_2_3p2_5.json", "L-j,k,l-odd"},
                                 {"RT(2,3^2,5)", "fig_2_3p2_5.json", "L-j-even,k,l-odd"}};
  int ok = 0;
  std::string bad;
  for (const auto& [spec, file, tag] : designated) {
    const LabelOutcome out = label_any(parse_spec(spec));
    const bool same = out.status == LabelOutcome::Status::Labeled && out.tag() == tag &&
                      *out.labeling == load_labeling_file(testing::golden_path(file)).labeling;
    if (same) ++ok;
    else bad += std::string(" ") + spec;
  }
  const double t = seconds_since(start);
  std::ostringstream s;
  s << ok << "/3 edge-for-edge matches in " << secs(t) << (bad.empty() ? "" : ";  differing:" + bad);
  return {ok == 3 && t < 1.0, s.str()};
}

Verdict constructive_sweep() {
  const auto start = Clock::now();
  const testing::SweepResult sweep = testing::constructive_sweep();
  std::ostringstream s;
  s << sweep.instances << " instances over " << sweep.per_lemma.size() << " lemma arms, " << sweep.failures.size()
    << " failures, " << secs(seconds_since(start));
  for (const auto& f : sweep.failures) s << "\n      " << f;
  return {sweep.failures.empty() && sweep.per_lemma.size() == 17 && seconds_since(start) < 60, s.str()};
}

Verdict theory_agreement() {
  const auto start = Clock::now();
  const auto rows = cli::survey(11, SearchConfig{});
  int covered = 0, agree = 0, informational = 0;
  std::string bad;
  for (const cli::SurveyRow& row : rows) {
    if (row.agreement == cli::SurveyRow::Agreement::Informational) {
      ++informational;
      continue;
    }
    ++covered;
    if (row.agreement == cli::SurveyRow::Agreement::Agree) ++agree;
    else bad += " " + row.spec;
  }
  std::ostringstream s;
  s << agree << "/" << covered << " covered specs agree (q <= 11), " << informational << " informational rows, "
    << secs(seconds_since(start)) << (bad.empty() ? "" : ";  disagreeing:" + bad);
  return {agree == covered && covered > 0, s.str()};
}

Verdict certificates() {
  const auto start = Clock::now();
  int ok = 0;
  std::string bad;
  for (const char* spec : {"RT(0,1,1)", "RT(0,1,3)", "RT(0,1,5)", "RT(0^3,1,1)", "RT(0,1,1,1)", "RT(0,1,1,1,1)",
                           "RT(0^3,1,1,1)"}) {
    try {
      const Certificate c = certify_not_seg(RootedTree(parse_spec(spec)), SearchConfig{});
      if (c.outcome == "none") ++ok;
    } catch (const SearchError& e) {
      bad += std::string(" ") + spec + " (" + e.what() + ")";
    }
  }
  const double t = seconds_since(start);
  std::ostringstream s;
  s << ok << "/7 ExhaustedNone in " << secs(t) << bad;
  return {ok == 7 && t < 300, s.str()};
}

Verdict count_parity() {
  int seg_specs = 0, odd = 0;
  std::string bad;
  for (const TreeSpec& spec : enumerate_specs(9)) {
    const std::uint64_t n = count_all(RootedTree(spec), SearchConfig{});
    if (n == 0) continue;
    ++seg_specs;
    if (n % 2) {
      ++odd;
      bad += " " + format_spec(spec);
    }
  }
  std::ostringstream s;
  s << seg_specs << " SEG specs with q <= 9, " << odd << " odd counts" << bad;
  return {odd == 0 && seg_specs > 0, s.str()};
}

Verdict symmetry_neutrality() {
  const auto all = enumerate_specs(9);
  std::vector<TreeSpec> picked;
  for (std::size_t i = 0; i < 20; ++i) picked.push_back(all[i * (all.size() - 1) / 19]);
  int ok = 0;
  std::string bad;
  for (const TreeSpec& spec : picked) {
    const RootedTree tree(spec);
    std::optional<std::pair<bool, std::uint64_t>> reference;
    bool same = true;
    for (int mask = 0; mask < 8; ++mask) {
      SearchConfig c;
      c.break_negation = mask & 1;
      c.break_leaf_permutations = mask & 2;
      c.break_equal_spine_vertices = mask & 4;
      const bool exists = search(tree, c).status == SearchOutcome::Status::Found;
      const std::pair<bool, std::uint64_t> answer{exists, count_all(tree, c)};
      if (!reference) reference = answer;
      same = same && answer == *reference;
    }
    if (same) ++ok;
    else bad += " " + format_spec(spec);
  }
  std::ostringstream s;
  s << ok << "/20 specs identical across 8 flag combinations" << bad;
  return {ok == 20, s.str()};
}

Verdict conjecture_probe() {
  SearchConfig c;
  c.node_budget = 100'000'000;
  bool definitive = true;
  std::ostringstream s;
  s << "outcomes recorded:";
  for (const char* spec : {"RT(2,1,1)", "RT(0,1,1,3)", "RT(0,1,1,1,3)"}) {
    const RootedTree tree(parse_spec(spec));
    const SearchOutcome out = search(tree, c);
    definitive = definitive && out.status != SearchOutcome::Status::BudgetExceeded;
    s << "\n      " << spec << " (" << dispatch_tag(classify(tree.spec()).dispatch) << "): " << to_string(out.status)
      << " after " << out.nodes_visited << " nodes";
    if (out.labeling) {
      s << ", labeling";
      for (Label x : out.labeling->values()) s << " " << x;
    }
  }
  return {definitive, s.str()};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"AC1 golden figures", golden_figures},       {"AC2 figure fidelity", figure_fidelity},
      {"AC3 constructive sweep", constructive_sweep}, {"AC4 theory-oracle agreement", theory_agreement},
      {"AC5 non-existence certificates", certificates}, {"AC6 count parity", count_parity},
      {"AC7 symmetry neutrality", symmetry_neutrality}, {"AC8 conjecture probe", conjecture_probe},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += v.pass ? 0 : 1;
    std::cout << (v.pass ? "PASS " : "FAIL ") << name << ": " << v.detail << std::endl;
  }
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed" : "acceptance: all passed")
            << std::endl;
  return failed ? 1 : 0;
}
