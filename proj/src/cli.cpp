#include "seg/cli.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "seg/constructive.hpp"
#include "seg/io.hpp"

namespace seg::cli {

using nlohmann::ordered_json;

std::uint64_t parse_budget(const std::string& text) {
  auto read = [&text](std::string_view digits) {
    std::uint64_t value = 0;
    const auto* end = digits.data() + digits.size();
    const auto [ptr, ec] = std::from_chars(digits.data(), end, value);
    if (digits.empty() || ec != std::errc() || ptr != end) throw std::invalid_argument("bad budget '" + text + "'");
    return value;
  };
  const auto caret = text.find('^');
  if (caret == std::string::npos) return read(text);
  const std::uint64_t base = read(std::string_view(text).substr(0, caret));
  const std::uint64_t exponent = read(std::string_view(text).substr(caret + 1));
  std::uint64_t value = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && value > UINT64_MAX / base) throw std::invalid_argument("budget overflows: " + text);
    value *= base;
  }
  return value;
}

std::string_view to_string(SurveyRow::Theory theory) {
  switch (theory) {
    case SurveyRow::Theory::Seg: return "SEG";
    case SurveyRow::Theory::NotSeg: return "not-SEG";
    case SurveyRow::Theory::Conjectured: return "conjectured";
    case SurveyRow::Theory::Uncovered: return "uncovered";
  }
  return "?";
}

std::string_view to_string(SurveyRow::Oracle oracle) {
  switch (oracle) {
    case SurveyRow::Oracle::Found: return "found";
    case SurveyRow::Oracle::None: return "none";
    case SurveyRow::Oracle::Skipped: return "skipped";
    case SurveyRow::Oracle::Budget: return "budget";
  }
  return "?";
}

std::string_view to_string(SurveyRow::Agreement agreement) {
  switch (agreement) {
    case SurveyRow::Agreement::Agree: return "agree";
    case SurveyRow::Agreement::Disagree: return "DISAGREE";
    case SurveyRow::Agreement::Informational: return "informational";
    case SurveyRow::Agreement::Undecided: return "undecided";
  }
  return "?";
}

std::vector<SurveyRow> survey(int max_size, const SearchConfig& config) {
  std::vector<SurveyRow> rows;
  for (const TreeSpec& spec : enumerate_specs(max_size)) {
    const Classification c = classify(spec);
    SurveyRow row;
    row.spec = format_spec(spec);
    row.zeros = c.zeros;
    row.evens = c.evens;
    row.odds = c.odds;
    row.edges = spec.edge_count();
    row.dispatch = dispatch_tag(c.dispatch);

    bool construction_failed = false;
    switch (c.dispatch.kind) {
      case DispatchKind::Constructive:
        row.theory = SurveyRow::Theory::Seg;
        try {
          label_any(spec);
        } catch (const ConstructionFault&) {
          construction_failed = true;
        }
        break;
      case DispatchKind::NotSeg: row.theory = SurveyRow::Theory::NotSeg; break;
      case DispatchKind::Conjectured: row.theory = SurveyRow::Theory::Conjectured; break;
      case DispatchKind::Uncovered: row.theory = SurveyRow::Theory::Uncovered; break;
    }

    if (spec.edge_count() > kSearchGuardEdges && !config.override_guard) {
      row.oracle = SurveyRow::Oracle::Skipped;
    } else {
      SearchConfig find = config;
      find.mode = SearchMode::FindOne;
      const SearchOutcome out = search(RootedTree(spec), find);
      row.nodes = out.nodes_visited;
      switch (out.status) {
        case SearchOutcome::Status::Found: row.oracle = SurveyRow::Oracle::Found; break;
        case SearchOutcome::Status::ExhaustedNone: row.oracle = SurveyRow::Oracle::None; break;
        case SearchOutcome::Status::BudgetExceeded: row.oracle = SurveyRow::Oracle::Budget; break;
      }
    }

    if (row.theory == SurveyRow::Theory::Conjectured || row.theory == SurveyRow::Theory::Uncovered) {
      row.agreement = SurveyRow::Agreement::Informational;
    } else if (construction_failed) {
      row.agreement = SurveyRow::Agreement::Disagree;
    } else if (row.oracle == SurveyRow::Oracle::Found || row.oracle == SurveyRow::Oracle::None) {
      const bool theory_seg = row.theory == SurveyRow::Theory::Seg;
      const bool oracle_seg = row.oracle == SurveyRow::Oracle::Found;
      row.agreement = theory_seg == oracle_seg ? SurveyRow::Agreement::Agree : SurveyRow::Agreement::Disagree;
    } else {
      row.agreement = SurveyRow::Agreement::Undecided;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

struct SearchFlags {
  std::string budget = "10^8";
  bool no_break_negation = false;
  bool no_break_leaves = false;
  bool no_break_spine = false;
  bool no_pendant_zero = false;
  bool override_guard = false;
  int workers = 1;

  SearchConfig config() const {
    SearchConfig c;
    c.node_budget = parse_budget(budget);
    c.break_negation = !no_break_negation;
    c.break_leaf_permutations = !no_break_leaves;
    c.break_equal_spine_vertices = !no_break_spine;
    c.prune_pendant_zero = !no_pendant_zero;
    c.override_guard = override_guard;
    c.workers = workers;
    return c;
  }
};

void add_search_flags(CLI::App* cmd, SearchFlags& flags, bool full) {
  cmd->add_option("--search-budget", flags.budget, "node budget for the search oracle (N or a^b)");
  cmd->add_flag("--override-guard", flags.override_guard, "allow searches on more than 24 edges");
  cmd->add_option("--workers", flags.workers, "search worker threads")->check(CLI::PositiveNumber);
  if (!full) return;
  cmd->add_flag("--no-break-negation", flags.no_break_negation, "do not quotient by negation");
  cmd->add_flag("--no-break-leaves", flags.no_break_leaves, "do not quotient by leaf permutations");
  cmd->add_flag("--no-break-spine", flags.no_break_spine, "do not quotient by equal spine vertices");
  cmd->add_flag("--no-pendant-zero", flags.no_pendant_zero, "disable the pendant-zero pruning rule");
}

std::string certificate_path(const std::string& dir, const TreeSpec& spec) {
  std::string name = format_spec(spec);
  std::string file;
  for (char c : name) {
    if (c == '(' || c == ',') file += '_';
    else if (c != ')') file += c;
  }
  return (std::filesystem::path(dir) / (file + ".json")).string();
}

std::string write_certificate_file(const std::string& dir, const RootedTree& tree, const SearchConfig& config) {
  const Certificate cert = certify_not_seg(tree, config);
  std::filesystem::create_directories(dir);
  const std::string path = certificate_path(dir, tree.spec());
  std::ofstream(path) << write_certificate(cert);
  return path;
}

ordered_json classification_json(const TreeSpec& spec, const Classification& c) {
  ordered_json j;
  j["spec"] = format_spec(spec);
  j["family"] = to_string(c.family);
  j["j"] = c.zeros;
  j["k"] = c.evens;
  j["l"] = c.odds;
  j["q"] = spec.edge_count();
  j["size_parity"] = c.even_size ? "even" : "odd";
  j["dispatch"] = {{"kind", to_string(c.dispatch.kind)},
                   {"tag", dispatch_tag(c.dispatch)},
                   {"case", c.dispatch.case_no},
                   {"r", c.dispatch.r},
                   {"s", c.dispatch.s},
                   {"t", c.dispatch.t}};
  return j;
}

std::string status_phrase(const Dispatch& d) {
  switch (d.kind) {
    case DispatchKind::Constructive: return "constructive";
    case DispatchKind::NotSeg: return "not SEG (non-existence lemma)";
    case DispatchKind::Conjectured: return "conjectured SEG (conjecture " + std::to_string(d.conjecture) + ")";
    case DispatchKind::Uncovered: return "uncovered";
  }
  return "?";
}

void print_labeling_text(std::ostream& out, const RootedTree& tree, const EdgeLabeling& f) {
  const VertexLabeling sums = induce(tree, f);
  out << "vertex v0 label " << sums[0] << "\n";
  for (int e = 0; e < tree.edge_count(); ++e) {
    const VertexId child = RootedTree::edge_child(e);
    out << "edge " << tree.vertex_name(tree.parent(child)) << "-" << tree.vertex_name(child) << " " << f.at(e)
        << "  vertex " << tree.vertex_name(child) << " label " << sums[static_cast<std::size_t>(child)] << "\n";
  }
}

int cmd_classify(const std::string& text, bool json_out, std::ostream& out) {
  const TreeSpec spec = parse_spec(text);
  const Classification c = classify(spec);
  if (json_out) {
    out << classification_json(spec, c).dump(2) << "\n";
    return kPositive;
  }
  out << to_string(c.family) << ", " << status_phrase(c.dispatch) << "\n";
  out << "  spec " << format_spec(spec) << "; (j,k,l)=(" << c.zeros << "," << c.evens << "," << c.odds
      << "); q=" << spec.edge_count() << " (" << (c.even_size ? "even" : "odd") << "); dispatch "
      << dispatch_tag(c.dispatch);
  if (c.dispatch.kind == DispatchKind::Constructive) {
    if (c.dispatch.case_no) out << " case " << c.dispatch.case_no;
    out << " (r=" << c.dispatch.r << ", s=" << c.dispatch.s << ", t=" << c.dispatch.t << ")";
  }
  out << "\n";
  return kPositive;
}

int cmd_label(const std::string& text, bool json_out, const std::optional<std::string>& budget,
              const SearchFlags& flags, const std::string& out_path, const std::string& cert_dir,
              std::ostream& out) {
  const TreeSpec spec = parse_spec(text);
  const RootedTree tree(spec);
  std::optional<SearchConfig> fallback;
  if (budget) {
    SearchFlags with_budget = flags;
    with_budget.budget = *budget;
    fallback = with_budget.config();
  }
  const LabelOutcome result = label_any(spec, fallback);

  std::string certificate;
  if (result.status == LabelOutcome::Status::ProvedNotSeg && result.source == LabelOutcome::Source::Exhaustion)
    certificate = write_certificate_file(cert_dir, tree, *fallback);

  if (result.status == LabelOutcome::Status::Labeled) {
    const std::string doc = write_labeling(tree, *result.labeling);
    if (!out_path.empty()) std::ofstream(out_path) << doc;
    if (json_out) {
      auto j = ordered_json::parse(doc);
      j["status"] = "labeled";
      j["source"] = result.tag();
      out << j.dump(2) << "\n";
    } else {
      out << format_spec(spec) << ": SEG labeling via " << result.tag() << "\n";
      print_labeling_text(out, tree, *result.labeling);
      if (!out_path.empty()) out << "written to " << out_path << "\n";
    }
    return kPositive;
  }

  if (json_out) {
    ordered_json j;
    j["spec"] = format_spec(spec);
    j["status"] = to_string(result.status);
    j["source"] = result.tag();
    if (result.search) j["search"] = to_string(result.search->status);
    if (!certificate.empty()) j["certificate"] = certificate;
    out << j.dump(2) << "\n";
  } else if (result.status == LabelOutcome::Status::ProvedNotSeg) {
    out << format_spec(spec) << ": not SEG (" << result.tag() << ")\n";
    if (!certificate.empty()) out << "certificate written to " << certificate << "\n";
  } else {
    out << format_spec(spec) << ": undecided (" << result.tag();
    if (result.search) out << ", search " << to_string(result.search->status);
    out << ")\n";
  }
  return result.status == LabelOutcome::Status::ProvedNotSeg ? kNegative : kUndecided;
}

int cmd_verify(const std::string& path, bool json_out, std::ostream& out) {
  const LabelingDocument doc = load_labeling_file(path);
  const VerificationReport report = verify_document(doc);
  if (json_out) {
    ordered_json j;
    j["spec"] = format_spec(doc.spec);
    j["is_seg"] = report.is_seg;
    ordered_json violations = ordered_json::array();
    for (const Violation& v : report.violations)
      violations.push_back({{"kind", to_string(v.kind)},
                            {"surplus", v.surplus},
                            {"missing", v.missing},
                            {"detail", v.detail}});
    j["violations"] = std::move(violations);
    out << j.dump(2) << "\n";
  } else if (report.is_seg) {
    out << format_spec(doc.spec) << ": SEG\n";
  } else {
    out << format_spec(doc.spec) << ": not SEG\n";
    for (const Violation& v : report.violations) out << "  " << describe(v) << "\n";
  }
  return report.is_seg ? kPositive : kNegative;
}

int cmd_search(const std::string& text, bool json_out, bool exhaust, bool count, const SearchFlags& flags,
               const std::string& cert_dir, std::ostream& out) {
  const TreeSpec spec = parse_spec(text);
  const RootedTree tree(spec);
  SearchConfig config = flags.config();
  config.mode = count ? SearchMode::CountAll : exhaust ? SearchMode::ExhaustAll : SearchMode::FindOne;
  const SearchOutcome result = search(tree, config);

  std::string certificate;
  if (result.status == SearchOutcome::Status::ExhaustedNone) {
    SearchConfig full = config;
    full.mode = SearchMode::ExhaustAll;
    certificate = write_certificate_file(cert_dir, tree, full);
  }

  if (json_out) {
    ordered_json j;
    j["spec"] = format_spec(spec);
    j["outcome"] = to_string(result.status);
    j["nodes_visited"] = result.nodes_visited;
    if (result.count) j["count"] = *result.count;
    if (result.labeling) j["labeling"] = ordered_json::parse(write_labeling(tree, *result.labeling));
    if (!certificate.empty()) j["certificate"] = certificate;
    out << j.dump(2) << "\n";
  } else {
    out << format_spec(spec) << ": " << to_string(result.status);
    if (!certificate.empty()) out << ", certificate written";
    out << " (" << result.nodes_visited << " nodes";
    if (result.count) out << ", " << *result.count << " labelings";
    out << ")\n";
    if (result.labeling) print_labeling_text(out, tree, *result.labeling);
    if (!certificate.empty()) out << "certificate: " << certificate << "\n";
  }
  switch (result.status) {
    case SearchOutcome::Status::Found: return kPositive;
    case SearchOutcome::Status::ExhaustedNone: return kNegative;
    case SearchOutcome::Status::BudgetExceeded: return kUndecided;
  }
  return kUndecided;
}

int cmd_survey(int max_size, bool json_out, const SearchFlags& flags, std::ostream& out) {
  const auto rows = survey(max_size, flags.config());
  int disagreements = 0;
  int undecided = 0;
  for (const SurveyRow& row : rows) {
    disagreements += row.agreement == SurveyRow::Agreement::Disagree ? 1 : 0;
    undecided += row.agreement == SurveyRow::Agreement::Undecided ? 1 : 0;
  }
  if (json_out) {
    ordered_json j = ordered_json::array();
    for (const SurveyRow& row : rows)
      j.push_back({{"spec", row.spec},
                   {"j", row.zeros},
                   {"k", row.evens},
                   {"l", row.odds},
                   {"q", row.edges},
                   {"dispatch", row.dispatch},
                   {"theory", to_string(row.theory)},
                   {"oracle", to_string(row.oracle)},
                   {"agreement", to_string(row.agreement)},
                   {"nodes", row.nodes}});
    out << ordered_json{{"rows", j}, {"disagreements", disagreements}, {"undecided", undecided}}.dump(2) << "\n";
  } else {
    out << std::left << std::setw(22) << "spec" << std::setw(10) << "(j,k,l)" << std::setw(4) << "q"
        << std::setw(22) << "dispatch" << std::setw(13) << "theory" << std::setw(9) << "oracle"
        << "agreement\n";
    for (const SurveyRow& row : rows) {
      const std::string jkl =
          "(" + std::to_string(row.zeros) + "," + std::to_string(row.evens) + "," + std::to_string(row.odds) + ")";
      out << std::setw(22) << row.spec << std::setw(10) << jkl << std::setw(4) << row.edges << std::setw(22)
          << row.dispatch << std::setw(13) << to_string(row.theory) << std::setw(9) << to_string(row.oracle)
          << to_string(row.agreement) << "\n";
    }
    out << rows.size() << " specs, " << disagreements << " disagreements, " << undecided << " undecided\n";
  }
  if (disagreements) return kNegative;
  return undecided ? kUndecided : kPositive;
}

int cmd_export(const std::string& target, std::ostream& out) {
  if (std::filesystem::is_regular_file(target)) {
    const LabelingDocument doc = load_labeling_file(target);
    const RootedTree tree(doc.spec);
    if (!doc.unknown_keys.empty() || !doc.labeling.is_total())
      throw LabelingError("labeling file does not cover the tree's edges exactly");
    out << export_dot(tree, doc.labeling);
  } else {
    out << export_dot(RootedTree(parse_spec(target)));
  }
  return kPositive;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Super edge-graceful labelings of diameter-4 trees", "seg"};
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  };

  std::string spec_text;
  std::string path;
  SearchFlags flags;
  std::optional<std::string> label_budget;
  std::string out_path;
  std::string cert_dir = "certificates";
  bool exhaust = false;
  bool count = false;
  bool dot = false;
  int max_size = 9;

  auto* classify_cmd = app.add_subcommand("classify", "family, parity and dispatch of a spec");
  classify_cmd->add_option("spec", spec_text, "tree spec, e.g. RT(0^4,2,6)")->required();
  add_format(classify_cmd);

  auto* label_cmd = app.add_subcommand("label", "construct a SEG labeling");
  label_cmd->add_option("spec", spec_text, "tree spec")->required();
  label_cmd->add_option("--search-budget", label_budget, "fall back to search for open families");
  label_cmd->add_option("--out", out_path, "write the labeling file here");
  label_cmd->add_option("--certificates-dir", cert_dir, "where non-existence certificates go");
  label_cmd->add_flag("--override-guard", flags.override_guard, "allow fallback searches on more than 24 edges");
  label_cmd->add_option("--workers", flags.workers, "search worker threads")->check(CLI::PositiveNumber);
  add_format(label_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "check a labeling file");
  verify_cmd->add_option("file", path, "labeling file")->required();
  add_format(verify_cmd);

  auto* search_cmd = app.add_subcommand("search", "exhaustive search for a SEG labeling");
  search_cmd->add_option("spec", spec_text, "tree spec")->required();
  search_cmd->add_flag("--exhaust", exhaust, "traverse the whole space");
  search_cmd->add_flag("--count", count, "count all labelings");
  search_cmd->add_option("--certificates-dir", cert_dir, "where non-existence certificates go");
  add_search_flags(search_cmd, flags, true);
  add_format(search_cmd);

  auto* survey_cmd = app.add_subcommand("survey", "compare theory with the search oracle");
  survey_cmd->add_option("--max-size", max_size, "largest edge count")->check(CLI::Range(4, 60));
  add_search_flags(survey_cmd, flags, false);
  add_format(survey_cmd);

  auto* export_cmd = app.add_subcommand("export", "emit a DOT graph for a spec or labeling file");
  export_cmd->add_option("target", spec_text, "spec string or labeling file")->required();
  export_cmd->add_flag("--dot", dot, "DOT output (the only format)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPositive;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPositive;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const bool json_out = format == "json";
  try {
    if (*classify_cmd) return cmd_classify(spec_text, json_out, out);
    if (*label_cmd) return cmd_label(spec_text, json_out, label_budget, flags, out_path, cert_dir, out);
    if (*verify_cmd) return cmd_verify(path, json_out, out);
    if (*search_cmd) return cmd_search(spec_text, json_out, exhaust, count, flags, cert_dir, out);
    if (*survey_cmd) return cmd_survey(max_size, json_out, flags, out);
    if (*export_cmd) return cmd_export(spec_text, out);
  } catch (const SpecError& e) {
    err << "spec error: " << e.what() << "\n";
    return kUsage;
  } catch (const SearchError& e) {
    err << "search error: " << e.what() << "\n";
    return e.kind() == SearchError::Kind::BudgetExceeded ? kUndecided : kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace seg::cli
