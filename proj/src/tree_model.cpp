#include "seg/tree_model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace seg {

namespace {

constexpr int kMaxCount = 1'000'000;

int rank_class(int a) {
  if (a == 0) return 0;
  return a % 2 == 0 ? 1 : 2;
}

}  // namespace

TreeSpec::TreeSpec(std::vector<int> counts) : counts_(std::move(counts)) {
  edges_ = size();
  for (int a : counts_) {
    edges_ += a;
    if (a == 0)
      ++zeros_;
    else if (a % 2 == 0)
      ++evens_;
    else
      ++odds_;
  }
}

TreeSpec TreeSpec::canonicalize(std::vector<int> raw) {
  for (int a : raw) {
    if (a < 0) throw SpecError(SpecError::Kind::Syntax, "negative child count");
    if (a > kMaxCount) throw SpecError(SpecError::Kind::Syntax, "child count too large");
  }
  std::stable_sort(raw.begin(), raw.end(), [](int x, int y) {
    const int cx = rank_class(x);
    const int cy = rank_class(y);
    return cx != cy ? cx < cy : x < y;
  });
  const auto positive = std::count_if(raw.begin(), raw.end(), [](int a) { return a > 0; });
  if (positive < 2)
    throw SpecError(SpecError::Kind::NotDiameterFour,
                    "diameter 4 needs at least two spine vertices with children");
  return TreeSpec(std::move(raw));
}

// ---------------------------------------------------------------------------
// Parsing and formatting

namespace {

int parse_int(std::string_view token, std::string_view whole) {
  if (token.empty())
    throw SpecError(SpecError::Kind::Syntax, "missing integer in '" + std::string(whole) + "'");
  int value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec == std::errc::result_out_of_range || (ec == std::errc() && value > kMaxCount))
    throw SpecError(SpecError::Kind::Syntax, "integer out of range: " + std::string(token));
  if (ec != std::errc() || ptr != end || token.front() == '-' || token.front() == '+')
    throw SpecError(SpecError::Kind::Syntax, "malformed integer '" + std::string(token) + "'");
  return value;
}

}  // namespace

TreeSpec parse_spec(std::string_view text) {
  std::string compact;
  compact.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);

  std::string_view body = compact;
  if (body.size() >= 2 && std::tolower(static_cast<unsigned char>(body[0])) == 'r' &&
      std::tolower(static_cast<unsigned char>(body[1])) == 't') {
    if (body.size() < 4 || body[2] != '(' || body.back() != ')')
      throw SpecError(SpecError::Kind::Syntax, "expected RT(...) in '" + std::string(text) + "'");
    body = body.substr(3, body.size() - 4);
  }
  if (body.empty()) throw SpecError(SpecError::Kind::EmptySpec, "empty spec");

  std::vector<int> counts;
  while (true) {
    const auto comma = body.find(',');
    const std::string_view item = body.substr(0, comma);
    const auto caret = item.find('^');
    if (caret == std::string_view::npos) {
      counts.push_back(parse_int(item, text));
    } else {
      const int value = parse_int(item.substr(0, caret), text);
      const int times = parse_int(item.substr(caret + 1), text);
      if (times > kMaxCount - static_cast<int>(counts.size()))
        throw SpecError(SpecError::Kind::Syntax, "repetition too large");
      counts.insert(counts.end(), static_cast<std::size_t>(times), value);
    }
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if (counts.empty()) throw SpecError(SpecError::Kind::EmptySpec, "spec lists no spine vertices");
  return TreeSpec::canonicalize(std::move(counts));
}

std::string format_spec(const TreeSpec& spec) {
  std::string out = "RT(";
  const auto counts = spec.counts();
  for (std::size_t i = 0; i < counts.size();) {
    std::size_t run = 1;
    while (i + run < counts.size() && counts[i + run] == counts[i]) ++run;
    if (i != 0) out += ',';
    out += std::to_string(counts[i]);
    if (run > 1) out += '^' + std::to_string(run);
    i += run;
  }
  out += ')';
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// Multisets of child counts as nonincreasing sequences, total edges <= q_max.
void grow(std::vector<int>& current, int max_value, int edges, int q_max,
          std::vector<TreeSpec>& out) {
  if (std::count_if(current.begin(), current.end(), [](int a) { return a > 0; }) >= 2)
    out.push_back(TreeSpec::canonicalize(current));
  for (int value = max_value; value >= 0; --value) {
    if (edges + 1 + value > q_max) continue;
    current.push_back(value);
    grow(current, value, edges + 1 + value, q_max, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<TreeSpec> enumerate_specs(int q_max) {
  if (q_max < 4) throw SpecError(SpecError::Kind::EmptyRange, "no diameter-4 tree has fewer than 4 edges");
  std::vector<TreeSpec> out;
  std::vector<int> current;
  grow(current, q_max, 0, q_max, out);
  std::sort(out.begin(), out.end(), [](const TreeSpec& x, const TreeSpec& y) {
    if (x.edge_count() != y.edge_count()) return x.edge_count() < y.edge_count();
    return std::lexicographical_compare(x.counts().begin(), x.counts().end(), y.counts().begin(),
                                        y.counts().end());
  });
  return out;
}

// ---------------------------------------------------------------------------
// RootedTree

RootedTree::RootedTree(TreeSpec spec) : spec_(std::move(spec)) {
  const int n = spec_.size();
  first_leaf_.assign(static_cast<std::size_t>(n) + 2, 0);
  owner_.assign(static_cast<std::size_t>(spec_.vertex_count()), 0);
  VertexId next = n + 1;
  for (int i = 1; i <= n; ++i) {
    owner_[static_cast<std::size_t>(i)] = i;
    first_leaf_[static_cast<std::size_t>(i)] = next;
    for (int m = 0; m < spec_.count(i); ++m) owner_[static_cast<std::size_t>(next++)] = i;
  }
  first_leaf_[static_cast<std::size_t>(n) + 1] = next;
}

VertexId RootedTree::spine(int i) const {
  if (i < 1 || i > spine_size()) throw std::out_of_range("spine index");
  return i;
}

VertexId RootedTree::leaf(int i, int m) const {
  if (i < 1 || i > spine_size() || m < 1 || m > spec_.count(i)) throw std::out_of_range("leaf index");
  return first_leaf_[static_cast<std::size_t>(i)] + m - 1;
}

VertexId RootedTree::parent(VertexId v) const {
  if (v <= 0 || v >= vertex_count()) throw std::out_of_range("vertex has no parent");
  return is_leaf(v) ? owner_[static_cast<std::size_t>(v)] : root();
}

int RootedTree::spine_index(VertexId v) const {
  if (v < 0 || v >= vertex_count()) throw std::out_of_range("vertex id");
  return owner_[static_cast<std::size_t>(v)];
}

bool RootedTree::is_pendant(VertexId v) const { return degree(v) == 1; }

int RootedTree::degree(VertexId v) const {
  if (v == root()) return spine_size();
  if (is_leaf(v)) return 1;
  return 1 + spec_.count(spine_index(v));
}

std::string RootedTree::vertex_name(VertexId v) const {
  if (v == root()) return "v0";
  const int i = spine_index(v);
  if (!is_leaf(v)) return "v" + std::to_string(i);
  return "v" + std::to_string(i) + "." + std::to_string(v - first_leaf_[static_cast<std::size_t>(i)] + 1);
}

std::optional<VertexId> RootedTree::find_vertex(std::string_view name) const {
  if (name.size() < 2 || name[0] != 'v') return std::nullopt;
  name.remove_prefix(1);
  auto read = [](std::string_view digits) -> std::optional<int> {
    int value = 0;
    const auto* end = digits.data() + digits.size();
    const auto [ptr, ec] = std::from_chars(digits.data(), end, value);
    if (digits.empty() || ec != std::errc() || ptr != end || digits.front() == '+') return std::nullopt;
    return value;
  };
  const auto dot = name.find('.');
  const auto i = read(name.substr(0, dot));
  if (!i) return std::nullopt;
  if (dot == std::string_view::npos) {
    if (*i == 0) return root();
    if (*i < 1 || *i > spine_size()) return std::nullopt;
    return spine(*i);
  }
  const auto m = read(name.substr(dot + 1));
  if (!m || *i < 1 || *i > spine_size() || *m < 1 || *m > spec_.count(*i)) return std::nullopt;
  return leaf(*i, *m);
}

// ---------------------------------------------------------------------------
// Classification

namespace {

Dispatch constructive(Lemma lemma, int r, int s, int t, int case_no = 0) {
  return Dispatch{DispatchKind::Constructive, lemma, 0, case_no, r, s, t};
}

Dispatch not_seg(Lemma lemma, int r = 0, int t = 0) {
  return Dispatch{DispatchKind::NotSeg, lemma, 0, 0, r, 0, t};
}

Dispatch conjectured(int which) { return Dispatch{DispatchKind::Conjectured, std::nullopt, which, 0, 0, 0, 0}; }

Dispatch dispatch_caterpillar(int j, int x, int y, bool even_size) {
  const bool j_even = j % 2 == 0;
  if (even_size) {
    if (j_even) {
      if (x % 2 == 0) return constructive(Lemma::EvenSameParity, j / 2, x / 2, y / 2, 1);
      return constructive(Lemma::EvenSameParity, j / 2, (x + 1) / 2, (y + 1) / 2, 2);
    }
    return constructive(Lemma::OddOppParity, (j + 1) / 2, x / 2, (y + 1) / 2);
  }
  if (j_even) return constructive(Lemma::EvenOppParity, j / 2, x / 2, (y + 1) / 2);
  if (x % 2 == 0) return constructive(Lemma::OddEvenEven, (j + 1) / 2, x / 2, y / 2);
  if (x == 1 && (j == 1 || y == 1)) return not_seg(Lemma::NonSegCaterpillar, (j - 1) / 2, (y - 1) / 2);
  if (x == 1) return constructive(Lemma::OddLeadingOne, (j - 1) / 2, 0, (y - 1) / 2);
  return constructive(Lemma::OddOddOdd, (j - 1) / 2, (x - 1) / 2, (y - 1) / 2);
}

Dispatch dispatch_lobster(const TreeSpec& spec, bool even_size) {
  const int j = spec.zeros();
  const int k = spec.evens();
  const int l = spec.odds();
  if (even_size) {
    if (j % 2 == 1) {
      if (l % 2 == 1) return constructive(Lemma::AllOdd, (j + 1) / 2, (k - 1) / 2, (l - 1) / 2);
      return constructive(Lemma::JkOddLEven, (j + 1) / 2, (k - 1) / 2, l / 2);
    }
    if (l % 2 == 1) return constructive(Lemma::JkEvenLOdd, j / 2, k / 2, (l - 1) / 2);
    return constructive(Lemma::AllEven, j / 2, k / 2, l / 2);
  }
  if (j % 2 == 0) {
    if (l % 2 == 1) {
      const int t = (l - 1) / 2;
      return constructive(Lemma::JEvenKlOdd, j / 2, (k + 1) / 2, t, t == 0 ? 1 : 2);
    }
    if (k >= 3) {
      const int t = l / 2;
      return constructive(Lemma::JlEvenKOdd, j / 2, (k - 1) / 2, t, t == 0 ? 1 : 2);
    }
    if (k == 1 && l >= 2) return conjectured(1);
  } else {
    const auto counts = spec.counts();
    const bool all_ones = std::all_of(counts.begin() + j, counts.end(), [](int a) { return a == 1; });
    if (k == 0 && all_ones && l >= 3) return not_seg(Lemma::BadLobster);
    if (k >= 2 && (l == 1 || l == 2)) return constructive(Lemma::JOddKlEven, (j - 1) / 2, k / 2, 0, l);
    if (k >= 4 && l == 0) return Dispatch{};
    if (l >= 4 && l % 2 == 0) return conjectured(2);
    if (l >= 3 && l % 2 == 1) return conjectured(3);
  }
  throw std::logic_error("no dispatch arm for " + format_spec(spec));
}

}  // namespace

Classification classify(const TreeSpec& spec) {
  Classification c;
  c.zeros = spec.zeros();
  c.evens = spec.evens();
  c.odds = spec.odds();
  c.even_size = spec.edge_count() % 2 == 0;
  c.halves.assign(static_cast<std::size_t>(spec.size()) + 1, 0);
  for (int i = 1; i <= spec.size(); ++i) c.halves[static_cast<std::size_t>(i)] = spec.count(i) / 2;

  if (c.evens + c.odds == 2) {
    c.family = c.even_size ? Family::EvenCaterpillar : Family::OddCaterpillar;
    c.dispatch = dispatch_caterpillar(c.zeros, spec.count(c.zeros + 1), spec.count(c.zeros + 2), c.even_size);
  } else {
    c.family = c.even_size ? Family::EvenLobster : Family::OddLobster;
    c.dispatch = dispatch_lobster(spec, c.even_size);
  }
  return c;
}

bool is_caterpillar(Family family) noexcept {
  return family == Family::EvenCaterpillar || family == Family::OddCaterpillar;
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::EvenCaterpillar: return "EvenCaterpillar";
    case Family::OddCaterpillar: return "OddCaterpillar";
    case Family::EvenLobster: return "EvenLobster";
    case Family::OddLobster: return "OddLobster";
  }
  return "?";
}

std::string_view to_string(DispatchKind kind) {
  switch (kind) {
    case DispatchKind::Constructive: return "constructive";
    case DispatchKind::NotSeg: return "not-seg";
    case DispatchKind::Conjectured: return "conjectured";
    case DispatchKind::Uncovered: return "uncovered";
  }
  return "?";
}

std::string_view lemma_tag(Lemma lemma) {
  switch (lemma) {
    case Lemma::EvenSameParity: return "e,sameparity";
    case Lemma::OddOppParity: return "o,oppparity";
    case Lemma::EvenOppParity: return "e,oppparity";
    case Lemma::OddEvenEven: return "o,e,e";
    case Lemma::NonSegCaterpillar: return "nonSEGcaterpillars";
    case Lemma::OddLeadingOne: return "a_{j+1}=1";
    case Lemma::OddOddOdd: return "o,o,o";
    case Lemma::AllOdd: return "j,k,l-odd";
    case Lemma::JkEvenLOdd: return "j,k-even,l-odd";
    case Lemma::AllEven: return "j,k,l-even";
    case Lemma::JkOddLEven: return "j,k-odd,l-even";
    case Lemma::JEvenKlOdd: return "j-even,k,l-odd";
    case Lemma::JlEvenKOdd: return "j,l-even,k-odd";
    case Lemma::BadLobster: return "badlobsters";
    case Lemma::JOddKlEven: return "j-odd,k,l-even";
  }
  return "?";
}

std::string dispatch_tag(const Dispatch& dispatch) {
  switch (dispatch.kind) {
    case DispatchKind::Constructive:
    case DispatchKind::NotSeg: return "L-" + std::string(lemma_tag(*dispatch.lemma));
    case DispatchKind::Conjectured: return "conjecture-" + std::to_string(dispatch.conjecture);
    case DispatchKind::Uncovered: return "uncovered";
  }
  return "?";
}

}  // namespace seg
