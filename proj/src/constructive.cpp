#include "seg/constructive.hpp"

#include <sstream>

namespace seg {

namespace {

// Writes labels onto RT(a_1..a_n) using the 1-based e_{0,i} / e_{i,m}
// indexing of the constructions. Each edge may be written once.
class Builder {
 public:
  Builder(const TreeSpec& spec, const Classification& c)
      : tree_(spec), c_(c), f_(tree_.edge_count()) {}

  const RootedTree& tree() const { return tree_; }
  int n() const { return tree_.spine_size(); }
  int b(int i) const { return c_.half(i); }

  /// Sum of b_z for lo <= z <= hi (0 for an empty range).
  Label b_sum(int lo, int hi) const {
    Label total = 0;
    for (int z = lo; z <= hi; ++z) total += b(z);
    return total;
  }

  void spine(int i, Label value) {
    if (i < 1 || i > n()) fault("spine edge e_{0," + std::to_string(i) + "} does not exist");
    write(RootedTree::parent_edge(tree_.spine(i)), value, "e_{0," + std::to_string(i) + "}");
  }

  void leaf(int i, int m, Label value) {
    const std::string name = "e_{" + std::to_string(i) + "," + std::to_string(m) + "}";
    if (i < 1 || i > n() || m < 1 || m > tree_.spec().count(i)) fault("leaf edge " + name + " does not exist");
    write(RootedTree::parent_edge(tree_.leaf(i, m)), value, name);
  }

  // Pair m of an even vertex: e_{i,2m-1} = v, e_{i,2m} = -v.
  void even_pair(int i, int m, Label value) {
    leaf(i, 2 * m - 1, value);
    leaf(i, 2 * m, -value);
  }

  // Pair m of an odd vertex: e_{i,2m} = v, e_{i,2m+1} = -v (e_{i,1} is set separately).
  void odd_pair(int i, int m, Label value) {
    leaf(i, 2 * m, value);
    leaf(i, 2 * m + 1, -value);
  }

  EdgeLabeling release() const {
    const VerificationReport report = verify(tree_, f_);
    if (!report.is_seg) {
      std::string why;
      for (const Violation& v : report.violations) why += (why.empty() ? "" : "; ") + describe(v);
      fault(why);
    }
    return f_;
  }

  [[noreturn]] void fault(const std::string& what) const {
    const Dispatch& d = c_.dispatch;
    std::ostringstream out;
    out << dispatch_tag(d) << " case " << d.case_no << " (r=" << d.r << ", s=" << d.s << ", t=" << d.t
        << ") on " << format_spec(tree_.spec()) << ": " << what;
    throw ConstructionFault(out.str());
  }

 private:
  void write(int edge, Label value, const std::string& name) {
    if (f_.has(edge)) fault(name + " assigned twice");
    f_.set(edge, value);
  }

  RootedTree tree_;
  const Classification& c_;
  EdgeLabeling f_;
};

// ---------------------------------------------------------------------------
// Even-size caterpillars RT(0^j, a_{j+1}, a_{j+2})

// j = 2r. Case 1: a = 2s, 2t. Case 2: a = 2s-1, 2t-1.
void even_same_parity(Builder& f, const Dispatch& d) {
  const int r = d.r, s = d.s, t = d.t;
  if (d.case_no == 1) {
    for (int i = 1; i <= r + 1; ++i) {
      f.spine(2 * i - 1, i);
      f.spine(2 * i, -i);
    }
    for (int i = 1; i <= s; ++i) f.even_pair(2 * r + 1, i, r + 1 + i);
    for (int i = 1; i <= t; ++i) f.even_pair(2 * r + 2, i, r + s + 1 + i);
    return;
  }
  f.spine(2 * r + 1, 1);
  f.spine(2 * r + 2, -1);
  f.leaf(2 * r + 1, 1, -2);
  f.leaf(2 * r + 2, 1, 2);
  for (int i = 1; i <= r; ++i) {
    f.spine(2 * i - 1, 2 + i);
    f.spine(2 * i, -(2 + i));
  }
  for (int i = 1; i <= s - 1; ++i) f.odd_pair(2 * r + 1, i, r + 2 + i);
  for (int i = 1; i <= t - 1; ++i) f.odd_pair(2 * r + 2, i, r + s + 1 + i);
}

// j = 2r-1, a_{2r} = 2s, a_{2r+1} = 2t-1.
void odd_opp_parity(Builder& f, const Dispatch& d) {
  const int r = d.r, s = d.s, t = d.t;
  f.spine(2 * r + 1, 1);
  f.leaf(2 * r + 1, 1, -1);
  for (int i = 1; i <= r; ++i) {
    f.spine(2 * i - 1, 1 + i);
    f.spine(2 * i, -(1 + i));
  }
  for (int i = 1; i <= s; ++i) f.even_pair(2 * r, i, r + 1 + i);
  for (int i = 1; i <= t - 1; ++i) f.odd_pair(2 * r + 1, i, r + s + 1 + i);
}

// ---------------------------------------------------------------------------
// Odd-size caterpillars

// j = 2r, a_{2r+1} = 2s, a_{2r+2} = 2t-1.
void even_opp_parity(Builder& f, const Dispatch& d) {
  const int r = d.r, s = d.s, t = d.t;
  const Label top = r + s + t;
  f.spine(2 * r + 1, 0);
  f.spine(2 * r + 2, 1);
  f.leaf(2 * r + 1, 1, -1);
  f.leaf(2 * r + 1, 2, -top);
  f.leaf(2 * r + 2, 1, top);
  for (int i = 1; i <= r; ++i) {
    f.spine(2 * i - 1, 1 + i);
    f.spine(2 * i, -(1 + i));
  }
  for (int i = 2; i <= s; ++i) f.even_pair(2 * r + 1, i, r + i);
  for (int i = 1; i <= t - 1; ++i) f.odd_pair(2 * r + 2, i, r + s + i);
}

// j = 2r-1, a_{2r} = 2s, a_{2r+1} = 2t. The leaf pairs live under v_{2r}
// and v_{2r+1}.
void odd_even_even(Builder& f, const Dispatch& d) {
  const int r = d.r, s = d.s, t = d.t;
  const Label top = r + s + t;
  f.spine(1, 1);
  f.spine(2 * r, 0);
  f.spine(2 * r + 1, top);
  f.leaf(2 * r, 1, -1);
  f.leaf(2 * r, 2, -top);
  for (int i = 1; i <= r - 1; ++i) {
    f.spine(2 * i, 1 + i);
    f.spine(2 * i + 1, -(1 + i));
  }
  for (int i = 1; i <= s - 1; ++i) {
    f.leaf(2 * r, 2 * i + 1, r + i);
    f.leaf(2 * r, 2 * i + 2, -(r + i));
  }
  for (int i = 1; i <= t; ++i) f.even_pair(2 * r + 1, i, r + s - 1 + i);
}

// j = 2r+1 >= 3, a_{j+1} = 1, a_{2r+3} = 2t+1 >= 3.
void odd_leading_one(Builder& f, const Dispatch& d) {
  const int r = d.r, t = d.t;
  const Label top = r + t + 2;
  f.spine(1, -1);
  f.spine(2, -2);
  f.spine(3, 3);
  f.spine(2 * r + 2, 1);
  f.spine(2 * r + 3, 0);
  f.leaf(2 * r + 2, 1, top);
  f.leaf(2 * r + 3, 1, 2);
  f.leaf(2 * r + 3, 2, -3);
  f.leaf(2 * r + 3, 3, -top);
  for (int i = 2; i <= r; ++i) {
    f.spine(2 * i, i + 2);
    f.spine(2 * i + 1, -(i + 2));
  }
  for (int i = 2; i <= t; ++i) f.odd_pair(2 * r + 3, i, r + 1 + i);
}

// j = 2r+1, a = 2s+1, 2t+1 with t >= s >= 1.
void odd_odd_odd(Builder& f, const Dispatch& d) {
  const int r = d.r, s = d.s, t = d.t;
  const Label top = r + s + t + 2;
  f.spine(1, top);
  f.spine(2 * r + 2, 1);
  f.spine(2 * r + 3, 0);
  f.leaf(2 * r + 2, 1, -1);
  f.leaf(2 * r + 2, 2, -2);
  f.leaf(2 * r + 2, 3, 3);
  f.leaf(2 * r + 3, 1, 2);
  f.leaf(2 * r + 3, 2, -3);
  f.leaf(2 * r + 3, 3, -top);
  for (int i = 1; i <= r; ++i) {
    f.spine(2 * i, 3 + i);
    f.spine(2 * i + 1, -(3 + i));
  }
  for (int i = 2; i <= s; ++i) f.odd_pair(2 * r + 2, i, r + 2 + i);
  for (int i = 2; i <= t; ++i) f.odd_pair(2 * r + 3, i, r + s + 1 + i);
}

// ---------------------------------------------------------------------------
// Even-size lobsters. The four lemmas share one layout: the odd-vertex block
// gets small spine labels and its e_{i,1} edges, everything before it gets
// +-(base + i) on the spine, and leaf pairs continue from a running offset.

// Leaf pairs for every vertex from `first` to n; offsets count b_z from `first`.
void lobster_leaf_pairs(Builder& f, int first, int last_even, Label base) {
  for (int i = first; i <= f.n(); ++i) {
    const Label offset = base + f.b_sum(first, i - 1);
    for (int m = 1; m <= f.b(i); ++m) {
      if (i <= last_even)
        f.even_pair(i, m, offset + m);
      else
        f.odd_pair(i, m, offset + m);
    }
  }
}

// l = 2t+1 odd; `first` is the first vertex after the zeros that gets pairs.
void odd_block_lobster(Builder& f, const Dispatch& d, int first) {
  const int r = d.r, s = d.s, t = d.t;
  const int head = r + s;  // spine pairs before the odd block
  f.spine(2 * head + 1, 1);
  for (int i = 1; i <= t; ++i) {
    f.spine(2 * (head + i), -(2 * i - 1));
    f.spine(2 * (head + i) + 1, 2 * i + 1);
  }
  f.leaf(2 * (head + t) + 1, 1, -(2 * t + 1));
  for (int i = 1; i <= t; ++i) {
    f.leaf(2 * (head + i) - 1, 1, -2 * (t + 1 - i));
    f.leaf(2 * (head + i), 1, 2 * (t + 1 - i));
  }
  for (int i = 1; i <= head; ++i) {
    f.spine(2 * i - 1, 2 * t + 1 + i);
    f.spine(2 * i, -(2 * t + 1 + i));
  }
  lobster_leaf_pairs(f, first, 2 * head, head + 2 * t + 1);
}

// l = 2t even.
void even_block_lobster(Builder& f, const Dispatch& d, int first) {
  const int r = d.r, s = d.s, t = d.t;
  const int head = r + s;
  for (int i = 1; i <= t; ++i) {
    f.spine(2 * (head + i) - 1, 2 * i - 1);
    f.spine(2 * (head + i), -(2 * i - 1));
    f.leaf(2 * (head + i) - 1, 1, -2 * (t + 1 - i));
    f.leaf(2 * (head + i), 1, 2 * (t + 1 - i));
  }
  for (int i = 1; i <= head; ++i) {
    f.spine(2 * i - 1, 2 * t + i);
    f.spine(2 * i, -(2 * t + i));
  }
  lobster_leaf_pairs(f, first, 2 * head, head + 2 * t);
}

// ---------------------------------------------------------------------------
// Odd-size lobsters

// j = 2r, k = 2s-1, l = 2t+1.
void j_even_kl_odd(Builder& f, const Dispatch& d) {
  const int r = d.r, s = d.s, t = d.t;
  const int n = f.n();
  const int lead = 2 * r + 1;  // first even vertex, its spine edge carries 0
  if (d.case_no == 1) {
    const Label top = r + s + f.b_sum(lead, n);
    f.spine(lead, 0);
    f.spine(2 * (r + s), 1);
    f.leaf(lead, 1, -1);
    f.leaf(2 * (r + s), 1, top);
    f.leaf(lead, 2, -top);
    for (int i = 1; i <= r; ++i) {
      f.spine(2 * i - 1, 1 + i);
      f.spine(2 * i, -(1 + i));
    }
    for (int i = 1; i <= s - 1; ++i) {
      f.spine(2 * (r + i), r + 1 + i);
      f.spine(2 * (r + i) + 1, -(r + 1 + i));
    }
    for (int m = 2; m <= f.b(lead); ++m) f.even_pair(lead, m, r + s - 1 + m);
    for (int i = lead + 1; i <= n; ++i)
      for (int m = 1; m <= f.b(i); ++m) {
        const Label v = r + s - 1 + m + f.b_sum(lead, i - 1);
        if (i <= 2 * (r + s) - 1)
          f.even_pair(i, m, v);
        else
          f.odd_pair(i, m, v);
      }
    return;
  }
  const Label top = r + s + 2 * t + f.b_sum(lead, n);
  f.spine(lead, 0);
  for (int i = 1; i <= t; ++i) {
    f.spine(2 * (r + s + i - 1), 2 * i - 1);
    f.spine(2 * (r + s + i) - 1, -(2 * i - 1));
  }
  f.spine(2 * (r + s + t), 2 * t + 1);
  f.leaf(lead, 1, -(2 * t + 1));
  f.leaf(2 * (r + s + t), 1, -2);
  f.leaf(lead, 2, 2);
  f.leaf(2 * (r + s), 1, top);
  f.leaf(2 * (r + s) + 1, 1, -top);
  for (int i = 1; i <= t - 1; ++i) {
    f.leaf(2 * (r + s + i), 1, -2 * (t - i + 1));
    f.leaf(2 * (r + s + i) + 1, 1, 2 * (t - i + 1));
  }
  for (int i = 1; i <= r; ++i) {
    f.spine(2 * i - 1, 2 * t + 1 + i);
    f.spine(2 * i, -(2 * t + 1 + i));
  }
  for (int i = 1; i <= s - 1; ++i) {
    f.spine(2 * (r + i), r + 2 * t + 1 + i);
    f.spine(2 * (r + i) + 1, -(r + 2 * t + 1 + i));
  }
  for (int m = 2; m <= f.b(lead); ++m) f.even_pair(lead, m, r + s + 2 * t - 1 + m);
  for (int i = lead + 1; i <= n; ++i)
    for (int m = 1; m <= f.b(i); ++m) {
      const Label v = r + s + 2 * t - 1 + m + f.b_sum(lead, i - 1);
      if (i <= 2 * (r + s) - 1)
        f.even_pair(i, m, v);
      else
        f.odd_pair(i, m, v);
    }
}

// j = 2r, k = 2s+1 >= 3, l = 2t.
void jl_even_k_odd(Builder& f, const Dispatch& d) {
  const int r = d.r, s = d.s, t = d.t;
  const int n = f.n();
  const int lead = 2 * r + 1;
  const int last_even = 2 * (r + s) + 1;
  if (d.case_no == 1) {
    const Label top = r + s + f.b_sum(lead, n);
    f.spine(lead, 0);
    f.spine(2 * r + 2, 1);
    f.spine(2 * r + 3, top);
    f.leaf(lead, 1, -1);
    f.leaf(lead, 2, -top);
    for (int i = 1; i <= r; ++i) {
      f.spine(2 * i - 1, 1 + i);
      f.spine(2 * i, -(1 + i));
    }
    for (int i = 2; i <= s; ++i) {
      f.spine(2 * (r + i), r + i);
      f.spine(2 * (r + i) + 1, -(r + i));
    }
    for (int m = 2; m <= f.b(lead); ++m) f.even_pair(lead, m, r + s - 1 + m);
    for (int i = lead + 1; i <= last_even; ++i)
      for (int m = 1; m <= f.b(i); ++m) f.even_pair(i, m, r + s - 1 + m + f.b_sum(lead, i - 1));
    return;
  }
  const Label top = r + s + 2 * t + f.b_sum(lead, n);
  f.spine(lead, 0);
  f.spine(2 * r + 2, 2);
  f.spine(2 * r + 3, -(2 * t + 1));
  f.leaf(lead, 1, -2);
  f.leaf(lead, 2, 2 * t + 1);
  f.leaf(2 * (r + s + 1), 1, top);
  f.leaf(2 * (r + s + 1) + 1, 1, -top);
  for (int i = 1; i <= r; ++i) {
    f.spine(2 * i - 1, 2 * t + 1 + i);
    f.spine(2 * i, -(2 * t + 1 + i));
  }
  for (int i = 2; i <= s; ++i) {
    f.spine(2 * (r + i), 2 * t + r + i);
    f.spine(2 * (r + i) + 1, -(2 * t + r + i));
  }
  for (int i = 1; i <= t; ++i) {
    f.spine(2 * (r + s + i), 2 * i - 1);
    f.spine(2 * (r + s + i) + 1, -(2 * i - 1));
  }
  for (int i = 2; i <= t; ++i) {
    f.leaf(2 * (r + s + i), 1, -2 * (t + 2 - i));
    f.leaf(2 * (r + s + i) + 1, 1, 2 * (t + 2 - i));
  }
  for (int m = 2; m <= f.b(lead); ++m) f.even_pair(lead, m, 2 * t + r + s - 1 + m);
  for (int i = lead + 1; i <= n; ++i)
    for (int m = 1; m <= f.b(i); ++m) {
      const Label v = 2 * t + r + s - 1 + m + f.b_sum(lead, i - 1);
      if (i <= last_even)
        f.even_pair(i, m, v);
      else
        f.odd_pair(i, m, v);
    }
}

// j = 2r+1, k = 2s, l = case_no (1 or 2).
void j_odd_kl_even(Builder& f, const Dispatch& d) {
  const int r = d.r, s = d.s;
  const int n = f.n();
  const int lead = 2 * r + 2;
  const int last_even = 2 * (r + s) + 1;
  if (d.case_no == 1) {
    const Label top = r + s + 1 + f.b_sum(lead, n);
    f.spine(lead, 0);
    f.spine(n, 1);
    f.leaf(lead, 1, -1);
    f.leaf(n, 1, top);
    f.leaf(lead, 2, -top);
    for (int i = 1; i <= r; ++i) {
      f.spine(2 * i - 1, 1 + i);
      f.spine(2 * i, -(1 + i));
    }
    f.spine(2 * r + 1, r + 2);
    f.spine(2 * r + 3, -(r + 2));
    for (int i = 2; i <= s; ++i) {
      f.spine(2 * (r + i), r + 1 + i);
      f.spine(2 * (r + i) + 1, -(r + 1 + i));
    }
    for (int m = 2; m <= f.b(lead); ++m) f.even_pair(lead, m, r + s + m);
    for (int i = lead + 1; i <= last_even; ++i)
      for (int m = 1; m <= f.b(i); ++m) f.even_pair(i, m, r + s + m + f.b_sum(lead, i - 1));
    for (int m = 1; m <= f.b(n); ++m) f.odd_pair(n, m, r + s + m + f.b_sum(lead, last_even));
    return;
  }
  const Label top = r + s + 2 + f.b_sum(lead, n);
  f.spine(lead, 0);
  f.spine(1, 1);
  f.leaf(lead, 1, -1);
  f.spine(2 * (r + s + 1), 2);
  f.spine(2 * (r + s + 1) + 1, -2);
  f.leaf(2 * r + 3, 1, 3);
  f.leaf(2 * r + 3, 2, -3);
  f.leaf(2 * (r + s + 1), 1, -4);
  f.leaf(2 * (r + s + 1) + 1, 1, 4);
  f.spine(2 * r + 3, top);
  f.leaf(lead, 2, -top);
  for (int i = 1; i <= r; ++i) {
    f.spine(2 * i, 4 + i);
    f.spine(2 * i + 1, -(4 + i));
  }
  // The remaining even vertices v_{2r+4}..v_{2r+2s+1} take the spine pairs.
  for (int i = 2; i <= s; ++i) {
    f.spine(2 * (r + i), r + 3 + i);
    f.spine(2 * (r + i) + 1, -(r + 3 + i));
  }
  for (int m = 2; m <= f.b(lead); ++m) f.even_pair(lead, m, r + s + 2 + m);
  for (int m = 2; m <= f.b(2 * r + 3); ++m) f.even_pair(2 * r + 3, m, r + s + f.b(lead) + 1 + m);
  for (int i = 2 * r + 4; i <= last_even; ++i)
    for (int m = 1; m <= f.b(i); ++m) f.even_pair(i, m, r + s + 1 + m + f.b_sum(lead, i - 1));
  for (int i = last_even + 1; i <= n; ++i)
    for (int m = 1; m <= f.b(i); ++m) f.odd_pair(i, m, r + s + 1 + m + f.b_sum(lead, i - 1));
}

// ---------------------------------------------------------------------------

LabelOutcome construct(const TreeSpec& spec, const Classification& c) {
  LabelOutcome out;
  out.dispatch = c.dispatch;
  const Dispatch& d = c.dispatch;
  if (d.kind == DispatchKind::NotSeg) {
    out.status = LabelOutcome::Status::ProvedNotSeg;
    out.source = LabelOutcome::Source::Lemma;
    return out;
  }
  if (d.kind != DispatchKind::Constructive) return out;

  Builder f(spec, c);
  switch (*d.lemma) {
    case Lemma::EvenSameParity: even_same_parity(f, d); break;
    case Lemma::OddOppParity: odd_opp_parity(f, d); break;
    case Lemma::EvenOppParity: even_opp_parity(f, d); break;
    case Lemma::OddEvenEven: odd_even_even(f, d); break;
    case Lemma::OddLeadingOne: odd_leading_one(f, d); break;
    case Lemma::OddOddOdd: odd_odd_odd(f, d); break;
    case Lemma::AllOdd: odd_block_lobster(f, d, 2 * d.r); break;
    case Lemma::JkEvenLOdd: odd_block_lobster(f, d, 2 * d.r + 1); break;
    case Lemma::AllEven: even_block_lobster(f, d, 2 * d.r + 1); break;
    case Lemma::JkOddLEven: even_block_lobster(f, d, 2 * d.r); break;
    case Lemma::JEvenKlOdd: j_even_kl_odd(f, d); break;
    case Lemma::JlEvenKOdd: jl_even_k_odd(f, d); break;
    case Lemma::JOddKlEven: j_odd_kl_even(f, d); break;
    case Lemma::NonSegCaterpillar:
    case Lemma::BadLobster: f.fault("non-existence lemma dispatched as constructive");
  }
  out.status = LabelOutcome::Status::Labeled;
  out.source = LabelOutcome::Source::Lemma;
  out.labeling = f.release();
  return out;
}

LabelOutcome label_family(const TreeSpec& spec, Family expected) {
  const Classification c = classify(spec);
  if (c.family != expected)
    throw WrongFamily(format_spec(spec) + " is " + std::string(to_string(c.family)) + ", not " +
                      std::string(to_string(expected)));
  return construct(spec, c);
}

}  // namespace

std::string LabelOutcome::tag() const {
  switch (source) {
    case Source::Search: return "search";
    case Source::Exhaustion: return "exhaustion";
    case Source::Lemma:
    case Source::None: return dispatch_tag(dispatch);
  }
  return "?";
}

LabelOutcome label_even_caterpillar(const TreeSpec& spec) { return label_family(spec, Family::EvenCaterpillar); }
LabelOutcome label_odd_caterpillar(const TreeSpec& spec) { return label_family(spec, Family::OddCaterpillar); }
LabelOutcome label_even_lobster(const TreeSpec& spec) { return label_family(spec, Family::EvenLobster); }
LabelOutcome label_odd_lobster(const TreeSpec& spec) { return label_family(spec, Family::OddLobster); }

LabelOutcome label_any(const TreeSpec& spec, const std::optional<SearchConfig>& fallback) {
  const Classification c = classify(spec);
  LabelOutcome out = construct(spec, c);
  if (out.status != LabelOutcome::Status::Unknown || !fallback) return out;

  SearchConfig config = *fallback;
  config.mode = SearchMode::FindOne;
  const RootedTree tree(spec);
  SearchOutcome found = search(tree, config);
  switch (found.status) {
    case SearchOutcome::Status::Found:
      out.status = LabelOutcome::Status::Labeled;
      out.source = LabelOutcome::Source::Search;
      out.labeling = found.labeling;
      break;
    case SearchOutcome::Status::ExhaustedNone:
      out.status = LabelOutcome::Status::ProvedNotSeg;
      out.source = LabelOutcome::Source::Exhaustion;
      break;
    case SearchOutcome::Status::BudgetExceeded: break;
  }
  out.search = std::move(found);
  return out;
}

std::string_view to_string(LabelOutcome::Status status) {
  switch (status) {
    case LabelOutcome::Status::Labeled: return "labeled";
    case LabelOutcome::Status::ProvedNotSeg: return "not-seg";
    case LabelOutcome::Status::Unknown: return "unknown";
  }
  return "?";
}

}  // namespace seg
