// File formats: labeling documents, non-existence certificates, DOT export.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seg/labeling.hpp"
#include "seg/search.hpp"
#include "seg/tree_model.hpp"

namespace seg {

/// A parsed labeling file. Vertex identifiers refer to the canonical order
/// of `spec`; keys that name no edge of the tree are kept in `unknown_keys`.
struct LabelingDocument {
  TreeSpec spec;
  EdgeLabeling labeling;
  std::vector<std::string> unknown_keys;
};

/// {"spec": "RT(...)", "edges": {"v1": 1, "v5.2": -4, ...}}; edges keyed by
/// the child endpoint, in vertex order.
std::string write_labeling(const RootedTree& tree, const EdgeLabeling& f);

/// Throws LabelingError on malformed JSON or a missing/ill-typed field and
/// SpecError on a bad spec string.
LabelingDocument read_labeling(std::string_view text);
LabelingDocument load_labeling_file(const std::string& path);

/// verify() plus a DomainMismatch entry for every unknown key.
VerificationReport verify_document(const LabelingDocument& doc);

std::string write_certificate(const Certificate& certificate);
Certificate read_certificate(std::string_view text);

/// DOT graph of the tree. With a labeling, vertices show induced labels and
/// edges show edge labels; otherwise vertices show their identifiers. The
/// first line is a "// spec: RT(...)" comment.
std::string export_dot(const RootedTree& tree, const std::optional<EdgeLabeling>& f = std::nullopt);

/// Recovers the spec from the comment written by export_dot.
TreeSpec spec_from_dot(std::string_view dot);

std::string read_text_file(const std::string& path);

}  // namespace seg
