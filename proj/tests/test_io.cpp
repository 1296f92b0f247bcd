#include "doctest.h"
#include "seg/io.hpp"
#include "support.hpp"

using namespace seg;

TEST_SUITE("io") {

TEST_CASE("labeling files round-trip") {
  const RootedTree tree(parse_spec("RT(0^3,2,5)"));
  const LabelingDocument doc = load_labeling_file(testing::golden_path("fig_0p3_2_5.json"));
  CHECK(doc.spec == tree.spec());
  CHECK(doc.unknown_keys.empty());
  CHECK(doc.labeling.is_total());
  const std::string text = write_labeling(tree, doc.labeling);
  CHECK(text.find("\"v5.5\": -6") != std::string::npos);
  const LabelingDocument again = read_labeling(text);
  CHECK(again.labeling == doc.labeling);
  CHECK(write_labeling(tree, again.labeling) == text);
}

TEST_CASE("all golden figures verify") {
  for (const char* file : {"fig_0p4_2_6.json", "fig_0p3_2_5.json", "fig_0p3_2_4.json", "fig_0p3_3_5.json",
                           "fig_0_2_3p2_5.json", "fig_2_3p2_5.json"}) {
    CAPTURE(file);
    CHECK(verify_document(load_labeling_file(testing::golden_path(file))).is_seg);
  }
}

TEST_CASE("malformed documents raise LabelingError") {
  CHECK_THROWS_AS(read_labeling("{"), LabelingError);
  CHECK_THROWS_AS(read_labeling("[]"), LabelingError);
  CHECK_THROWS_AS(read_labeling(R"j({"edges": {}})j"), LabelingError);
  CHECK_THROWS_AS(read_labeling(R"j({"spec": "RT(1,1)"})j"), LabelingError);
  CHECK_THROWS_AS(read_labeling(R"j({"spec": "RT(1,1)", "edges": {"v1": "x"}})j"), LabelingError);
  CHECK_THROWS_AS(read_labeling(R"j({"spec": "RT(1,1)", "edges": {"v1": 1.5}})j"), LabelingError);
  CHECK_THROWS_AS(read_labeling(R"j({"spec": "RT(1", "edges": {}})j"), SpecError);
  CHECK_THROWS(load_labeling_file("/nonexistent/labeling.json"));
}

TEST_CASE("missing and unknown keys are domain mismatches") {
  const LabelingDocument partial = read_labeling(R"j({"spec": "RT(1,1)", "edges": {"v1": -1, "v2": 1, "v1.1": 2}})j");
  VerificationReport r = verify_document(partial);
  CHECK_FALSE(r.is_seg);
  REQUIRE_FALSE(r.violations.empty());
  CHECK(r.violations.front().kind == Violation::Kind::DomainMismatch);

  const LabelingDocument extra =
      read_labeling(R"j({"spec": "RT(1,1)", "edges": {"v1": -1, "v2": 1, "v1.1": 2, "v2.1": -2, "v3": 0, "v0": 1}})j");
  CHECK(extra.unknown_keys == std::vector<std::string>{"v0", "v3"});
  r = verify_document(extra);
  CHECK_FALSE(r.is_seg);
  CHECK(r.violations.back().kind == Violation::Kind::DomainMismatch);
}

TEST_CASE("certificates round-trip") {
  const Certificate c = certify_not_seg(RootedTree(parse_spec("RT(0,1,1)")), SearchConfig{});
  CHECK(read_certificate(write_certificate(c)) == c);
  CHECK_THROWS(read_certificate(R"j({"spec": "RT(0,1,1)"})j"));
}

TEST_CASE("DOT export") {
  const RootedTree tree(parse_spec("RT(1,1)"));
  const std::string plain = export_dot(tree);
  CHECK(plain.rfind("// spec: RT(1^2)\n", 0) == 0);
  CHECK(plain.find("v1_1 [label=\"v1.1\"]") != std::string::npos);
  CHECK(plain.find("v0 -- v1;") != std::string::npos);
  CHECK(spec_from_dot(plain) == tree.spec());

  const std::string labeled = export_dot(tree, EdgeLabeling({-1, 1, 2, -2}));
  CHECK(labeled.find("v1 [label=\"1\"]") != std::string::npos);
  CHECK(labeled.find("v1 -- v1_1 [label=\"2\"]") != std::string::npos);
  CHECK_THROWS_AS(spec_from_dot("graph g {}"), SpecError);
}

}  // TEST_SUITE
