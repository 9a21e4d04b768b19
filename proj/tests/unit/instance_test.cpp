#include <filesystem>
#include <string>

#include "doctest.h"
#include "softtop/corpus.hpp"
#include "softtop/instance.hpp"

using namespace softtop;

namespace {

IssueCode first_issue(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const InstanceError& e) {
    REQUIRE_FALSE(e.issues().empty());
    return e.issues().front().code;
  }
  FAIL("instance parsed without issues");
  return IssueCode::kSyntax;
}

const char* kHeader = R"("universe": ["x", "y"], "parameters": ["a", "b"])";

std::string instance(const std::string& body) {
  return std::string("{") + kHeader + (body.empty() ? "" : ", " + body) + "}";
}

}  // namespace

TEST_CASE("a minimal instance parses and resolves the reserved sets") {
  const ResolvedInstance ri(parse_instance(instance("")));
  CHECK(ri.set("PHI").is_null());
  CHECK(ri.set("FULL").is_absolute());
  CHECK(ri.context()->points() == 2);
}

TEST_CASE("reserved names cannot be redefined in any section") {
  CHECK(first_issue(instance(R"("soft_sets": {"PHI": {"a": ["x"], "b": ["y"]}})")) ==
        IssueCode::kReservedName);
  CHECK(first_issue(instance(R"("topologies": {"FULL": ["PHI"]})")) == IssueCode::kReservedName);
  CHECK(first_issue(instance(R"("functions": {"PHI": {"a": {"x": "x", "y": "y"},
                                                      "b": {"x": "x", "y": "y"}}})")) ==
        IssueCode::kReservedName);
}

TEST_CASE("unknown labels, names and parameters are reported") {
  CHECK(first_issue(instance(R"("soft_sets": {"F": {"a": ["w"], "b": ["y"]}})")) ==
        IssueCode::kUnknownLabel);
  CHECK(first_issue(instance(R"("topologies": {"tau": ["PHI", "G", "FULL"]})")) ==
        IssueCode::kUnknownName);
  CHECK(first_issue(instance(R"("soft_sets": {"F": {"a": ["x"], "c": ["y"]}})")) ==
        IssueCode::kUnknownParameter);
  CHECK(first_issue(instance(R"("soft_sets": {"F": {"a": ["x"]}})")) == IssueCode::kMissingFiber);
}

TEST_CASE("duplicates and partial functions are rejected") {
  CHECK(first_issue(R"({"universe": ["x", "x"], "parameters": ["a"]})") ==
        IssueCode::kDuplicateLabel);
  CHECK(first_issue(instance(R"("soft_sets": {"F": {"a": ["x"], "b": ["y"]},
                                              "F": {"a": ["y"], "b": ["y"]}})")) ==
        IssueCode::kDuplicateName);
  CHECK(first_issue(instance(R"("functions": {"f": {"a": {"x": "x"},
                                                    "b": {"x": "x", "y": "y"}}})")) ==
        IssueCode::kNonTotalFunction);
}

TEST_CASE("syntax and schema problems carry a line number") {
  try {
    parse_instance("{\n  \"universe\": [\"x\"],\n  \"parameters\": [\"a\"],\n  oops\n}");
    FAIL("expected a syntax error");
  } catch (const InstanceError& e) {
    CHECK(e.issues().front().code == IssueCode::kSyntax);
    CHECK(e.issues().front().line == 4);
  }
  CHECK(first_issue(R"({"universe": ["x"]})") == IssueCode::kSchema);
  CHECK(first_issue(instance(R"("extra": 1)")) == IssueCode::kSchema);
}

TEST_CASE("every fixture survives an emit and parse round trip") {
  for (const auto& entry : load_catalog(SOFTTOP_FIXTURE_DIR)) {
    CAPTURE(entry.name);
    const std::string text = emit_instance(entry.file);
    CHECK(parse_instance(text) == entry.file);
    CHECK(emit_instance(parse_instance(text)) == text);
  }
}

TEST_CASE("soft sets display under their names or in set notation") {
  const ResolvedInstance ri(
      parse_instance(instance(R"("soft_sets": {"F": {"a": ["x"], "b": ["x", "y"]}})")));
  CHECK(ri.display(ri.set("F")) == "F");
  CHECK(ri.display(ri.set("FULL")) == "FULL");
  CHECK(notation(ri.set("F")) == "⟨{x}|{x,y}⟩");
}
