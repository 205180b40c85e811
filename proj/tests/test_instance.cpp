#include <doctest.h>

#include <fstream>
#include <string>

#include "summand/errors.hpp"
#include "summand/instance.hpp"

using namespace summand;

namespace {

const char* kValid = R"({
  "field": {"p": 5},
  "algebra": {
    "type": "quiver",
    "vertices": ["1", "2"],
    "arrows": [{"from": "1", "to": "2", "label": "a"}],
    "relations": []
  },
  "modules": {
    "M": {"dim": 2, "action": [[[1,0],[0,0]], [[0,0],[0,1]], [[0,1],[0,0]]]},
    "A": {"dim": 1, "action": [[[0]], [[1]], [[0]]]}
  }
})";

}  // namespace

TEST_CASE("valid instances parse with sorted module names") {
    Instance inst = parse_instance_text(kValid);
    CHECK(inst.field.p() == 5);
    CHECK(inst.algebra->dim() == 3);
    CHECK(inst.basis_labels.size() == 3);
    REQUIRE(inst.modules.size() == 2);
    CHECK(inst.modules[0].first == "A");  // sorted
    CHECK(inst.modules[1].first == "M");
    CHECK(inst.find_module("M") != nullptr);
    CHECK(inst.find_module("nope") == nullptr);
}

TEST_CASE("entries are reduced mod p on load") {
    Instance inst = parse_instance_text(R"({
      "field": {"p": 5},
      "algebra": {"type": "structure_constants", "dim": 1,
                  "table": [[[6]]], "one": [-4]},
      "modules": {"M": {"dim": 1, "action": [[[11]]]}}
    })");
    CHECK(inst.algebra->structure(0, 0, 0) == 1);
    CHECK(inst.algebra->one()[0] == 1);
    CHECK(inst.find_module("M")->action(0)(0, 0) == 1);
}

TEST_CASE("parse errors carry a path anchor") {
    auto check_fails_with = [](const std::string& text,
                               const std::string& needle) {
        try {
            parse_instance_text(text);
            FAIL("expected a ParseError for: " << needle);
        } catch (const ParseError& e) {
            CAPTURE(e.what());
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    check_fails_with("{}", "/");
    check_fails_with(R"({"field": {}})", "/field");
    check_fails_with(R"({"field": {"p": 4}, "algebra": {"type": "quiver",
        "vertices": ["v"], "arrows": []}})", "/field/p");
    check_fails_with(R"({"field": {"p": 5}, "algebra": {"type": "wat"}})",
                     "/algebra/type");
    check_fails_with(R"({"field": {"p": 5},
        "algebra": {"type": "structure_constants", "dim": 2,
                    "table": [[[1,0],[0,0]]], "one": [1,0]}})",
                     "/algebra/table");
    check_fails_with(R"({"field": {"p": 5},
        "algebra": {"type": "structure_constants", "dim": 1,
                    "table": [[[1]]], "one": [1]},
        "modules": {"M": {"dim": 1, "action": [[[1]],[[1]]]}}})",
                     "/modules/M");
    // non-associative table is rejected with the algebra anchor
    check_fails_with(R"({"field": {"p": 5},
        "algebra": {"type": "structure_constants", "dim": 2,
                    "table": [[[0,1],[1,0]], [[1,0],[0,0]]],
                    "one": [1,0]}})",
                     "/algebra");
}

TEST_CASE("malformed text never crashes the parser") {
    std::string valid(kValid);
    // truncations
    for (std::size_t cut = 0; cut < valid.size(); cut += 7) {
        try {
            parse_instance_text(valid.substr(0, cut));
        } catch (const ParseError&) {
        }
    }
    // single-byte mutations
    for (std::size_t pos = 0; pos < valid.size(); pos += 11) {
        std::string mutated = valid;
        mutated[pos] = mutated[pos] == '[' ? '{' : '[';
        try {
            parse_instance_text(mutated);
        } catch (const ParseError&) {
        } catch (const ValidationError&) {
        }
    }
    CHECK(true);  // reaching here means no crash and no stray exception type
}

TEST_CASE("loading a missing file is a parse error") {
    CHECK_THROWS_AS(load_instance("/nonexistent/instance.json"), ParseError);
}
