#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstddef>
#include <cstring>
#include <string>

#include "json.hpp"
#include "skewlr_c.h"

namespace {

struct ShapeHandle {
  skewlr_shape* ptr = nullptr;
  ~ShapeHandle() { skewlr_shape_free(ptr); }
};

struct ExpansionHandle {
  skewlr_expansion* ptr = nullptr;
  ~ExpansionHandle() { skewlr_expansion_free(ptr); }
};

struct StringHandle {
  char* ptr = nullptr;
  ~StringHandle() { skewlr_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

}  // namespace

TEST_CASE("shape round trips") {
  ShapeHandle shape;
  REQUIRE(skewlr_shape_parse("3,2,1/1,1", &shape.ptr) == SKEWLR_OK);
  StringHandle text;
  REQUIRE(skewlr_shape_format(shape.ptr, &text.ptr) == SKEWLR_OK);
  CHECK(text.str() == "3,2,1/1,1");
  int boxes = 0;
  REQUIRE(skewlr_shape_box_count(shape.ptr, &boxes) == SKEWLR_OK);
  CHECK(boxes == 4);

  ShapeHandle padded;
  REQUIRE(skewlr_shape_parse("3,3/3,1", &padded.ptr) == SKEWLR_OK);
  StringHandle canon;
  REQUIRE(skewlr_shape_format(padded.ptr, &canon.ptr) == SKEWLR_OK);
  CHECK(canon.str() == "3/1");

  const int outer[] = {3, 2, 1};
  const int inner[] = {1, 1};
  ShapeHandle built;
  REQUIRE(skewlr_shape_from_parts(outer, 3, inner, 2, &built.ptr) ==
          SKEWLR_OK);
  int built_boxes = 0;
  REQUIRE(skewlr_shape_box_count(built.ptr, &built_boxes) == SKEWLR_OK);
  CHECK(built_boxes == 4);

  const int lambda[] = {2, 1};
  const int alpha[] = {1, 2};
  ShapeHandle staircase;
  REQUIRE(skewlr_staircase_shape(lambda, 2, alpha, 2, 1, &staircase.ptr) ==
          SKEWLR_OK);
  StringHandle sform;
  REQUIRE(skewlr_shape_format(staircase.ptr, &sform.ptr) == SKEWLR_OK);
  CHECK(sform.str() == "3,3,3,2,1/2,1,1");
}

TEST_CASE("complement formatting") {
  const int rho[] = {2, 1};
  StringHandle comp;
  REQUIRE(skewlr_complement(rho, 2, 2, 2, &comp.ptr) == SKEWLR_OK);
  CHECK(comp.str() == "1");

  StringHandle full;
  REQUIRE(skewlr_complement(nullptr, 0, 2, 2, &full.ptr) == SKEWLR_OK);
  CHECK(full.str() == "2,2");
}

TEST_CASE("expansion access") {
  ShapeHandle shape;
  REQUIRE(skewlr_shape_parse("2,1/1", &shape.ptr) == SKEWLR_OK);
  ExpansionHandle e;
  REQUIRE(skewlr_expand(shape.ptr, nullptr, &e.ptr) == SKEWLR_OK);

  size_t count = 0;
  REQUIRE(skewlr_expansion_term_count(e.ptr, &count) == SKEWLR_OK);
  REQUIRE(count == 2);

  const int* parts = nullptr;
  size_t parts_len = 0;
  long long coeff = 0;
  REQUIRE(skewlr_expansion_term(e.ptr, 0, &parts, &parts_len, &coeff) ==
          SKEWLR_OK);
  REQUIRE(parts_len == 1);
  CHECK(parts[0] == 2);
  CHECK(coeff == 1);
  REQUIRE(skewlr_expansion_term(e.ptr, 1, &parts, &parts_len, &coeff) ==
          SKEWLR_OK);
  REQUIRE(parts_len == 2);
  CHECK(parts[0] == 1);
  CHECK(parts[1] == 1);
  CHECK(coeff == 1);

  StringHandle text;
  REQUIRE(skewlr_expansion_format(e.ptr, 0, &text.ptr) == SKEWLR_OK);
  CHECK(text.str() == "s(2) + s(1,1)");
  StringHandle json;
  REQUIRE(skewlr_expansion_format(e.ptr, 1, &json.ptr) == SKEWLR_OK);
  CHECK(json.str() ==
        "[{\"partition\":[2],\"coeff\":1},{\"partition\":[1,1],\"coeff\":1}]");
}

TEST_CASE("single coefficient") {
  const int outer[] = {2, 1};
  const int inner[] = {1};
  const int nu[] = {1, 1};
  long long c = 0;
  REQUIRE(skewlr_lr_coefficient(outer, 2, inner, 1, nu, 2, nullptr, &c) ==
          SKEWLR_OK);
  CHECK(c == 1);
}

TEST_CASE("comparisons") {
  ShapeHandle skew, straight;
  REQUIRE(skewlr_shape_parse("2,2,2/1,1", &skew.ptr) == SKEWLR_OK);
  REQUIRE(skewlr_shape_parse("2,1,1", &straight.ptr) == SKEWLR_OK);
  int verdict = -1;
  StringHandle w1, w2;
  REQUIRE(skewlr_compare(skew.ptr, straight.ptr, nullptr, &verdict, &w1.ptr,
                         &w2.ptr) == SKEWLR_OK);
  CHECK(verdict == SKEWLR_CMP_EQUAL);
  CHECK(w1.ptr == nullptr);
  CHECK(w2.ptr == nullptr);

  ShapeHandle bigger, smaller;
  REQUIRE(skewlr_shape_parse("2,1/1", &bigger.ptr) == SKEWLR_OK);
  REQUIRE(skewlr_shape_parse("2", &smaller.ptr) == SKEWLR_OK);
  StringHandle excess, other;
  REQUIRE(skewlr_compare(bigger.ptr, smaller.ptr, nullptr, &verdict,
                         &excess.ptr, &other.ptr) == SKEWLR_OK);
  CHECK(verdict == SKEWLR_CMP_FIRST_DOMINATES);
  CHECK(excess.str() == "1,1:1");
  CHECK(other.ptr == nullptr);
}

TEST_CASE("hasse output") {
  const int alpha[] = {1, 1, 1};
  StringHandle dot;
  REQUIRE(skewlr_hasse_dot(alpha, 3, 3, 0, 0, nullptr, &dot.ptr) ==
          SKEWLR_OK);
  CHECK(dot.str().find("digraph") != std::string::npos);

  StringHandle json;
  REQUIRE(skewlr_hasse_json(alpha, 3, 3, 0, 0, nullptr, &json.ptr) ==
          SKEWLR_OK);
  nlohmann::json parsed = nlohmann::json::parse(json.str());
  CHECK(parsed["nodes"].size() == 3);
  CHECK(parsed["edges"].size() == 2);
}

TEST_CASE("family verification") {
  const int alpha[] = {1, 1, 1};
  StringHandle report;
  int mismatches = -1;
  REQUIRE(skewlr_verify_family(alpha, 3, 3, 0, 0, 0, nullptr, &report.ptr,
                               &mismatches) == SKEWLR_OK);
  CHECK(mismatches == 0);
  CHECK(report.str().find("\"mismatch_count\":0") != std::string::npos);
  REQUIRE(skewlr_verify_family(alpha, 3, 3, 0, 0, 0, nullptr, nullptr,
                               nullptr) == SKEWLR_OK);
}

TEST_CASE("error reporting") {
  ShapeHandle bad;
  CHECK(skewlr_shape_parse("2,3/1", &bad.ptr) == SKEWLR_EINVAL);
  CHECK(std::strlen(skewlr_last_error()) > 0);
  CHECK(bad.ptr == nullptr);

  CHECK(skewlr_shape_parse(nullptr, &bad.ptr) == SKEWLR_EINVAL);

  ShapeHandle shape;
  REQUIRE(skewlr_shape_parse("2,1/1", &shape.ptr) == SKEWLR_OK);
  CHECK(skewlr_shape_format(shape.ptr, nullptr) == SKEWLR_EINVAL);

  ExpansionHandle e;
  REQUIRE(skewlr_expand(shape.ptr, nullptr, &e.ptr) == SKEWLR_OK);
  const int* parts = nullptr;
  size_t parts_len = 0;
  long long coeff = 0;
  CHECK(skewlr_expansion_term(e.ptr, 5, &parts, &parts_len, &coeff) ==
        SKEWLR_EINVAL);

  ShapeHandle one;
  REQUIRE(skewlr_shape_parse("1", &one.ptr) == SKEWLR_OK);
  int verdict = -1;
  CHECK(skewlr_compare(shape.ptr, one.ptr, nullptr, &verdict, nullptr,
                       nullptr) == SKEWLR_EINVAL);

  CHECK(skewlr_expand(nullptr, nullptr, &e.ptr) == SKEWLR_EINVAL);

  skewlr_options tight{3, 1};
  ShapeHandle big;
  REQUIRE(skewlr_shape_parse("3,2,1", &big.ptr) == SKEWLR_OK);
  ExpansionHandle capped;
  CHECK(skewlr_expand(big.ptr, &tight, &capped.ptr) == SKEWLR_ECOMPUTE);

  skewlr_string_free(nullptr);
  skewlr_shape_free(nullptr);
}
