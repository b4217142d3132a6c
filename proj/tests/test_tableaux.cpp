#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <stdexcept>
#include <vector>

#include "brute_oracle.hpp"
#include "skewlr/tableau.hpp"

using namespace skewlr;

namespace {

// The worked join example: lambda = (3,2) with the staircase for (2,2,1)
// attached; two ones sit in the foundation's first row.
Tableau join_example() {
  Tableau t;
  t.shape = direct_sum(from_partition({3, 2}), Delta_fat({2, 2, 1}));
  t.rows = {{1}, {2}, {1, 3}, {2, 4}, {1, 3, 5}, {1, 1, 6}, {2, 7}};
  return t;
}

std::map<std::vector<int>, long long> as_plain_map(
    const std::map<Partition, long long, std::greater<Partition>>& m) {
  return {m.begin(), m.end()};
}

}  // namespace

TEST_CASE("reading word and content") {
  Tableau t = join_example();
  CHECK(t.shape == SkewShape({6, 6, 6, 6, 6, 3, 2}, {5, 5, 4, 4, 3}));
  CHECK(reading_word(t) == Word{1, 2, 3, 1, 4, 2, 5, 3, 1, 6, 1, 1, 7, 2});
  CHECK(content(t).counts == std::vector<int>{5, 3, 2, 1, 1, 1, 1});
  CHECK(is_semistandard(t));
  CHECK(is_lattice(reading_word(t)));

  Tableau bad = t;
  bad.rows[0] = {1, 1};
  CHECK_THROWS_AS(reading_word(bad), std::invalid_argument);
  bad.rows.pop_back();
  CHECK_THROWS_AS(content(bad), std::invalid_argument);
}

TEST_CASE("content helpers") {
  Content c{{3, 2, 2}};
  CHECK(c.weakly_decreasing());
  CHECK(c.to_partition() == Partition{3, 2, 2});
  Content up{{1, 2}};
  CHECK_FALSE(up.weakly_decreasing());
  CHECK_THROWS_AS(up.to_partition(), std::invalid_argument);
  Content zeros{{2, 1, 0, 0}};
  CHECK(zeros.to_partition() == Partition{2, 1});
}

TEST_CASE("lattice words") {
  CHECK(is_lattice({}));
  CHECK(is_lattice({1, 1, 2, 2, 3, 3}));
  CHECK(is_lattice({1, 2, 3, 1, 4, 2, 5, 3, 1, 6, 1, 1, 7, 2}));
  CHECK_FALSE(is_lattice({2}));
  CHECK_FALSE(is_lattice({1, 2, 2}));
  CHECK_FALSE(is_lattice({1, 1, 2, 3, 3}));
  CHECK_FALSE(is_lattice({0, 1}));
}

TEST_CASE("semistandard checks") {
  Tableau column{SkewShape({1, 1}, {}), {{1}, {2}}};
  CHECK(is_semistandard(column));
  Tableau equal_col{SkewShape({1, 1}, {}), {{1}, {1}}};
  CHECK_FALSE(is_semistandard(equal_col));
  Tableau row_drop{from_partition({2}), {{2, 1}}};
  CHECK_FALSE(is_semistandard(row_drop));
  Tableau nonpos{from_partition({1}), {{0}}};
  CHECK_FALSE(is_semistandard(nonpos));

  // Column condition only applies where rows actually overlap.
  Tableau offset{SkewShape({2, 1}, {1}), {{1}, {1}}};
  CHECK(is_semistandard(offset));

  Tableau malformed{from_partition({2}), {{1}}};
  CHECK_THROWS_AS(is_semistandard(malformed), std::invalid_argument);
}

TEST_CASE("format tableau") {
  Tableau t{SkewShape({2, 1}, {}), {{1, 1}, {2}}};
  CHECK(format_tableau(t) == "1,1\n2");
}

TEST_CASE("empty shape has exactly one filling") {
  CHECK(lr_fillings(SkewShape{}).size() == 1);
  auto counts = lr_content_counts(SkewShape{});
  REQUIRE(counts.size() == 1);
  CHECK(counts.at({}) == 1);
}

TEST_CASE("small expansions") {
  auto counts = lr_content_counts(SkewShape({2, 1}, {1}));
  REQUIRE(counts.size() == 2);
  CHECK(counts.at({2}) == 1);
  CHECK(counts.at({1, 1}) == 1);

  // A straight shape expands to itself.
  for (const Partition& p : partitions_in_rect(Rectangle{3, 3})) {
    auto straight = lr_content_counts(from_partition(p));
    REQUIRE(straight.size() == 1);
    CHECK(straight.at(p) == 1);
  }
}

TEST_CASE("expansions match the brute-force reference") {
  for (const Partition& outer : partitions_in_rect(Rectangle{3, 3})) {
    for (const Partition& inner : partitions_in_rect(Rectangle{3, 3})) {
      if (!contains(inner, outer)) continue;
      CAPTURE(format_parts(outer));
      CAPTURE(format_parts(inner));
      CHECK(as_plain_map(lr_content_counts(SkewShape(outer, inner))) ==
            brute::lr_counts(outer, inner));
    }
  }
}

TEST_CASE("single coefficients") {
  CHECK(lr_coefficient({2, 1}, {1}, {1, 1}) == 1);
  CHECK(lr_coefficient({3, 2, 1}, {2, 1}, {2, 1}) == 2);
  CHECK(lr_coefficient({4, 2}, {2, 1}, {2, 1}) == 1);
  CHECK(lr_coefficient({2, 2}, {1}, {1, 1, 1}) == 0);
  CHECK(lr_coefficient({2, 1}, {1}, {1}) == 0);  // size mismatch
  CHECK(lr_coefficient({3, 3, 3}, {}, {3, 3, 3}) == 1);
  CHECK_THROWS_AS(lr_coefficient({1}, {2}, {}), std::invalid_argument);
  CHECK_THROWS_AS(lr_coefficient({1, 2}, {}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(lr_coefficient({2}, {1}, {0, 1}), std::invalid_argument);

  for (const Partition& nu : partitions_of(4, 4, 4))
    CHECK(lr_coefficient({4, 3, 1}, {2, 1, 1}, nu) ==
          brute::lr_coefficient({4, 3, 1}, {2, 1, 1}, nu));
}

TEST_CASE("enumeration limit") {
  EnumOptions tight;
  tight.node_limit = 3;
  CHECK_THROWS_AS(lr_content_counts(from_partition({3, 2, 1}), tight),
                  EnumerationLimitExceeded);
  CHECK_THROWS_AS(lr_fillings(from_partition({3, 2, 1}), 3),
                  EnumerationLimitExceeded);

  EnumOptions parallel_tight;
  parallel_tight.node_limit = 10;
  parallel_tight.workers = 4;
  CHECK_THROWS_AS(lr_content_counts(from_partition({4, 4, 4}), parallel_tight),
                  EnumerationLimitExceeded);

  // A generous limit changes nothing.
  EnumOptions roomy;
  roomy.node_limit = 1u << 20;
  CHECK(lr_content_counts(from_partition({3, 2, 1}), roomy) ==
        lr_content_counts(from_partition({3, 2, 1})));
}

TEST_CASE("parallel counting agrees with sequential") {
  SkewShape shape({4, 4, 3, 2}, {1});
  REQUIRE(shape.box_count() == 12);
  EnumOptions par;
  par.workers = 4;
  CHECK(lr_content_counts(shape, par) == lr_content_counts(shape));

  SkewShape bigger = staircase_with_foundation({3, 2}, {2, 2, 1}, 2);
  CHECK(lr_content_counts(bigger, par) == lr_content_counts(bigger));
}

TEST_CASE("early stop from the visitor") {
  int seen = 0;
  enumerate_lr_fillings(from_partition({2, 1}), [&](const Tableau&) {
    ++seen;
    return false;
  });
  CHECK(seen == 1);
}

TEST_CASE("staircase filling is the unique lattice filling") {
  Tableau t = unique_staircase_filling({2, 2, 1});
  CHECK(t.shape == Delta_fat({2, 2, 1}));
  CHECK(t.rows ==
        std::vector<std::vector<int>>{{1}, {2}, {1, 3}, {2, 4}, {1, 3, 5}});
  CHECK(is_semistandard(t));
  CHECK(is_lattice(reading_word(t)));
  CHECK(content(t).to_partition() == delta_fat({2, 2, 1}));

  for (const Composition& alpha :
       {Composition{1}, {3}, {1, 2}, {2, 1}, {1, 1, 1}, {2, 2, 1}}) {
    auto fillings = lr_fillings(Delta_fat(alpha));
    REQUIRE(fillings.size() == 1);
    CHECK(fillings.front() == unique_staircase_filling(alpha));
  }
}

TEST_CASE("admissible first-row values") {
  RSet rs = r_set({2, 2, 1}, 2);
  CHECK(rs.values == std::vector<int>{2, 4, 6});
  CHECK(rs.one_multiplicity == 2);
  RSet flat = r_set({1, 1, 1}, 0);
  CHECK(flat.values == std::vector<int>{2, 3, 4});
  CHECK(flat.one_multiplicity == 0);
  CHECK_THROWS_AS(r_set({}, 0), std::invalid_argument);
  CHECK_THROWS_AS(r_set({1}, -1), std::invalid_argument);
}

TEST_CASE("shift join rehouses a filling") {
  Tableau t = join_example();
  Tableau joined = shift_join(t, 2);
  CHECK(joined.shape == SkewShape({5, 5, 5, 5, 5, 3, 2}, {4, 4, 3, 3, 2}));
  CHECK(joined.shape == staircase_with_foundation({3, 2}, {2, 2, 1}, 2));
  CHECK(joined.rows == t.rows);
  CHECK(is_semistandard(joined));
  CHECK(is_lattice(reading_word(joined)));

  // Two ones sit in the foundation's first row, so k = 1 is not enough.
  CHECK_THROWS_AS(shift_join(t, 1), std::invalid_argument);

  // Wider overlaps only move the staircase further right.
  CHECK(shift_join(t, 3).shape ==
        staircase_with_foundation({3, 2}, {2, 2, 1}, 3));
}

TEST_CASE("shift join of a bare staircase") {
  Tableau joined = shift_join(unique_staircase_filling({1, 2}), 1);
  CHECK(joined.shape == SkewShape({3, 3, 3}, {2, 1, 1}));
  CHECK(joined.rows == unique_staircase_filling({1, 2}).rows);
}

TEST_CASE("shift join at the overlap boundary") {
  Tableau t;
  t.shape = direct_sum(from_partition({2}), Delta_fat({1, 1}));
  t.rows = {{1}, {1, 2}, {1, 1}};
  REQUIRE(t.shape == SkewShape({4, 4, 2}, {3, 2}));
  REQUIRE(is_lattice(reading_word(t)));

  CHECK_THROWS_AS(shift_join(t, 1), std::invalid_argument);
  Tableau joined = shift_join(t, 2);
  CHECK(joined.shape == t.shape);  // full overlap reproduces the sum
  CHECK(joined.rows == t.rows);
}

TEST_CASE("shift join rejects other shapes") {
  Tableau square{from_partition({2, 2}), {{1, 1}, {2, 2}}};
  REQUIRE(is_lattice(reading_word(square)));
  CHECK_THROWS_AS(shift_join(square, 1), std::invalid_argument);

  Tableau row{from_partition({2}), {{1, 1}}};
  CHECK_THROWS_AS(shift_join(row, 1), std::invalid_argument);

  Tableau not_lattice{SkewShape({2, 1}, {1}), {{2}, {1}}};
  CHECK_THROWS_AS(shift_join(not_lattice, 1), std::invalid_argument);

  Tableau not_ssyt{from_partition({2}), {{2, 1}}};
  CHECK_THROWS_AS(shift_join(not_ssyt, 1), std::invalid_argument);

  CHECK_THROWS_AS(shift_join(join_example(), -1), std::invalid_argument);
  CHECK_THROWS_AS(shift_join(Tableau{}, 1), std::invalid_argument);
}
