#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "skewlr/tableau.hpp"

namespace skewlr {

struct ComputeOptions {
  std::uint64_t node_limit = 0;
  unsigned workers = 1;
};

// Homogeneous integer combination of Schur functions, indexed partitions in
// descending lexicographic order. No zero coefficients are stored; degree
// is -1 exactly when the expansion is zero.
struct SchurExpansion {
  std::map<Partition, long long, std::greater<Partition>> terms;
  int degree = -1;

  bool empty() const { return terms.empty(); }
  friend bool operator==(const SchurExpansion&, const SchurExpansion&) =
      default;
};

struct ComparisonResult {
  enum class Verdict { FirstDominates, SecondDominates, Equal, Incomparable };
  Verdict verdict = Verdict::Equal;
  // First term (in map order) where one expansion exceeds the other, with
  // the size of the excess; first_witness for the first diagram's excess,
  // second_witness for the second's.
  std::optional<std::pair<Partition, long long>> first_witness;
  std::optional<std::pair<Partition, long long>> second_witness;
};

std::string verdict_string(ComparisonResult::Verdict v);

SchurExpansion skew_schur_expansion(const SkewShape& d,
                                    const ComputeOptions& opt = {});
SchurExpansion product_expansion(const Partition& mu, const Partition& nu,
                                 const ComputeOptions& opt = {});
SchurExpansion multiply(const SchurExpansion& f, const SchurExpansion& g,
                        const ComputeOptions& opt = {});
SchurExpansion subtract(const SchurExpansion& f, const SchurExpansion& g);
bool is_schur_positive(const SchurExpansion& f);
ComparisonResult compare(const SkewShape& d1, const SkewShape& d2,
                         const ComputeOptions& opt = {});

// c(f): drop terms not contained in rect, re-index the rest by their
// complement in rect.
SchurExpansion truncated_complement(const SchurExpansion& f, Rectangle rect);

// "s(2) + s(1,1)", "0" for the zero expansion.
std::string expansion_text(const SchurExpansion& f);
// JSON list of {"partition": [...], "coeff": n} in map order.
std::string expansion_json(const SchurExpansion& f);

}  // namespace skewlr
