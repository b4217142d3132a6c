#pragma once

#include <compare>
#include <string>

#include "skewlr/partition.hpp"

namespace skewlr {

// Skew diagram outer/inner in canonical form: empty rows are stripped from
// the top and bottom, trailing zeros of inner are dropped, and column
// positions are kept as constructed (no left-shift normalisation).
struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape() = default;
  // Validates containment and canonicalises. inner may carry trailing zeros.
  SkewShape(Partition outer_parts, Partition inner_parts);

  int rows() const { return static_cast<int>(outer.size()); }
  int inner_at(int i) const {
    return i < static_cast<int>(inner.size()) ? inner[i] : 0;
  }
  int row_length(int i) const { return outer[i] - inner_at(i); }
  int box_count() const;
  int width() const { return outer.empty() ? 0 : outer[0]; }
  int min_col() const { return outer.empty() ? 0 : inner_at(rows() - 1); }

  friend bool operator==(const SkewShape&, const SkewShape&) = default;
  friend auto operator<=>(const SkewShape&, const SkewShape&) = default;
};

SkewShape from_partition(const Partition& p);  // p / empty

// 180-degree rotation within the tight bounding box; an exact involution on
// canonical shapes.
SkewShape rotate180(const SkewShape& d);

// d1 placed lower-left, d2 upper-right, with the top-right box of d1 one
// step left and one step down from the bottom-left box of d2.
SkewShape direct_sum(const SkewShape& d1, const SkewShape& d2);

// Delta_alpha: the rotated fat staircase as a right-justified skew shape,
// outer (n^{|alpha|}).
SkewShape Delta_fat(const Composition& alpha);

// S(lambda, alpha; k): Delta_alpha shifted right by k with the foundation
// lambda attached below, flush left, overlapping lambda_1 - k columns.
// Requires lambda_1 - k <= length(alpha).
SkewShape staircase_with_foundation(const Partition& lambda,
                                    const Composition& alpha, int k);

// True iff the box set is connected through shared edges.
bool is_connected(const SkewShape& d);

// Text encoding "outer/inner", e.g. "3,3,1/1"; "-" denotes empty.
SkewShape parse_skew(const std::string& text);
std::string format_skew(const SkewShape& d);

}  // namespace skewlr
