#pragma once

#include <string>
#include <vector>

namespace skewlr {

// A partition is a weakly decreasing sequence of positive integers; a
// composition is any sequence of positive integers. Both are stored
// most-significant part first with no zero parts.
using Partition = std::vector<int>;
using Composition = std::vector<int>;

struct Rectangle {
  int width = 0;   // b in (b^a)
  int height = 0;  // a in (b^a)
};

// Hook (arm, 1^{leg-1}); arm = first-row length, leg = first-column length.
struct Hook {
  int arm = 1;
  int leg = 1;
  int size() const { return arm + leg - 1; }
  Partition to_partition() const;
  friend bool operator==(const Hook&, const Hook&) = default;
};

bool is_partition(const std::vector<int>& parts);
bool is_composition(const std::vector<int>& parts);
int size_of(const std::vector<int>& parts);
int part_at(const Partition& p, int i);  // 0 beyond the end

// mu is contained in lambda: mu[i] <= lambda[i] for all i.
bool contains(const Partition& inner, const Partition& outer);
bool fits_in(const Partition& p, Rectangle rect);

// rho^c = ((b^a)/rho) rotated; parts are width - rho[height+1-i].
Partition complement(const Partition& rho, Rectangle rect);

// Exactly h hooks of size h, arms 1..h in increasing order.
std::vector<Hook> hooks_of_size(int h);

// delta_alpha = (n^{alpha_n}, ..., 2^{alpha_2}, 1^{alpha_1}).
Partition delta_fat(const Composition& alpha);

// alpha^r: k=1 reverses alpha; k=0 drops alpha_n first, then reverses.
Composition reverse_composition(const Composition& alpha, int k);

// All partitions of n with at most max_len parts, each at most max_part.
std::vector<Partition> partitions_of(int n, int max_part, int max_len);
// All partitions contained in rect, the empty partition included.
std::vector<Partition> partitions_in_rect(Rectangle rect);

// Text encoding: comma-separated positive integers, "-" for the empty
// sequence, e.g. "4,1,1".
Partition parse_partition(const std::string& text);
Composition parse_composition(const std::string& text);
std::string format_parts(const std::vector<int>& parts);

}  // namespace skewlr
