#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewlr/skew_shape.hpp"

namespace skewlr {

// Raw filling of a skew shape; semistandardness is checked separately.
struct Tableau {
  SkewShape shape;
  std::vector<std::vector<int>> rows;  // rows[i] left to right

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

using Word = std::vector<int>;

// counts[j] = number of entries equal to j+1, trailing zeros trimmed.
struct Content {
  std::vector<int> counts;
  bool weakly_decreasing() const;
  Partition to_partition() const;  // requires weakly decreasing counts
  friend bool operator==(const Content&, const Content&) = default;
};

// Admissible first-row values of a lattice filling's foundation: the set
// {1 + alpha_n + ... + alpha_{n+1-j} : j = 1..n}, with 1 allowed up to
// one_multiplicity = k times.
struct RSet {
  std::vector<int> values;  // ascending, all > 1
  int one_multiplicity = 0;
};

Word reading_word(const Tableau& t);
bool is_lattice(const Word& w);
bool is_semistandard(const Tableau& t);
Content content(const Tableau& t);
std::string format_tableau(const Tableau& t);

class EnumerationLimitExceeded : public std::runtime_error {
 public:
  EnumerationLimitExceeded()
      : std::runtime_error("enumeration node limit exceeded") {}
};

struct EnumOptions {
  std::uint64_t node_limit = 0;  // 0 = unlimited
  unsigned workers = 1;          // parallelism for grouped counting
};

// Streams every semistandard filling with lattice reading word, exactly
// once, cells visited in reading order with candidate values ascending.
// Return false from visit to stop early.
void enumerate_lr_fillings(const SkewShape& shape,
                           const std::function<bool(const Tableau&)>& visit,
                           std::uint64_t node_limit = 0);
std::vector<Tableau> lr_fillings(const SkewShape& shape,
                                 std::uint64_t node_limit = 0);

// Lattice fillings grouped by content; the Schur expansion data of a shape.
std::map<Partition, long long, std::greater<Partition>> lr_content_counts(
    const SkewShape& shape, const EnumOptions& opt = {});

// c^{outer}_{inner, nu}: lattice fillings of outer/inner with content nu.
long long lr_coefficient(const Partition& outer, const Partition& inner,
                         const Partition& nu, const EnumOptions& opt = {});

// The unique lattice filling of Delta_alpha: each column of length l holds
// 1..l top to bottom.
Tableau unique_staircase_filling(const Composition& alpha);

RSet r_set(const Composition& alpha, int k);

// A lattice filling of lambda (+) Delta_alpha, with at most k ones in the
// foundation's first row, re-housed on S(lambda, alpha; k) with identical
// row fillings.
Tableau shift_join(const Tableau& t, int k);

}  // namespace skewlr
