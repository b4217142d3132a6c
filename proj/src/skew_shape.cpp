#include "skewlr/skew_shape.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewlr {

namespace {
bool weakly_decreasing_nonneg(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}
}  // namespace

SkewShape::SkewShape(Partition outer_parts, Partition inner_parts)
    : outer(std::move(outer_parts)), inner(std::move(inner_parts)) {
  if (!weakly_decreasing_nonneg(outer) || !weakly_decreasing_nonneg(inner))
    throw std::invalid_argument("skew shape: parts not weakly decreasing");
  while (!outer.empty() && outer.back() == 0) outer.pop_back();
  while (!inner.empty() && inner.back() == 0) inner.pop_back();
  if (inner.size() > outer.size())
    throw std::invalid_argument("skew shape: inner longer than outer");
  for (size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] > outer[i])
      throw std::invalid_argument("skew shape: inner not contained in outer");
  }
  size_t top = 0;
  while (top < outer.size() && inner_at(static_cast<int>(top)) == outer[top])
    ++top;
  size_t bottom = outer.size();
  while (bottom > top &&
         inner_at(static_cast<int>(bottom - 1)) == outer[bottom - 1])
    --bottom;
  outer = Partition(outer.begin() + top, outer.begin() + bottom);
  inner.resize(std::min(inner.size(), bottom));
  inner = Partition(inner.begin() + std::min(top, inner.size()), inner.end());
  while (!inner.empty() && inner.back() == 0) inner.pop_back();
}

int SkewShape::box_count() const {
  int total = 0;
  for (int i = 0; i < rows(); ++i) total += row_length(i);
  return total;
}

SkewShape from_partition(const Partition& p) {
  if (!is_partition(p)) throw std::invalid_argument("not a partition");
  return SkewShape(p, {});
}

SkewShape rotate180(const SkewShape& d) {
  const int r = d.rows();
  if (r == 0) return d;
  const int span = d.min_col() + d.width();
  Partition outer(r), inner;
  for (int i = 0; i < r; ++i) outer[i] = span - d.inner_at(r - 1 - i);
  for (int i = 0; i < r; ++i) inner.push_back(span - d.outer[r - 1 - i]);
  return SkewShape(std::move(outer), std::move(inner));
}

SkewShape direct_sum(const SkewShape& d1, const SkewShape& d2) {
  if (d1.rows() == 0) return d2;
  if (d2.rows() == 0) return d1;
  const int shift = d1.width() - d2.min_col();
  Partition outer, inner;
  for (int i = 0; i < d2.rows(); ++i) outer.push_back(d2.outer[i] + shift);
  for (int i = 0; i < d2.rows(); ++i) inner.push_back(d2.inner_at(i) + shift);
  outer.insert(outer.end(), d1.outer.begin(), d1.outer.end());
  inner.insert(inner.end(), d1.inner.begin(), d1.inner.end());
  inner.resize(outer.size(), 0);
  return SkewShape(std::move(outer), std::move(inner));
}

SkewShape Delta_fat(const Composition& alpha) {
  if (alpha.empty() || !is_composition(alpha))
    throw std::invalid_argument("Delta_fat: need a nonempty composition");
  const int n = static_cast<int>(alpha.size());
  Partition outer(size_of(alpha), n), inner;
  for (int j = 1; j <= n; ++j) {
    for (int rep = 0; rep < alpha[j - 1]; ++rep) inner.push_back(n - j);
  }
  return SkewShape(std::move(outer), std::move(inner));
}

SkewShape staircase_with_foundation(const Partition& lambda,
                                    const Composition& alpha, int k) {
  if (!is_partition(lambda))
    throw std::invalid_argument("staircase: foundation is not a partition");
  if (alpha.empty() || !is_composition(alpha))
    throw std::invalid_argument("staircase: need a nonempty composition");
  if (k < 0) throw std::invalid_argument("staircase: k must be nonnegative");
  const int n = static_cast<int>(alpha.size());
  const int lam1 = lambda.empty() ? 0 : lambda[0];
  if (lam1 - k > n)
    throw std::invalid_argument(
        "staircase: foundation too wide, lambda_1 - k exceeds length(alpha)");
  Partition outer(size_of(alpha), n + k), inner;
  for (int j = 1; j <= n; ++j) {
    for (int rep = 0; rep < alpha[j - 1]; ++rep) inner.push_back(n - j + k);
  }
  outer.insert(outer.end(), lambda.begin(), lambda.end());
  return SkewShape(std::move(outer), std::move(inner));
}

bool is_connected(const SkewShape& d) {
  const int r = d.rows();
  if (r == 0) return true;
  for (int i = 0; i < r; ++i) {
    if (d.row_length(i) == 0) return false;
  }
  for (int i = 0; i + 1 < r; ++i) {
    if (d.inner_at(i) >= d.outer[i + 1]) return false;
  }
  return true;
}

SkewShape parse_skew(const std::string& text) {
  size_t slash = text.find('/');
  if (slash == std::string::npos)
    return SkewShape(parse_partition(text), {});
  return SkewShape(parse_partition(text.substr(0, slash)),
                   parse_partition(text.substr(slash + 1)));
}

std::string format_skew(const SkewShape& d) {
  return format_parts(d.outer) + "/" + format_parts(d.inner);
}

}  // namespace skewlr
