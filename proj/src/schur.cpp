#include "skewlr/schur.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace skewlr {

namespace {

long long checked_add(long long a, long long b) {
  long long out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("coefficient overflow");
  return out;
}

long long checked_sub(long long a, long long b) {
  long long out;
  if (__builtin_sub_overflow(a, b, &out))
    throw std::overflow_error("coefficient overflow");
  return out;
}

long long checked_mul(long long a, long long b) {
  long long out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("coefficient overflow");
  return out;
}

// Keeps the invariant that the zero expansion has degree -1.
SchurExpansion normalized(SchurExpansion e) {
  if (e.terms.empty()) e.degree = -1;
  return e;
}

std::shared_mutex skew_memo_mutex;
std::map<SkewShape, std::shared_ptr<const SchurExpansion>> skew_memo;

std::shared_mutex product_memo_mutex;
std::map<std::pair<Partition, Partition>,
         std::shared_ptr<const SchurExpansion>>
    product_memo;

template <class Key, class Map, class Mutex>
std::shared_ptr<const SchurExpansion> memo_lookup(Map& memo, Mutex& mutex,
                                                  const Key& key) {
  std::shared_lock lock(mutex);
  auto it = memo.find(key);
  return it == memo.end() ? nullptr : it->second;
}

template <class Key, class Map, class Mutex>
void memo_store(Map& memo, Mutex& mutex, const Key& key,
                std::shared_ptr<const SchurExpansion> value) {
  std::unique_lock lock(mutex);
  memo.emplace(key, std::move(value));
}

}  // namespace

std::string verdict_string(ComparisonResult::Verdict v) {
  switch (v) {
    case ComparisonResult::Verdict::FirstDominates:
      return "first-dominates";
    case ComparisonResult::Verdict::SecondDominates:
      return "second-dominates";
    case ComparisonResult::Verdict::Equal:
      return "equal";
    case ComparisonResult::Verdict::Incomparable:
      return "incomparable";
  }
  throw std::logic_error("verdict_string: bad verdict");
}

SchurExpansion skew_schur_expansion(const SkewShape& shape,
                                    const ComputeOptions& opt) {
  if (auto hit = memo_lookup(skew_memo, skew_memo_mutex, shape)) return *hit;
  auto result = std::make_shared<SchurExpansion>();
  result->degree = shape.box_count();
  result->terms =
      lr_content_counts(shape, EnumOptions{opt.node_limit, opt.workers});
  memo_store(skew_memo, skew_memo_mutex, shape, result);
  return *result;
}

SchurExpansion product_expansion(const Partition& mu, const Partition& nu,
                                 const ComputeOptions& opt) {
  if (!is_partition(mu) || !is_partition(nu))
    throw std::invalid_argument("product_expansion: arguments must be partitions");
  // The coefficient is symmetric in mu and nu; enumerating over the shape
  // lambda/inner is cheapest when inner is the larger factor.
  const Partition& inner = size_of(mu) >= size_of(nu) ? mu : nu;
  const Partition& other = size_of(mu) >= size_of(nu) ? nu : mu;
  std::pair<Partition, Partition> key{inner, other};
  if (auto hit = memo_lookup(product_memo, product_memo_mutex, key))
    return *hit;

  auto result = std::make_shared<SchurExpansion>();
  result->degree = size_of(mu) + size_of(nu);
  int max_part = part_at(inner, 0) + part_at(other, 0);
  int max_len = static_cast<int>(inner.size() + other.size());
  EnumOptions eopt{opt.node_limit, opt.workers};
  for (const Partition& lam :
       partitions_of(result->degree, max_part, max_len)) {
    if (!contains(inner, lam)) continue;
    long long c = lr_coefficient(lam, inner, other, eopt);
    if (c != 0) result->terms[lam] = c;
  }
  memo_store(product_memo, product_memo_mutex, key, result);
  return *result;
}

SchurExpansion multiply(const SchurExpansion& a, const SchurExpansion& b,
                        const ComputeOptions& opt) {
  SchurExpansion out;
  if (a.degree >= 0 && b.degree >= 0) out.degree = a.degree + b.degree;
  for (const auto& [p, cp] : a.terms) {
    for (const auto& [q, cq] : b.terms) {
      long long scale = checked_mul(cp, cq);
      SchurExpansion pq = product_expansion(p, q, opt);
      for (const auto& [lam, c] : pq.terms) {
        long long next = checked_add(out.terms[lam], checked_mul(scale, c));
        if (next == 0)
          out.terms.erase(lam);
        else
          out.terms[lam] = next;
      }
    }
  }
  return normalized(std::move(out));
}

SchurExpansion subtract(const SchurExpansion& a, const SchurExpansion& b) {
  if (a.degree >= 0 && b.degree >= 0 && a.degree != b.degree)
    throw std::invalid_argument("subtract: mixed degrees");
  SchurExpansion out;
  out.degree = a.degree >= 0 ? a.degree : b.degree;
  out.terms = a.terms;
  for (const auto& [p, c] : b.terms) {
    long long next = checked_sub(out.terms[p], c);
    if (next == 0)
      out.terms.erase(p);
    else
      out.terms[p] = next;
  }
  return normalized(std::move(out));
}

bool is_schur_positive(const SchurExpansion& e) {
  for (const auto& [p, c] : e.terms)
    if (c < 0) return false;
  return true;
}

ComparisonResult compare(const SkewShape& d1, const SkewShape& d2,
                         const ComputeOptions& opt) {
  if (d1.box_count() != d2.box_count())
    throw std::invalid_argument("compare: diagrams must have equal box counts");
  SchurExpansion diff =
      subtract(skew_schur_expansion(d1, opt), skew_schur_expansion(d2, opt));
  ComparisonResult out;
  bool has_pos = false;
  bool has_neg = false;
  for (const auto& [p, c] : diff.terms) {
    if (c > 0) {
      has_pos = true;
      if (!out.first_witness) out.first_witness = {p, c};
    } else if (c < 0) {
      has_neg = true;
      if (!out.second_witness) out.second_witness = {p, -c};
    }
  }
  if (has_pos && has_neg)
    out.verdict = ComparisonResult::Verdict::Incomparable;
  else if (has_pos)
    out.verdict = ComparisonResult::Verdict::FirstDominates;
  else if (has_neg)
    out.verdict = ComparisonResult::Verdict::SecondDominates;
  else
    out.verdict = ComparisonResult::Verdict::Equal;
  return out;
}

SchurExpansion truncated_complement(const SchurExpansion& e, Rectangle rect) {
  if (rect.width < 0 || rect.height < 0)
    throw std::invalid_argument("truncated_complement: bad rectangle");
  SchurExpansion out;
  if (e.degree >= 0) {
    out.degree = rect.width * rect.height - e.degree;
    if (out.degree < 0) out.degree = -1;
  }
  for (const auto& [p, c] : e.terms) {
    if (!fits_in(p, rect)) continue;
    Partition pc = complement(p, rect);
    long long next = checked_add(out.terms[pc], c);
    if (next == 0)
      out.terms.erase(pc);
    else
      out.terms[pc] = next;
  }
  return normalized(std::move(out));
}

std::string expansion_text(const SchurExpansion& e) {
  if (e.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : e.terms) {
    long long mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "s(" + format_parts(p) + ")";
  }
  return out;
}

std::string expansion_json(const SchurExpansion& e) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [p, c] : e.terms) {
    nlohmann::ordered_json term;
    term["partition"] = p;
    term["coeff"] = c;
    terms.push_back(term);
  }
  return terms.dump();
}

}  // namespace skewlr
