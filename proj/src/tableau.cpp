#include "skewlr/tableau.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

namespace skewlr {

bool Content::weakly_decreasing() const {
  for (size_t i = 1; i < counts.size(); ++i) {
    if (counts[i] > counts[i - 1]) return false;
  }
  return true;
}

Partition Content::to_partition() const {
  if (!weakly_decreasing())
    throw std::invalid_argument("content: counts not weakly decreasing");
  Partition p = counts;
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

namespace {

void check_rows_match(const Tableau& t) {
  if (static_cast<int>(t.rows.size()) != t.shape.rows())
    throw std::invalid_argument("tableau: row count does not match shape");
  for (int i = 0; i < t.shape.rows(); ++i) {
    if (static_cast<int>(t.rows[i].size()) != t.shape.row_length(i))
      throw std::invalid_argument("tableau: row width does not match shape");
  }
}

}  // namespace

Word reading_word(const Tableau& t) {
  check_rows_match(t);
  Word w;
  w.reserve(t.shape.box_count());
  for (const auto& row : t.rows) w.insert(w.end(), row.rbegin(), row.rend());
  return w;
}

bool is_lattice(const Word& w) {
  std::vector<int> seen;
  for (int v : w) {
    if (v < 1) return false;
    if (static_cast<size_t>(v) + 1 > seen.size()) seen.resize(v + 1, 0);
    if (v > 1 && seen[v - 1] <= seen[v]) return false;
    ++seen[v];
  }
  return true;
}

bool is_semistandard(const Tableau& t) {
  check_rows_match(t);
  const SkewShape& s = t.shape;
  for (int i = 0; i < s.rows(); ++i) {
    for (size_t j = 0; j < t.rows[i].size(); ++j) {
      if (t.rows[i][j] < 1) return false;
      if (j > 0 && t.rows[i][j] < t.rows[i][j - 1]) return false;
    }
  }
  for (int i = 1; i < s.rows(); ++i) {
    for (int c = s.inner_at(i - 1); c < s.outer[i]; ++c) {
      int above = t.rows[i - 1][c - s.inner_at(i - 1)];
      int below = t.rows[i][c - s.inner_at(i)];
      if (below <= above) return false;
    }
  }
  return true;
}

Content content(const Tableau& t) {
  check_rows_match(t);
  Content out;
  for (const auto& row : t.rows) {
    for (int v : row) {
      if (v < 1) throw std::invalid_argument("content: entries must be >= 1");
      if (static_cast<size_t>(v) > out.counts.size())
        out.counts.resize(v, 0);
      ++out.counts[v - 1];
    }
  }
  while (!out.counts.empty() && out.counts.back() == 0) out.counts.pop_back();
  return out;
}

std::string format_tableau(const Tableau& t) {
  std::string out;
  for (size_t i = 0; i < t.rows.size(); ++i) {
    if (i) out += '\n';
    out += format_parts(t.rows[i]);
  }
  return out;
}

namespace {

// Cells in reading order (rows top to bottom, right to left within a row),
// with the index of the box directly above, if any.
struct CellGeometry {
  struct Cell {
    int row;
    int col;
    int above;  // index into the entry array, or -1
  };
  std::vector<Cell> cells;

  explicit CellGeometry(const SkewShape& s) {
    std::vector<std::vector<int>> prev_row_index;
    prev_row_index.assign(s.rows(), {});
    for (int i = 0; i < s.rows(); ++i) {
      prev_row_index[i].assign(s.row_length(i), -1);
      for (int c = s.outer[i] - 1; c >= s.inner_at(i); --c) {
        int above = -1;
        if (i > 0 && c >= s.inner_at(i - 1) && c < s.outer[i - 1])
          above = prev_row_index[i - 1][c - s.inner_at(i - 1)];
        prev_row_index[i][c - s.inner_at(i)] = static_cast<int>(cells.size());
        cells.push_back({i, c, above});
      }
    }
  }

  bool has_right(int t) const {
    return t > 0 && cells[t - 1].row == cells[t].row;
  }
};

struct NodeCounter {
  std::atomic<std::uint64_t>* shared = nullptr;
  std::uint64_t local = 0;
  std::uint64_t limit = 0;

  void bump() {
    std::uint64_t seen = shared
                             ? shared->fetch_add(1, std::memory_order_relaxed) + 1
                             : ++local;
    if (limit && seen > limit) throw EnumerationLimitExceeded();
  }
};

// Visits each admissible value for cell t, given the prefix. The per-cell
// upper bound row+1 is forced by the lattice condition: every v in row i is
// matched to an earlier v-1 strictly above it.
template <class Fn>
void for_each_value(const CellGeometry& geo, int t,
                    const std::vector<int>& entry,
                    const std::vector<int>& seen,
                    const std::vector<int>* target, NodeCounter& nodes,
                    Fn&& fn) {
  const auto& c = geo.cells[t];
  int lo = 1;
  int hi = c.row + 1;
  if (c.above >= 0) lo = std::max(lo, entry[c.above] + 1);
  if (geo.has_right(t)) hi = std::min(hi, entry[t - 1]);
  for (int v = lo; v <= hi; ++v) {
    nodes.bump();
    if (v > 1 && seen[v - 1] <= seen[v]) continue;
    if (target && seen[v] >= (*target)[v]) continue;
    fn(v);
  }
}

struct DfsState {
  std::vector<int> entry;
  std::vector<int> seen;  // seen[v] = count of value v placed so far
};

template <class OnComplete>
void dfs_run(const CellGeometry& geo, DfsState& st, int t,
             const std::vector<int>* target, NodeCounter& nodes,
             bool& stopped, OnComplete&& done) {
  if (stopped) return;
  if (t == static_cast<int>(geo.cells.size())) {
    if (!done(st)) stopped = true;
    return;
  }
  for_each_value(geo, t, st.entry, st.seen, target, nodes, [&](int v) {
    if (stopped) return;
    st.entry[t] = v;
    ++st.seen[v];
    dfs_run(geo, st, t + 1, target, nodes, stopped, done);
    --st.seen[v];
  });
}

Tableau tableau_from_entries(const SkewShape& shape, const CellGeometry& geo,
                             const std::vector<int>& entry) {
  Tableau t;
  t.shape = shape;
  t.rows.resize(shape.rows());
  for (int i = 0; i < shape.rows(); ++i)
    t.rows[i].assign(shape.row_length(i), 0);
  for (size_t idx = 0; idx < geo.cells.size(); ++idx) {
    const auto& c = geo.cells[idx];
    t.rows[c.row][c.col - shape.inner_at(c.row)] = entry[idx];
  }
  return t;
}

Partition partition_from_seen(const std::vector<int>& seen) {
  Partition p(seen.begin() + 1, seen.end());
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

using CountMap = std::map<Partition, long long, std::greater<Partition>>;

CountMap grouped_counts(const SkewShape& shape, const std::vector<int>* target,
                        const EnumOptions& opt) {
  CellGeometry geo(shape);
  const int ncells = static_cast<int>(geo.cells.size());
  const int value_span = shape.rows() + 2;
  CountMap result;

  unsigned workers = opt.workers;
  if (workers <= 1 || ncells < 12) {
    DfsState st{std::vector<int>(ncells, 0), std::vector<int>(value_span, 0)};
    NodeCounter nodes{nullptr, 0, opt.node_limit};
    bool stopped = false;
    dfs_run(geo, st, 0, target, nodes, stopped, [&](const DfsState& s) {
      ++result[partition_from_seen(s.seen)];
      return true;
    });
    return result;
  }

  std::atomic<std::uint64_t> shared_nodes{0};
  std::vector<DfsState> frontier;
  frontier.push_back(
      DfsState{std::vector<int>(ncells, 0), std::vector<int>(value_span, 0)});
  int depth = 0;
  const size_t want = 4u * workers;
  {
    NodeCounter nodes{&shared_nodes, 0, opt.node_limit};
    while (depth < ncells && !frontier.empty() && frontier.size() < want) {
      std::vector<DfsState> next;
      for (const DfsState& st : frontier) {
        for_each_value(geo, depth, st.entry, st.seen, target, nodes,
                       [&](int v) {
                         next.push_back(st);
                         next.back().entry[depth] = v;
                         ++next.back().seen[v];
                       });
      }
      frontier = std::move(next);
      ++depth;
    }
  }
  if (depth == ncells) {
    for (const DfsState& st : frontier) ++result[partition_from_seen(st.seen)];
    return result;
  }

  std::mutex merge_mutex;
  std::atomic<size_t> cursor{0};
  std::exception_ptr first_error;
  auto work = [&]() {
    CountMap local;
    try {
      NodeCounter nodes{&shared_nodes, 0, opt.node_limit};
      for (;;) {
        size_t i = cursor.fetch_add(1);
        if (i >= frontier.size()) break;
        DfsState st = frontier[i];
        bool stopped = false;
        dfs_run(geo, st, depth, target, nodes, stopped,
                [&](const DfsState& s) {
                  ++local[partition_from_seen(s.seen)];
                  return true;
                });
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(merge_mutex);
      if (!first_error) first_error = std::current_exception();
      return;
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    for (const auto& [key, count] : local) result[key] += count;
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
  return result;
}

}  // namespace

void enumerate_lr_fillings(const SkewShape& shape,
                           const std::function<bool(const Tableau&)>& visit,
                           std::uint64_t node_limit) {
  CellGeometry geo(shape);
  const int ncells = static_cast<int>(geo.cells.size());
  DfsState st{std::vector<int>(ncells, 0),
              std::vector<int>(shape.rows() + 2, 0)};
  NodeCounter nodes{nullptr, 0, node_limit};
  bool stopped = false;
  dfs_run(geo, st, 0, nullptr, nodes, stopped, [&](const DfsState& s) {
    return visit(tableau_from_entries(shape, geo, s.entry));
  });
}

std::vector<Tableau> lr_fillings(const SkewShape& shape,
                                 std::uint64_t node_limit) {
  std::vector<Tableau> out;
  enumerate_lr_fillings(
      shape,
      [&](const Tableau& t) {
        out.push_back(t);
        return true;
      },
      node_limit);
  return out;
}

std::map<Partition, long long, std::greater<Partition>> lr_content_counts(
    const SkewShape& shape, const EnumOptions& opt) {
  return grouped_counts(shape, nullptr, opt);
}

long long lr_coefficient(const Partition& outer, const Partition& inner,
                         const Partition& nu, const EnumOptions& opt) {
  if (!is_partition(outer) || !is_partition(inner) || !is_partition(nu))
    throw std::invalid_argument("lr_coefficient: arguments must be partitions");
  if (!contains(inner, outer))
    throw std::invalid_argument("lr_coefficient: inner not contained in outer");
  if (size_of(outer) != size_of(inner) + size_of(nu)) return 0;
  SkewShape shape(outer, inner);
  std::vector<int> target(shape.rows() + 2, 0);
  for (size_t i = 0; i < nu.size(); ++i) {
    int v = static_cast<int>(i) + 1;
    if (v >= static_cast<int>(target.size())) return 0;
    target[v] = nu[i];
  }
  CountMap grouped = grouped_counts(shape, &target, opt);
  long long total = 0;
  for (const auto& [key, count] : grouped) total += count;
  return total;
}

Tableau unique_staircase_filling(const Composition& alpha) {
  SkewShape shape = Delta_fat(alpha);
  const int n = static_cast<int>(alpha.size());
  std::vector<int> first_row(n, 0);
  for (int c = 0; c < n; ++c) {
    int i = 0;
    while (shape.inner_at(i) > c) ++i;
    first_row[c] = i;
  }
  Tableau t;
  t.shape = shape;
  t.rows.resize(shape.rows());
  for (int i = 0; i < shape.rows(); ++i) {
    for (int c = shape.inner_at(i); c < shape.outer[i]; ++c)
      t.rows[i].push_back(i - first_row[c] + 1);
  }
  return t;
}

RSet r_set(const Composition& alpha, int k) {
  if (alpha.empty() || !is_composition(alpha))
    throw std::invalid_argument("r_set: need a nonempty composition");
  if (k < 0) throw std::invalid_argument("r_set: k must be nonnegative");
  RSet out;
  out.one_multiplicity = k;
  int acc = 1;
  const int n = static_cast<int>(alpha.size());
  for (int j = 1; j <= n; ++j) {
    acc += alpha[n - j];
    out.values.push_back(acc);
  }
  return out;
}

namespace {

// Reads off alpha from consecutive staircase row lengths 1,...,n with
// multiplicities alpha_1,...,alpha_n; empty when the pattern breaks.
Composition alpha_from_row_lengths(const SkewShape& s, int begin, int end) {
  Composition alpha;
  int expect = 1;
  for (int i = begin; i < end; ++i) {
    int len = s.row_length(i);
    if (len == expect + 1) {
      ++expect;
      alpha.push_back(1);
    } else if (len == expect && !alpha.empty()) {
      ++alpha.back();
    } else if (len == 1 && alpha.empty()) {
      alpha.push_back(1);
    } else {
      return {};
    }
  }
  return alpha;
}

}  // namespace

Tableau shift_join(const Tableau& t, int k) {
  if (k < 0) throw std::invalid_argument("shift_join: k must be nonnegative");
  if (!is_semistandard(t))
    throw std::invalid_argument("shift_join: tableau is not semistandard");
  if (!is_lattice(reading_word(t)))
    throw std::invalid_argument("shift_join: reading word is not lattice");
  const SkewShape& s = t.shape;
  if (s.rows() == 0)
    throw std::invalid_argument("shift_join: empty tableau");

  int split = 0;
  while (split < s.rows() && s.inner_at(split) > 0) ++split;

  Partition lambda;
  Composition alpha;
  bool matched = false;
  if (split > 0 && split < s.rows()) {
    lambda = Partition(s.outer.begin() + split, s.outer.end());
    alpha = alpha_from_row_lengths(s, 0, split);
    if (!alpha.empty() &&
        s == direct_sum(from_partition(lambda), Delta_fat(alpha)))
      matched = true;
  }
  if (!matched) {
    lambda.clear();
    alpha = alpha_from_row_lengths(s, 0, s.rows());
    if (!alpha.empty() && s == Delta_fat(alpha)) {
      matched = true;
      split = s.rows();
    }
  }
  if (!matched)
    throw std::invalid_argument(
        "shift_join: shape is not lambda (+) Delta_alpha");

  if (!lambda.empty()) {
    int ones = static_cast<int>(
        std::count(t.rows[split].begin(), t.rows[split].end(), 1));
    if (ones > k)
      throw std::invalid_argument(
          "shift_join: more than k ones in the foundation's first row");
  }

  Tableau out;
  out.shape = staircase_with_foundation(lambda, alpha, k);
  out.rows = t.rows;
  if (!is_semistandard(out) || !is_lattice(reading_word(out)))
    throw std::logic_error("shift_join: result failed the join guarantee");
  return out;
}

}  // namespace skewlr
