#include "skewlr/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewlr {

bool is_partition(const std::vector<int>& parts) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

bool is_composition(const std::vector<int>& parts) {
  return std::all_of(parts.begin(), parts.end(), [](int p) { return p >= 1; });
}

int size_of(const std::vector<int>& parts) {
  int total = 0;
  for (int p : parts) total += p;
  return total;
}

int part_at(const Partition& p, int i) {
  return (i >= 0 && i < static_cast<int>(p.size())) ? p[i] : 0;
}

bool contains(const Partition& inner, const Partition& outer) {
  for (size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] > part_at(outer, static_cast<int>(i))) return false;
  }
  return true;
}

bool fits_in(const Partition& p, Rectangle rect) {
  if (static_cast<int>(p.size()) > rect.height) return false;
  return p.empty() || p[0] <= rect.width;
}

Partition complement(const Partition& rho, Rectangle rect) {
  if (rect.width < 1 || rect.height < 1)
    throw std::invalid_argument("complement: rectangle sides must be positive");
  if (!is_partition(rho))
    throw std::invalid_argument("complement: not a partition");
  if (!fits_in(rho, rect))
    throw std::invalid_argument("complement: partition not inside rectangle");
  Partition out;
  out.reserve(rect.height);
  for (int i = rect.height - 1; i >= 0; --i) {
    int part = rect.width - part_at(rho, i);
    if (part > 0) out.push_back(part);
  }
  return out;
}

Partition Hook::to_partition() const {
  Partition p;
  p.reserve(leg);
  p.push_back(arm);
  for (int i = 1; i < leg; ++i) p.push_back(1);
  return p;
}

std::vector<Hook> hooks_of_size(int h) {
  if (h < 1) throw std::invalid_argument("hooks_of_size: size must be >= 1");
  std::vector<Hook> hooks;
  hooks.reserve(h);
  for (int arm = 1; arm <= h; ++arm) hooks.push_back(Hook{arm, h + 1 - arm});
  return hooks;
}

Partition delta_fat(const Composition& alpha) {
  if (alpha.empty() || !is_composition(alpha))
    throw std::invalid_argument("delta_fat: need a nonempty composition");
  const int n = static_cast<int>(alpha.size());
  Partition out;
  out.reserve(size_of(alpha));
  for (int j = n; j >= 1; --j) {
    for (int rep = 0; rep < alpha[j - 1]; ++rep) out.push_back(j);
  }
  return out;
}

Composition reverse_composition(const Composition& alpha, int k) {
  if (!is_composition(alpha))
    throw std::invalid_argument("reverse_composition: not a composition");
  if (k != 0 && k != 1)
    throw std::invalid_argument("reverse_composition: k must be 0 or 1");
  Composition out(alpha.begin(), k == 0 && !alpha.empty() ? alpha.end() - 1
                                                          : alpha.end());
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {
void gen_partitions(int n, int max_part, int max_len, Partition& cur,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  if (max_len == 0) return;
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(n - p, p, max_len - 1, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n, int max_part, int max_len) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(n, max_part, max_len, cur, out);
  return out;
}

std::vector<Partition> partitions_in_rect(Rectangle rect) {
  std::vector<Partition> out;
  for (int n = 0; n <= rect.width * rect.height; ++n) {
    auto batch = partitions_of(n, rect.width, rect.height);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

Partition parse_partition(const std::string& text) {
  Partition p = parse_composition(text);
  if (!is_partition(p))
    throw std::invalid_argument("parse: parts not weakly decreasing in '" +
                                text + "'");
  return p;
}

Composition parse_composition(const std::string& text) {
  if (text == "-") return {};
  Composition out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string piece = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(piece, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse: bad integer at position " +
                                  std::to_string(pos) + " in '" + text + "'");
    }
    if (used != piece.size() || value < 1)
      throw std::invalid_argument("parse: bad part at position " +
                                  std::to_string(pos) + " in '" + text + "'");
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string format_parts(const std::vector<int>& parts) {
  if (parts.empty()) return "-";
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

}  // namespace skewlr
