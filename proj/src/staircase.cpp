#include "skewlr/staircase.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace skewlr {

namespace {

void check_hook(Hook hk, int h, const char* what) {
  if (hk.arm < 1 || hk.leg < 1 || hk.size() != h)
    throw std::invalid_argument(std::string(what) + ": bad hook for this size");
}

long long binom(int n, int r) {
  if (r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  long long out = 1;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

const char* verdict_name(RelationVerdict v) {
  return v == RelationVerdict::Dominates ? "dominates" : "not-dominates";
}

}  // namespace

PredictedRelation predicted_relation(Hook lam, Hook mu, int h, int k, int n) {
  check_hook(lam, h, "predicted_relation");
  check_hook(mu, h, "predicted_relation");
  if (lam == mu)
    throw std::invalid_argument("predicted_relation: hooks must be distinct");
  if (k < 0 || k > h)
    throw std::invalid_argument("predicted_relation: need 0 <= k <= h");
  if (h > n + k)
    throw std::invalid_argument("predicted_relation: hooks do not fit, need h <= n + k");

  PredictedRelation out;
  out.lam_arm = lam.arm;
  out.lam_leg = lam.leg;
  out.mu_arm = mu.arm;
  out.mu_leg = mu.leg;
  out.h = h;
  out.k = k;
  out.half = (h + 1) / 2;

  const int half = out.half;
  if (k >= h) {
    out.verdict = RelationVerdict::NotDominates;
    out.rule = "k-ge-h";
  } else if (lam.arm <= half && mu.arm <= half) {
    out.verdict = RelationVerdict::NotDominates;
    out.rule = "antichain";
  } else if (half <= lam.arm && lam.arm < mu.arm) {
    bool dom = k == 0 || lam.arm >= mu.leg + k - 1;
    out.verdict = dom ? RelationVerdict::Dominates : RelationVerdict::NotDominates;
    out.rule = dom ? "chain-forward" : "chain-converse";
  } else if (lam.arm <= half && mu.leg <= half) {
    bool dom = k == 0 ? lam.arm >= mu.leg : lam.arm >= mu.leg + k - 1;
    out.verdict = dom ? RelationVerdict::Dominates : RelationVerdict::NotDominates;
    out.rule = dom ? "cross-forward" : "cross-converse";
  } else {
    out.verdict = RelationVerdict::NotDominates;
    out.rule = "closed-world";
  }
  return out;
}

PredictedRelation predicted_relation_complement(Hook lam, Hook mu, int h,
                                                int k, const Composition& alpha) {
  if (k != 0 && k != 1)
    throw std::invalid_argument("predicted_relation_complement: need k in {0,1}");
  Composition rev = reverse_composition(alpha, k);
  // The transfer lands in the reversed family whose width matches
  // w = len(alpha) + k, so its overlap parameter is w - len(rev) = 1
  // for k = 0 as well as k = 1.
  const int n_rev = static_cast<int>(rev.size());
  const int k_rev = static_cast<int>(alpha.size()) + k - n_rev;
  PredictedRelation out = predicted_relation(lam, mu, h, k_rev, n_rev);
  out.k = k;
  out.rule = "complement-transfer";
  return out;
}

std::pair<Content, Tableau> proof_content_tableau(Hook mu,
                                                  const Composition& alpha,
                                                  int k, ProofVariant variant) {
  if (mu.arm < 1 || mu.leg < 1)
    throw std::invalid_argument("proof_content_tableau: bad hook");
  if (alpha.empty() || !is_composition(alpha))
    throw std::invalid_argument("proof_content_tableau: need a nonempty composition");
  if (k < 0) throw std::invalid_argument("proof_content_tableau: k must be nonnegative");

  const int h = mu.size();
  const int n = static_cast<int>(alpha.size());
  const int weight = size_of(alpha);
  RSet rs = r_set(alpha, k);

  std::vector<int> row;
  std::vector<int> col;
  if (variant == ProofVariant::RValues) {
    if (mu.arm < k)
      throw std::invalid_argument("proof_content_tableau: need arm >= k");
    if (h - k > n)
      throw std::invalid_argument("proof_content_tableau: need h - k <= len(alpha)");
    std::vector<int> seq(k, 1);
    seq.insert(seq.end(), rs.values.begin(), rs.values.end());
    row.assign(seq.begin(), seq.begin() + mu.arm);
    col.assign(seq.begin() + mu.arm, seq.begin() + h);
  } else {
    int q = std::min(k, mu.arm - 1);
    int picked = mu.arm - 1 - q;
    if (picked > n)
      throw std::invalid_argument("proof_content_tableau: arm too long for alpha");
    row.assign(q, 1);
    row.insert(row.end(), rs.values.begin(), rs.values.begin() + picked);
    row.push_back(weight + 1);
    for (int j = 2; j <= mu.leg; ++j) col.push_back(weight + j);
  }

  Tableau delta = unique_staircase_filling(alpha);
  Tableau out;
  out.shape = direct_sum(from_partition(mu.to_partition()), Delta_fat(alpha));
  out.rows = delta.rows;
  out.rows.push_back(row);
  for (int v : col) out.rows.push_back({v});
  if (!is_semistandard(out) || !is_lattice(reading_word(out)))
    throw std::invalid_argument(
        "proof_content_tableau: parameters outside the construction's domain");
  return {content(out), out};
}

long long binomial_count_check(int h, int k, Hook mu, CountSide side) {
  check_hook(mu, h, "binomial_count_check");
  if (k < 0) throw std::invalid_argument("binomial_count_check: k must be nonnegative");
  if (k >= 1)
    return side == CountSide::Row ? binom(h - k, mu.arm - k)
                                  : binom(h - k, mu.leg - 1);
  return side == CountSide::Row ? binom(h - 1, mu.arm - 1)
                                : binom(h - 1, mu.leg - 1);
}

TransferInstance build_transfer_instance(const Partition& mu,
                                         const Composition& alpha, int k,
                                         int l) {
  if (!is_partition(mu))
    throw std::invalid_argument("build_transfer_instance: mu must be a partition");
  if (l < 1 || static_cast<int>(mu.size()) != l)
    throw std::invalid_argument(
        "build_transfer_instance: mu must have exactly l positive parts");
  if (k != 0 && k != 1)
    throw std::invalid_argument("build_transfer_instance: need k in {0,1}");
  if (alpha.empty() || !is_composition(alpha))
    throw std::invalid_argument("build_transfer_instance: need a nonempty composition");
  const int n = static_cast<int>(alpha.size());
  const int w = n + k;
  if (mu[0] > w)
    throw std::invalid_argument("build_transfer_instance: mu too wide, need mu_1 <= n + k");

  TransferInstance out;
  Composition rev = reverse_composition(alpha, k);
  Partition lambda = complement(mu, Rectangle{w, l});
  // The reversed family's width must also be w, so its overlap
  // parameter is w - len(rev), which is 1 for k = 0 and k = 1 alike.
  const int k_rev = w - static_cast<int>(rev.size());
  out.foundation_side = staircase_with_foundation(mu, alpha, k);
  out.reversed_side = staircase_with_foundation(lambda, rev, k_rev);
  out.rect = Rectangle{w, size_of(alpha) + l};
  return out;
}

SkewShape family_member(Hook lam, const Composition& alpha, int k,
                        bool complemented, int rect_height) {
  if (alpha.empty() || !is_composition(alpha))
    throw std::invalid_argument("family_member: need a nonempty composition");
  Partition p = lam.to_partition();
  if (!complemented) return staircase_with_foundation(p, alpha, k);
  Rectangle rect{static_cast<int>(alpha.size()) + k, rect_height};
  return staircase_with_foundation(complement(p, rect), alpha, k);
}

FamilyReport verify_hook_family(const Composition& alpha, int h, int k,
                                bool complemented, int rect_height,
                                const ComputeOptions& opt) {
  if (alpha.empty() || !is_composition(alpha))
    throw std::invalid_argument("verify_hook_family: need a nonempty composition");
  if (h < 1) throw std::invalid_argument("verify_hook_family: need h >= 1");
  if (k < 0 || k > h)
    throw std::invalid_argument("verify_hook_family: need 0 <= k <= h");
  const int n = static_cast<int>(alpha.size());
  if (h > n + k)
    throw std::invalid_argument("verify_hook_family: hooks do not fit, need h <= n + k");
  if (complemented) {
    if (k != 0 && k != 1)
      throw std::invalid_argument("verify_hook_family: complemented needs k in {0,1}");
    if (rect_height < h)
      throw std::invalid_argument("verify_hook_family: need rect_height >= h");
  }

  FamilyReport report;
  report.alpha = alpha;
  report.h = h;
  report.k = k;
  report.complemented = complemented;
  report.rect_height = complemented ? rect_height : 0;
  report.mismatch_count = 0;

  std::vector<Hook> hooks = hooks_of_size(h);
  std::vector<SkewShape> members;
  members.reserve(hooks.size());
  for (Hook hk : hooks) {
    members.push_back(family_member(hk, alpha, k, complemented, rect_height));
    skew_schur_expansion(members.back(), opt);
  }

  for (size_t i = 0; i < hooks.size(); ++i) {
    for (size_t j = 0; j < hooks.size(); ++j) {
      if (i == j) continue;
      PairOutcome pair;
      pair.lam = hooks[i];
      pair.mu = hooks[j];
      pair.predicted =
          complemented
              ? predicted_relation_complement(hooks[i], hooks[j], h, k, alpha)
              : predicted_relation(hooks[i], hooks[j], h, k, n);
      pair.observed = compare(members[i], members[j], opt);
      bool observed_dominates =
          pair.observed.verdict == ComparisonResult::Verdict::FirstDominates ||
          pair.observed.verdict == ComparisonResult::Verdict::Equal;
      pair.mismatch = (pair.predicted.verdict == RelationVerdict::Dominates) !=
                      observed_dominates;
      if (pair.mismatch) ++report.mismatch_count;
      report.pairs.push_back(std::move(pair));
    }
  }
  return report;
}

std::string report_json(const FamilyReport& report) {
  nlohmann::ordered_json out;
  out["alpha"] = report.alpha;
  out["h"] = report.h;
  out["k"] = report.k;
  out["complemented"] = report.complemented;
  if (report.complemented) out["rect_height"] = report.rect_height;
  out["pairs"] = nlohmann::ordered_json::array();
  for (const PairOutcome& pair : report.pairs) {
    nlohmann::ordered_json p;
    p["lam"] = {{"arm", pair.lam.arm}, {"leg", pair.lam.leg}};
    p["mu"] = {{"arm", pair.mu.arm}, {"leg", pair.mu.leg}};
    p["predicted"] = {{"verdict", verdict_name(pair.predicted.verdict)},
                      {"rule", pair.predicted.rule}};
    p["observed"] = verdict_string(pair.observed.verdict);
    p["mismatch"] = pair.mismatch;
    out["pairs"].push_back(std::move(p));
  }
  out["mismatch_count"] = report.mismatch_count;
  return out.dump();
}

}  // namespace skewlr
