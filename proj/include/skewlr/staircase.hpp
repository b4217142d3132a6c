#pragma once

#include <string>
#include <utility>
#include <vector>

#include "skewlr/schur.hpp"

namespace skewlr {

enum class RelationVerdict { Dominates, NotDominates };

struct PredictedRelation {
  RelationVerdict verdict = RelationVerdict::NotDominates;
  // antichain | chain-forward | chain-converse | cross-forward |
  // cross-converse | k-ge-h | closed-world | complement-transfer
  std::string rule;
  int lam_arm = 0, lam_leg = 0, mu_arm = 0, mu_leg = 0;
  int h = 0, k = 0, half = 0;
};

// Does S(lam, alpha; k) dominate S(mu, alpha; k)? Classification over
// ordered pairs of distinct hooks of size h <= n + k, 0 <= k <= h; depends
// on alpha only through its length n.
PredictedRelation predicted_relation(Hook lam, Hook mu, int h, int k, int n);

// Does S(lam^c, alpha; k) dominate S(mu^c, alpha; k)? Delegates to the hook
// classification at alpha^r with overlap (n+k) - length(alpha^r). Requires
// k in {0,1} and h <= n + k.
PredictedRelation predicted_relation_complement(Hook lam, Hook mu, int h,
                                                int k,
                                                const Composition& alpha);

enum class ProofVariant { RValues, Antichain };

// The witness filling used to separate hook foundations: the hook placed in
// lambda (+) Delta_alpha form with its first row drawn from R_{alpha,k}.
// RValues: row = k ones then the smallest arm-k values of R, column below =
// the next leg-1 values. Antichain: row ends with |alpha|+1 and the column
// holds |alpha|+2 .. |alpha|+leg. Returns the full content and the tableau.
std::pair<Content, Tableau> proof_content_tableau(
    Hook mu, const Composition& alpha, int k,
    ProofVariant variant = ProofVariant::RValues);

enum class CountSide { Row, Column };

// Predicted lattice-filling count of S(mu, alpha; k) at the RValues proof
// content: C(h-k, mu_a-k) (row side; C(h-1, mu_a-1) at k=0) or
// C(h-k, mu_l-1) (column side; C(h-1, mu_l-1) at k=0).
long long binomial_count_check(int h, int k, Hook mu, CountSide side);

struct TransferInstance {
  SkewShape foundation_side;  // S(mu, alpha; k)
  SkewShape reversed_side;    // S(lambda, alpha^r; k'), lambda = mu^c in (w^l)
  Rectangle rect;             // (w^{|alpha|+l}), w = n + k
};

// Instance of the cut-staircase transfer identity
// s_{S(mu,alpha;k)} = c(s_{S(lambda,alpha^r;k')}), where the reversed side's
// overlap k' = w - length(alpha^r) keeps its staircase width equal to w.
// Requires k in {0,1} and mu with exactly l positive parts inside (w^l).
TransferInstance build_transfer_instance(const Partition& mu,
                                         const Composition& alpha, int k,
                                         int l);

struct PairOutcome {
  Hook lam, mu;
  PredictedRelation predicted;
  ComparisonResult observed;
  bool mismatch = false;
};

struct FamilyReport {
  Composition alpha;
  int h = 0;
  int k = 0;
  bool complemented = false;
  int rect_height = 0;  // 0 when not complemented
  std::vector<PairOutcome> pairs;
  int mismatch_count = 0;
};

// The family member diagram: S(lam, alpha; k), or S(lam^c, alpha; k) with
// lam^c taken in ((n+k)^rect_height) when complemented.
SkewShape family_member(Hook lam, const Composition& alpha, int k,
                        bool complemented = false, int rect_height = 0);

// Checks every ordered pair of distinct hooks of size h: predicted verdict
// against the brute-force comparison.
FamilyReport verify_hook_family(const Composition& alpha, int h, int k,
                                bool complemented = false, int rect_height = 0,
                                const ComputeOptions& opt = {});

std::string report_json(const FamilyReport& report);

}  // namespace skewlr
