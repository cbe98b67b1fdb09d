#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixcon/bundle.hpp"
#include "mixcon/connectivity.hpp"
#include "mixcon/graph.hpp"

namespace mixcon {

enum class VerifyResult { Verified, Counterexample, PreconditionFailed };

// One machine-checked claim instance. The instance string is a
// self-contained canonical encoding (graphs, twists, parameters), so a
// failing report can be replayed byte-identically.
struct TheoremReport {
  std::string statement;  // which statement was checked, by role
  std::string instance;
  std::string claim;      // "(p,q)" that was tested on the instance
  VerifyResult result = VerifyResult::Verified;
  std::optional<FaultSet> certificate;  // disconnecting set on counterexample
  bool sampled = false;   // true when checked by random sampling only
  double wall_ms = 0.0;
};

// Single line of space-separated key=value pairs.
std::string format_report(const TheoremReport& r);
// Single-line JSON object, suitable for line-delimited output.
std::string report_to_json(const TheoremReport& r);

struct VerifyOptions {
  // Instances with more vertices than this are checked by seeded random
  // fault sampling instead of exhaustive enumeration.
  int exhaustive_limit = 40;
  int samples = 2000;
  std::uint64_t seed = 0x243f6a8885a308d3ull;
};

// Checks the bundle connectivity claims for a fibre that is
// (pf,qf)-connected and a base that is (pb,qb)-connected: the sum claim
// (pf+pb, qf+qb), and when qf,qb > 0 the shifted claim
// (pf+pb+1, qf+qb-1). One report per applicable claim; if fibre or base
// lacks the claimed connectivity each report says precondition-failed.
std::vector<TheoremReport> verify_bundle_theorem(const BundleSpec& spec,
                                                 int pf, int qf, int pb,
                                                 int qb,
                                                 const VerifyOptions& = {});

// Product form: factors[i] is claimed (params[i].p, params[i].q)-connected.
// Checks (sum p, sum q) and, with k = #{q_i > 0} >= 1, the shifted claim
// (sum p + k - 1, sum q - k + 1).
std::vector<TheoremReport> verify_product_corollary(
    const std::vector<Graph>& factors, const std::vector<MixedQuery>& params,
    const VerifyOptions& = {});

// Per-graph and per-pair consequences:
//  - shift-implication: every frontier claim (p,q) with p > 0 shifts to
//    a valid (p-1, q+1) claim;
//  - vertex-only-sum: products are (kappa1+kappa2, 0)-connected;
//  - edge-only-sum: products are (0, lambda1+lambda2)-connected;
//  - edge-sum-strengthening: products are even (1, lambda1+lambda2-1)-
//    connected, one better than the edge-only sum.
std::vector<TheoremReport> verify_special_cases(
    const std::vector<Graph>& corpus, const VerifyOptions& = {});

// Bundle claims over all fibre/base pairs from a small zoo of graphs
// (K2, K3, K4, C3, C4, C5, K_{2,3}), with the identity twist and one
// nontrivial twist each, parameters drawn from each graph's profile
// frontier. Ends with two classic instances: the twisted torus (C4 over
// C4 with a rotation) and K2 over C3 with a swap (K_{3,3}).
std::vector<TheoremReport> default_battery(const VerifyOptions& = {});

}  // namespace mixcon
