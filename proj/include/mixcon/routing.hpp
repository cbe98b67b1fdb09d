#pragma once

#include <map>
#include <string>
#include <vector>

#include "mixcon/bundle.hpp"
#include "mixcon/graph.hpp"

namespace mixcon {

// Fault tallies per base location. Degenerate faulty edges count toward
// the fibre they sit in, nondegenerate ones toward the base edge they
// cross.
struct FaultWeights {
  std::vector<int> vertex_weight;      // faulty vertices per fibre
  std::vector<int> edge_weight;        // faulty degenerate edges per fibre
  std::map<Edge, int> crossing_weight; // faulty nondegenerate edges per base edge

  int wx(int base_v) const { return vertex_weight[base_v]; }
  int wy(int base_v) const { return edge_weight[base_v]; }
  int crossing(int u, int v) const;
  // Total crossing faults over the edges of a base path.
  int path_weight(const Path& base_path) const;
};

FaultWeights fault_weights(const Bundle& b, const FaultSet& faults);

enum class FibreStatus { Connected, Disconnected, Annihilated };

// Status of each fibre after deleting the faults that fall inside it.
// A single surviving vertex counts as connected; annihilated means no
// surviving vertices at all.
std::vector<FibreStatus> connected_fibres(const Bundle& b,
                                          const FaultSet& faults);

// Connectivity parameters the router assumes: the fibre is
// (fibre_p, fibre_q)-connected and the base is (base_p, base_q)-connected,
// both with q >= 1. A (p, 0) requirement can always be restated as
// (p-1, 1), so this loses no generality.
//
// The admitted fault envelope covers both guarantees the parameters
// buy: up to fibre_p+base_p+1 faulty vertices, up to
// fibre_q+base_q-1 faulty edges, and strictly fewer than
// fibre_p+base_p+fibre_q+base_q total faults.
struct FaultBudget {
  int fibre_p = 0;
  int fibre_q = 1;
  int base_p = 0;
  int base_q = 1;

  int max_vertex_faults() const { return fibre_p + base_p + 1; }
  int max_edge_faults() const { return fibre_q + base_q - 1; }
  int max_total_faults() const {
    return fibre_p + base_p + fibre_q + base_q - 1;
  }
  bool admits(const FaultSet& faults) const;
};

enum class RouteStrategy { Constructive, Fallback };

struct RouteResult {
  Path path;
  RouteStrategy strategy = RouteStrategy::Constructive;
  // Construction steps that produced the path, in order.
  std::vector<std::string> cases;
};

struct RouteOptions {
  // Verify that fibre and base really have the connectivity the budget
  // claims. Skipping the check is cheaper but demotes some internal
  // sanity errors to fallback routing.
  bool check_connectivity_assumptions = true;
  // Permit a plain search on the faulted graph when the structured
  // construction does not cover the instance. The result records which
  // strategy won.
  bool allow_fallback = true;
};

// Finds a fault-free x-to-y path in the faulted total graph. Faults
// beyond the budget envelope are rejected with BudgetExceeded. Within
// the envelope a path always exists; failure to produce one raises
// InvariantViolation.
RouteResult route(const Bundle& b, const FaultBudget& budget,
                  const FaultSet& faults, int x, int y,
                  const RouteOptions& opts = {});

// True iff path is a simple path of the total graph that avoids every
// faulty vertex and edge.
bool route_validate(const Bundle& b, const FaultSet& faults,
                    const Path& path);

}  // namespace mixcon
