#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bramblekit/constants.hpp"
#include "bramblekit/graph.hpp"
#include "bramblekit/lp.hpp"
#include "bramblekit/web.hpp"

namespace bk {

enum class OrderMethod { ExactHittingSet, LpFractional, Structural };

std::string to_string(OrderMethod m);
OrderMethod parse_order_method(const std::string& name);

struct OrderCertificate {
  int lower_bound = 0;
  OrderMethod method = OrderMethod::ExactHittingSet;

  friend bool operator==(const OrderCertificate&, const OrderCertificate&) = default;
};

struct Bramble {
  std::vector<VertexSet> elements;
  std::optional<OrderCertificate> order;
};

/// Each element nonempty, sorted, connected; every pair touches.
Check validate_bramble(const Graph& g, const Bramble& b);

/// Crosses (row r union column c) of grid(l), ordered by (r, c).
Bramble crosses_bramble(int l);

/// Order l + 1 bramble of grid(l): crosses of the top-left (l-1)x(l-1)
/// subgrid, the last row, and the last column without its corner.
Bramble grid_bramble(int l);

struct HittingSet {
  int order = 0;
  VertexSet hitting_set;
};

/// Minimum hitting set by branch-and-bound. Throws CapacityError when the
/// element count or the size of the union exceeds the configured caps.
HittingSet bramble_order_exact(const Bramble& b, const Constants& cfg = {});

struct LpBound {
  BigRational value{0};
  bool optimal = false;  // exact LP optimum rather than a certified lower bound
};

/// Fractional hitting-set value via its packing dual. Solved exactly in
/// rationals when small; otherwise a rounded dual solution certifies a lower
/// bound.
LpBound bramble_order_lp(const Bramble& b, const Constants& cfg = {});

/// Exact order when within the caps, otherwise the ceiling of the LP bound.
OrderCertificate certified_order(const std::vector<VertexSet>& elements, const Constants& cfg = {});

// --- concurrent flow --------------------------------------------------------

struct PathFlow {
  Vertex u = 0;
  Vertex v = 0;
  Path path;
  BigRational amount{0};
};

struct ConcurrentFlow {
  VertexSet w;
  BigRational value{0};
  BigRational upper_bound{0};  // certified by a dual length function
  bool optimal = false;
  int phases = 0;  // multiplicative-weights phases, 0 for the exact LP
  std::vector<PathFlow> path_flows;
};

/// Re-sums the path flows: every ordered pair carries exactly `value`, every
/// vertex carries at most 1, every path is a path of g between its pair.
Check validate_concurrent_flow(const Graph& g, const ConcurrentFlow& f);

/// Maximum concurrent vertex flow on terminals w (|w| >= 2). Exact rational LP
/// when the arc formulation has at most cfg.flow_exact_var_cap variables,
/// otherwise multiplicative weights with a certified (1 + flow_epsilon) gap
/// or the phase cap. Terminals in different components give value 0.
ConcurrentFlow max_concurrent_flow(const Graph& g, const VertexSet& w, const Constants& cfg = {});

// --- FIND-BRAMBLE -----------------------------------------------------------

struct FindBrambleResult {
  Bramble bramble;
  std::uint64_t seed = 0;
  int k = 0;  // level of the unsplittable set, 0 when none exists
  VertexSet u;
  VertexSet w0;
  VertexSet w;
  int d = 0;       // floor(k^{3/2})
  int s = 0;       // floor(sqrt(k) ln k)
  int rounds = 0;  // floor(ln n)
  bool degenerate = false;
  std::string note;
  Check validation;  // validate_bramble on the output
  ConcurrentFlow flow;
};

FindBrambleResult find_bramble(const Graph& g, const Constants& cfg, std::uint64_t seed);

// --- weak webs of paths -----------------------------------------------------

/// Path through g hitting every element, built greedily inside elements.
Path hitting_path(const Graph& g, const Bramble& b);

struct WeakKWebOfPaths {
  int k = 1;
  std::vector<Path> paths;
  std::vector<Linkage> linkages;  // one per pair i < j, lexicographic
};

Check validate_weak_web(const Graph& g, const WeakKWebOfPaths& web);

struct WeakWebResult {
  WeakKWebOfPaths web;  // holds achieved_h paths
  int requested_h = 0;
  int achieved_h = 0;
  bool complete = false;
  std::vector<OrderCertificate> segment_orders;
  std::string note;
};

WeakWebResult weak_web_from_bramble(const Graph& g, const Bramble& b, int k, int h,
                                    const Constants& cfg = {});

/// Elements T_i plus the linkage paths of T_i with the far endpoint dropped;
/// uses a web of order h with linkage width at least h^2 and yields h^3
/// elements with a structural order certificate h.
Bramble bramble_from_web(const Graph& g, const KWeb& web);

}  // namespace bk
