#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coarse_menger/graph.hpp"
#include "coarse_menger/intervals.hpp"

namespace coarse_menger {

/// A fact the construction guarantees did not hold at runtime. Always an
/// implementation bug, never a property of the input.
class InternalInvariantViolation : public std::logic_error {
 public:
  InternalInvariantViolation(std::string stage, const std::string& detail)
      : std::logic_error(stage + ": " + detail), stage_(std::move(stage)) {}

  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

class SolverError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Joint enumeration visited more connected sets than allowed.
class EnumerationBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolverConfig {
  int c = 7;
  int ell = 19;
  bool self_verify = true;
  int workers = 1;
  std::uint64_t joint_budget = 200'000'000;

  /// Separator radius 8*ell + c + 2 (161 for the defaults).
  Distance radius() const { return 8 * ell + c + 2; }
  void validate() const;
};

struct SolverOutcome {
  enum class Kind { kTwoFarPaths, kCenter, kNoPath };

  Kind kind = Kind::kNoPath;
  Path first;
  Path second;
  Distance pairwise_distance = 0;  // kInfinity when the paths lie in different components
  Vertex center = -1;
  Distance radius = 0;
  std::string stage;  // pipeline stage that produced the outcome

  static SolverOutcome two_paths(const Graph& g, Path p, Path q, std::string stage);
  static SolverOutcome center_at(Vertex x, Distance radius, std::string stage);
};

/// Backbone coordinates: R = r_1..r_{n-1} with r_i = backbone.vertices[i-1].
struct Frame {
  Path backbone;
  int n = 0;                        // |E(R)| + 2
  VertexSet scope;                  // connected component of G containing R
  VertexSet w;                      // ball(R, c)
  VertexSet surface;                // d(v, R) == c
  std::vector<Distance> to_backbone;
  std::vector<Distance> to_surface;
  std::vector<int> a;               // -1 outside scope
  std::vector<int> b;

  Vertex r(int i) const { return backbone.vertices[static_cast<std::size_t>(i - 1)]; }
};

struct ComponentInfo {
  VertexSet vertices;
  VertexSet boundary;
  Interval interval;
};

struct Supercomponent {
  VertexSet vertices;
  Interval interval;
  std::vector<int> selected_members;  // indices into the selected components D
};

/// Paths for the selected supercomponents H_1..H_s, 0-based: a[i] is the
/// access path of H_{i+1} from r_{a_{i+1}} into H_{i+1}, b[i] runs from
/// H_{i+1} to r_{b_{i+1}}, q[i] joins them inside H_{i+1}. segments[i] is
/// the backbone piece R(b_i, a_{i+2}) with b_0 = 1 and a_{s+1} = n-1.
struct PathPieces {
  std::vector<Path> a;
  std::vector<Path> b;
  std::vector<Path> q;
  std::vector<Path> segments;
  Path odd;
  Path even;
};

struct SolverTrace {
  std::optional<Frame> frame;
  std::vector<ComponentInfo> components;
  std::vector<int> selected_components;  // D_1..D_t as indices into components
  VertexSet joints;                      // Z, union of all joints
  std::vector<Supercomponent> supercomponents;
  std::vector<int> selected_supercomponents;  // H_1..H_s
  std::optional<PathPieces> pieces;
  std::vector<std::string> log;
};

Frame build_frame(const Graph& g, const VertexSet& s, const VertexSet& t, const Path& backbone, const SolverConfig& cfg);

/// TwoFarPaths when some S-T path avoids ball(R, 2); Center(r_1) when
/// ball(r_1, radius) separates; otherwise nothing, after asserting
/// n - 2 >= 8*ell + c + 1.
std::optional<SolverOutcome> guard_r1(const Graph& g, const VertexSet& s, const VertexSet& t, const Frame& frame,
                                      const SolverConfig& cfg);

/// For n < 16*ell: tests the ball around the middle backbone vertex.
std::optional<SolverOutcome> guard_small_n(const Graph& g, const VertexSet& s, const VertexSet& t, const Frame& frame,
                                           const SolverConfig& cfg);

std::vector<ComponentInfo> component_intervals(const Graph& g, const Frame& frame);

IntervalFamily interval_family(int horizon, const std::vector<Interval>& intervals);

/// Center(r_m) at the first length-16ell window the component intervals miss.
std::optional<SolverOutcome> certify_powerful_or_center(const Graph& g, const VertexSet& s, const VertexSet& t,
                                                        const Frame& frame, const std::vector<ComponentInfo>& comps,
                                                        const SolverConfig& cfg);

/// Indices of D_1..D_t, in standard order.
std::vector<int> select_components(const Frame& frame, const std::vector<ComponentInfo>& comps, const SolverConfig& cfg);

/// Union of every connected X with |X| <= 8 that is a joint.
VertexSet compute_joints(const Graph& g, const Frame& frame, const std::vector<ComponentInfo>& comps,
                         const std::vector<int>& selected, const SolverConfig& cfg);

std::vector<Supercomponent> build_supercomponents(const Graph& g, const Frame& frame,
                                                  const std::vector<ComponentInfo>& comps,
                                                  const std::vector<int>& selected, const VertexSet& joints,
                                                  const SolverConfig& cfg);

/// Indices of H_1..H_s, in standard order.
std::vector<int> select_supercomponents(const Frame& frame, const std::vector<Supercomponent>& supers,
                                        const SolverConfig& cfg);

PathPieces assemble_two_paths(const Graph& g, const VertexSet& s, const VertexSet& t, const Frame& frame,
                              const std::vector<Supercomponent>& supers, const std::vector<int>& chosen,
                              const SolverConfig& cfg);

/// Either two S-T paths at distance >= 3, or a vertex whose radius
/// 8*ell + c + 2 ball meets every S-T path, or NoPath.
std::pair<SolverOutcome, SolverTrace> solve_k2(const Graph& g, const VertexSet& s, const VertexSet& t,
                                               const SolverConfig& cfg = {});

/// Checks an outcome against its contract; returns a description of the failure.
std::optional<std::string> verify_outcome(const Graph& g, const VertexSet& s, const VertexSet& t,
                                          const SolverOutcome& outcome, Distance min_distance, Distance radius);

/// The structural facts the assembly relies on, re-checked on a trace:
/// component intervals are 16ell-powerful, D_i and D_j (j >= i+3) are
/// >= 4ell-2c+2 apart, distinct supercomponents are >= 5 apart, and every
/// access path is >= 3 from every other supercomponent.
std::vector<std::string> check_trace_claims(const Graph& g, const SolverTrace& trace, const SolverConfig& cfg);

struct GeneralOutcome {
  SolverOutcome outcome;  // in terms of the original graph
  bool verified = false;
  std::string failure;
};

/// Runs solve_k2 on the d-th power of g and maps the result back: paths
/// are expanded through shortest paths and loop-erased, centers get radius
/// d * (8*ell + c + 2). Both are verified in g; failure is reported, not thrown.
GeneralOutcome solve_general(const Graph& g, const VertexSet& s, const VertexSet& t, int d, const SolverConfig& cfg = {});

}  // namespace coarse_menger
