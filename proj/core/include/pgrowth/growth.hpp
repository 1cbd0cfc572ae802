#ifndef PGROWTH_GROWTH_HPP
#define PGROWTH_GROWTH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pgrowth/incidence.hpp"
#include "pgrowth/plane.hpp"

namespace pgrowth {

/// The iteration record P0, L0, P1, L1, ... inside an ambient plane.
/// Convention: L[i] is the set of lines through at least two points of P[i],
/// and P[i+1] the set of points on at least two lines of L[i].
struct GrowthTrace {
  enum class StopReason { Fixpoint, MaxSteps, Collapsed };

  std::vector<IndexSet> point_sets;  // P0, P1, ...
  std::vector<IndexSet> line_sets;   // L0, L1, ...
  StopReason stop_reason = StopReason::MaxSteps;

  /// P_i / L_i with the frozen-tail semantics: once the iteration stops,
  /// every later set equals the last recorded one.
  const IndexSet& points_at(std::size_t i) const {
    return point_sets[std::min(i, point_sets.size() - 1)];
  }
  const IndexSet& lines_at(std::size_t i) const {
    return line_sets[std::min(i, line_sets.size() - 1)];
  }

  /// |P0|, |L0|, |P1|, |L1|, ... over the recorded sets.
  std::vector<std::size_t> interleaved_sizes() const;

  std::string describe() const;
};

/// Observed quantities for the two-line lower bound on |L|:
/// with m1, m2 points of P on the two lines, |L| >= m1*m2 when their meet is
/// outside P, and |L| >= (m1-1)(m2-1) + a otherwise, where a counts lines of
/// L through the meet.
struct ParnasReport {
  std::size_t m1 = 0;
  std::size_t m2 = 0;
  bool intersection_in_p = false;
  PointId meet_point = 0;
  std::size_t a = 0;
  std::size_t lower_bound = 0;
  std::size_t actual = 0;
  bool holds = false;  // actual >= lower_bound
};

struct ChainCheckResult {
  bool ok = true;
  /// Position in the interleaved sequence where monotonicity first fails
  /// (the entry at this index is smaller than its predecessor).
  std::optional<std::size_t> first_violation;
};

/// Lines of the system incident with at least two points of P; equals the
/// deduplicated set of pairwise joins.
IndexSet lines_defined(const IncidenceSystem& s, const IndexSet& points);
IndexSet lines_defined(const ProjectivePlane& plane, const IndexSet& points);

/// Points incident with at least two lines of L (the dual notion).
IndexSet points_defined(const IncidenceSystem& s, const IndexSet& lines);
IndexSet points_defined(const ProjectivePlane& plane, const IndexSet& lines);

/// Runs up to max_steps rounds (round i computes L_i then P_{i+1}).
/// Stops early with Collapsed when some L_i has at most one line (the trace
/// freezes at the last nonempty state) or Fixpoint when P_{i+1} == P_i.
/// max_steps >= 1; the default 3 records everything through P3 and L2.
GrowthTrace growth_trace(const ProjectivePlane& plane, const IndexSet& p0,
                         std::size_t max_steps = 3);

/// The induced linear space (P, lines defined by P) of an ambient system.
SubSystem induced_space(const IncidenceSystem& s, const IndexSet& points);

/// Fisher's inequality b >= v for a linear space whose points are not all
/// collinear. Always true under the preconditions; a false return is an
/// anomaly the caller must surface, never swallow. Throws PreconditionError
/// when all points are collinear (or the space has fewer than two lines'
/// worth of structure to decide with).
bool fisher_holds(const IncidenceSystem& s);

/// Checks |P0| <= |L0| <= |P1| <= |L1| <= ... over the recorded trace.
/// Meaningful when P0 is not collinear.
ChainCheckResult chain_check(const GrowthTrace& trace);

ParnasReport parnas_report(const ProjectivePlane& plane, const IndexSet& p,
                           LineId l1, LineId l2);

}  // namespace pgrowth

#endif  // PGROWTH_GROWTH_HPP
