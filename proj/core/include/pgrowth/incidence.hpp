#ifndef PGROWTH_INCIDENCE_HPP
#define PGROWTH_INCIDENCE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "pgrowth/errors.hpp"
#include "pgrowth/index_set.hpp"

namespace pgrowth {

using PointId = std::uint32_t;
using LineId = std::uint32_t;

/// Result of checking the projective-plane axioms.
///   P1: any two distinct points lie on exactly one common line.
///   P2: any two distinct lines meet in exactly one common point.
///   P3: some four points form a quadrilateral (no three collinear).
/// Failure witnesses are the lexicographically first violating pair; the P3
/// witness on success is the first quadrilateral in ascending scan order.
struct AxiomReport {
  bool p1 = false;
  bool p2 = false;
  bool p3 = false;
  std::optional<std::array<PointId, 2>> p1_witness;  // set iff p1 fails
  std::optional<std::array<LineId, 2>> p2_witness;   // set iff p2 fails
  std::optional<std::array<PointId, 4>> quadrilateral;  // set iff p3 holds

  bool all() const { return p1 && p2 && p3; }
};

struct SubSystem;

/// Bipartite point/line incidence with both views materialized. The two
/// membership maps are exact transposes and every membership list is sorted
/// ascending with no duplicates. Immutable after construction.
class IncidenceSystem {
 public:
  IncidenceSystem() = default;

  /// Builds from per-line point sets. Outside raw mode, lines with fewer
  /// than two points are rejected (lines are meant to arise from point
  /// pairs) and so are two lines with identical point sets.
  static IncidenceSystem from_lines(
      std::uint32_t point_count,
      const std::vector<std::vector<PointId>>& lines, bool raw = false);

  std::uint32_t v() const { return static_cast<std::uint32_t>(lines_on_point_.size()); }
  std::uint32_t b() const { return static_cast<std::uint32_t>(points_on_line_.size()); }

  const std::vector<PointId>& points_on_line(LineId l) const {
    return points_on_line_[l];
  }
  const std::vector<LineId>& lines_on_point(PointId p) const {
    return lines_on_point_[p];
  }

  bool incident(PointId p, LineId l) const;

  /// Total number of incident (point, line) pairs.
  std::size_t flags() const;

  friend bool operator==(const IncidenceSystem&, const IncidenceSystem&) = default;

 private:
  friend IncidenceSystem dual(const IncidenceSystem&);
  friend SubSystem restrict_system(const IncidenceSystem&, const IndexSet&,
                                   const IndexSet&);

  static IncidenceSystem from_adjacency(
      std::vector<std::vector<PointId>> points_on_line,
      std::vector<std::vector<LineId>> lines_on_point);

  void check_transpose_consistency() const;

  std::vector<std::vector<PointId>> points_on_line_;
  std::vector<std::vector<LineId>> lines_on_point_;
};

/// Points and lines swap roles. An involution: dual(dual(S)) == S exactly.
/// No structural validation is applied (the dual of a valid system can have
/// short or duplicate lines).
IncidenceSystem dual(const IncidenceSystem& s);

/// A sub-incidence-structure together with the ambient ids its indices map
/// back to (index i of `system` corresponds to point_ids[i] / line_ids[i]).
struct SubSystem {
  IncidenceSystem system;
  std::vector<PointId> point_ids;
  std::vector<LineId> line_ids;
};

/// Restriction of `s` to the given point and line subsets, reindexed densely
/// in ascending ambient order. Never validates (restrictions routinely have
/// short lines).
SubSystem restrict_system(const IncidenceSystem& s, const IndexSet& points,
                          const IndexSet& lines);

AxiomReport verify_axioms(const IncidenceSystem& s);

/// True iff P1 holds (vacuously true for the empty system).
bool is_linear_space(const IncidenceSystem& s);

/// The unique line through two distinct points. Throws NotFoundError /
/// NotUniqueError when the system violates P1 for this pair.
LineId join(const IncidenceSystem& s, PointId p1, PointId p2);

/// The unique common point of two distinct lines. Throws NotFoundError /
/// NotUniqueError when the system violates P2 for this pair.
PointId meet(const IncidenceSystem& s, LineId l1, LineId l2);

/// True iff some line contains all three points.
bool collinear(const IncidenceSystem& s, PointId a, PointId b, PointId c);

}  // namespace pgrowth

#endif  // PGROWTH_INCIDENCE_HPP
