#ifndef PGROWTH_CLASSIFY_HPP
#define PGROWTH_CLASSIFY_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "pgrowth/growth.hpp"
#include "pgrowth/incidence.hpp"
#include "pgrowth/plane.hpp"

namespace pgrowth {

/// Exact fraction, kept so f = b*k = v*r is an identity rather than a float
/// comparison.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t n, std::int64_t d) {
    const std::int64_t g = d ? std::gcd(n, d) : 1;
    return g ? Rational{n / g, d / g} : Rational{n, d};
  }

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Bookkeeping for a finite linear space: point/line counts, flag count,
/// exact average line size k and point degree r, the two largest line sizes
/// and the minimum point degree.
struct LinearSpaceStats {
  std::uint64_t v = 0;
  std::uint64_t b = 0;
  std::uint64_t f = 0;   // flags: sum of line sizes = sum of point degrees
  Rational k;            // f / b
  Rational r;            // f / v
  std::uint32_t c = 0;   // max points on a line
  std::uint32_t c1 = 0;  // points on the second-most populous line
  std::uint32_t d = 0;   // min lines through a point
};

/// Which kind of degenerate plane (P1 and P2 hold, P3 fails) a system is.
struct DegenerateShape {
  enum class Kind { Pencil, Fan };
  Kind kind = Kind::Pencil;
  /// Pencil: a line incident with every point. Unset only in the vacuous
  /// corner of a system without lines.
  std::optional<LineId> pencil_line;
  /// Fan: all points but `apex` lie on `spine`; every other line has exactly
  /// two points, one of which is the apex.
  PointId apex = 0;
  LineId spine = 0;
};

struct CollinearityResult {
  enum class Kind { NotCollinear, OnLine, Trivially };
  Kind kind = Kind::NotCollinear;
  LineId line = 0;  // set for OnLine

  bool collinear() const { return kind != Kind::NotCollinear; }
};

/// Outcome of the b = v dichotomy for a linear space: a projective plane of
/// order n (with v = n^2 + n + 1) or a fan.
struct EqualCountsResult {
  enum class Kind { ProjectivePlane, Fan };
  Kind kind = Kind::ProjectivePlane;
  std::uint32_t order = 0;  // plane case: n = k - 1
  PointId apex = 0;         // fan case
  LineId spine = 0;
};

struct SubplaneCheck {
  bool ok = false;
  std::string failure;  // empty when ok
};

/// Top-level classification of how a point set grows. Exactly one case is
/// reported, evaluated in this order: Collinear, Fan, SubplaneExact,
/// SubplaneMinusOne, QuadraticGrowth (the cases can overlap; the order is
/// fixed so reports are deterministic).
struct GrowthClassification {
  enum class Case {
    QuadraticGrowth,
    SubplaneExact,
    SubplaneMinusOne,
    Fan,
    Collinear,
  };

  Case kind = Case::QuadraticGrowth;
  /// 1 = quadratic growth of P3, 2 = subplane (exact or minus one),
  /// 3 = degenerate subplane (fan or collinear).
  int theorem_case = 1;

  CollinearityResult collinear;            // Collinear
  std::optional<PointId> fan_apex;         // Fan
  std::optional<LineId> fan_spine;         // Fan
  std::optional<IndexSet> subplane_points; // Subplane*
  std::optional<IndexSet> subplane_lines;  // Subplane*
  std::optional<PointId> missing_point;    // SubplaneMinusOne

  std::size_t p0_size = 0;
  std::size_t p3_size = 0;
  bool quadratic_bound_met = false;  // 4*|P3| >= |P0|^2

  GrowthTrace trace;

  static const char* case_name(Case c);
};

/// The finer three-way report behind the classification: which of
///   (1) 4*|P3| >= |P0|^2,
///   (2) some line carries at least half of P (threshold implemented as
///       >= |P|/2; reports carry the note),
///   (3) P2 = P1 or P2 = P1 plus one point
/// hold for this set. Several can hold at once; all are reported.
struct PropositionCases {
  bool quadratic = false;
  bool half_on_a_line = false;
  bool stagnant_p2 = false;

  std::optional<LineId> heavy_line;      // max |P ∩ line|, lowest id on ties
  std::size_t heavy_count = 0;
  std::optional<std::uint32_t> delta;    // |P2 \ P1| when stagnant
  std::optional<PointId> extra_point;    // the one new point when delta == 1
};

LinearSpaceStats stats(const IncidenceSystem& s);

/// The line containing all of P (when |P| >= 2 and one exists), a trivial
/// marker for |P| <= 1, or NotCollinear.
CollinearityResult is_collinear(const ProjectivePlane& plane,
                                const IndexSet& p);

/// Classifies a degenerate plane per the pencil/fan dichotomy; nullopt when
/// the system is not degenerate (P1 or P2 fails, or P3 holds).
std::optional<DegenerateShape> is_degenerate_plane(const IncidenceSystem& s);

/// The fan on n >= 3 points: points 0..n-2 on a spine line, point n-1 the
/// apex, one two-point line joining the apex to each spine point.
IncidenceSystem make_fan(std::uint32_t n);

/// The b = v dichotomy. Requires b == v, P1, and every line to have at least
/// two points (lines here always arise from point pairs); throws
/// PreconditionError otherwise, and TheoremViolationError if the input fits
/// neither case.
EqualCountsResult classify_equal_counts(const IncidenceSystem& s);

/// Whether (P, L) is a projective subplane of the ambient plane: the induced
/// system satisfies P1-P3 and the pair is closed under ambient join and meet.
SubplaneCheck is_subplane(const ProjectivePlane& plane, const IndexSet& points,
                          const IndexSet& lines);

/// The unique point whose addition turns P into a subplane, if one exists.
/// Candidates are meets of pairs of defined lines falling outside P.
std::optional<PointId> is_subplane_minus_one(const ProjectivePlane& plane,
                                             const IndexSet& points);

/// The trichotomy. Throws TheoremViolationError (carrying the trace) if no
/// case applies - the falsification hook; never expected.
GrowthClassification classify_growth(const ProjectivePlane& plane,
                                     const IndexSet& p);

PropositionCases proposition_growth_cases(const ProjectivePlane& plane,
                                          const IndexSet& p);

}  // namespace pgrowth

#endif  // PGROWTH_CLASSIFY_HPP
