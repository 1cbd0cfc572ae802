#include "pgrowth/classify.hpp"

#include <algorithm>
#include <string>

namespace pgrowth {

const char* GrowthClassification::case_name(Case c) {
  switch (c) {
    case Case::QuadraticGrowth: return "quadratic-growth";
    case Case::SubplaneExact: return "subplane";
    case Case::SubplaneMinusOne: return "subplane-minus-one";
    case Case::Fan: return "fan";
    case Case::Collinear: return "collinear";
  }
  return "?";
}

LinearSpaceStats stats(const IncidenceSystem& s) {
  LinearSpaceStats st;
  st.v = s.v();
  st.b = s.b();
  st.f = s.flags();

  std::uint32_t max1 = 0, max2 = 0;
  for (LineId l = 0; l < s.b(); ++l) {
    const auto size = static_cast<std::uint32_t>(s.points_on_line(l).size());
    if (size >= max1) {
      max2 = max1;
      max1 = size;
    } else if (size > max2) {
      max2 = size;
    }
  }
  st.c = max1;
  st.c1 = max2;

  std::uint32_t min_deg = 0;
  for (PointId p = 0; p < s.v(); ++p) {
    const auto deg = static_cast<std::uint32_t>(s.lines_on_point(p).size());
    if (p == 0 || deg < min_deg) min_deg = deg;
  }
  st.d = s.v() ? min_deg : 0;

  st.k = st.b ? Rational::of(static_cast<std::int64_t>(st.f),
                             static_cast<std::int64_t>(st.b))
              : Rational{0, 1};
  st.r = st.v ? Rational::of(static_cast<std::int64_t>(st.f),
                             static_cast<std::int64_t>(st.v))
              : Rational{0, 1};
  return st;
}

CollinearityResult is_collinear(const ProjectivePlane& plane,
                                const IndexSet& p) {
  const std::size_t n = p.count();
  if (n <= 1) return {CollinearityResult::Kind::Trivially, 0};

  const auto pts = p.to_vector();
  const LineId l = plane.join(pts[0], pts[1]);
  const auto& on_line = plane.system().points_on_line(l);
  for (PointId pt : pts)
    if (!std::binary_search(on_line.begin(), on_line.end(), pt))
      return {CollinearityResult::Kind::NotCollinear, 0};
  return {CollinearityResult::Kind::OnLine, l};
}

std::optional<DegenerateShape> is_degenerate_plane(const IncidenceSystem& s) {
  const AxiomReport report = verify_axioms(s);
  if (!report.p1 || !report.p2 || report.p3) return std::nullopt;

  // Pencil: some line carries every point. Scanned in id order so the
  // witness is deterministic.
  for (LineId l = 0; l < s.b(); ++l)
    if (s.points_on_line(l).size() == s.v())
      return DegenerateShape{DegenerateShape::Kind::Pencil, l, 0, 0};
  if (s.b() == 0)  // vacuous corner: nothing to point at
    return DegenerateShape{DegenerateShape::Kind::Pencil, std::nullopt, 0, 0};

  // Fan: a line with all points but one; the dichotomy guarantees it exists
  // and that every other line is a two-point line through the apex.
  for (LineId l = 0; l < s.b(); ++l) {
    if (s.points_on_line(l).size() + 1 != s.v()) continue;
    const auto& spine_points = s.points_on_line(l);
    PointId apex = UINT32_MAX;
    for (PointId p = 0; p < s.v(); ++p)
      if (!std::binary_search(spine_points.begin(), spine_points.end(), p)) {
        apex = p;
        break;
      }
    bool valid = true;
    for (LineId m = 0; m < s.b() && valid; ++m) {
      if (m == l) continue;
      const auto& pts = s.points_on_line(m);
      valid = pts.size() == 2 &&
              std::binary_search(pts.begin(), pts.end(), apex);
    }
    if (valid)
      return DegenerateShape{DegenerateShape::Kind::Fan, std::nullopt, apex, l};
  }

  throw TheoremViolationError(
      "degenerate plane matches neither the pencil nor the fan case", "");
}

IncidenceSystem make_fan(std::uint32_t n) {
  if (n < 3) throw PreconditionError("a fan needs at least 3 points");
  std::vector<std::vector<PointId>> lines;
  lines.reserve(n);
  std::vector<PointId> spine(n - 1);
  for (std::uint32_t i = 0; i + 1 < n; ++i) spine[i] = i;
  lines.push_back(spine);
  for (std::uint32_t i = 0; i + 1 < n; ++i)
    lines.push_back({i, n - 1});
  return IncidenceSystem::from_lines(n, lines);
}

EqualCountsResult classify_equal_counts(const IncidenceSystem& s) {
  if (s.b() != s.v())
    throw PreconditionError("b = v required (got b=" + std::to_string(s.b()) +
                            ", v=" + std::to_string(s.v()) + ")");
  for (LineId l = 0; l < s.b(); ++l)
    if (s.points_on_line(l).size() < 2)
      throw PreconditionError(
          "every line must have at least two points for the b=v dichotomy");

  const AxiomReport report = verify_axioms(s);
  if (!report.p1) throw PreconditionError("input is not a linear space");

  if (!report.p3) {
    const auto shape = is_degenerate_plane(s);
    if (shape && shape->kind == DegenerateShape::Kind::Fan)
      return EqualCountsResult{EqualCountsResult::Kind::Fan, 0, shape->apex,
                               shape->spine};
    throw TheoremViolationError(
        "b=v linear space is neither a projective plane nor a fan", "");
  }

  if (!report.p2)
    throw TheoremViolationError(
        "b=v linear space with a quadrilateral but failing P2", "");

  const LinearSpaceStats st = stats(s);
  // Regular: k is an integer; n = k - 1 and v = n^2 + n + 1.
  if (st.k.den != 1)
    throw TheoremViolationError("b=v plane candidate is not regular", "");
  const std::uint32_t n = static_cast<std::uint32_t>(st.k.num - 1);
  if (st.v != std::uint64_t{n} * n + n + 1)
    throw TheoremViolationError("order count v != n^2+n+1", "");
  return EqualCountsResult{EqualCountsResult::Kind::ProjectivePlane, n, 0, 0};
}

SubplaneCheck is_subplane(const ProjectivePlane& plane, const IndexSet& points,
                          const IndexSet& lines) {
  const auto pts = points.to_vector();
  const auto lns = lines.to_vector();

  // Closure under join, and under meet.
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (!lines.test(plane.join(pts[i], pts[j])))
        return {false, "join of points " + std::to_string(pts[i]) + "," +
                           std::to_string(pts[j]) + " not in the line set"};
  for (std::size_t i = 0; i < lns.size(); ++i)
    for (std::size_t j = i + 1; j < lns.size(); ++j)
      if (!points.test(plane.meet(lns[i], lns[j])))
        return {false, "meet of lines " + std::to_string(lns[i]) + "," +
                           std::to_string(lns[j]) + " not in the point set"};

  const SubSystem sub = restrict_system(plane.system(), points, lines);
  const AxiomReport report = verify_axioms(sub.system);
  if (!report.p1) return {false, "induced system fails P1"};
  if (!report.p2) return {false, "induced system fails P2"};
  if (!report.p3) return {false, "induced system fails P3"};
  return {true, ""};
}

std::optional<PointId> is_subplane_minus_one(const ProjectivePlane& plane,
                                             const IndexSet& points) {
  const IndexSet defined = lines_defined(plane, points);
  // Any completion point must lie on at least two defined lines, so it is a
  // meet of two of them outside P. Collect candidates, then test in
  // ascending order.
  IndexSet candidates(plane.v());
  const auto lns = defined.to_vector();
  for (std::size_t i = 0; i < lns.size(); ++i)
    for (std::size_t j = i + 1; j < lns.size(); ++j) {
      const PointId m = plane.meet(lns[i], lns[j]);
      if (!points.test(m)) candidates.set(m);
    }

  std::optional<PointId> found;
  candidates.for_each([&](PointId cand) {
    if (found) return;
    IndexSet extended = points;
    extended.set(cand);
    const IndexSet ext_lines = lines_defined(plane, extended);
    if (is_subplane(plane, extended, ext_lines).ok) found = cand;
  });
  return found;
}

GrowthClassification classify_growth(const ProjectivePlane& plane,
                                     const IndexSet& p) {
  GrowthClassification out;
  out.p0_size = p.count();

  // Degenerate cases first (cheap), subplane checks second, the quadratic
  // bound last; overlapping cases resolve to the first match.
  out.collinear = is_collinear(plane, p);
  if (out.collinear.collinear()) {
    out.kind = GrowthClassification::Case::Collinear;
    out.theorem_case = 3;
    return out;
  }

  {
    const SubSystem induced = induced_space(plane.system(), p);
    const auto shape = is_degenerate_plane(induced.system);
    if (shape && shape->kind == DegenerateShape::Kind::Fan) {
      out.kind = GrowthClassification::Case::Fan;
      out.theorem_case = 3;
      out.fan_apex = induced.point_ids[shape->apex];
      out.fan_spine = induced.line_ids[shape->spine];
      return out;
    }
  }

  out.trace = growth_trace(plane, p, 3);
  out.p3_size = out.trace.points_at(3).count();

  const IndexSet& p1 = out.trace.points_at(1);
  const IndexSet p1_lines = lines_defined(plane, p1);
  if (is_subplane(plane, p1, p1_lines).ok) {
    out.kind = GrowthClassification::Case::SubplaneExact;
    out.theorem_case = 2;
    out.subplane_points = p1;
    out.subplane_lines = p1_lines;
    return out;
  }
  if (const auto missing = is_subplane_minus_one(plane, p1)) {
    out.kind = GrowthClassification::Case::SubplaneMinusOne;
    out.theorem_case = 2;
    out.subplane_points = p1;
    out.subplane_lines = p1_lines;
    out.missing_point = missing;
    return out;
  }

  out.kind = GrowthClassification::Case::QuadraticGrowth;
  out.theorem_case = 1;
  out.quadratic_bound_met = 4 * out.p3_size >= out.p0_size * out.p0_size;
  if (!out.quadratic_bound_met)
    throw TheoremViolationError(
        "no trichotomy case applies: 4*|P3| < |P0|^2 with |P3|=" +
            std::to_string(out.p3_size) + ", |P0|=" +
            std::to_string(out.p0_size),
        out.trace.describe());
  return out;
}

PropositionCases proposition_growth_cases(const ProjectivePlane& plane,
                                          const IndexSet& p) {
  PropositionCases out;
  const std::size_t n = p.count();
  const IncidenceSystem& s = plane.system();

  std::size_t best = 0;
  LineId best_line = 0;
  for (LineId l = 0; l < s.b(); ++l) {
    std::size_t hits = 0;
    for (PointId pt : s.points_on_line(l))
      if (p.test(pt)) ++hits;
    if (hits > best) {
      best = hits;
      best_line = l;
    }
  }
  if (best > 0) {
    out.heavy_line = best_line;
    out.heavy_count = best;
  }
  out.half_on_a_line = 2 * best >= n && n > 0;

  const GrowthTrace trace = growth_trace(plane, p, 3);
  const IndexSet& p1 = trace.points_at(1);
  const IndexSet& p2 = trace.points_at(2);
  std::uint32_t delta = 0;
  std::optional<PointId> extra;
  p2.for_each([&](PointId pt) {
    if (!p1.test(pt)) {
      ++delta;
      if (!extra) extra = pt;
    }
  });
  if (delta <= 1) {
    out.stagnant_p2 = true;
    out.delta = delta;
    if (delta == 1) out.extra_point = extra;
  }

  out.quadratic = 4 * trace.points_at(3).count() >= n * n;
  return out;
}

}  // namespace pgrowth
