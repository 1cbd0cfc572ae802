#include "pgrowth/growth.hpp"

#include <sstream>

namespace pgrowth {

std::vector<std::size_t> GrowthTrace::interleaved_sizes() const {
  std::vector<std::size_t> out;
  out.reserve(point_sets.size() + line_sets.size());
  for (std::size_t i = 0; i < point_sets.size(); ++i) {
    out.push_back(point_sets[i].count());
    if (i < line_sets.size()) out.push_back(line_sets[i].count());
  }
  return out;
}

std::string GrowthTrace::describe() const {
  std::ostringstream os;
  os << "trace";
  for (std::size_t i = 0; i < point_sets.size(); ++i) {
    os << " |P" << i << "|=" << point_sets[i].count();
    if (i < line_sets.size()) os << " |L" << i << "|=" << line_sets[i].count();
  }
  os << " stop=";
  switch (stop_reason) {
    case StopReason::Fixpoint: os << "fixpoint"; break;
    case StopReason::MaxSteps: os << "max-steps"; break;
    case StopReason::Collapsed: os << "collapsed"; break;
  }
  os << " P0={";
  bool first = true;
  point_sets.front().for_each([&](std::uint32_t p) {
    if (!first) os << ',';
    first = false;
    os << p;
  });
  os << "}";
  return os.str();
}

IndexSet lines_defined(const IncidenceSystem& s, const IndexSet& points) {
  IndexSet out(s.b());
  for (LineId l = 0; l < s.b(); ++l) {
    std::uint32_t hits = 0;
    for (PointId p : s.points_on_line(l)) {
      if (points.test(p) && ++hits == 2) {
        out.set(l);
        break;
      }
    }
  }
  return out;
}

IndexSet lines_defined(const ProjectivePlane& plane, const IndexSet& points) {
  return lines_defined(plane.system(), points);
}

IndexSet points_defined(const IncidenceSystem& s, const IndexSet& lines) {
  IndexSet out(s.v());
  for (PointId p = 0; p < s.v(); ++p) {
    std::uint32_t hits = 0;
    for (LineId l : s.lines_on_point(p)) {
      if (lines.test(l) && ++hits == 2) {
        out.set(p);
        break;
      }
    }
  }
  return out;
}

IndexSet points_defined(const ProjectivePlane& plane, const IndexSet& lines) {
  return points_defined(plane.system(), lines);
}

GrowthTrace growth_trace(const ProjectivePlane& plane, const IndexSet& p0,
                         std::size_t max_steps) {
  if (max_steps < 1) throw PreconditionError("max_steps must be at least 1");
  if (p0.universe() != plane.v())
    throw PreconditionError("point set universe does not match the plane");

  GrowthTrace trace;
  trace.point_sets.push_back(p0);
  trace.stop_reason = GrowthTrace::StopReason::MaxSteps;

  for (std::size_t step = 0; step < max_steps; ++step) {
    const IndexSet& current = trace.point_sets.back();
    IndexSet defined = lines_defined(plane, current);
    trace.line_sets.push_back(defined);
    if (defined.count() <= 1) {
      // All current points on one line (or too few points): the next point
      // set would be empty, so freeze the trace here.
      trace.stop_reason = GrowthTrace::StopReason::Collapsed;
      break;
    }
    IndexSet next = points_defined(plane, defined);
    trace.point_sets.push_back(next);
    if (next == current) {
      // L would not change either: lines_defined(P_{i+1}) = lines_defined(P_i).
      trace.stop_reason = GrowthTrace::StopReason::Fixpoint;
      break;
    }
  }
  return trace;
}

SubSystem induced_space(const IncidenceSystem& s, const IndexSet& points) {
  return restrict_system(s, points, lines_defined(s, points));
}

bool fisher_holds(const IncidenceSystem& s) {
  if (s.v() == 0) throw PreconditionError("empty point set");
  // All points on one line?
  for (LineId l = 0; l < s.b(); ++l)
    if (s.points_on_line(l).size() == s.v())
      throw PreconditionError("all points are collinear");
  if (s.b() == 0)
    throw PreconditionError(s.v() <= 1 ? "all points are collinear"
                                       : "no lines to compare");
  return s.b() >= s.v();
}

ChainCheckResult chain_check(const GrowthTrace& trace) {
  const auto sizes = trace.interleaved_sizes();
  for (std::size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] < sizes[i - 1]) return {false, i};
  return {true, std::nullopt};
}

ParnasReport parnas_report(const ProjectivePlane& plane, const IndexSet& p,
                           LineId l1, LineId l2) {
  if (l1 == l2) throw PreconditionError("the two lines must be distinct");
  const IncidenceSystem& s = plane.system();

  ParnasReport report;
  for (PointId pt : s.points_on_line(l1))
    if (p.test(pt)) ++report.m1;
  for (PointId pt : s.points_on_line(l2))
    if (p.test(pt)) ++report.m2;

  report.meet_point = plane.meet(l1, l2);
  report.intersection_in_p = p.test(report.meet_point);

  const IndexSet defined = lines_defined(plane, p);
  report.actual = defined.count();
  report.a = 0;
  for (LineId l : s.lines_on_point(report.meet_point))
    if (defined.test(l)) ++report.a;

  if (report.intersection_in_p) {
    const std::size_t m1 = report.m1 ? report.m1 - 1 : 0;
    const std::size_t m2 = report.m2 ? report.m2 - 1 : 0;
    report.lower_bound = m1 * m2 + report.a;
  } else {
    report.lower_bound = report.m1 * report.m2;
  }
  report.holds = report.actual >= report.lower_bound;
  return report;
}

}  // namespace pgrowth
