#include "pgrowth/incidence.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace pgrowth {
namespace {

// Number of common entries of two ascending lists, stopping at `cap`.
std::uint32_t count_common(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b,
                           std::uint32_t cap,
                           std::uint32_t* first_common = nullptr) {
  std::uint32_t n = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (a[i] > b[j]) {
      ++j;
    } else {
      if (first_common && n == 0) *first_common = a[i];
      if (++n >= cap) return n;
      ++i;
      ++j;
    }
  }
  return n;
}

}  // namespace

IncidenceSystem IncidenceSystem::from_lines(
    std::uint32_t point_count, const std::vector<std::vector<PointId>>& lines,
    bool raw) {
  std::vector<std::vector<PointId>> pol;
  pol.reserve(lines.size());
  for (const auto& raw_line : lines) {
    std::vector<PointId> line = raw_line;
    std::sort(line.begin(), line.end());
    line.erase(std::unique(line.begin(), line.end()), line.end());
    for (PointId p : line)
      if (p >= point_count)
        throw IndexOutOfRangeError("point index " + std::to_string(p) +
                                   " outside [0, " +
                                   std::to_string(point_count) + ")");
    if (!raw && line.size() < 2)
      throw PreconditionError(
          "line with fewer than two points (use raw mode for exotic input)");
    pol.push_back(std::move(line));
  }
  if (!raw) {
    auto sorted = pol;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw DuplicateLineError("two lines with identical point sets");
  }

  std::vector<std::vector<LineId>> lop(point_count);
  for (LineId l = 0; l < pol.size(); ++l)
    for (PointId p : pol[l]) lop[p].push_back(l);
  return from_adjacency(std::move(pol), std::move(lop));
}

IncidenceSystem IncidenceSystem::from_adjacency(
    std::vector<std::vector<PointId>> points_on_line,
    std::vector<std::vector<LineId>> lines_on_point) {
  IncidenceSystem s;
  s.points_on_line_ = std::move(points_on_line);
  s.lines_on_point_ = std::move(lines_on_point);
  s.check_transpose_consistency();
  return s;
}

void IncidenceSystem::check_transpose_consistency() const {
  std::size_t flags_by_line = 0, flags_by_point = 0;
  for (LineId l = 0; l < points_on_line_.size(); ++l) {
    const auto& pts = points_on_line_[l];
    flags_by_line += pts.size();
    if (!std::is_sorted(pts.begin(), pts.end()) ||
        std::adjacent_find(pts.begin(), pts.end()) != pts.end())
      throw Error("incidence row not sorted/unique");
    for (PointId p : pts) {
      const auto& ls = lines_on_point_[p];
      if (!std::binary_search(ls.begin(), ls.end(), l))
        throw Error("incidence maps are not transposes");
    }
  }
  for (const auto& ls : lines_on_point_) flags_by_point += ls.size();
  if (flags_by_line != flags_by_point)
    throw Error("incidence maps are not transposes");
}

bool IncidenceSystem::incident(PointId p, LineId l) const {
  const auto& pts = points_on_line_[l];
  return std::binary_search(pts.begin(), pts.end(), p);
}

std::size_t IncidenceSystem::flags() const {
  std::size_t n = 0;
  for (const auto& pts : points_on_line_) n += pts.size();
  return n;
}

IncidenceSystem dual(const IncidenceSystem& s) {
  IncidenceSystem d;
  d.points_on_line_ = s.lines_on_point_;
  d.lines_on_point_ = s.points_on_line_;
  d.check_transpose_consistency();
  return d;
}

SubSystem restrict_system(const IncidenceSystem& s, const IndexSet& points,
                          const IndexSet& lines) {
  SubSystem out;
  out.point_ids = points.to_vector();
  out.line_ids = lines.to_vector();

  std::vector<std::uint32_t> point_index(s.v(), UINT32_MAX);
  for (std::uint32_t i = 0; i < out.point_ids.size(); ++i)
    point_index[out.point_ids[i]] = i;

  std::vector<std::vector<PointId>> pol;
  pol.reserve(out.line_ids.size());
  for (LineId l : out.line_ids) {
    std::vector<PointId> row;
    for (PointId p : s.points_on_line(l))
      if (points.test(p)) row.push_back(point_index[p]);
    pol.push_back(std::move(row));
  }
  std::vector<std::vector<LineId>> lop(out.point_ids.size());
  for (LineId l = 0; l < pol.size(); ++l)
    for (PointId p : pol[l]) lop[p].push_back(l);
  out.system = IncidenceSystem::from_adjacency(std::move(pol), std::move(lop));
  return out;
}

AxiomReport verify_axioms(const IncidenceSystem& s) {
  AxiomReport report;
  const std::uint32_t v = s.v();
  const std::uint32_t b = s.b();

  report.p1 = true;
  for (PointId a = 0; a < v && report.p1; ++a)
    for (PointId c = a + 1; c < v; ++c)
      if (count_common(s.lines_on_point(a), s.lines_on_point(c), 2) != 1) {
        report.p1 = false;
        report.p1_witness = {a, c};
        break;
      }

  report.p2 = true;
  for (LineId a = 0; a < b && report.p2; ++a)
    for (LineId c = a + 1; c < b; ++c)
      if (count_common(s.points_on_line(a), s.points_on_line(c), 2) != 1) {
        report.p2 = false;
        report.p2_witness = {a, c};
        break;
      }

  // P3: ascending scan with collinearity pruning, so the witness is the
  // first quadrilateral in lexicographic order.
  report.p3 = false;
  for (PointId a = 0; a < v && !report.p3; ++a) {
    for (PointId bb = a + 1; bb < v && !report.p3; ++bb) {
      for (PointId c = bb + 1; c < v && !report.p3; ++c) {
        if (collinear(s, a, bb, c)) continue;
        for (PointId d = c + 1; d < v; ++d) {
          if (collinear(s, a, bb, d) || collinear(s, a, c, d) ||
              collinear(s, bb, c, d))
            continue;
          report.p3 = true;
          report.quadrilateral = {a, bb, c, d};
          break;
        }
      }
    }
  }
  return report;
}

bool is_linear_space(const IncidenceSystem& s) {
  for (PointId a = 0; a < s.v(); ++a)
    for (PointId c = a + 1; c < s.v(); ++c)
      if (count_common(s.lines_on_point(a), s.lines_on_point(c), 2) != 1)
        return false;
  return true;
}

LineId join(const IncidenceSystem& s, PointId p1, PointId p2) {
  if (p1 == p2) throw PreconditionError("join of a point with itself");
  std::uint32_t found = 0;
  const auto n =
      count_common(s.lines_on_point(p1), s.lines_on_point(p2), 2, &found);
  if (n == 0)
    throw NotFoundError("no line through points " + std::to_string(p1) +
                        " and " + std::to_string(p2));
  if (n > 1)
    throw NotUniqueError("more than one line through points " +
                         std::to_string(p1) + " and " + std::to_string(p2));
  return found;
}

PointId meet(const IncidenceSystem& s, LineId l1, LineId l2) {
  if (l1 == l2) throw PreconditionError("meet of a line with itself");
  std::uint32_t found = 0;
  const auto n =
      count_common(s.points_on_line(l1), s.points_on_line(l2), 2, &found);
  if (n == 0)
    throw NotFoundError("no common point of lines " + std::to_string(l1) +
                        " and " + std::to_string(l2));
  if (n > 1)
    throw NotUniqueError("more than one common point of lines " +
                         std::to_string(l1) + " and " + std::to_string(l2));
  return found;
}

bool collinear(const IncidenceSystem& s, PointId a, PointId b, PointId c) {
  for (LineId l : s.lines_on_point(a))
    if (s.incident(b, l) && s.incident(c, l)) return true;
  return false;
}

}  // namespace pgrowth
