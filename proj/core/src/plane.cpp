#include "pgrowth/plane.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace pgrowth {
namespace {

bool triple_is_zero(const HomogeneousTriple& t) {
  return t.x[0] == FieldElement{} && t.x[1] == FieldElement{} &&
         t.x[2] == FieldElement{};
}

FieldElement dot(const Field& f, const HomogeneousTriple& a,
                 const HomogeneousTriple& b) {
  FieldElement acc{};
  for (int i = 0; i < 3; ++i) acc = f.add(acc, f.mul(a.x[i], b.x[i]));
  return acc;
}

}  // namespace

ProjectivePlane ProjectivePlane::from_system(IncidenceSystem system) {
  const AxiomReport report = verify_axioms(system);
  if (!report.all()) {
    std::string which = !report.p1 ? "P1" : !report.p2 ? "P2" : "P3";
    throw PreconditionError("system is not a projective plane (" + which +
                            " fails)");
  }
  ProjectivePlane plane;
  plane.system_ = std::move(system);
  return plane;
}

HomogeneousTriple ProjectivePlane::normalize(const HomogeneousTriple& t) const {
  const Field& f = *field_;
  for (int i = 0; i < 3; ++i) {
    if (!f.is_zero(t.x[i])) {
      const FieldElement scale = f.inv(t.x[i]);
      HomogeneousTriple out;
      for (int j = 0; j < 3; ++j) out.x[j] = f.mul(t.x[j], scale);
      return out;
    }
  }
  throw PreconditionError("cannot normalize the zero triple");
}

HomogeneousTriple ProjectivePlane::cross(const HomogeneousTriple& a,
                                         const HomogeneousTriple& b) const {
  const Field& f = *field_;
  HomogeneousTriple out;
  out.x[0] = f.sub(f.mul(a.x[1], b.x[2]), f.mul(a.x[2], b.x[1]));
  out.x[1] = f.sub(f.mul(a.x[2], b.x[0]), f.mul(a.x[0], b.x[2]));
  out.x[2] = f.sub(f.mul(a.x[0], b.x[1]), f.mul(a.x[1], b.x[0]));
  return out;
}

PointId ProjectivePlane::point_id(const HomogeneousTriple& t) const {
  const HomogeneousTriple n = normalize(t);
  const auto it =
      std::lower_bound(point_coords_.begin(), point_coords_.end(), n);
  if (it == point_coords_.end() || !(*it == n))
    throw NotFoundError("triple is not a point of this plane");
  return static_cast<PointId>(it - point_coords_.begin());
}

LineId ProjectivePlane::line_id(const HomogeneousTriple& t) const {
  const HomogeneousTriple n = normalize(t);
  const auto it = std::lower_bound(line_coords_.begin(), line_coords_.end(), n);
  if (it == line_coords_.end() || !(*it == n))
    throw NotFoundError("triple is not a line of this plane");
  return static_cast<LineId>(it - line_coords_.begin());
}

LineId ProjectivePlane::join(PointId p1, PointId p2) const {
  if (!coordinatized()) return pgrowth::join(system_, p1, p2);
  if (p1 == p2) throw PreconditionError("join of a point with itself");
  return line_id(cross(point_coords_[p1], point_coords_[p2]));
}

PointId ProjectivePlane::meet(LineId l1, LineId l2) const {
  if (!coordinatized()) return pgrowth::meet(system_, l1, l2);
  if (l1 == l2) throw PreconditionError("meet of a line with itself");
  return point_id(cross(line_coords_[l1], line_coords_[l2]));
}

ProjectivePlane build_pg2(std::uint32_t q) {
  const Field f = Field::make(q);

  // All normalized triples: (0,0,1), (0,1,a), (1,a,b). Sorting gives the
  // canonical id order.
  std::vector<HomogeneousTriple> reps;
  reps.reserve(std::size_t{q} * q + q + 1);
  {
    HomogeneousTriple t;
    t.x[2] = f.one();
    reps.push_back(t);
  }
  for (std::uint32_t a = 0; a < q; ++a) {
    HomogeneousTriple t;
    t.x[1] = f.one();
    t.x[2] = f.element(a);
    reps.push_back(t);
  }
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) {
      HomogeneousTriple t;
      t.x[0] = f.one();
      t.x[1] = f.element(a);
      t.x[2] = f.element(b);
      reps.push_back(t);
    }
  std::sort(reps.begin(), reps.end());

  ProjectivePlane plane;
  plane.order_ = q;
  plane.field_ = f;
  plane.point_coords_ = reps;
  plane.line_coords_ = std::move(reps);

  const std::uint32_t v = static_cast<std::uint32_t>(plane.point_coords_.size());
  auto point_index = [&](const HomogeneousTriple& t) {
    const auto it = std::lower_bound(plane.point_coords_.begin(),
                                     plane.point_coords_.end(), t);
    return static_cast<PointId>(it - plane.point_coords_.begin());
  };

  // For each line a, two independent solutions u, w of <a, x> = 0 span its
  // q+1 points: u and w + t*u for every t.
  std::vector<std::vector<PointId>> points_on_line(v);
  for (LineId l = 0; l < v; ++l) {
    const HomogeneousTriple& a = plane.line_coords_[l];
    HomogeneousTriple u, w;
    if (!f.is_zero(a.x[0])) {
      const FieldElement inv0 = f.inv(a.x[0]);
      u.x[0] = f.neg(f.mul(a.x[1], inv0));
      u.x[1] = f.one();
      w.x[0] = f.neg(f.mul(a.x[2], inv0));
      w.x[2] = f.one();
    } else if (!f.is_zero(a.x[1])) {
      u.x[0] = f.one();
      w.x[1] = f.neg(f.mul(a.x[2], f.inv(a.x[1])));
      w.x[2] = f.one();
    } else {
      u.x[0] = f.one();
      w.x[1] = f.one();
    }
    std::vector<PointId> pts;
    pts.reserve(q + 1);
    pts.push_back(point_index(plane.normalize(u)));
    for (std::uint32_t t = 0; t < q; ++t) {
      const FieldElement tt = f.element(t);
      HomogeneousTriple s;
      for (int i = 0; i < 3; ++i) s.x[i] = f.add(w.x[i], f.mul(tt, u.x[i]));
      pts.push_back(point_index(plane.normalize(s)));
    }
    std::sort(pts.begin(), pts.end());
    points_on_line[l] = std::move(pts);
  }

  std::vector<std::vector<PointId>> lines;
  lines.reserve(v);
  for (auto& row : points_on_line) lines.push_back(std::move(row));
  plane.system_ = IncidenceSystem::from_lines(v, lines);
  return plane;
}

void save_plane(const IncidenceSystem& s, std::ostream& out,
                const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << "\n";
  out << "plane " << s.v() << " " << s.b() << "\n";
  for (LineId l = 0; l < s.b(); ++l) {
    const auto& pts = s.points_on_line(l);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) out << ' ';
      out << pts[i];
    }
    out << "\n";
  }
}

void save_plane_file(const IncidenceSystem& s, const std::string& path,
                     const std::string& comment) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  save_plane(s, out, comment);
}

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::uint32_t parse_index(const Token& tok, std::size_t line_no) {
  if (tok.text.empty() ||
      !std::all_of(tok.text.begin(), tok.text.end(),
                   [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("expected a non-negative integer, got '" + tok.text + "'",
                     line_no, tok.column);
  unsigned long long value = 0;
  for (char c : tok.text) {
    value = value * 10 + static_cast<unsigned>(c - '0');
    if (value > UINT32_MAX)
      throw ParseError("integer too large", line_no, tok.column);
  }
  return static_cast<std::uint32_t>(value);
}

}  // namespace

IncidenceSystem load_plane(std::istream& in, bool raw) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint32_t v = 0, b = 0;
  std::vector<std::vector<PointId>> lines;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.find('\r') != std::string::npos)
      throw ParseError("carriage return not allowed (file must use LF)",
                       line_no, line.find('\r') + 1);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0].text[0] == '#') continue;

    if (!have_header) {
      if (tokens.size() != 3 || tokens[0].text != "plane")
        throw ParseError("expected header 'plane v b'", line_no,
                         tokens[0].column);
      v = parse_index(tokens[1], line_no);
      b = parse_index(tokens[2], line_no);
      have_header = true;
      continue;
    }

    if (lines.size() >= b)
      throw ParseError("more than the declared " + std::to_string(b) +
                           " lines",
                       line_no, tokens[0].column);
    std::vector<PointId> pts;
    pts.reserve(tokens.size());
    for (const auto& tok : tokens) {
      const std::uint32_t idx = parse_index(tok, line_no);
      if (idx >= v)
        throw IndexOutOfRangeError("point index " + std::to_string(idx) +
                                   " outside [0, " + std::to_string(v) +
                                   ") at line " + std::to_string(line_no));
      if (!pts.empty() && idx <= pts.back())
        throw ParseError("indices must be strictly ascending within a line",
                         line_no, tok.column);
      pts.push_back(idx);
    }
    lines.push_back(std::move(pts));
  }

  if (!have_header) throw ParseError("missing 'plane v b' header", 1, 1);
  if (lines.size() != b)
    throw ParseError("declared " + std::to_string(b) + " lines but found " +
                         std::to_string(lines.size()),
                     line_no, 1);
  return IncidenceSystem::from_lines(v, lines, raw);
}

IncidenceSystem load_plane_file(const std::string& path, bool raw) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return load_plane(in, raw);
}

}  // namespace pgrowth
