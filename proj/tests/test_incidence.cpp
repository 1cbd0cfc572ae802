#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "pgrowth/incidence.hpp"
#include "pgrowth/plane.hpp"

using namespace pgrowth;

namespace {

const std::vector<std::vector<PointId>> kFanoTriples = {
    {0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
    {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};

std::set<std::set<PointId>> line_family(const IncidenceSystem& s) {
  std::set<std::set<PointId>> fam;
  for (LineId l = 0; l < s.b(); ++l) {
    const auto& pts = s.points_on_line(l);
    fam.insert(std::set<PointId>(pts.begin(), pts.end()));
  }
  return fam;
}

// Brute-force isomorphism oracle for 7-point systems: try all relabelings.
bool isomorphic7(const IncidenceSystem& a, const IncidenceSystem& b) {
  if (a.v() != 7 || b.v() != 7 || a.b() != b.b()) return false;
  std::vector<PointId> perm(7);
  std::iota(perm.begin(), perm.end(), 0u);
  const auto target = line_family(b);
  do {
    std::set<std::set<PointId>> mapped;
    for (LineId l = 0; l < a.b(); ++l) {
      std::set<PointId> img;
      for (PointId p : a.points_on_line(l)) img.insert(perm[p]);
      mapped.insert(std::move(img));
    }
    if (mapped == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

IncidenceSystem triangle() {
  return IncidenceSystem::from_lines(3, {{0, 1}, {1, 2}, {0, 2}});
}

}  // namespace

TEST_CASE("from_lines builds exact transposes") {
  const auto s = triangle();
  CHECK(s.v() == 3);
  CHECK(s.b() == 3);
  for (LineId l = 0; l < s.b(); ++l)
    for (PointId p : s.points_on_line(l)) {
      const auto& ls = s.lines_on_point(p);
      CHECK(std::find(ls.begin(), ls.end(), l) != ls.end());
    }
  CHECK(s.flags() == 6);
}

TEST_CASE("from_lines validation") {
  CHECK_THROWS_AS(IncidenceSystem::from_lines(3, {{0, 5}}),
                  IndexOutOfRangeError);
  CHECK_THROWS_AS(IncidenceSystem::from_lines(2, {{0, 1}, {0, 1}}),
                  DuplicateLineError);
  CHECK_THROWS_AS(IncidenceSystem::from_lines(3, {{0}}), PreconditionError);
  // Raw mode admits short and duplicate lines.
  const auto raw = IncidenceSystem::from_lines(3, {{0}, {0}, {}}, true);
  CHECK(raw.b() == 3);
}

TEST_CASE("Fano triples are isomorphic to PG(2,2)") {
  const auto fano = IncidenceSystem::from_lines(7, kFanoTriples);
  CHECK(fano.b() == 7);
  const auto pg22 = build_pg2(2);
  CHECK(isomorphic7(fano, pg22.system()));
}

TEST_CASE("dual swaps roles and is an involution") {
  const auto fano = IncidenceSystem::from_lines(7, kFanoTriples);
  const auto d = dual(fano);
  CHECK(d.v() == 7);
  CHECK(d.b() == 7);
  CHECK(verify_axioms(d).all());
  CHECK(dual(d) == fano);

  const auto tri = triangle();
  const auto dtri = dual(tri);
  CHECK(dtri.v() == tri.v());
  CHECK(dtri.b() == tri.b());
  CHECK(dual(dtri) == tri);

  // A single 3-point line: the dual is one point on three lines.
  const auto single = IncidenceSystem::from_lines(3, {{0, 1, 2}});
  const auto ds = dual(single);
  CHECK(ds.v() == 1);
  CHECK(ds.b() == 3);
  CHECK(ds.lines_on_point(0).size() == 3);
  CHECK(dual(ds) == single);
}

TEST_CASE("verify_axioms on the Fano plane") {
  const auto fano = IncidenceSystem::from_lines(7, kFanoTriples);
  const auto report = verify_axioms(fano);
  CHECK(report.p1);
  CHECK(report.p2);
  CHECK(report.p3);
  REQUIRE(report.quadrilateral.has_value());
  // Re-validate the witness independently: no three of the four collinear.
  const auto& quad = *report.quadrilateral;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int l = j + 1; l < 4; ++l)
        CHECK_FALSE(collinear(fano, quad[i], quad[j], quad[l]));
}

TEST_CASE("verify_axioms failure witnesses") {
  const auto tri = triangle();
  const auto rt = verify_axioms(tri);
  CHECK(rt.p1);
  CHECK(rt.p2);
  CHECK_FALSE(rt.p3);
  CHECK_FALSE(rt.quadrilateral.has_value());

  const auto s = IncidenceSystem::from_lines(4, {{0, 1}, {2, 3}});
  const auto rs = verify_axioms(s);
  CHECK_FALSE(rs.p1);
  REQUIRE(rs.p1_witness.has_value());
  CHECK((*rs.p1_witness)[0] == 0);
  CHECK((*rs.p1_witness)[1] == 2);
  // The witness really violates P1: no common line.
  std::uint32_t common = 0;
  for (LineId l = 0; l < s.b(); ++l)
    if (s.incident(0, l) && s.incident(2, l)) ++common;
  CHECK(common == 0);
  CHECK_FALSE(rs.p2);  // the two lines never meet
}

TEST_CASE("is_linear_space") {
  CHECK(is_linear_space(IncidenceSystem::from_lines(7, kFanoTriples)));
  CHECK_FALSE(is_linear_space(IncidenceSystem::from_lines(4, {{0, 1}, {2, 3}})));
  CHECK(is_linear_space(IncidenceSystem()));  // vacuous
}

TEST_CASE("join and meet") {
  const auto fano = IncidenceSystem::from_lines(7, kFanoTriples);
  const LineId l01 = join(fano, 0, 1);
  CHECK(fano.incident(0, l01));
  CHECK(fano.incident(1, l01));
  const LineId l02 = join(fano, 0, 2);
  CHECK(l01 == l02);  // 0,1,2 collinear in this labeling
  const LineId l03 = join(fano, 0, 3);
  CHECK(meet(fano, l01, l03) == 0);

  CHECK_THROWS_AS(join(fano, 3, 3), PreconditionError);

  const auto s = IncidenceSystem::from_lines(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(meet(s, 0, 1), NotFoundError);
  CHECK_THROWS_AS(join(s, 0, 2), NotFoundError);
  const auto multi =
      IncidenceSystem::from_lines(3, {{0, 1}, {0, 1, 2}}, true);
  CHECK_THROWS_AS(join(multi, 0, 1), NotUniqueError);
}

TEST_CASE("join/meet round trip on a plane") {
  const auto plane = build_pg2(3);
  const auto& s = plane.system();
  for (PointId p = 0; p < s.v(); ++p)
    for (PointId q = p + 1; q < s.v(); ++q) {
      const LineId l = join(s, p, q);
      for (LineId other : s.lines_on_point(p))
        if (other != l) CHECK(meet(s, l, other) == p);
    }
}

TEST_CASE("restrict_system keeps ambient ids") {
  const auto fano = IncidenceSystem::from_lines(7, kFanoTriples);
  const auto pts = IndexSet::of(7, {0, 1, 2, 3});
  const auto lns = IndexSet::of(7, {0, 1});  // {0,1,2}, {0,3,4}
  const auto sub = restrict_system(fano, pts, lns);
  CHECK(sub.system.v() == 4);
  CHECK(sub.system.b() == 2);
  CHECK(sub.point_ids == std::vector<PointId>{0, 1, 2, 3});
  CHECK(sub.system.points_on_line(0) == std::vector<PointId>{0, 1, 2});
  CHECK(sub.system.points_on_line(1) == std::vector<PointId>{0, 3});
}

TEST_CASE("dual of a full plane still satisfies the axioms (small orders)") {
  for (std::uint32_t q : {2u, 3u}) {
    const auto plane = build_pg2(q);
    CHECK(verify_axioms(plane.system()).all());
    CHECK(verify_axioms(dual(plane.system())).all());
  }
}
