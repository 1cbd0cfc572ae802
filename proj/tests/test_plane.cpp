#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "pgrowth/plane.hpp"
#include "pgrowth/rng.hpp"

using namespace pgrowth;

TEST_CASE("build_pg2 counts: v = b = q^2+q+1, uniform degrees q+1") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto plane = build_pg2(q);
    const std::uint32_t expected = q * q + q + 1;
    CHECK(plane.v() == expected);
    CHECK(plane.b() == expected);
    for (LineId l = 0; l < plane.b(); ++l)
      CHECK(plane.system().points_on_line(l).size() == q + 1);
    for (PointId p = 0; p < plane.v(); ++p)
      CHECK(plane.system().lines_on_point(p).size() == q + 1);
  }
  CHECK_THROWS_AS(build_pg2(6), NotAPrimePowerError);
}

TEST_CASE("axioms: exhaustive for q <= 5, sampled pairs for larger q") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto plane = build_pg2(q);
    CHECK(verify_axioms(plane.system()).all());
  }
  for (std::uint32_t q : {7u, 8u, 9u}) {
    const auto plane = build_pg2(q);
    const auto& s = plane.system();
    SplitMix64 rng(2026);
    for (int i = 0; i < 10000; ++i) {
      const PointId p1 = static_cast<PointId>(rng.below(s.v()));
      PointId p2 = static_cast<PointId>(rng.below(s.v() - 1));
      if (p2 >= p1) ++p2;
      std::uint32_t common = 0;
      for (LineId l : s.lines_on_point(p1))
        if (s.incident(p2, l)) ++common;
      CHECK(common == 1);
    }
    CHECK(verify_axioms(s).p3);
  }
}

TEST_CASE("incidence agrees with the orthogonality form") {
  const auto plane = build_pg2(3);
  const Field& f = plane.field();
  for (PointId p = 0; p < plane.v(); ++p)
    for (LineId l = 0; l < plane.b(); ++l) {
      const auto& x = plane.point_coords(p);
      const auto& a = plane.line_coords(l);
      FieldElement dot{};
      for (int i = 0; i < 3; ++i) dot = f.add(dot, f.mul(x.x[i], a.x[i]));
      CHECK(plane.system().incident(p, l) == f.is_zero(dot));
    }
}

TEST_CASE("coordinates are normalized and sorted") {
  const auto plane = build_pg2(4);
  const Field& f = plane.field();
  for (PointId p = 0; p < plane.v(); ++p) {
    const auto& t = plane.point_coords(p);
    int first_nonzero = -1;
    for (int i = 0; i < 3 && first_nonzero < 0; ++i)
      if (!f.is_zero(t.x[i])) first_nonzero = i;
    REQUIRE(first_nonzero >= 0);
    CHECK(t.x[first_nonzero] == f.one());
    if (p + 1 < plane.v()) CHECK(t < plane.point_coords(p + 1));
  }
}

TEST_CASE("fast join/meet agree with the incidence scan") {
  SUBCASE("exhaustive for q <= 5") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
      const auto plane = build_pg2(q);
      const auto& s = plane.system();
      for (PointId p = 0; p < plane.v(); ++p)
        for (PointId r = p + 1; r < plane.v(); ++r)
          CHECK(plane.join(p, r) == join(s, p, r));
      for (LineId l = 0; l < plane.b(); ++l)
        for (LineId m = l + 1; m < plane.b(); ++m)
          CHECK(plane.meet(l, m) == meet(s, l, m));
    }
  }
  SUBCASE("random pairs for q in {7, 8, 9}") {
    for (std::uint32_t q : {7u, 8u, 9u}) {
      const auto plane = build_pg2(q);
      const auto& s = plane.system();
      SplitMix64 rng(7 * q);
      for (int i = 0; i < 10000; ++i) {
        PointId p1 = static_cast<PointId>(rng.below(s.v()));
        PointId p2 = static_cast<PointId>(rng.below(s.v() - 1));
        if (p2 >= p1) ++p2;
        CHECK(plane.join(p1, p2) == join(s, p1, p2));
        LineId l1 = static_cast<LineId>(rng.below(s.b()));
        LineId l2 = static_cast<LineId>(rng.below(s.b() - 1));
        if (l2 >= l1) ++l2;
        CHECK(plane.meet(l1, l2) == meet(s, l1, l2));
      }
    }
  }
}

TEST_CASE("fast_join/fast_meet on PG(2,2) basis triples") {
  const auto plane = build_pg2(2);
  const Field& f = plane.field();
  auto triple = [&](int a, int b, int c) {
    HomogeneousTriple t;
    t.x[0] = f.element(a);
    t.x[1] = f.element(b);
    t.x[2] = f.element(c);
    return t;
  };
  // join((1,0,0),(0,1,0)) has dual coords (0,0,1): cross-product oracle.
  const PointId e0 = plane.point_id(triple(1, 0, 0));
  const PointId e1 = plane.point_id(triple(0, 1, 0));
  CHECK(plane.join(e0, e1) == plane.line_id(triple(0, 0, 1)));
  // meet((0,0,1),(0,1,0)) = (1,0,0).
  CHECK(plane.meet(plane.line_id(triple(0, 0, 1)),
                   plane.line_id(triple(0, 1, 0))) == e0);
}

TEST_CASE("dual of PG(2,q) satisfies the axioms") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto plane = build_pg2(q);
    CHECK(verify_axioms(dual(plane.system())).all());
  }
}

TEST_CASE("plane file round trip") {
  const auto plane = build_pg2(2);
  std::ostringstream out;
  save_plane(plane.system(), out, "order 2");
  std::istringstream in(out.str());
  const auto loaded = load_plane(in);
  CHECK(loaded == plane.system());
}

TEST_CASE("plane file parsing errors") {
  SUBCASE("index out of range") {
    std::istringstream in("plane 3 1\n0 5\n");
    CHECK_THROWS_AS(load_plane(in), IndexOutOfRangeError);
  }
  SUBCASE("unsorted indices rejected") {
    std::istringstream in("plane 3 1\n1 0\n");
    CHECK_THROWS_AS(load_plane(in), ParseError);
  }
  SUBCASE("repeated index rejected") {
    std::istringstream in("plane 3 1\n1 1\n");
    CHECK_THROWS_AS(load_plane(in), ParseError);
  }
  SUBCASE("duplicate lines rejected outside raw mode") {
    std::istringstream in("plane 3 2\n0 1\n0 1\n");
    CHECK_THROWS_AS(load_plane(in), DuplicateLineError);
    std::istringstream in2("plane 3 2\n0 1\n0 1\n");
    CHECK(load_plane(in2, true).b() == 2);
  }
  SUBCASE("bad header") {
    std::istringstream in("nope 3 1\n0 1\n");
    CHECK_THROWS_AS(load_plane(in), ParseError);
  }
  SUBCASE("line count mismatch") {
    std::istringstream in("plane 3 2\n0 1\n");
    CHECK_THROWS_AS(load_plane(in), ParseError);
  }
  SUBCASE("error location is reported") {
    std::istringstream in("plane 3 1\n# fine\n0 x\n");
    try {
      load_plane(in);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() == 3);
    }
  }
  SUBCASE("comments and blank lines are ignored") {
    std::istringstream in("# hi\n\nplane 3 1\n# mid\n0 1 2\n\n");
    const auto s = load_plane(in);
    CHECK(s.v() == 3);
    CHECK(s.b() == 1);
  }
}

TEST_CASE("from_system accepts planes and rejects non-planes") {
  const auto fine = ProjectivePlane::from_system(build_pg2(2).system());
  CHECK(fine.v() == 7);
  CHECK_FALSE(fine.coordinatized());
  // join falls back to the scan on non-coordinatized planes.
  CHECK_NOTHROW(fine.join(0, 1));

  const auto tri = IncidenceSystem::from_lines(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK_THROWS_AS(ProjectivePlane::from_system(tri), PreconditionError);
}
