// Acceptance suite: one line per criterion, [PASS]/[FAIL]/[SKIP], with the
// measured runtime against the budget. Exit status is the number of
// failures. Everything is seeded and exact; no tolerance is adjustable at
// run time.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pgrowth/classify.hpp"
#include "pgrowth/configs.hpp"
#include "pgrowth/growth.hpp"
#include "pgrowth/plane.hpp"
#include "pgrowth/rng.hpp"

using namespace pgrowth;

namespace {

struct Outcome {
  bool pass = true;
  bool skipped = false;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

struct Criterion {
  int number;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

IndexSet random_noncollinear(const ProjectivePlane& plane, SplitMix64& rng,
                             std::uint32_t size) {
  for (;;) {
    IndexSet p(plane.v());
    for (auto i : sample_without_replacement(rng, plane.v(), size)) p.set(i);
    if (lines_defined(plane, p).count() > 1) return p;
  }
}

// --- 1. plane construction -------------------------------------------------

Outcome plane_construction() {
  Outcome out;
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto plane = build_pg2(q);
    const std::uint32_t expected = q * q + q + 1;
    if (plane.v() != expected || plane.b() != expected)
      out.fail("q=" + std::to_string(q) + ": v or b != q^2+q+1");
    for (LineId l = 0; l < plane.b(); ++l)
      if (plane.system().points_on_line(l).size() != q + 1) {
        out.fail("q=" + std::to_string(q) + ": non-uniform line size");
        break;
      }
    for (PointId p = 0; p < plane.v(); ++p)
      if (plane.system().lines_on_point(p).size() != q + 1) {
        out.fail("q=" + std::to_string(q) + ": non-uniform point degree");
        break;
      }
    if (q <= 5) {
      if (!verify_axioms(plane.system()).all())
        out.fail("q=" + std::to_string(q) + ": exhaustive axiom check failed");
    } else {
      // 10^4 sampled point pairs (P1) and line pairs (P2), plus P3.
      const auto& s = plane.system();
      SplitMix64 rng(q);
      for (int i = 0; i < 10000; ++i) {
        PointId a = static_cast<PointId>(rng.below(s.v()));
        PointId b = static_cast<PointId>(rng.below(s.v() - 1));
        if (b >= a) ++b;
        std::uint32_t common = 0;
        for (LineId l : s.lines_on_point(a))
          if (s.incident(b, l)) ++common;
        if (common != 1) {
          out.fail("q=" + std::to_string(q) + ": sampled P1 violation");
          break;
        }
        LineId l1 = static_cast<LineId>(rng.below(s.b()));
        LineId l2 = static_cast<LineId>(rng.below(s.b() - 1));
        if (l2 >= l1) ++l2;
        std::uint32_t shared = 0;
        for (PointId p : s.points_on_line(l1))
          if (s.incident(p, l2)) ++shared;
        if (shared != 1) {
          out.fail("q=" + std::to_string(q) + ": sampled P2 violation");
          break;
        }
      }
      if (!verify_axioms(s).p3)
        out.fail("q=" + std::to_string(q) + ": no quadrilateral");
    }
  }
  out.detail = "q in {2,3,4,5,7,8,9}, v=b=q^2+q+1, degrees q+1";
  return out;
}

// --- 2. Fisher chain -------------------------------------------------------

Outcome fisher_chain() {
  Outcome out;
  int trials = 0;
  for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
    const auto plane = build_pg2(q);
    for (int t = 0; t < 125; ++t) {
      SplitMix64 rng(sub_seed(20260 + q, static_cast<std::uint64_t>(t)));
      const std::uint32_t max_size = std::min<std::uint32_t>(20, plane.v());
      const auto size =
          static_cast<std::uint32_t>(3 + rng.below(max_size - 2));
      const auto p0 = random_noncollinear(plane, rng, size);
      const auto trace = growth_trace(plane, p0, 3);
      const auto chain = chain_check(trace);
      if (!chain.ok) {
        out.fail("chain violated at q=" + std::to_string(q) + " trial " +
                 std::to_string(t) + ": " + trace.describe());
      }
      ++trials;
    }
  }
  if (trials != 500) out.fail("expected 500 trials");
  out.detail = "500 seeded non-collinear sets, sizes 3-20, q in {3,5,7,9}";
  return out;
}

// --- 3. trichotomy ---------------------------------------------------------

Outcome trichotomy() {
  Outcome out;
  std::size_t runs = 0, quadratic = 0;

  auto check_one = [&](const ProjectivePlane& plane, const IndexSet& p) {
    try {
      const auto c = classify_growth(plane, p);
      if (c.kind == GrowthClassification::Case::QuadraticGrowth) {
        ++quadratic;
        if (4 * c.p3_size < c.p0_size * c.p0_size)
          out.fail("quadratic case without the bound");
      }
    } catch (const TheoremViolationError& e) {
      out.fail(std::string("theorem violation: ") + e.what());
    }
    ++runs;
  };

  const auto pg2 = build_pg2(2);
  for (std::uint32_t mask = 0; mask < 128; ++mask) {
    IndexSet p(7);
    for (PointId i = 0; i < 7; ++i)
      if (mask & (1u << i)) p.set(i);
    check_one(pg2, p);
  }

  const auto pg3 = build_pg2(3);
  for (std::uint32_t mask = 0; mask < (1u << 13); ++mask) {
    if (std::popcount(mask) > 6) continue;
    IndexSet p(13);
    for (PointId i = 0; i < 13; ++i)
      if (mask & (1u << i)) p.set(i);
    check_one(pg3, p);
  }

  for (std::uint32_t q : {3u, 5u}) {
    const auto plane = build_pg2(q);
    for (int t = 0; t < 1000; ++t) {
      SplitMix64 rng(sub_seed(777 + q, static_cast<std::uint64_t>(t)));
      const auto size =
          static_cast<std::uint32_t>(2 + rng.below(plane.v() - 1));
      IndexSet p(plane.v());
      for (auto i : sample_without_replacement(rng, plane.v(), size)) p.set(i);
      check_one(plane, p);
    }
  }

  out.detail = std::to_string(runs) + " classifications (" +
               std::to_string(quadratic) + " quadratic), 0 violations";
  return out;
}

// --- 4. two-line lower bound -----------------------------------------------

Outcome two_line_bound() {
  Outcome out;
  std::size_t in_branch = 0, out_branch = 0;
  const std::uint32_t orders[] = {3, 5, 7};
  for (int t = 0; t < 200; ++t) {
    const auto& plane = [&]() -> const ProjectivePlane& {
      static const ProjectivePlane p3 = build_pg2(3), p5 = build_pg2(5),
                                   p7 = build_pg2(7);
      switch (orders[t % 3]) {
        case 3: return p3;
        case 5: return p5;
        default: return p7;
      }
    }();
    SplitMix64 rng(sub_seed(4040, static_cast<std::uint64_t>(t)));
    const auto& s = plane.system();
    const LineId l1 = static_cast<LineId>(rng.below(plane.b()));
    LineId l2 = static_cast<LineId>(rng.below(plane.b() - 1));
    if (l2 >= l1) ++l2;
    const PointId cross = plane.meet(l1, l2);
    const bool include_meet = t % 2 == 1;  // both branches 100 times

    IndexSet p(plane.v());
    auto plant = [&](LineId l) {
      std::vector<PointId> eligible;
      for (PointId q : s.points_on_line(l))
        if (q != cross) eligible.push_back(q);
      const auto m = static_cast<std::uint32_t>(1 + rng.below(eligible.size()));
      for (auto i : sample_without_replacement(
               rng, static_cast<std::uint32_t>(eligible.size()), m))
        p.set(eligible[i]);
    };
    plant(l1);
    plant(l2);
    if (include_meet) p.set(cross);

    const auto report = parnas_report(plane, p, l1, l2);
    if (report.intersection_in_p)
      ++in_branch;
    else
      ++out_branch;
    if (!report.holds)
      out.fail("bound violated at trial " + std::to_string(t) + ": actual=" +
               std::to_string(report.actual) + " < " +
               std::to_string(report.lower_bound));
    if (report.intersection_in_p != include_meet)
      out.fail("branch bookkeeping broken at trial " + std::to_string(t));
  }
  if (in_branch < 50 || out_branch < 50)
    out.fail("branch coverage too small: in=" + std::to_string(in_branch) +
             " out=" + std::to_string(out_branch));
  out.detail = "200 seeded two-line configs, q in {3,5,7}; meet-in-P " +
               std::to_string(in_branch) + ", meet-out " +
               std::to_string(out_branch);
  return out;
}

// --- 5. b = v dichotomy ----------------------------------------------------

Outcome equal_counts() {
  Outcome out;
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto plane = build_pg2(q);
    const auto res = classify_equal_counts(plane.system());
    if (res.kind != EqualCountsResult::Kind::ProjectivePlane ||
        res.order != q)
      out.fail("PG(2," + std::to_string(q) + ") not recognized");
    if (!verify_axioms(plane.system()).p3)
      out.fail("P3 flag disagrees on PG(2," + std::to_string(q) + ")");
  }
  for (std::uint32_t n = 3; n <= 20; ++n) {
    const auto fan = make_fan(n);
    const auto res = classify_equal_counts(fan);
    if (res.kind != EqualCountsResult::Kind::Fan)
      out.fail("fan(" + std::to_string(n) + ") not recognized");
    if (verify_axioms(fan).p3)
      out.fail("P3 flag disagrees on fan(" + std::to_string(n) + ")");
  }
  out.detail = "PG(2,q) for q in {2..5} and fans n in {3..20}";
  return out;
}

// --- 6. degenerate classification -------------------------------------------

Outcome degenerate_classification() {
  Outcome out;
  for (std::uint32_t n = 3; n <= 20; ++n) {
    const auto fan = make_fan(n);
    const auto shape = is_degenerate_plane(fan);
    if (!shape || shape->kind != DegenerateShape::Kind::Fan) {
      out.fail("fan(" + std::to_string(n) + ") misclassified");
      continue;
    }
    // Independent re-validation of the witness.
    const auto& spine_points = fan.points_on_line(shape->spine);
    bool ok = spine_points.size() == fan.v() - 1 &&
              !fan.incident(shape->apex, shape->spine);
    for (LineId l = 0; l < fan.b() && ok; ++l) {
      if (l == shape->spine) continue;
      ok = fan.points_on_line(l).size() == 2 &&
           fan.incident(shape->apex, l);
    }
    if (!ok) out.fail("fan witness fails revalidation at n=" + std::to_string(n));
  }
  for (std::uint32_t n = 2; n <= 20; ++n) {
    std::vector<PointId> all(n);
    for (std::uint32_t i = 0; i < n; ++i) all[i] = i;
    const auto pencil = IncidenceSystem::from_lines(n, {all});
    const auto shape = is_degenerate_plane(pencil);
    if (!shape || shape->kind != DegenerateShape::Kind::Pencil ||
        shape->pencil_line != LineId{0})
      out.fail("pencil(" + std::to_string(n) + ") misclassified");
    else if (pencil.points_on_line(*shape->pencil_line).size() != pencil.v())
      out.fail("pencil witness fails revalidation at n=" + std::to_string(n));
  }
  out.detail = "fans and pencils, n <= 20, witnesses revalidated";
  return out;
}

// --- 7. geometric Ruzsa ------------------------------------------------------

Outcome geometric_ruzsa() {
  Outcome out;
  std::size_t trials = 0;
  for (std::uint32_t q : {5u, 7u, 11u}) {
    const auto plane = build_pg2(q);
    const auto& s = plane.system();
    const int per_order = q == 11 ? 66 : 67;  // 200 total
    for (int t = 0; t < per_order; ++t) {
      SplitMix64 rng(sub_seed(880 + q, static_cast<std::uint64_t>(t)));
      RuzsaConfig config;
      config.alpha = static_cast<PointId>(rng.below(plane.v()));
      const auto& through = s.lines_on_point(config.alpha);
      std::uint64_t pick = rng.below(plane.b() - through.size());
      for (LineId l = 0; l < plane.b(); ++l) {
        if (s.incident(config.alpha, l)) continue;
        if (pick == 0) {
          config.ell = l;
          break;
        }
        --pick;
      }
      const auto lines = sample_without_replacement(
          rng, static_cast<std::uint32_t>(through.size()), 3);
      for (int i = 0; i < 3; ++i) config.lines[i] = through[lines[i]];
      std::array<std::vector<PointId>*, 3> sets = {&config.a, &config.b,
                                                   &config.c};
      for (int i = 0; i < 3; ++i) {
        std::vector<PointId> eligible;
        for (PointId p : s.points_on_line(config.lines[i]))
          if (p != config.alpha && !s.incident(p, config.ell))
            eligible.push_back(p);
        const auto size =
            static_cast<std::uint32_t>(1 + rng.below(eligible.size()));
        for (auto i2 : sample_without_replacement(
                 rng, static_cast<std::uint32_t>(eligible.size()), size))
          sets[i]->push_back(eligible[i2]);
      }
      config.hypothesis = DesarguesStatus::Coordinatized;
      const auto report = ruzsa_verify(plane, config);
      if (!report.inequality_holds)
        out.fail("inequality failed, q=" + std::to_string(q) + " trial " +
                 std::to_string(t));
      if (!report.iota_injective)
        out.fail("iota collided, q=" + std::to_string(q) + " trial " +
                 std::to_string(t));
      if (!report.determination_holds)
        out.fail("determination failed, q=" + std::to_string(q) + " trial " +
                 std::to_string(t));
      ++trials;
    }
  }
  if (trials != 200) out.fail("expected 200 trials");
  out.detail = "200 seeded configurations, q in {5,7,11}";
  return out;
}

// --- 8. Desargues -----------------------------------------------------------

Outcome desargues() {
  Outcome out;
  for (std::uint32_t q : {2u, 3u}) {
    const auto plane = build_pg2(q);
    const auto report =
        little_desargues_check(plane, {DesarguesMode::Exhaustive});
    if (!report.holds)
      out.fail("exhaustive failed on PG(2," + std::to_string(q) + ")");
  }
  for (std::uint32_t q : {4u, 5u}) {
    const auto plane = build_pg2(q);
    DesarguesOptions options{DesarguesMode::Sampled, 10000, 2026};
    const auto report = little_desargues_check(plane, options);
    if (!report.holds)
      out.fail("sampled counterexample on PG(2," + std::to_string(q) + ")");
  }
  out.detail = "exhaustive q in {2,3}; 10^4 sampled, seed 2026, q in {4,5}";
  return out;
}

Outcome desargues_fixture() {
  Outcome out;
  const std::string path =
      std::string(PGROWTH_FIXTURE_DIR) + "/nondesarguesian_order9.plane";
  if (!std::filesystem::exists(path)) {
    out.skipped = true;
    out.detail = "no order-9 non-Desarguesian fixture at " + path;
    return out;
  }
  const auto plane = ProjectivePlane::from_system(load_plane_file(path, true));
  DesarguesOptions options{DesarguesMode::Sampled, 200000, 1};
  const auto report = little_desargues_check(plane, options);
  if (report.holds)
    out.fail("no counterexample found in the non-Desarguesian fixture");
  out.detail = "counterexample located in the fixture plane";
  return out;
}

// --- 9. reproducibility -----------------------------------------------------

std::string run_cli(const std::string& args, int* exit_code) {
  static int counter = 0;
  const auto out_path = std::filesystem::temp_directory_path() /
                        ("pgrowth_acc_" + std::to_string(::getpid()) + "_" +
                         std::to_string(counter++));
  const std::string cmd = std::string(PGROWTH_CLI_PATH) + " " + args + " > " +
                          out_path.string() + " 2> /dev/null";
  const int rc = std::system(cmd.c_str());
  if (exit_code) *exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::ifstream f(out_path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  std::filesystem::remove(out_path);
  return os.str();
}

Outcome reproducibility() {
  Outcome out;
  const std::vector<std::string> commands = {
      "survey --order 5 --trials 80 --seed 42 --min-size 4 --max-size 10",
      "survey --order 3 --trials 40 --seed 9 --format json",
      "desargues --order 4 --mode sampled --samples 500 --seed 11",
      "ruzsa --order 7 --trials 25 --seed 13",
      "ruzsa --abelian 17 --trials 10 --seed 3",
      "grow --order 2 --points 0,1,3,6",
  };
  for (const auto& cmd : commands) {
    int code1 = 0, code2 = 0;
    const auto first = run_cli(cmd, &code1);
    const auto second = run_cli(cmd, &code2);
    if (code1 != code2 || first != second)
      out.fail("output differs across runs: " + cmd);
    if (first.empty()) out.fail("no output: " + cmd);
  }
  // Worker count must not change a byte.
  int code = 0;
  const auto jobs1 =
      run_cli("survey --order 5 --trials 80 --seed 42 --jobs 1", &code);
  const auto jobs4 =
      run_cli("survey --order 5 --trials 80 --seed 42 --jobs 4", &code);
  if (jobs1 != jobs4) out.fail("output differs between --jobs 1 and --jobs 4");
  out.detail = "seeded commands byte-identical across runs and job counts";
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "plane-construction", 2.0, plane_construction},
      {2, "fisher-chain", 10.0, fisher_chain},
      {3, "growth-trichotomy", 60.0, trichotomy},
      {4, "two-line-bound", 5.0, two_line_bound},
      {5, "equal-counts-dichotomy", 1.0, equal_counts},
      {6, "degenerate-classification", 1.0, degenerate_classification},
      {7, "geometric-ruzsa", 10.0, geometric_ruzsa},
      {8, "little-desargues", 120.0, desargues},
      {8, "little-desargues-fixture", 120.0, desargues_fixture},
      {9, "reproducibility", 30.0, reproducibility},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (!outcome.skipped && elapsed > criterion.budget_seconds)
      outcome.fail("runtime " + std::to_string(elapsed) + "s over the " +
                   std::to_string(criterion.budget_seconds) + "s budget");

    const char* tag = outcome.skipped ? "[SKIP]" : outcome.pass ? "[PASS]"
                                                                : "[FAIL]";
    std::printf("%s %d %s: %s (%.2fs, budget %.0fs)\n", tag, criterion.number,
                criterion.name.c_str(), outcome.detail.c_str(), elapsed,
                criterion.budget_seconds);
    if (!outcome.pass && !outcome.skipped) ++failures;
  }
  return failures;
}
