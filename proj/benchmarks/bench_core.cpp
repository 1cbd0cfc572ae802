#include <benchmark/benchmark.h>

#include "pgrowth/classify.hpp"
#include "pgrowth/configs.hpp"
#include "pgrowth/growth.hpp"
#include "pgrowth/plane.hpp"
#include "pgrowth/rng.hpp"

using namespace pgrowth;

namespace {

const ProjectivePlane& plane_of(std::uint32_t q) {
  static const ProjectivePlane p3 = build_pg2(3);
  static const ProjectivePlane p9 = build_pg2(9);
  static const ProjectivePlane p11 = build_pg2(11);
  static const ProjectivePlane p16 = build_pg2(16);
  switch (q) {
    case 3: return p3;
    case 9: return p9;
    case 11: return p11;
    default: return p16;
  }
}

IndexSet seeded_set(const ProjectivePlane& plane, std::uint32_t size,
                    std::uint64_t seed) {
  SplitMix64 rng(seed);
  IndexSet p(plane.v());
  for (auto i : sample_without_replacement(rng, plane.v(), size)) p.set(i);
  return p;
}

void BM_BuildPlane(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    auto plane = build_pg2(q);
    benchmark::DoNotOptimize(plane);
  }
}
BENCHMARK(BM_BuildPlane)->Arg(3)->Arg(9)->Arg(16)->Arg(27);

void BM_GrowthTrace(benchmark::State& state) {
  const auto& plane = plane_of(static_cast<std::uint32_t>(state.range(0)));
  const auto p0 = seeded_set(plane, 12, 42);
  for (auto _ : state) {
    auto trace = growth_trace(plane, p0, 3);
    benchmark::DoNotOptimize(trace);
  }
}
BENCHMARK(BM_GrowthTrace)->Arg(9)->Arg(11)->Arg(16);

void BM_LinesDefined(benchmark::State& state) {
  const auto& plane = plane_of(static_cast<std::uint32_t>(state.range(0)));
  const auto p0 = seeded_set(plane, 20, 7);
  for (auto _ : state) {
    auto lines = lines_defined(plane, p0);
    benchmark::DoNotOptimize(lines);
  }
}
BENCHMARK(BM_LinesDefined)->Arg(9)->Arg(16);

void BM_JoinScan(benchmark::State& state) {
  const auto& plane = plane_of(16);
  const auto& s = plane.system();
  PointId a = 0, b = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(join(s, a, b));
    b = (b + 7) % s.v();
    if (b == a) ++b;
  }
}
BENCHMARK(BM_JoinScan);

void BM_JoinCoords(benchmark::State& state) {
  const auto& plane = plane_of(16);
  PointId a = 0, b = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(plane.join(a, b));
    b = (b + 7) % plane.v();
    if (b == a) ++b;
  }
}
BENCHMARK(BM_JoinCoords);

void BM_ClassifyGrowth(benchmark::State& state) {
  const auto& plane = plane_of(9);
  const auto p0 = seeded_set(plane, static_cast<std::uint32_t>(state.range(0)),
                             99);
  for (auto _ : state) {
    auto c = classify_growth(plane, p0);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_ClassifyGrowth)->Arg(4)->Arg(10)->Arg(40);

void BM_DesarguesFlag(benchmark::State& state) {
  const auto& plane = plane_of(3);
  const LineId ell = plane.system().lines_on_point(0)[0];
  for (auto _ : state) {
    auto report =
        is_alpha_ell_desarguesian(plane, 0, ell, {DesarguesMode::Exhaustive});
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_DesarguesFlag);

void BM_RuzsaVerify(benchmark::State& state) {
  const auto& plane = plane_of(11);
  const auto& s = plane.system();
  SplitMix64 rng(5);
  RuzsaConfig config;
  config.alpha = 0;
  for (LineId l = 0; l < plane.b(); ++l)
    if (!s.incident(config.alpha, l)) {
      config.ell = l;
      break;
    }
  const auto& through = s.lines_on_point(config.alpha);
  for (int i = 0; i < 3; ++i) config.lines[i] = through[i];
  std::array<std::vector<PointId>*, 3> sets = {&config.a, &config.b,
                                               &config.c};
  for (int i = 0; i < 3; ++i)
    for (PointId p : s.points_on_line(config.lines[i]))
      if (p != config.alpha && !s.incident(p, config.ell) &&
          sets[i]->size() < 6)
        sets[i]->push_back(p);
  for (auto _ : state) {
    auto report = ruzsa_verify(plane, config);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_RuzsaVerify);

}  // namespace

BENCHMARK_MAIN();
