#include "pgrowth/configs.hpp"

#include <algorithm>
#include <utility>

#include "pgrowth/rng.hpp"

namespace pgrowth {
namespace {

// Eligible vertex carriers for perspective triangles from alpha w.r.t. ell:
// the lines through alpha other than ell, each with its points off ell and
// distinct from alpha. Lines with fewer than two usable points cannot carry
// a vertex pair and are dropped.
struct FlagGeometry {
  std::vector<LineId> lines;
  std::vector<std::vector<PointId>> points;  // parallel to `lines`
};

FlagGeometry flag_geometry(const ProjectivePlane& plane, PointId alpha,
                           LineId ell) {
  const IncidenceSystem& s = plane.system();
  FlagGeometry geo;
  for (LineId m : s.lines_on_point(alpha)) {
    if (m == ell) continue;
    std::vector<PointId> usable;
    for (PointId p : s.points_on_line(m)) {
      if (p == alpha) continue;
      if (s.incident(p, ell)) continue;
      usable.push_back(p);
    }
    if (usable.size() >= 2) {
      geo.lines.push_back(m);
      geo.points.push_back(std::move(usable));
    }
  }
  return geo;
}

// Evaluates one perspective pair. Returns false (and fills `out`) when the
// pair violates the (alpha, ell)-Desargues conclusion: exactly two of the
// three side meets on ell.
bool evaluate_pair(const ProjectivePlane& plane, PerspectiveTrianglePair& cfg,
                   const IncidenceSystem& s) {
  const auto side_meet = [&](PointId u1, PointId v1, PointId u2, PointId v2) {
    return plane.meet(plane.join(u1, v1), plane.join(u2, v2));
  };
  cfg.side_meets[0] = side_meet(cfg.triangle1[0], cfg.triangle1[1],
                                cfg.triangle2[0], cfg.triangle2[1]);
  cfg.side_meets[1] = side_meet(cfg.triangle1[0], cfg.triangle1[2],
                                cfg.triangle2[0], cfg.triangle2[2]);
  cfg.side_meets[2] = side_meet(cfg.triangle1[1], cfg.triangle1[2],
                                cfg.triangle2[1], cfg.triangle2[2]);
  int on = 0;
  for (int i = 0; i < 3; ++i) {
    cfg.on_ell[i] = s.incident(cfg.side_meets[i], cfg.ell);
    if (cfg.on_ell[i]) ++on;
  }
  return on != 2;
}

bool triangle_collinear(const IncidenceSystem& s, PointId a, PointId b,
                        PointId c) {
  return collinear(s, a, b, c);
}

DesarguesReport check_flag_exhaustive(const ProjectivePlane& plane,
                                      PointId alpha, LineId ell,
                                      DesarguesReport report) {
  const IncidenceSystem& s = plane.system();
  const FlagGeometry geo = flag_geometry(plane, alpha, ell);
  ++report.flags_checked;
  const std::size_t n = geo.lines.size();

  PerspectiveTrianglePair cfg;
  cfg.alpha = alpha;
  cfg.ell = ell;

  for (std::size_t ia = 0; ia < n; ++ia)
    for (std::size_t ib = ia + 1; ib < n; ++ib)
      for (std::size_t ic = ib + 1; ic < n; ++ic) {
        cfg.vertex_lines = {geo.lines[ia], geo.lines[ib], geo.lines[ic]};
        const auto& pa = geo.points[ia];
        const auto& pb = geo.points[ib];
        const auto& pc = geo.points[ic];
        // Vertex pair on the first line unordered, the other two ordered:
        // that is one representative per configuration modulo swapping the
        // two triangles wholesale.
        for (std::size_t a1 = 0; a1 < pa.size(); ++a1)
          for (std::size_t a2 = a1 + 1; a2 < pa.size(); ++a2)
            for (std::size_t b1 = 0; b1 < pb.size(); ++b1)
              for (std::size_t b2 = 0; b2 < pb.size(); ++b2) {
                if (b1 == b2) continue;
                for (std::size_t c1 = 0; c1 < pc.size(); ++c1)
                  for (std::size_t c2 = 0; c2 < pc.size(); ++c2) {
                    if (c1 == c2) continue;
                    cfg.triangle1 = {pa[a1], pb[b1], pc[c1]};
                    cfg.triangle2 = {pa[a2], pb[b2], pc[c2]};
                    if (triangle_collinear(s, cfg.triangle1[0],
                                           cfg.triangle1[1],
                                           cfg.triangle1[2]) ||
                        triangle_collinear(s, cfg.triangle2[0],
                                           cfg.triangle2[1],
                                           cfg.triangle2[2])) {
                      ++report.degenerate_skipped;
                      continue;
                    }
                    ++report.configurations_checked;
                    if (!evaluate_pair(plane, cfg, s)) {
                      report.holds = false;
                      report.counterexample = cfg;
                      return report;
                    }
                  }
              }
      }
  return report;
}

// One sampled configuration on a fixed flag; nullopt when the flag has no
// usable configuration or the degeneracy retry budget is exhausted.
std::optional<PerspectiveTrianglePair> sample_config(
    const ProjectivePlane& plane, const FlagGeometry& geo, PointId alpha,
    LineId ell, SplitMix64& rng, std::uint64_t& degenerate_skipped) {
  const IncidenceSystem& s = plane.system();
  if (geo.lines.size() < 3) return std::nullopt;

  for (int attempt = 0; attempt < 1000; ++attempt) {
    const auto line_pick =
        sample_without_replacement(rng, static_cast<std::uint32_t>(geo.lines.size()), 3);
    PerspectiveTrianglePair cfg;
    cfg.alpha = alpha;
    cfg.ell = ell;
    cfg.vertex_lines = {geo.lines[line_pick[0]], geo.lines[line_pick[1]],
                        geo.lines[line_pick[2]]};

    std::array<std::pair<PointId, PointId>, 3> pairs;
    for (int i = 0; i < 3; ++i) {
      const auto& pts = geo.points[line_pick[i]];
      const std::uint64_t u = rng.below(pts.size());
      std::uint64_t w = rng.below(pts.size() - 1);
      if (w >= u) ++w;
      pairs[i] = {pts[u], pts[w]};
    }
    // Unordered on the first carrier (canonical triangle order).
    if (pairs[0].first > pairs[0].second)
      std::swap(pairs[0].first, pairs[0].second);

    cfg.triangle1 = {pairs[0].first, pairs[1].first, pairs[2].first};
    cfg.triangle2 = {pairs[0].second, pairs[1].second, pairs[2].second};
    if (triangle_collinear(s, cfg.triangle1[0], cfg.triangle1[1],
                           cfg.triangle1[2]) ||
        triangle_collinear(s, cfg.triangle2[0], cfg.triangle2[1],
                           cfg.triangle2[2])) {
      ++degenerate_skipped;
      continue;
    }
    return cfg;
  }
  return std::nullopt;
}

}  // namespace

PointId bracket(const ProjectivePlane& plane, PointId x, PointId y,
                LineId ell) {
  if (x == y) throw UndefinedBracketError("bracket of a point with itself");
  const IncidenceSystem& s = plane.system();
  const bool x_on = s.incident(x, ell);
  const bool y_on = s.incident(y, ell);
  if (x_on && y_on)
    throw UndefinedBracketError("both points lie on the reference line");
  if (x_on) return x;
  if (y_on) return y;
  return plane.meet(plane.join(x, y), ell);
}

IndexSet bracket_set(const ProjectivePlane& plane, const IndexSet& xs,
                     const IndexSet& ys, LineId ell) {
  const bool identical = xs == ys;
  if (!identical) {
    IndexSet overlap = xs;
    overlap &= ys;
    if (!overlap.empty())
      throw PreconditionError(
          "bracket_set requires disjoint (or identical) point sets");
  }
  const IncidenceSystem& s = plane.system();
  auto disjoint_from_ell = [&](const IndexSet& set) {
    bool ok = true;
    set.for_each([&](PointId p) { ok = ok && !s.incident(p, ell); });
    return ok;
  };
  if (!disjoint_from_ell(xs) && !disjoint_from_ell(ys))
    throw PreconditionError(
        "at least one of the two sets must be disjoint from the line");

  IndexSet out(plane.v());
  xs.for_each([&](PointId x) {
    ys.for_each([&](PointId y) {
      if (x == y) return;  // identical-set mode: skip the diagonal
      out.set(bracket(plane, x, y, ell));
    });
  });
  return out;
}

DesarguesReport is_alpha_ell_desarguesian(const ProjectivePlane& plane,
                                          PointId alpha, LineId ell,
                                          const DesarguesOptions& options) {
  if (alpha >= plane.v() || ell >= plane.b())
    throw IndexOutOfRangeError("alpha or ell outside the plane");

  if (options.mode == DesarguesMode::Exhaustive)
    return check_flag_exhaustive(plane, alpha, ell, DesarguesReport{});

  DesarguesReport report;
  report.flags_checked = 1;
  const FlagGeometry geo = flag_geometry(plane, alpha, ell);
  for (std::uint64_t i = 0; i < options.samples; ++i) {
    SplitMix64 rng(sub_seed(options.seed, i));
    auto cfg = sample_config(plane, geo, alpha, ell, rng,
                             report.degenerate_skipped);
    if (!cfg) break;  // no configurations exist on this flag
    ++report.configurations_checked;
    if (!evaluate_pair(plane, *cfg, plane.system())) {
      report.holds = false;
      report.counterexample = *cfg;
      return report;
    }
  }
  return report;
}

DesarguesReport little_desargues_check(const ProjectivePlane& plane,
                                       const DesarguesOptions& options) {
  const IncidenceSystem& s = plane.system();

  if (options.mode == DesarguesMode::Exhaustive) {
    DesarguesReport report;
    for (PointId alpha = 0; alpha < plane.v(); ++alpha)
      for (LineId ell : s.lines_on_point(alpha)) {
        report = check_flag_exhaustive(plane, alpha, ell, std::move(report));
        if (!report.holds) return report;
      }
    return report;
  }

  DesarguesReport report;
  for (std::uint64_t i = 0; i < options.samples; ++i) {
    SplitMix64 rng(sub_seed(options.seed, i));
    const PointId alpha = static_cast<PointId>(rng.below(plane.v()));
    const auto& through = s.lines_on_point(alpha);
    const LineId ell = through[rng.below(through.size())];
    ++report.flags_checked;
    const FlagGeometry geo = flag_geometry(plane, alpha, ell);
    auto cfg = sample_config(plane, geo, alpha, ell, rng,
                             report.degenerate_skipped);
    if (!cfg) continue;  // flag too small to carry a configuration
    ++report.configurations_checked;
    if (!evaluate_pair(plane, *cfg, s)) {
      report.holds = false;
      report.counterexample = *cfg;
      return report;
    }
  }
  return report;
}

namespace {

void require(bool cond, const char* message) {
  if (!cond) throw PreconditionError(message);
}

}  // namespace

RuzsaReport ruzsa_verify(const ProjectivePlane& plane,
                         const RuzsaConfig& config) {
  const IncidenceSystem& s = plane.system();
  require(config.alpha < plane.v() && config.ell < plane.b(),
          "alpha or ell outside the plane");
  require(!s.incident(config.alpha, config.ell),
          "alpha must not lie on ell in a Ruzsa configuration");
  require(config.lines[0] != config.lines[1] &&
              config.lines[0] != config.lines[2] &&
              config.lines[1] != config.lines[2],
          "the three carrier lines must be distinct");
  for (LineId l : config.lines) {
    require(l != config.ell, "carrier lines must differ from ell");
    require(s.incident(config.alpha, l), "carrier lines must pass through alpha");
  }
  require(!config.a.empty() && !config.b.empty() && !config.c.empty(),
          "A, B, C must be nonempty");

  const std::array<const std::vector<PointId>*, 3> sets = {&config.a,
                                                           &config.b,
                                                           &config.c};
  for (int i = 0; i < 3; ++i)
    for (PointId p : *sets[i]) {
      require(p != config.alpha, "sets must avoid alpha");
      require(s.incident(p, config.lines[i]),
              "set member not on its carrier line");
      require(!s.incident(p, config.ell), "sets must avoid ell");
    }

  RuzsaReport report;
  report.selector = config.selector;
  report.hypothesis = config.hypothesis;

  auto dedup = [](std::vector<PointId> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  const std::vector<PointId> a = dedup(config.a);
  const std::vector<PointId> b = dedup(config.b);
  const std::vector<PointId> c = dedup(config.c);
  report.size_b = b.size();

  // Bracket sets and the f_A, f_C selectors over [A,C].
  std::map<PointId, std::pair<PointId, PointId>> ac_preimage;
  for (PointId pa : a)
    for (PointId pc : c) {
      const PointId q = bracket(plane, pa, pc, config.ell);
      if (config.selector == SelectorChoice::FirstFound) {
        ac_preimage.emplace(q, std::make_pair(pa, pc));
      } else {
        ac_preimage[q] = {pa, pc};
      }
    }
  IndexSet ab_set(plane.v()), bc_set(plane.v());
  for (PointId pa : a)
    for (PointId pb : b) ab_set.set(bracket(plane, pa, pb, config.ell));
  for (PointId pb : b)
    for (PointId pc : c) bc_set.set(bracket(plane, pb, pc, config.ell));

  report.size_ac = ac_preimage.size();
  report.size_ab = ab_set.count();
  report.size_bc = bc_set.count();

  report.inequality_holds =
      static_cast<std::uint64_t>(report.size_ac) * report.size_b <=
      static_cast<std::uint64_t>(report.size_ab) * report.size_bc;

  // iota(p, b) = ([f_A(p), b], [b, f_C(p)]): injective iff no two domain
  // elements collide on the image pair.
  report.iota_injective = true;
  std::map<std::pair<PointId, PointId>, std::pair<PointId, PointId>> image;
  for (const auto& [p, fa_fc] : ac_preimage) {
    for (PointId pb : b) {
      const PointId left = bracket(plane, fa_fc.first, pb, config.ell);
      const PointId right = bracket(plane, pb, fa_fc.second, config.ell);
      const auto [it, inserted] =
          image.emplace(std::make_pair(left, right), std::make_pair(p, pb));
      if (!inserted) report.iota_injective = false;
    }
  }

  // Determination: ([a,b],[b,c]) -> [a,c] must be single-valued over all
  // triples. This is the core step the Desargues hypothesis buys.
  report.determination_holds = true;
  std::map<std::pair<PointId, PointId>, PointId> determined;
  for (PointId pa : a)
    for (PointId pb : b)
      for (PointId pc : c) {
        const PointId ab = bracket(plane, pa, pb, config.ell);
        const PointId bc = bracket(plane, pb, pc, config.ell);
        const PointId ac = bracket(plane, pa, pc, config.ell);
        const auto [it, inserted] =
            determined.emplace(std::make_pair(ab, bc), ac);
        if (!inserted && it->second != ac) report.determination_holds = false;
      }
  return report;
}

AbelianRuzsaReport abelian_ruzsa_check(std::uint32_t n,
                                       const std::vector<std::uint32_t>& a,
                                       const std::vector<std::uint32_t>& b,
                                       const std::vector<std::uint32_t>& c) {
  require(n >= 1, "group order must be positive");
  require(!a.empty() && !b.empty() && !c.empty(), "sets must be nonempty");
  for (const auto* set : {&a, &b, &c})
    for (auto x : *set) require(x < n, "residue outside [0, n)");

  auto dedup = [](std::vector<std::uint32_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  const auto sa = dedup(a), sb = dedup(b), sc = dedup(c);
  const auto diff_mod = [n](std::uint32_t x, std::uint32_t y) {
    return (x + n - y) % n;
  };

  AbelianRuzsaReport report;
  report.size_b = sb.size();

  std::map<std::uint32_t, std::pair<std::uint32_t, std::uint32_t>> ac_pre;
  for (auto x : sa)
    for (auto z : sc) ac_pre.emplace(diff_mod(x, z), std::make_pair(x, z));
  std::vector<bool> ab(n, false), bc(n, false);
  std::size_t ab_count = 0, bc_count = 0;
  for (auto x : sa)
    for (auto y : sb) {
      const auto d = diff_mod(x, y);
      if (!ab[d]) ab_count++, ab[d] = true;
    }
  for (auto y : sb)
    for (auto z : sc) {
      const auto d = diff_mod(y, z);
      if (!bc[d]) bc_count++, bc[d] = true;
    }

  report.size_ac = ac_pre.size();
  report.size_ab = ab_count;
  report.size_bc = bc_count;
  report.inequality_holds =
      static_cast<std::uint64_t>(report.size_ac) * report.size_b <=
      static_cast<std::uint64_t>(report.size_ab) * report.size_bc;

  report.iota_injective = true;
  std::map<std::pair<std::uint32_t, std::uint32_t>,
           std::pair<std::uint32_t, std::uint32_t>>
      image;
  for (const auto& [x, fa_fc] : ac_pre)
    for (auto y : sb) {
      const auto key = std::make_pair(diff_mod(fa_fc.first, y),
                                      diff_mod(y, fa_fc.second));
      if (!image.emplace(key, std::make_pair(x, y)).second)
        report.iota_injective = false;
    }
  return report;
}

}  // namespace pgrowth
