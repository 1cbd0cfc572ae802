// pgrowth: plane generation/validation, growth runs, classification,
// surveys over random point sets, Desargues and Ruzsa experiments.
// Seeded commands are reproducible: byte-identical output for identical
// (command, seed, inputs), independent of --jobs.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pgrowth/classify.hpp"
#include "pgrowth/configs.hpp"
#include "pgrowth/errors.hpp"
#include "pgrowth/growth.hpp"
#include "pgrowth/plane.hpp"
#include "pgrowth/rng.hpp"

using json = nlohmann::ordered_json;
using namespace pgrowth;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;  // axioms fail / counterexample found
constexpr int kExitConfig = 2;       // bad arguments, parse or order errors
constexpr int kExitViolation = 3;    // a verified statement failed on data

struct CommonOptions {
  std::string format;  // per-command default applied after parsing
  std::optional<std::uint64_t> seed;
  unsigned jobs = 0;
  std::string out;
  std::optional<std::uint32_t> order;
  std::string plane_path;
};

unsigned default_jobs() {
  if (const char* env = std::getenv("PGROWTH_JOBS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
  }
  return 1;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Error("cannot open " + out_path + " for writing");
  f << text;
}

ProjectivePlane load_ambient(const CommonOptions& opt) {
  if (opt.order) return build_pg2(*opt.order);
  return ProjectivePlane::from_system(load_plane_file(opt.plane_path));
}

json plane_summary(const ProjectivePlane& plane) {
  json j;
  j["v"] = plane.v();
  j["b"] = plane.b();
  if (plane.order_hint())
    j["order"] = *plane.order_hint();
  else
    j["order"] = nullptr;
  return j;
}

// Quarters are exact in binary, so this stays deterministic.
double quadratic_bound(std::size_t p0) {
  return static_cast<double>(p0) * static_cast<double>(p0) / 4.0;
}

std::string bound_string(std::size_t p0) {
  const std::size_t num = p0 * p0;
  std::string s = std::to_string(num / 4);
  if (num % 4 != 0) s += ".25";  // squares are 0 or 1 mod 4
  return s;
}

json set_as_json(const IndexSet& set) {
  json arr = json::array();
  set.for_each([&](std::uint32_t i) { arr.push_back(i); });
  return arr;
}

const char* stop_reason_name(GrowthTrace::StopReason r) {
  switch (r) {
    case GrowthTrace::StopReason::Fixpoint: return "fixpoint";
    case GrowthTrace::StopReason::MaxSteps: return "max-steps";
    case GrowthTrace::StopReason::Collapsed: return "collapsed";
  }
  return "?";
}

json classification_json(const ProjectivePlane& plane,
                         const GrowthClassification& c) {
  json j;
  j["case"] = GrowthClassification::case_name(c.kind);
  j["theorem_case"] = c.theorem_case;
  j["p0_size"] = c.p0_size;
  j["p3_size"] = c.p3_size;
  j["bound"] = quadratic_bound(c.p0_size);
  j["bound_met"] = 4 * c.p3_size >= c.p0_size * c.p0_size;

  json witness;
  switch (c.kind) {
    case GrowthClassification::Case::Collinear:
      if (c.collinear.kind == CollinearityResult::Kind::OnLine)
        witness["line"] = c.collinear.line;
      else
        witness["trivial"] = true;
      break;
    case GrowthClassification::Case::Fan:
      witness["apex"] = *c.fan_apex;
      witness["spine"] = *c.fan_spine;
      break;
    case GrowthClassification::Case::SubplaneExact:
    case GrowthClassification::Case::SubplaneMinusOne:
      witness["subplane_size"] = c.subplane_points->count();
      if (plane.v() <= 100) {
        witness["points"] = set_as_json(*c.subplane_points);
        witness["lines"] = set_as_json(*c.subplane_lines);
      }
      if (c.missing_point) witness["missing_point"] = *c.missing_point;
      break;
    case GrowthClassification::Case::QuadraticGrowth:
      witness["p3_size"] = c.p3_size;
      break;
  }
  j["witness"] = witness;
  return j;
}

json proposition_json(const PropositionCases& cases) {
  json j;
  j["quadratic"] = cases.quadratic;
  j["half_on_a_line"] = cases.half_on_a_line;
  if (cases.heavy_line)
    j["heavy_line"] = *cases.heavy_line;
  else
    j["heavy_line"] = nullptr;
  j["heavy_count"] = cases.heavy_count;
  j["stagnant_p2"] = cases.stagnant_p2;
  if (cases.delta)
    j["delta"] = *cases.delta;
  else
    j["delta"] = nullptr;
  if (cases.extra_point)
    j["extra_point"] = *cases.extra_point;
  else
    j["extra_point"] = nullptr;
  // The half-line case fires at >= |P|/2, not only strictly above it.
  j["half_line_threshold"] = "at-least-half";
  return j;
}

IndexSet parse_point_set(const ProjectivePlane& plane,
                         const std::vector<std::uint32_t>& ids) {
  IndexSet p(plane.v());
  for (auto id : ids) {
    if (id >= plane.v())
      throw IndexOutOfRangeError("point id " + std::to_string(id) +
                                 " outside [0, " + std::to_string(plane.v()) +
                                 ")");
    p.set(id);
  }
  return p;
}

// ---------------------------------------------------------------- plane ---

int cmd_plane_gen(const CommonOptions& opt) {
  const auto plane = build_pg2(*opt.order);
  std::ostringstream os;
  save_plane(plane.system(), os, "PG(2," + std::to_string(*opt.order) + ")");
  write_output(os.str(), opt.out);
  return kExitOk;
}

int cmd_plane_check(const CommonOptions& opt, const std::string& path,
                    bool raw) {
  const IncidenceSystem s = load_plane_file(path, raw);
  const AxiomReport report = verify_axioms(s);
  const LinearSpaceStats st = stats(s);
  std::optional<DegenerateShape> shape;
  if (report.p1 && report.p2 && !report.p3) shape = is_degenerate_plane(s);

  if (opt.format == "json") {
    json j;
    j["command"] = "plane-check";
    j["path"] = path;
    j["v"] = s.v();
    j["b"] = s.b();
    json p1;
    p1["holds"] = report.p1;
    p1["witness"] =
        report.p1_witness
            ? json::array({(*report.p1_witness)[0], (*report.p1_witness)[1]})
            : json(nullptr);
    j["p1"] = p1;
    json p2;
    p2["holds"] = report.p2;
    p2["witness"] =
        report.p2_witness
            ? json::array({(*report.p2_witness)[0], (*report.p2_witness)[1]})
            : json(nullptr);
    j["p2"] = p2;
    json p3;
    p3["holds"] = report.p3;
    p3["witness"] = report.quadrilateral
                        ? json::array({(*report.quadrilateral)[0],
                                       (*report.quadrilateral)[1],
                                       (*report.quadrilateral)[2],
                                       (*report.quadrilateral)[3]})
                        : json(nullptr);
    j["p3"] = p3;
    j["is_projective_plane"] = report.all();
    j["is_linear_space"] = report.p1;
    if (shape) {
      json d;
      d["kind"] = shape->kind == DegenerateShape::Kind::Pencil ? "pencil"
                                                               : "fan";
      if (shape->kind == DegenerateShape::Kind::Pencil) {
        d["line"] = shape->pencil_line ? json(*shape->pencil_line)
                                       : json(nullptr);
      } else {
        d["apex"] = shape->apex;
        d["spine"] = shape->spine;
      }
      j["degenerate"] = d;
    } else {
      j["degenerate"] = nullptr;
    }
    json stj;
    stj["v"] = st.v;
    stj["b"] = st.b;
    stj["f"] = st.f;
    stj["k"] = {{"num", st.k.num}, {"den", st.k.den}};
    stj["r"] = {{"num", st.r.num}, {"den", st.r.den}};
    stj["c"] = st.c;
    stj["c1"] = st.c1;
    stj["d"] = st.d;
    j["stats"] = stj;
    write_output(j.dump(2) + "\n", opt.out);
  } else {
    std::ostringstream os;
    os << "plane " << path << ": v=" << s.v() << " b=" << s.b() << "\n"
       << "P1 " << (report.p1 ? "holds" : "fails") << "\n"
       << "P2 " << (report.p2 ? "holds" : "fails") << "\n"
       << "P3 " << (report.p3 ? "holds" : "fails") << "\n"
       << "projective plane: " << (report.all() ? "yes" : "no") << "\n";
    if (shape)
      os << "degenerate: "
         << (shape->kind == DegenerateShape::Kind::Pencil ? "pencil" : "fan")
         << "\n";
    os << "stats: f=" << st.f << " k=" << st.k.num << "/" << st.k.den
       << " r=" << st.r.num << "/" << st.r.den << " c=" << st.c
       << " c1=" << st.c1 << " d=" << st.d << "\n";
    write_output(os.str(), opt.out);
  }
  return report.all() ? kExitOk : kExitCheckFailed;
}

// ----------------------------------------------------------------- grow ---

int cmd_grow(const CommonOptions& opt, const std::vector<std::uint32_t>& ids,
             std::size_t steps) {
  const auto plane = load_ambient(opt);
  const IndexSet p0 = parse_point_set(plane, ids);
  const GrowthTrace trace = growth_trace(plane, p0, steps);
  const auto chain = chain_check(trace);
  const auto classification = classify_growth(plane, p0);

  if (opt.format == "csv") {
    std::ostringstream os;
    os << "step,p_size,l_size\n";
    for (std::size_t i = 0; i < trace.point_sets.size(); ++i) {
      os << i << "," << trace.point_sets[i].count() << ",";
      if (i < trace.line_sets.size()) os << trace.line_sets[i].count();
      os << "\n";
    }
    write_output(os.str(), opt.out);
  } else if (opt.format == "json") {
    json j;
    j["command"] = "grow";
    j["plane"] = plane_summary(plane);
    j["steps"] = steps;
    j["points"] = set_as_json(p0);
    json tj;
    tj["stop_reason"] = stop_reason_name(trace.stop_reason);
    json psz = json::array(), lsz = json::array();
    for (const auto& s : trace.point_sets) psz.push_back(s.count());
    for (const auto& s : trace.line_sets) lsz.push_back(s.count());
    tj["p_sizes"] = psz;
    tj["l_sizes"] = lsz;
    if (plane.v() <= 100) {
      json pset = json::array(), lset = json::array();
      for (const auto& s : trace.point_sets) pset.push_back(set_as_json(s));
      for (const auto& s : trace.line_sets) lset.push_back(set_as_json(s));
      tj["point_sets"] = pset;
      tj["line_sets"] = lset;
    }
    j["trace"] = tj;
    json cj;
    cj["ok"] = chain.ok;
    cj["first_violation"] =
        chain.first_violation ? json(*chain.first_violation) : json(nullptr);
    j["chain"] = cj;
    j["classification"] = classification_json(plane, classification);
    write_output(j.dump(2) + "\n", opt.out);
  } else {
    std::ostringstream os;
    os << trace.describe() << "\n"
       << "classification: "
       << GrowthClassification::case_name(classification.kind)
       << " (theorem case " << classification.theorem_case << ")\n";
    write_output(os.str(), opt.out);
  }
  return kExitOk;
}

int cmd_classify(const CommonOptions& opt,
                 const std::vector<std::uint32_t>& ids) {
  const auto plane = load_ambient(opt);
  const IndexSet p0 = parse_point_set(plane, ids);
  const auto classification = classify_growth(plane, p0);
  const auto cases = proposition_growth_cases(plane, p0);

  if (opt.format == "json") {
    json j;
    j["command"] = "classify";
    j["plane"] = plane_summary(plane);
    j["points"] = set_as_json(p0);
    j["classification"] = classification_json(plane, classification);
    j["proposition"] = proposition_json(cases);
    write_output(j.dump(2) + "\n", opt.out);
  } else {
    std::ostringstream os;
    os << "classification: "
       << GrowthClassification::case_name(classification.kind)
       << " (theorem case " << classification.theorem_case << ")\n"
       << "proposition: quadratic=" << cases.quadratic
       << " half_on_a_line=" << cases.half_on_a_line
       << " stagnant_p2=" << cases.stagnant_p2 << "\n";
    write_output(os.str(), opt.out);
  }
  return kExitOk;
}

// --------------------------------------------------------------- survey ---

struct SurveyRow {
  std::uint32_t trial = 0;
  std::uint64_t sub = 0;
  std::array<std::size_t, 4> p{};  // |P0..P3|
  std::array<std::size_t, 3> l{};  // |L0..L2|
  std::string case_name;
  int theorem_case = 0;
  std::size_t p0 = 0, p3 = 0;
  bool bound_met = false;
  bool chain_ok = true;
  std::string violation;  // nonempty on a falsification
};

SurveyRow survey_trial(const ProjectivePlane& plane, std::uint32_t trial,
                       const IndexSet& p0, std::uint64_t sub) {
  SurveyRow row;
  row.trial = trial;
  row.sub = sub;
  try {
    const GrowthTrace trace = growth_trace(plane, p0, 3);
    for (int i = 0; i < 4; ++i) row.p[i] = trace.points_at(i).count();
    for (int i = 0; i < 3; ++i) row.l[i] = trace.lines_at(i).count();
    row.p0 = row.p[0];
    row.p3 = row.p[3];
    row.bound_met = 4 * row.p3 >= row.p0 * row.p0;
    const auto classification = classify_growth(plane, p0);
    row.case_name = GrowthClassification::case_name(classification.kind);
    row.theorem_case = classification.theorem_case;
    if (!is_collinear(plane, p0).collinear()) {
      const auto chain = chain_check(trace);
      row.chain_ok = chain.ok;
      if (!chain.ok) row.violation = "size chain decreased: " + trace.describe();
    }
  } catch (const TheoremViolationError& e) {
    row.case_name = "theorem-violation";
    row.violation = std::string(e.what()) + "\n" + e.trace_dump();
  }
  return row;
}

int cmd_survey(const CommonOptions& opt, std::uint32_t trials,
               std::uint32_t min_size, std::uint32_t max_size,
               bool max_size_explicit, bool exhaustive) {
  const auto plane = load_ambient(opt);
  const std::uint32_t v = plane.v();
  if (!max_size_explicit) max_size = std::min(max_size, v);

  std::vector<IndexSet> inputs;
  std::vector<std::uint64_t> subs;
  if (exhaustive) {
    if (v > 20)
      throw PreconditionError(
          "exhaustive enumeration is limited to planes with v <= 20");
    const std::uint64_t total = 1ULL << v;
    inputs.reserve(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      IndexSet p(v);
      for (std::uint32_t i = 0; i < v; ++i)
        if (mask & (1ULL << i)) p.set(i);
      inputs.push_back(std::move(p));
      subs.push_back(mask);
    }
  } else {
    if (min_size < 2 || max_size > v || min_size > max_size)
      throw PreconditionError("size range must satisfy 2 <= min <= max <= v");
    inputs.reserve(trials);
    for (std::uint32_t t = 0; t < trials; ++t) {
      const std::uint64_t sub = sub_seed(*opt.seed, t);
      SplitMix64 rng(sub);
      const auto size = static_cast<std::uint32_t>(
          min_size + rng.below(max_size - min_size + 1));
      IndexSet p(v);
      for (auto i : sample_without_replacement(rng, v, size)) p.set(i);
      inputs.push_back(std::move(p));
      subs.push_back(sub);
    }
  }

  const auto total = static_cast<std::uint32_t>(inputs.size());
  std::vector<SurveyRow> rows(total);
  const unsigned jobs = std::max(1u, opt.jobs);
  std::atomic<std::uint32_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::uint32_t i = next.fetch_add(1);
      if (i >= total) return;
      rows[i] = survey_trial(plane, i, inputs[i], subs[i]);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Case tally in a fixed order so output is byte-stable.
  const std::vector<std::string> case_order = {
      "quadratic-growth", "subplane", "subplane-minus-one",
      "fan",              "collinear", "theorem-violation"};
  std::vector<std::size_t> tally(case_order.size(), 0);
  std::size_t violations = 0;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < case_order.size(); ++i)
      if (row.case_name == case_order[i]) ++tally[i];
    if (!row.violation.empty()) ++violations;
  }

  std::ostringstream os;
  if (opt.format == "json") {
    json j;
    j["command"] = "survey";
    j["plane"] = plane_summary(plane);
    j["exhaustive"] = exhaustive;
    j["trials"] = total;
    j["seed"] = exhaustive ? json(nullptr) : json(*opt.seed);
    json rj = json::array();
    for (const auto& row : rows) {
      json r;
      r["trial"] = row.trial;
      r["seed"] = row.sub;
      r["q"] = plane.order_hint() ? json(*plane.order_hint()) : json(nullptr);
      r["p0"] = row.p[0];
      r["l0"] = row.l[0];
      r["p1"] = row.p[1];
      r["l1"] = row.l[1];
      r["p2"] = row.p[2];
      r["l2"] = row.l[2];
      r["p3"] = row.p[3];
      r["case"] = row.case_name;
      r["bound"] = quadratic_bound(row.p0);
      r["bound_met"] = row.bound_met;
      rj.push_back(r);
    }
    j["rows"] = rj;
    json summary;
    json cases;
    for (std::size_t i = 0; i < case_order.size(); ++i)
      cases[case_order[i]] = tally[i];
    summary["cases"] = cases;
    summary["violations"] = violations;
    j["summary"] = summary;
    os << j.dump(2) << "\n";
  } else {  // csv
    os << "trial,seed,q,p0,l0,p1,l1,p2,l2,p3,case,bound,bound_met\n";
    for (const auto& row : rows) {
      os << row.trial << "," << row.sub << ",";
      if (plane.order_hint()) os << *plane.order_hint();
      os << "," << row.p[0] << "," << row.l[0] << "," << row.p[1] << ","
         << row.l[1] << "," << row.p[2] << "," << row.l[2] << "," << row.p[3]
         << "," << row.case_name << "," << bound_string(row.p0) << ","
         << (row.bound_met ? "true" : "false") << "\n";
    }
    os << "# trials=" << total << " violations=" << violations << "\n# cases:";
    for (std::size_t i = 0; i < case_order.size(); ++i)
      os << " " << case_order[i] << "=" << tally[i];
    os << "\n";
  }
  write_output(os.str(), opt.out);

  if (violations) {
    for (const auto& row : rows)
      if (!row.violation.empty())
        std::cerr << "trial " << row.trial << ": " << row.violation << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

// ------------------------------------------------------------ desargues ---

json counterexample_json(const PerspectiveTrianglePair& cfg) {
  json c;
  c["alpha"] = cfg.alpha;
  c["ell"] = cfg.ell;
  c["vertex_lines"] = cfg.vertex_lines;
  c["triangle1"] = cfg.triangle1;
  c["triangle2"] = cfg.triangle2;
  c["side_meets"] = cfg.side_meets;
  c["on_ell"] = cfg.on_ell;
  return c;
}

int cmd_desargues(const CommonOptions& opt, std::optional<PointId> alpha,
                  std::optional<LineId> ell, const std::string& mode,
                  std::uint64_t samples) {
  const auto plane = load_ambient(opt);

  DesarguesOptions options;
  if (mode == "exhaustive" || (mode == "auto" && plane.v() <= 13)) {
    options.mode = DesarguesMode::Exhaustive;
  } else {
    options.mode = DesarguesMode::Sampled;
    if (!opt.seed)
      throw PreconditionError("sampled mode requires --seed (reproducibility)");
    options.seed = *opt.seed;
    options.samples = samples;
  }

  DesarguesReport report;
  if (alpha.has_value() != ell.has_value())
    throw PreconditionError("--alpha and --ell must be given together");
  const bool single = alpha.has_value();
  if (single)
    report = is_alpha_ell_desarguesian(plane, *alpha, *ell, options);
  else
    report = little_desargues_check(plane, options);

  if (opt.format == "json") {
    json j;
    j["command"] = "desargues";
    j["plane"] = plane_summary(plane);
    j["scope"] = single ? "flag" : "little";
    j["alpha"] = single ? json(*alpha) : json(nullptr);
    j["ell"] = single ? json(*ell) : json(nullptr);
    j["mode"] = options.mode == DesarguesMode::Exhaustive ? "exhaustive"
                                                          : "sampled";
    j["samples"] = options.mode == DesarguesMode::Sampled ? json(options.samples)
                                                          : json(nullptr);
    j["seed"] = options.mode == DesarguesMode::Sampled ? json(options.seed)
                                                       : json(nullptr);
    j["flags_checked"] = report.flags_checked;
    j["configurations_checked"] = report.configurations_checked;
    j["degenerate_skipped"] = report.degenerate_skipped;
    j["holds"] = report.holds;
    j["counterexample"] = report.counterexample
                              ? counterexample_json(*report.counterexample)
                              : json(nullptr);
    write_output(j.dump(2) + "\n", opt.out);
  } else {
    std::ostringstream os;
    os << (single ? "flag" : "little") << " Desargues: "
       << (report.holds ? "holds" : "counterexample found") << " ("
       << report.configurations_checked << " configurations, "
       << report.flags_checked << " flags)\n";
    if (report.counterexample) {
      const auto& c = *report.counterexample;
      os << "counterexample: alpha=" << c.alpha << " ell=" << c.ell
         << " t1=(" << c.triangle1[0] << "," << c.triangle1[1] << ","
         << c.triangle1[2] << ") t2=(" << c.triangle2[0] << ","
         << c.triangle2[1] << "," << c.triangle2[2] << ")\n";
    }
    write_output(os.str(), opt.out);
  }
  return report.holds ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------- ruzsa ---

const char* hypothesis_name(DesarguesStatus st) {
  switch (st) {
    case DesarguesStatus::Verified: return "verified";
    case DesarguesStatus::Coordinatized: return "coordinatized";
    case DesarguesStatus::Assumed: return "assumed";
  }
  return "?";
}

// A random valid configuration: alpha anywhere, ell avoiding alpha, three
// carriers through alpha, sets of the requested (or random) sizes.
RuzsaConfig random_ruzsa_config(const ProjectivePlane& plane, SplitMix64& rng,
                                const std::vector<std::uint32_t>& sizes) {
  const IncidenceSystem& s = plane.system();
  RuzsaConfig config;
  config.alpha = static_cast<PointId>(rng.below(plane.v()));
  const auto& through = s.lines_on_point(config.alpha);
  const std::size_t off_count = plane.b() - through.size();
  std::uint64_t pick = rng.below(off_count);
  for (LineId l = 0; l < plane.b(); ++l) {
    if (s.incident(config.alpha, l)) continue;
    if (pick == 0) {
      config.ell = l;
      break;
    }
    --pick;
  }
  const auto carrier_idx = sample_without_replacement(
      rng, static_cast<std::uint32_t>(through.size()), 3);
  for (int i = 0; i < 3; ++i) config.lines[i] = through[carrier_idx[i]];

  std::array<std::vector<PointId>*, 3> sets = {&config.a, &config.b,
                                               &config.c};
  for (int i = 0; i < 3; ++i) {
    std::vector<PointId> eligible;
    for (PointId p : s.points_on_line(config.lines[i]))
      if (p != config.alpha && !s.incident(p, config.ell))
        eligible.push_back(p);
    if (eligible.empty())
      throw PreconditionError("carrier line has no usable points");
    std::uint32_t size;
    if (!sizes.empty())
      size = std::min<std::uint32_t>(sizes[i],
                                     static_cast<std::uint32_t>(eligible.size()));
    else
      size = static_cast<std::uint32_t>(1 + rng.below(eligible.size()));
    const auto idx = sample_without_replacement(
        rng, static_cast<std::uint32_t>(eligible.size()), size);
    for (auto k : idx) sets[i]->push_back(eligible[k]);
  }
  return config;
}

json ruzsa_row_json(std::uint32_t trial, const RuzsaConfig& config,
                    const RuzsaReport& report) {
  json r;
  r["trial"] = trial;
  r["alpha"] = config.alpha;
  r["ell"] = config.ell;
  r["lines"] = config.lines;
  r["sizes"] = json::array(
      {config.a.size(), config.b.size(), config.c.size()});
  r["ac"] = report.size_ac;
  r["ab"] = report.size_ab;
  r["bc"] = report.size_bc;
  r["b"] = report.size_b;
  r["inequality_holds"] = report.inequality_holds;
  r["iota_injective"] = report.iota_injective;
  r["determination_holds"] = report.determination_holds;
  r["selector"] = report.selector == SelectorChoice::FirstFound
                      ? "first-found"
                      : "last-found";
  r["hypothesis"] = hypothesis_name(report.hypothesis);
  return r;
}

int cmd_ruzsa_geometric(const CommonOptions& opt, std::uint32_t trials,
                        const std::vector<std::uint32_t>& sizes,
                        bool assume_desargues) {
  const auto plane = load_ambient(opt);
  if (!sizes.empty() && sizes.size() != 3)
    throw PreconditionError("--sizes needs exactly three values");

  DesarguesStatus hypothesis = DesarguesStatus::Assumed;
  if (plane.coordinatized()) hypothesis = DesarguesStatus::Coordinatized;

  json rows = json::array();
  std::size_t ok_inequality = 0, ok_injective = 0, ok_determination = 0;
  std::ostringstream text;
  for (std::uint32_t t = 0; t < trials; ++t) {
    SplitMix64 rng(sub_seed(*opt.seed, t));
    RuzsaConfig config = random_ruzsa_config(plane, rng, sizes);
    config.hypothesis = hypothesis;
    if (!plane.coordinatized() && !assume_desargues) {
      // The hypothesis must be established before the inequality means
      // anything on an unknown plane.
      DesarguesOptions check;
      if (plane.v() <= 13) {
        check.mode = DesarguesMode::Exhaustive;
      } else {
        check.mode = DesarguesMode::Sampled;
        check.samples = 2000;
        check.seed = sub_seed(*opt.seed, t) ^ 0x5eedULL;
      }
      const auto d =
          is_alpha_ell_desarguesian(plane, config.alpha, config.ell, check);
      if (!d.holds) {
        std::cerr << "trial " << t << ": plane is not (alpha,ell)-Desarguesian"
                  << " at alpha=" << config.alpha << " ell=" << config.ell
                  << "; rerun with --assume-desargues to proceed anyway\n";
        return kExitCheckFailed;
      }
      config.hypothesis = DesarguesStatus::Verified;
    }
    const RuzsaReport report = ruzsa_verify(plane, config);
    ok_inequality += report.inequality_holds;
    ok_injective += report.iota_injective;
    ok_determination += report.determination_holds;
    rows.push_back(ruzsa_row_json(t, config, report));
    text << "trial " << t << ": |[A,C]|=" << report.size_ac
         << " |[A,B]|=" << report.size_ab << " |[B,C]|=" << report.size_bc
         << " |B|=" << report.size_b
         << " inequality=" << (report.inequality_holds ? "holds" : "FAILS")
         << " iota=" << (report.iota_injective ? "injective" : "COLLIDES")
         << "\n";
  }

  if (opt.format == "json") {
    json j;
    j["command"] = "ruzsa";
    j["mode"] = "geometric";
    j["plane"] = plane_summary(plane);
    j["trials"] = trials;
    j["seed"] = *opt.seed;
    j["rows"] = rows;
    json agg;
    agg["trials"] = trials;
    agg["inequality_holds"] = ok_inequality;
    agg["iota_injective"] = ok_injective;
    agg["determination_holds"] = ok_determination;
    j["aggregate"] = agg;
    write_output(j.dump(2) + "\n", opt.out);
  } else {
    text << "aggregate: " << ok_inequality << "/" << trials
         << " inequality, " << ok_injective << "/" << trials
         << " injective\n";
    write_output(text.str(), opt.out);
  }
  return kExitOk;
}

int cmd_ruzsa_abelian(const CommonOptions& opt, std::uint32_t group_order,
                      std::uint32_t trials,
                      const std::vector<std::uint32_t>& sizes) {
  if (!sizes.empty() && sizes.size() != 3)
    throw PreconditionError("--sizes needs exactly three values");
  json rows = json::array();
  std::size_t ok_inequality = 0, ok_injective = 0;
  std::ostringstream text;
  for (std::uint32_t t = 0; t < trials; ++t) {
    SplitMix64 rng(sub_seed(*opt.seed, t));
    auto draw = [&](int i) {
      std::uint32_t size =
          sizes.empty()
              ? static_cast<std::uint32_t>(1 + rng.below(group_order))
              : std::min(sizes[i], group_order);
      return sample_without_replacement(rng, group_order, size);
    };
    const auto a = draw(0), b = draw(1), c = draw(2);
    const auto report = abelian_ruzsa_check(group_order, a, b, c);
    ok_inequality += report.inequality_holds;
    ok_injective += report.iota_injective;
    json r;
    r["trial"] = t;
    r["sizes"] = json::array({a.size(), b.size(), c.size()});
    r["ac"] = report.size_ac;
    r["ab"] = report.size_ab;
    r["bc"] = report.size_bc;
    r["b"] = report.size_b;
    r["inequality_holds"] = report.inequality_holds;
    r["iota_injective"] = report.iota_injective;
    rows.push_back(r);
    text << "trial " << t << ": |A-C|=" << report.size_ac
         << " |A-B|=" << report.size_ab << " |B-C|=" << report.size_bc
         << " |B|=" << report.size_b
         << " inequality=" << (report.inequality_holds ? "holds" : "FAILS")
         << "\n";
  }
  if (opt.format == "json") {
    json j;
    j["command"] = "ruzsa";
    j["mode"] = "abelian";
    j["group_order"] = group_order;
    j["trials"] = trials;
    j["seed"] = *opt.seed;
    j["rows"] = rows;
    json agg;
    agg["trials"] = trials;
    agg["inequality_holds"] = ok_inequality;
    agg["iota_injective"] = ok_injective;
    j["aggregate"] = agg;
    write_output(j.dump(2) + "\n", opt.out);
  } else {
    text << "aggregate: " << ok_inequality << "/" << trials << " inequality\n";
    write_output(text.str(), opt.out);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite projective plane growth workbench"};
  app.require_subcommand(1);

  CommonOptions opt;
  opt.jobs = default_jobs();

  // Global flags; subcommands see them through fallthrough.
  app.add_option("--format", opt.format, "output format (json|csv|text)");
  app.add_option("--seed", opt.seed, "seed for randomized commands");
  app.add_option("--jobs", opt.jobs, "worker threads for surveys");
  app.add_option("--out", opt.out, "write output to this file");
  app.fallthrough();

  // plane gen | plane check
  auto* plane_cmd = app.add_subcommand("plane", "generate or validate planes");
  plane_cmd->require_subcommand(1);
  plane_cmd->fallthrough();
  auto* gen = plane_cmd->add_subcommand("gen", "write PG(2,q) as a plane file");
  gen->fallthrough();
  gen->add_option("--order", opt.order, "prime power order q")->required();
  std::string check_path;
  bool check_raw = false;
  auto* check = plane_cmd->add_subcommand("check", "verify axioms of a plane file");
  check->fallthrough();
  check->add_option("file", check_path, "plane file")->required();
  check->add_flag("--raw", check_raw, "admit short and duplicate lines");

  // grow
  auto* grow = app.add_subcommand("grow", "run the growth iteration");
  grow->fallthrough();
  std::vector<std::uint32_t> grow_points;
  std::size_t grow_steps = 3;
  grow->add_option("--order", opt.order, "ambient plane PG(2,q)");
  grow->add_option("--plane", opt.plane_path, "ambient plane file");
  grow->add_option("--points", grow_points, "comma-separated point ids")
      ->required()
      ->delimiter(',');
  grow->add_option("--steps", grow_steps, "iteration rounds (>= 1)");

  // classify
  auto* classify = app.add_subcommand("classify", "classify a point set");
  classify->fallthrough();
  std::vector<std::uint32_t> classify_points;
  classify->add_option("--order", opt.order, "ambient plane PG(2,q)");
  classify->add_option("--plane", opt.plane_path, "ambient plane file");
  classify->add_option("--points", classify_points, "comma-separated point ids")
      ->required()
      ->delimiter(',');

  // survey
  auto* survey = app.add_subcommand("survey", "random point-set survey");
  survey->fallthrough();
  std::uint32_t survey_trials = 0;
  std::uint32_t survey_min = 2, survey_max = 20;
  bool survey_exhaustive = false;
  survey->add_option("--order", opt.order, "ambient plane PG(2,q)");
  survey->add_option("--plane", opt.plane_path, "ambient plane file");
  survey->add_option("--trials", survey_trials, "number of trials");
  survey->add_option("--min-size", survey_min, "smallest sample size");
  survey->add_option("--max-size", survey_max, "largest sample size");
  survey->add_flag("--exhaustive", survey_exhaustive,
                   "enumerate every subset instead of sampling");

  // desargues
  auto* desargues = app.add_subcommand("desargues", "Desargues configuration checks");
  desargues->fallthrough();
  std::optional<PointId> des_alpha;
  std::optional<LineId> des_ell;
  std::string des_mode = "auto";
  std::uint64_t des_samples = 10000;
  desargues->add_option("--order", opt.order, "ambient plane PG(2,q)");
  desargues->add_option("--plane", opt.plane_path, "ambient plane file");
  desargues->add_option("--alpha", des_alpha, "perspective center (point id)");
  desargues->add_option("--ell", des_ell, "axis (line id)");
  desargues->add_option("--mode", des_mode, "auto|exhaustive|sampled")
      ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}));
  desargues->add_option("--samples", des_samples, "sampled-mode budget");

  // ruzsa
  auto* ruzsa = app.add_subcommand("ruzsa", "bracket-set triangle inequality");
  ruzsa->fallthrough();
  std::uint32_t ruzsa_trials = 0;
  std::vector<std::uint32_t> ruzsa_sizes;
  std::optional<std::uint32_t> ruzsa_abelian;
  bool ruzsa_assume = false;
  ruzsa->add_option("--order", opt.order, "ambient plane PG(2,q)");
  ruzsa->add_option("--plane", opt.plane_path, "ambient plane file");
  ruzsa->add_option("--trials", ruzsa_trials, "number of random configurations");
  ruzsa->add_option("--sizes", ruzsa_sizes, "sizes |A|,|B|,|C|")->delimiter(',');
  ruzsa->add_option("--abelian", ruzsa_abelian,
                    "check the Z/nZ difference-set inequality instead");
  ruzsa->add_flag("--assume-desargues", ruzsa_assume,
                  "skip the Desargues hypothesis check on file planes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    const bool needs_plane = grow->parsed() || classify->parsed() ||
                             survey->parsed() || desargues->parsed() ||
                             (ruzsa->parsed() && !ruzsa_abelian);
    if (needs_plane && opt.order.has_value() == !opt.plane_path.empty())
      throw PreconditionError("exactly one of --order and --plane is required");

    if (gen->parsed()) {
      if (!opt.order) throw PreconditionError("--order is required");
      return cmd_plane_gen(opt);
    }
    if (check->parsed()) {
      if (opt.format.empty()) opt.format = "json";
      return cmd_plane_check(opt, check_path, check_raw);
    }
    if (grow->parsed()) {
      if (opt.format.empty()) opt.format = "json";
      if (grow_steps < 1) throw PreconditionError("--steps must be >= 1");
      return cmd_grow(opt, grow_points, grow_steps);
    }
    if (classify->parsed()) {
      if (opt.format.empty()) opt.format = "json";
      return cmd_classify(opt, classify_points);
    }
    if (survey->parsed()) {
      if (opt.format.empty()) opt.format = "csv";
      if (!survey_exhaustive) {
        if (survey_trials < 1) throw PreconditionError("--trials must be >= 1");
        if (!opt.seed)
          throw PreconditionError("--seed is required (reproducibility)");
      }
      return cmd_survey(opt, survey_trials, survey_min, survey_max,
                        survey->count("--max-size") > 0, survey_exhaustive);
    }
    if (desargues->parsed()) {
      if (opt.format.empty()) opt.format = "json";
      return cmd_desargues(opt, des_alpha, des_ell, des_mode, des_samples);
    }
    if (ruzsa->parsed()) {
      if (opt.format.empty()) opt.format = "json";
      if (ruzsa_trials < 1) throw PreconditionError("--trials must be >= 1");
      if (!opt.seed)
        throw PreconditionError("--seed is required (reproducibility)");
      if (ruzsa_abelian)
        return cmd_ruzsa_abelian(opt, *ruzsa_abelian, ruzsa_trials,
                                 ruzsa_sizes);
      return cmd_ruzsa_geometric(opt, ruzsa_trials, ruzsa_sizes, ruzsa_assume);
    }
  } catch (const TheoremViolationError& e) {
    std::cerr << "theorem violation: " << e.what() << "\n" << e.trace_dump()
              << "\n";
    return kExitViolation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
