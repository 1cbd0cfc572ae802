#ifndef PGROWTH_CONFIGS_HPP
#define PGROWTH_CONFIGS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pgrowth/incidence.hpp"
#include "pgrowth/plane.hpp"

namespace pgrowth {

/// Two triangles in perspective from `alpha`: corresponding vertices are
/// joined by lines through alpha (the three distinct `vertex_lines`), all six
/// vertices are off `ell` and distinct from alpha, and both triples are
/// genuine triangles. `side_meets[i]` is the intersection of the i-th pair of
/// corresponding sides (0: ab, 1: ac, 2: bc) and `on_ell[i]` whether it lies
/// on ell.
struct PerspectiveTrianglePair {
  PointId alpha = 0;
  LineId ell = 0;
  std::array<LineId, 3> vertex_lines{};
  std::array<PointId, 3> triangle1{};
  std::array<PointId, 3> triangle2{};
  std::array<PointId, 3> side_meets{};
  std::array<bool, 3> on_ell{};
};

enum class DesarguesMode { Exhaustive, Sampled };

struct DesarguesOptions {
  DesarguesMode mode = DesarguesMode::Exhaustive;
  std::uint64_t samples = 10000;  // Sampled only
  std::uint64_t seed = 0;         // Sampled only
};

struct DesarguesReport {
  bool holds = true;
  std::uint64_t flags_checked = 0;
  std::uint64_t configurations_checked = 0;
  std::uint64_t degenerate_skipped = 0;
  std::optional<PerspectiveTrianglePair> counterexample;
};

/// How the Desargues hypothesis of a Ruzsa run was established.
enum class DesarguesStatus { Verified, Coordinatized, Assumed };

enum class SelectorChoice { FirstFound, LastFound };

/// A validated Ruzsa configuration: alpha off ell, three distinct lines
/// through alpha (all different from ell), and point sets supported on them,
/// disjoint from alpha and from ell.
struct RuzsaConfig {
  PointId alpha = 0;
  LineId ell = 0;
  std::array<LineId, 3> lines{};     // l_A, l_B, l_C
  std::vector<PointId> a, b, c;
  SelectorChoice selector = SelectorChoice::FirstFound;
  DesarguesStatus hypothesis = DesarguesStatus::Assumed;
};

struct RuzsaReport {
  std::size_t size_ac = 0;  // |[A,C]|
  std::size_t size_ab = 0;  // |[A,B]|
  std::size_t size_bc = 0;  // |[B,C]|
  std::size_t size_b = 0;   // |B|
  bool inequality_holds = false;   // |[A,C]|*|B| <= |[A,B]|*|[B,C]|
  bool iota_injective = false;
  bool determination_holds = false;  // ([a,b],[b,c]) determines [a,c]
  SelectorChoice selector = SelectorChoice::FirstFound;
  DesarguesStatus hypothesis = DesarguesStatus::Assumed;
};

struct AbelianRuzsaReport {
  std::size_t size_ac = 0;  // |A-C|
  std::size_t size_ab = 0;  // |A-B|
  std::size_t size_bc = 0;  // |B-C|
  std::size_t size_b = 0;
  bool inequality_holds = false;
  bool iota_injective = false;
};

/// [x,y]: the intersection of ell with the line through x and y. Defined for
/// x != y with not both on ell; when x lies on ell (and y does not), the
/// bracket is x itself. Throws UndefinedBracketError otherwise.
PointId bracket(const ProjectivePlane& plane, PointId x, PointId y, LineId ell);

/// { [x,y] : x in X, y in Y }, deduplicated. X and Y must be disjoint (the
/// identical set X == Y is also accepted, skipping the diagonal) and at
/// least one of them disjoint from ell.
IndexSet bracket_set(const ProjectivePlane& plane, const IndexSet& xs,
                     const IndexSet& ys, LineId ell);

/// Checks whether the plane is (alpha, ell)-Desarguesian: for every pair of
/// triangles in perspective from alpha with two pairs of corresponding sides
/// meeting on ell, the third pair meets on ell too. Exhaustive mode
/// enumerates every configuration; Sampled draws `samples` configurations
/// from the seeded generator. The first violation (in enumeration/sample
/// order) is returned.
DesarguesReport is_alpha_ell_desarguesian(const ProjectivePlane& plane,
                                          PointId alpha, LineId ell,
                                          const DesarguesOptions& options);

/// The conjunction of is_alpha_ell_desarguesian over all incident
/// (alpha, ell) pairs. In Sampled mode the sample budget covers flags and
/// configurations jointly.
DesarguesReport little_desargues_check(const ProjectivePlane& plane,
                                       const DesarguesOptions& options);

/// Validates the configuration (throws PreconditionError on any membership
/// or disjointness failure, including alpha on ell), computes the three
/// bracket sets, builds the selectors f_A, f_C and the map
/// iota(p, b) = ([f_A(p), b], [b, f_C(p)]), and tests injectivity by direct
/// collision scan. The size inequality is compared in exact integer
/// arithmetic. Also verifies the determination property ([a,b],[b,c])
/// determines [a,c] by exhaustively grouping triples.
RuzsaReport ruzsa_verify(const ProjectivePlane& plane,
                         const RuzsaConfig& config);

/// Arithmetic shadow in Z/nZ: difference sets, the inequality
/// |A-C|*|B| <= |A-B|*|B-C|, and the explicit injection with first-found
/// selectors. Used to cross-validate the geometric version under
/// coordinatization.
AbelianRuzsaReport abelian_ruzsa_check(std::uint32_t n,
                                       const std::vector<std::uint32_t>& a,
                                       const std::vector<std::uint32_t>& b,
                                       const std::vector<std::uint32_t>& c);

}  // namespace pgrowth

#endif  // PGROWTH_CONFIGS_HPP
