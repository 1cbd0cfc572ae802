#ifndef PGROWTH_PLANE_HPP
#define PGROWTH_PLANE_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pgrowth/gf.hpp"
#include "pgrowth/incidence.hpp"

namespace pgrowth {

/// A projective point or line over GF(q), normalized so that the first
/// (lowest-index) nonzero coordinate is 1. Exactly one triple represents
/// each 1-dimensional subspace.
struct HomogeneousTriple {
  std::array<FieldElement, 3> x{};

  friend bool operator==(const HomogeneousTriple&,
                         const HomogeneousTriple&) = default;
  friend auto operator<=>(const HomogeneousTriple&,
                          const HomogeneousTriple&) = default;
};

/// A verified projective plane: an IncidenceSystem whose axioms P1-P3 have
/// been checked, optionally carrying GF(q) coordinates for every point and
/// line. When coordinatized, point x lies on line a iff
/// x0*a0 + x1*a1 + x2*a2 = 0.
class ProjectivePlane {
 public:
  /// Wraps an arbitrary system, verifying P1-P3. Throws PreconditionError
  /// (with the failing axiom in the message) when the system is not a plane.
  static ProjectivePlane from_system(IncidenceSystem system);

  const IncidenceSystem& system() const { return system_; }
  std::uint32_t v() const { return system_.v(); }
  std::uint32_t b() const { return system_.b(); }

  bool coordinatized() const { return field_.has_value(); }
  std::optional<std::uint32_t> order_hint() const { return order_; }

  const Field& field() const { return *field_; }
  const HomogeneousTriple& point_coords(PointId p) const {
    return point_coords_[p];
  }
  const HomogeneousTriple& line_coords(LineId l) const {
    return line_coords_[l];
  }

  /// Id of the point/line with the given (normalized or not) coordinates.
  PointId point_id(const HomogeneousTriple& t) const;
  LineId line_id(const HomogeneousTriple& t) const;

  /// Unique line through two distinct points / point on two distinct lines.
  /// Uses the cross-product shortcut when coordinatized, the incidence scan
  /// otherwise; both return the same id.
  LineId join(PointId p1, PointId p2) const;
  PointId meet(LineId l1, LineId l2) const;

  HomogeneousTriple normalize(const HomogeneousTriple& t) const;
  HomogeneousTriple cross(const HomogeneousTriple& a,
                          const HomogeneousTriple& b) const;

 private:
  ProjectivePlane() = default;
  friend ProjectivePlane build_pg2(std::uint32_t q);

  IncidenceSystem system_;
  std::optional<std::uint32_t> order_;
  std::optional<Field> field_;
  std::vector<HomogeneousTriple> point_coords_;  // sorted ascending
  std::vector<HomogeneousTriple> line_coords_;   // sorted ascending
};

/// The Desarguesian plane of order q: points are the 1-dimensional and
/// lines the 2-dimensional subspaces of GF(q)^3. v = b = q^2+q+1, every
/// line has q+1 points and every point lies on q+1 lines. Ids are assigned
/// by sorting the normalized triples lexicographically by coefficient
/// sequence, so they are stable across runs.
ProjectivePlane build_pg2(std::uint32_t q);

/// Plane file format (text, UTF-8, LF):
///   line 1:      `plane v b`
///   lines 2..b+1: ascending space-separated 0-based point indices
/// `#` starts a comment line; blank lines are ignored. Loaders reject
/// unsorted or repeated indices within a line.
void save_plane(const IncidenceSystem& s, std::ostream& out,
                const std::string& comment = "");
void save_plane_file(const IncidenceSystem& s, const std::string& path,
                     const std::string& comment = "");

/// Throws ParseError (with line/column), IndexOutOfRangeError or
/// DuplicateLineError. With raw=true, short and duplicate lines are
/// accepted (exotic externally supplied inputs).
IncidenceSystem load_plane(std::istream& in, bool raw = false);
IncidenceSystem load_plane_file(const std::string& path, bool raw = false);

}  // namespace pgrowth

#endif  // PGROWTH_PLANE_HPP
