#pragma once

// Polypeptide backbones embedded on the diamond lattice.
//
// Coordinates are kept in "lattice units": the diamond lattice is the set of
// integer points p with p = n1 (0,2,2) + n2 (2,0,2) + n3 (2,2,0) (sublattice
// A) or that plus (1,1,1) (sublattice B). Bonds from an A site are the four
// vectors (+-1,+-1,+-1) with an even number of minus signs, negated for B,
// so a bond has length sqrt(3).
//
// A chain grows two backbone bonds per peptide unit. Each new bond is fixed by
// its torsion about the bond before it: staggered torsions {-60, 60, 180}
// select one of the three non-backtracking lattice continuations. A cis unit
// swaps the first of its two bonds to the eclipsed set {120, -120, 0} (the
// local fcc/hexagonal switch), which leaves the original lattice, so sites are
// stored as real 3-vectors.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lifecode/errors.hpp"

namespace lifecode::lattice {

using Int3 = std::array<int, 3>;

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) { return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x}; }
double norm(Vec3 a);

/// Signed torsion of p0-p1-p2-p3 in degrees, in (-180, 180].
double dihedral_deg(Vec3 p0, Vec3 p1, Vec3 p2, Vec3 p3);
/// Angle p0-p1-p2 at p1, in degrees.
double bond_angle_deg(Vec3 p0, Vec3 p1, Vec3 p2);

enum class Sublattice { A, B };

struct DiamondSite {
  Int3 cell{0, 0, 0};  // coordinates in the primitive fcc basis
  Sublattice sublattice = Sublattice::A;

  Int3 position() const;
  static std::optional<DiamondSite> from_position(const Int3& p);

  friend bool operator==(const DiamondSite&, const DiamondSite&) = default;
};

/// Bond vectors leaving an A site.
const std::array<Int3, 4>& tetrahedral_bonds();

std::array<DiamondSite, 4> neighbours(const DiamondSite& site);

enum class Omega : std::uint8_t { Trans = 0, Cis = 1 };

/// Staggered torsion values selected by phi_index / psi_index.
inline constexpr std::array<double, 3> kStarAnglesDeg{-60.0, 60.0, 180.0};

struct TorsionChoice {
  std::uint8_t phi_index = 0;  // 0..2 into kStarAnglesDeg
  std::uint8_t psi_index = 0;
  Omega omega = Omega::Trans;

  double phi_deg() const { return kStarAnglesDeg[phi_index]; }
  double psi_deg() const { return kStarAnglesDeg[psi_index]; }
  /// Torsion actually realised by the unit's first bond (cis adds 180).
  double realised_phi_deg() const;

  std::string to_string() const;

  // Enumeration order: phi, then psi, then trans before cis.
  friend auto operator<=>(const TorsionChoice&, const TorsionChoice&) = default;
};

struct ChainConformation {
  std::vector<TorsionChoice> choices;  // one per unit after the seed unit
  std::vector<Vec3> sites;             // backbone positions in lattice units

  bool empty() const noexcept { return sites.empty(); }
  std::size_t length_units() const noexcept { return sites.empty() ? 0 : 1 + choices.size(); }

  /// Lattice sites when every position lies on the diamond lattice (always
  /// true for all-trans chains).
  std::optional<std::vector<DiamondSite>> lattice_sites() const;

  friend bool operator==(const ChainConformation&, const ChainConformation&) = default;
};

class CollisionError : public ConstraintError {
 public:
  CollisionError(Vec3 site, std::size_t occupied_by);

  Vec3 site() const noexcept { return site_; }
  std::size_t occupied_by() const noexcept { return occupied_by_; }

 private:
  Vec3 site_;
  std::size_t occupied_by_;
};

/// The fixed seed unit: sites 0, (1,1,1), (0,2,2).
ChainConformation seed_conformation();

/// Appends one peptide unit. An empty chain becomes the seed and `choice` is
/// ignored. Throws CollisionError when either new site is already occupied.
ChainConformation extend_chain(const ChainConformation& conf, TorsionChoice choice);

struct EnumerationOptions {
  std::size_t n_units = 1;
  bool allow_cis = false;
  std::size_t cap = 12;  // desk-scale guard
  int threads = 1;
};

using ConformationVisitor = std::function<void(const ChainConformation&)>;

/// Depth-first enumeration of self-avoiding conformations with the seed fixed.
/// Visits conformations in lexicographic choice order and returns their
/// count. With threads > 1 the subtrees below the first two choices run in
/// parallel; the count and visiting order match the single-threaded run.
/// Throws ResourceError when n_units exceeds the cap.
std::uint64_t enumerate_conformations(const EnumerationOptions& options, const ConformationVisitor& visit = {});

/// Cartesian coordinates with the seed at the origin and every bond scaled
/// to `bond_length`.
std::vector<Vec3> conformation_to_coordinates(const ChainConformation& conf, double bond_length);

struct RamachandranPoint {
  double phi_deg = 0.0;
  double psi_deg = 0.0;
};

struct AngleAssignment {
  TorsionChoice star;   // omega is always Trans
  double distance_deg;  // max of the two circular distances, <= 60
};

/// Wraps an angle into (-180, 180].
double normalize_angle_deg(double deg);
/// Shortest distance between two angles on the circle, in [0, 180].
double circular_distance_deg(double a, double b);

/// Nearest of the nine star points under the max-of-circular-distances
/// metric. Ties go to the lexicographically smallest (phi_index, psi_index).
AngleAssignment discretize_angles(RamachandranPoint point);

std::vector<AngleAssignment> discretize_batch(std::span<const RamachandranPoint> points);

namespace serial {

std::uint64_t enumerate_conformations(const EnumerationOptions& options, const ConformationVisitor& visit = {});
std::vector<AngleAssignment> discretize_batch(std::span<const RamachandranPoint> points);

}  // namespace serial

}  // namespace lifecode::lattice
