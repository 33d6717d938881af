#include "lifecode/lattice_folding.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace lifecode::lattice {

namespace {

// Squared separation (lattice units) below which two sites coincide. Distinct
// diamond sites are at least sqrt(3) apart.
constexpr double kCoincidenceTol2 = 1e-12;

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

// Rotations of the previous bond u about the current bond b. For bonds of a
// tetrahedral chain u.b = 1 and |b|^2 = 3, which gives exact rational forms;
// the staggered ones map integer lattice bonds to integer lattice bonds.
enum class Turn { Zero, Plus60, Minus60, Plus120, Minus120, Half };

Vec3 rotate_previous_bond(Vec3 u, Vec3 b, Turn turn) {
  switch (turn) {
    case Turn::Zero:
      return u;
    case Turn::Plus120:
      return 0.5 * (b - u + cross(b, u));
    case Turn::Minus120:
      return 0.5 * (b - u - cross(b, u));
    case Turn::Half:
      return (2.0 / 3.0) * b - u;
    case Turn::Plus60:
      return (1.0 / 6.0) * (b + 3.0 * u + 3.0 * cross(b, u));
    case Turn::Minus60:
      return (1.0 / 6.0) * (b + 3.0 * u - 3.0 * cross(b, u));
  }
  return u;
}

// Torsion delta corresponds to a rotation of u by delta + 180 degrees.
Turn staggered_turn(std::uint8_t index) {
  switch (index) {
    case 0: return Turn::Plus120;   // -60
    case 1: return Turn::Minus120;  // +60
    default: return Turn::Zero;     // 180
  }
}

Turn eclipsed_turn(std::uint8_t index) {
  switch (index) {
    case 0: return Turn::Minus60;  // 120
    case 1: return Turn::Plus60;   // -120
    default: return Turn::Half;    // 0
  }
}

Vec3 to_vec(const Int3& p) { return {double(p[0]), double(p[1]), double(p[2])}; }

bool occupied(std::span<const Vec3> sites, Vec3 p, std::size_t* where = nullptr) {
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const Vec3 d = sites[i] - p;
    if (dot(d, d) < kCoincidenceTol2) {
      if (where) *where = i;
      return true;
    }
  }
  return false;
}

std::vector<TorsionChoice> unit_choices(bool allow_cis) {
  std::vector<TorsionChoice> out;
  for (std::uint8_t phi = 0; phi < 3; ++phi) {
    for (std::uint8_t psi = 0; psi < 3; ++psi) {
      out.push_back({phi, psi, Omega::Trans});
      if (allow_cis) out.push_back({phi, psi, Omega::Cis});
    }
  }
  return out;
}

class Walker {
 public:
  Walker(const EnumerationOptions& options, std::vector<Vec3> sites, std::vector<TorsionChoice> choices)
      : sites_(std::move(sites)), choices_(std::move(choices)), menu_(unit_choices(options.allow_cis)) {
    sites_.reserve(2 * options.n_units + 1);
    choices_.reserve(options.n_units);
  }

  // Leaves are reported to `leaf` once `target_units` units are placed.
  template <typename Leaf>
  void run(std::size_t target_units, Leaf&& leaf) {
    if (1 + choices_.size() == target_units) {
      leaf(sites_, choices_);
      return;
    }
    const std::size_t m = sites_.size();
    const Vec3 u = sites_[m - 2] - sites_[m - 3];
    const Vec3 b = sites_[m - 1] - sites_[m - 2];
    for (const TorsionChoice& c : menu_) {
      const Turn first = c.omega == Omega::Cis ? eclipsed_turn(c.phi_index) : staggered_turn(c.phi_index);
      const Vec3 w1 = rotate_previous_bond(u, b, first);
      const Vec3 p1 = sites_.back() + w1;
      if (occupied(sites_, p1)) continue;
      const Vec3 p2 = p1 + rotate_previous_bond(b, w1, staggered_turn(c.psi_index));
      if (occupied(sites_, p2)) continue;
      sites_.push_back(p1);
      sites_.push_back(p2);
      choices_.push_back(c);
      run(target_units, leaf);
      choices_.pop_back();
      sites_.pop_back();
      sites_.pop_back();
    }
  }

 private:
  std::vector<Vec3> sites_;
  std::vector<TorsionChoice> choices_;
  std::vector<TorsionChoice> menu_;
};

void check_options(const EnumerationOptions& options) {
  if (options.n_units == 0) throw InputError("a chain needs at least one unit");
  if (options.n_units > options.cap) {
    throw ResourceError("requested " + std::to_string(options.n_units) + " units exceeds the enumeration cap of " +
                        std::to_string(options.cap));
  }
}

std::string format_site(Vec3 p) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%g, %g, %g)", p.x, p.y, p.z);
  return buf;
}

}  // namespace

double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

double dihedral_deg(Vec3 p0, Vec3 p1, Vec3 p2, Vec3 p3) {
  const Vec3 b1 = p1 - p0, b2 = p2 - p1, b3 = p3 - p2;
  const Vec3 n1 = cross(b1, b2), n2 = cross(b2, b3);
  const double y = norm(b2) * dot(b1, n2);
  const double x = dot(n1, n2);
  double deg = std::atan2(y, x) * kRadToDeg;
  if (deg <= -180.0) deg += 360.0;
  return deg;
}

double bond_angle_deg(Vec3 p0, Vec3 p1, Vec3 p2) {
  const Vec3 a = p0 - p1, c = p2 - p1;
  const double cosine = std::clamp(dot(a, c) / (norm(a) * norm(c)), -1.0, 1.0);
  return std::acos(cosine) * kRadToDeg;
}

const std::array<Int3, 4>& tetrahedral_bonds() {
  static const std::array<Int3, 4> bonds{{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}};
  return bonds;
}

Int3 DiamondSite::position() const {
  const int shift = sublattice == Sublattice::B ? 1 : 0;
  return {2 * (cell[1] + cell[2]) + shift, 2 * (cell[0] + cell[2]) + shift, 2 * (cell[0] + cell[1]) + shift};
}

std::optional<DiamondSite> DiamondSite::from_position(const Int3& p) {
  for (Sublattice s : {Sublattice::A, Sublattice::B}) {
    const int shift = s == Sublattice::B ? 1 : 0;
    const int x = p[0] - shift, y = p[1] - shift, z = p[2] - shift;
    const int n1 = y + z - x, n2 = x + z - y, n3 = x + y - z;
    if (n1 % 4 == 0 && n2 % 4 == 0 && n3 % 4 == 0) return DiamondSite{{n1 / 4, n2 / 4, n3 / 4}, s};
  }
  return std::nullopt;
}

std::array<DiamondSite, 4> neighbours(const DiamondSite& site) {
  const Int3 p = site.position();
  const int sign = site.sublattice == Sublattice::A ? 1 : -1;
  std::array<DiamondSite, 4> out;
  for (std::size_t k = 0; k < 4; ++k) {
    const Int3& v = tetrahedral_bonds()[k];
    const Int3 q{p[0] + sign * v[0], p[1] + sign * v[1], p[2] + sign * v[2]};
    out[k] = *DiamondSite::from_position(q);
  }
  return out;
}

double TorsionChoice::realised_phi_deg() const {
  return omega == Omega::Cis ? normalize_angle_deg(phi_deg() + 180.0) : phi_deg();
}

std::string TorsionChoice::to_string() const {
  std::string s = std::to_string(phi_index) + std::to_string(psi_index);
  if (omega == Omega::Cis) s += 'c';
  return s;
}

std::optional<std::vector<DiamondSite>> ChainConformation::lattice_sites() const {
  std::vector<DiamondSite> out;
  out.reserve(sites.size());
  for (const Vec3& p : sites) {
    Int3 q;
    const double c[3] = {p.x, p.y, p.z};
    for (int k = 0; k < 3; ++k) {
      const double r = std::round(c[k]);
      if (std::abs(c[k] - r) > 1e-9) return std::nullopt;
      q[static_cast<std::size_t>(k)] = static_cast<int>(r);
    }
    auto site = DiamondSite::from_position(q);
    if (!site) return std::nullopt;
    out.push_back(*site);
  }
  return out;
}

CollisionError::CollisionError(Vec3 site, std::size_t occupied_by)
    : ConstraintError("self-intersection at " + format_site(site) + ", already occupied by site " +
                      std::to_string(occupied_by)),
      site_(site),
      occupied_by_(occupied_by) {}

ChainConformation seed_conformation() {
  const auto& v = tetrahedral_bonds();
  const Vec3 s1 = to_vec(v[0]);
  return {{}, {Vec3{}, s1, s1 - to_vec(v[1])}};
}

ChainConformation extend_chain(const ChainConformation& conf, TorsionChoice choice) {
  if (conf.empty()) return seed_conformation();
  if (conf.sites.size() < 3 || conf.sites.size() != 3 + 2 * conf.choices.size()) {
    throw ShapeError("conformation has inconsistent site and choice counts");
  }
  if (choice.phi_index > 2 || choice.psi_index > 2) throw InputError("torsion index must be 0, 1 or 2");

  ChainConformation out = conf;
  const std::size_t m = out.sites.size();
  const Vec3 u = out.sites[m - 2] - out.sites[m - 3];
  const Vec3 b = out.sites[m - 1] - out.sites[m - 2];
  const Turn first = choice.omega == Omega::Cis ? eclipsed_turn(choice.phi_index) : staggered_turn(choice.phi_index);
  const Vec3 w1 = rotate_previous_bond(u, b, first);
  const Vec3 p1 = out.sites.back() + w1;
  std::size_t where = 0;
  if (occupied(out.sites, p1, &where)) throw CollisionError(p1, where);
  out.sites.push_back(p1);
  const Vec3 p2 = p1 + rotate_previous_bond(b, w1, staggered_turn(choice.psi_index));
  if (occupied(out.sites, p2, &where)) throw CollisionError(p2, where);
  out.sites.push_back(p2);
  out.choices.push_back(choice);
  return out;
}

namespace serial {

std::uint64_t enumerate_conformations(const EnumerationOptions& options, const ConformationVisitor& visit) {
  check_options(options);
  const ChainConformation seed = seed_conformation();
  Walker walker(options, seed.sites, {});
  std::uint64_t count = 0;
  walker.run(options.n_units, [&](const std::vector<Vec3>& sites, const std::vector<TorsionChoice>& choices) {
    ++count;
    if (visit) visit(ChainConformation{choices, sites});
  });
  return count;
}

std::vector<AngleAssignment> discretize_batch(std::span<const RamachandranPoint> points) {
  std::vector<AngleAssignment> out;
  out.reserve(points.size());
  for (const RamachandranPoint& p : points) out.push_back(discretize_angles(p));
  return out;
}

}  // namespace serial

std::uint64_t enumerate_conformations(const EnumerationOptions& options, const ConformationVisitor& visit) {
  check_options(options);
  const std::size_t prefix_units = std::min<std::size_t>(options.n_units, 3);
  if (options.threads <= 1 || prefix_units == options.n_units) return serial::enumerate_conformations(options, visit);

  // Independent subtrees rooted at every valid placement of the first units.
  struct Prefix {
    std::vector<Vec3> sites;
    std::vector<TorsionChoice> choices;
  };
  std::vector<Prefix> prefixes;
  {
    const ChainConformation seed = seed_conformation();
    Walker walker(options, seed.sites, {});
    walker.run(prefix_units, [&](const std::vector<Vec3>& sites, const std::vector<TorsionChoice>& choices) {
      prefixes.push_back({sites, choices});
    });
  }

  const auto n_prefix = static_cast<std::int64_t>(prefixes.size());
  std::vector<std::uint64_t> counts(prefixes.size(), 0);
  std::vector<std::vector<ChainConformation>> buffers(visit ? prefixes.size() : 0);

#pragma omp parallel for schedule(dynamic) num_threads(options.threads)
  for (std::int64_t k = 0; k < n_prefix; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    Walker walker(options, prefixes[idx].sites, prefixes[idx].choices);
    std::uint64_t local = 0;
    walker.run(options.n_units, [&](const std::vector<Vec3>& sites, const std::vector<TorsionChoice>& choices) {
      ++local;
      if (visit) buffers[idx].push_back(ChainConformation{choices, sites});
    });
    counts[idx] = local;
  }

  std::uint64_t total = 0;
  for (std::size_t k = 0; k < prefixes.size(); ++k) {
    total += counts[k];
    if (visit) {
      for (const ChainConformation& c : buffers[k]) visit(c);
    }
  }
  return total;
}

std::vector<Vec3> conformation_to_coordinates(const ChainConformation& conf, double bond_length) {
  if (!(bond_length > 0.0)) throw InputError("bond length must be positive");
  const double scale = bond_length / std::numbers::sqrt3;
  std::vector<Vec3> out;
  out.reserve(conf.sites.size());
  const Vec3 origin = conf.sites.empty() ? Vec3{} : conf.sites.front();
  for (const Vec3& p : conf.sites) out.push_back(scale * (p - origin));
  return out;
}

double normalize_angle_deg(double deg) {
  double r = std::fmod(deg, 360.0);
  if (r <= -180.0) r += 360.0;
  if (r > 180.0) r -= 360.0;
  return r;
}

double circular_distance_deg(double a, double b) {
  const double d = std::fmod(std::abs(a - b), 360.0);
  return std::min(d, 360.0 - d);
}

AngleAssignment discretize_angles(RamachandranPoint point) {
  AngleAssignment best{{0, 0, Omega::Trans}, std::numeric_limits<double>::infinity()};
  for (std::uint8_t i = 0; i < 3; ++i) {
    const double dphi = circular_distance_deg(point.phi_deg, kStarAnglesDeg[i]);
    for (std::uint8_t j = 0; j < 3; ++j) {
      const double d = std::max(dphi, circular_distance_deg(point.psi_deg, kStarAnglesDeg[j]));
      if (d < best.distance_deg) best = {{i, j, Omega::Trans}, d};
    }
  }
  return best;
}

std::vector<AngleAssignment> discretize_batch(std::span<const RamachandranPoint> points) {
  if (points.size() < 4096) return serial::discretize_batch(points);
  std::vector<AngleAssignment> out(points.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(points.size()); ++i) {
    out[static_cast<std::size_t>(i)] = discretize_angles(points[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace lifecode::lattice
