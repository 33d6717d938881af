#include <array>
#include <cmath>
#include <numbers>
#include <set>
#include <tuple>

#include "oracles/oracles.hpp"

namespace oracle {

namespace {

using Site = std::array<int, 3>;

constexpr std::array<Site, 4> kBonds{{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}};

std::uint64_t walk(std::set<Site>& occupied, const Site& at, int last, int parity, std::size_t remaining) {
  if (remaining == 0) return 1;
  std::uint64_t total = 0;
  for (int i = 0; i < 4; ++i) {
    if (i == last) continue;
    const Site next{at[0] + parity * kBonds[i][0], at[1] + parity * kBonds[i][1], at[2] + parity * kBonds[i][2]};
    if (!occupied.insert(next).second) continue;
    total += walk(occupied, next, i, -parity, remaining - 1);
    occupied.erase(next);
  }
  return total;
}

using Key = std::tuple<long long, long long, long long>;

Key key_of(const Eigen::Vector3d& p) {
  return {std::llround(p.x() * 1e6), std::llround(p.y() * 1e6), std::llround(p.z() * 1e6)};
}

Eigen::Vector3d place(const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Vector3d& c,
                      double torsion_deg) {
  const double bond = std::sqrt(3.0);
  const double angle = std::acos(-1.0 / 3.0);
  const double tau = torsion_deg * std::numbers::pi / 180.0;
  const Eigen::Vector3d bc = (c - b).normalized();
  const Eigen::Vector3d n = (b - a).cross(bc).normalized();
  const Eigen::Vector3d m = n.cross(bc);
  const Eigen::Vector3d local(-bond * std::cos(angle), bond * std::sin(angle) * std::cos(tau),
                              bond * std::sin(angle) * std::sin(tau));
  return c + local.x() * bc + local.y() * m + local.z() * n;
}

constexpr std::array<double, 3> kStar{-60.0, 60.0, 180.0};

}  // namespace

std::uint64_t count_trans_walks(std::size_t n_units) {
  if (n_units == 0) return 0;
  // Seed: (0,0,0) -> (1,1,1) -> (0,2,2), i.e. bond 0 from A then bond 1 negated from B.
  std::set<Site> occupied{{0, 0, 0}, {1, 1, 1}, {0, 2, 2}};
  return walk(occupied, {0, 2, 2}, 1, +1, 2 * (n_units - 1));
}

std::vector<Eigen::Vector3d> place_chain(const std::vector<TorsionStep>& steps) {
  std::vector<Eigen::Vector3d> sites{{0, 0, 0}, {1, 1, 1}, {0, 2, 2}};
  for (const auto& s : steps) {
    const std::size_t k = sites.size();
    const double phi = kStar[static_cast<std::size_t>(s.phi_index)] + (s.cis ? 180.0 : 0.0);
    sites.push_back(place(sites[k - 3], sites[k - 2], sites[k - 1], phi));
    sites.push_back(place(sites[k - 2], sites[k - 1], sites[k], kStar[static_cast<std::size_t>(s.psi_index)]));
  }
  return sites;
}

std::uint64_t count_by_placement(std::size_t n_units, bool allow_cis) {
  if (n_units == 0) return 0;
  const std::size_t per_unit = allow_cis ? 18 : 9;
  std::size_t combos = 1;
  for (std::size_t i = 1; i < n_units; ++i) combos *= per_unit;

  std::uint64_t count = 0;
  std::vector<TorsionStep> steps(n_units - 1);
  for (std::size_t code = 0; code < combos; ++code) {
    std::size_t rest = code;
    for (auto& s : steps) {
      const std::size_t digit = rest % per_unit;
      rest /= per_unit;
      s = {static_cast<int>(digit % 9 / 3), static_cast<int>(digit % 3), digit >= 9};
    }
    std::set<Key> seen;
    bool ok = true;
    for (const auto& p : place_chain(steps)) {
      if (!seen.insert(key_of(p)).second) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace oracle
