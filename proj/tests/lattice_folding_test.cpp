#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "lifecode/errors.hpp"
#include "lifecode/lattice_folding.hpp"
#include "oracles/oracles.hpp"

using namespace lifecode;
using namespace lifecode::lattice;

namespace {

const double kTetrahedralDeg = std::acos(-1.0 / 3.0) * 180.0 / 3.14159265358979323846;

std::vector<oracle::TorsionStep> to_steps(const std::vector<TorsionChoice>& choices) {
  std::vector<oracle::TorsionStep> out;
  for (const auto& c : choices) out.push_back({c.phi_index, c.psi_index, c.omega == Omega::Cis});
  return out;
}

}  // namespace

TEST(Neighbours, AreOppositeSublatticeAndTetrahedral) {
  const DiamondSite origin{};
  const auto ns = neighbours(origin);
  for (const auto& n : ns) EXPECT_EQ(n.sublattice, Sublattice::B);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const auto pi = ns[i].position(), pj = ns[j].position();
      const Vec3 a{double(pi[0]), double(pi[1]), double(pi[2])}, b{double(pj[0]), double(pj[1]), double(pj[2])};
      EXPECT_NEAR(bond_angle_deg(a, {0, 0, 0}, b), kTetrahedralDeg, 1e-9);
    }
  }
  const auto back = neighbours(ns[0]);
  EXPECT_NE(std::find(back.begin(), back.end(), origin), back.end());
}

TEST(DiamondSite, PositionRoundTrip) {
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        for (auto s : {Sublattice::A, Sublattice::B}) {
          const DiamondSite site{{a, b, c}, s};
          EXPECT_EQ(DiamondSite::from_position(site.position()), site);
        }
  EXPECT_FALSE(DiamondSite::from_position({1, 0, 0}));
}

TEST(ExtendChain, EmptyChainBecomesSeed) {
  for (std::uint8_t i = 0; i < 3; ++i) {
    const auto c = extend_chain({}, {i, i, Omega::Trans});
    EXPECT_EQ(c, seed_conformation());
    EXPECT_EQ(c.sites.size(), 3u);
    EXPECT_TRUE(c.choices.empty());
  }
}

TEST(ExtendChain, NineDistinctContinuations) {
  const auto seed = seed_conformation();
  std::set<std::array<double, 3>> ends;
  for (std::uint8_t p = 0; p < 3; ++p) {
    for (std::uint8_t q = 0; q < 3; ++q) {
      const auto c = extend_chain(seed, {p, q, Omega::Trans});
      const Vec3 e = c.sites.back();
      EXPECT_TRUE(ends.insert({e.x, e.y, e.z}).second);
      EXPECT_TRUE(c.lattice_sites());
    }
  }
  EXPECT_EQ(ends.size(), 9u);
}

TEST(ExtendChain, RealisedTorsionsMatchChoices) {
  const auto seed = seed_conformation();
  for (auto omega : {Omega::Trans, Omega::Cis}) {
    for (std::uint8_t p = 0; p < 3; ++p) {
      for (std::uint8_t q = 0; q < 3; ++q) {
        const TorsionChoice choice{p, q, omega};
        const auto& s = extend_chain(seed, choice).sites;
        const double phi = dihedral_deg(s[0], s[1], s[2], s[3]);
        const double psi = dihedral_deg(s[1], s[2], s[3], s[4]);
        EXPECT_NEAR(circular_distance_deg(phi, choice.realised_phi_deg()), 0.0, 1e-9) << choice.to_string();
        EXPECT_NEAR(circular_distance_deg(psi, choice.psi_deg()), 0.0, 1e-9) << choice.to_string();
      }
    }
  }
}

TEST(ExtendChain, ReturningWalkCollides) {
  // Shortest collision found by exhaustive search over chains of up to four units.
  std::vector<TorsionChoice> all;
  for (std::uint8_t p = 0; p < 3; ++p)
    for (std::uint8_t q = 0; q < 3; ++q) all.push_back({p, q, Omega::Trans});
  bool found = false;
  for (const auto& a : all) {
    const auto one = extend_chain(seed_conformation(), a);
    for (const auto& b : all) {
      ChainConformation two;
      try {
        two = extend_chain(one, b);
      } catch (const CollisionError&) {
        continue;
      }
      for (const auto& c : all) {
        try {
          extend_chain(two, c);
        } catch (const CollisionError& e) {
          found = true;
          EXPECT_LT(e.occupied_by(), two.sites.size());
        }
      }
    }
  }
  EXPECT_TRUE(found);
}

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(enumerate_conformations({1, false}), 1u);
  EXPECT_EQ(enumerate_conformations({2, false}), 9u);
  EXPECT_EQ(enumerate_conformations({2, true}), 18u);
  EXPECT_THROW(enumerate_conformations({0, false}), InputError);
}

TEST(Enumerate, MatchesWalkOracle) {
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(enumerate_conformations({n, false}), oracle::count_trans_walks(n)) << n;
  }
}

TEST(Enumerate, MatchesPlacementOracle) {
  for (std::size_t n = 1; n <= 5; ++n) {
    EXPECT_EQ(enumerate_conformations({n, false}), oracle::count_by_placement(n, false)) << n;
    EXPECT_EQ(enumerate_conformations({n, true}), oracle::count_by_placement(n, true)) << n;
  }
}

TEST(Enumerate, SitesMatchPlacementOracle) {
  enumerate_conformations({4, true}, [](const ChainConformation& c) {
    const auto ref = oracle::place_chain(to_steps(c.choices));
    ASSERT_EQ(ref.size(), c.sites.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
      EXPECT_NEAR(c.sites[i].x, ref[i].x(), 1e-9);
      EXPECT_NEAR(c.sites[i].y, ref[i].y(), 1e-9);
      EXPECT_NEAR(c.sites[i].z, ref[i].z(), 1e-9);
    }
  });
}

TEST(Enumerate, ParallelMatchesSerial) {
  for (bool cis : {false, true}) {
    std::vector<ChainConformation> a, b;
    const auto na = serial::enumerate_conformations({5, cis}, [&](const ChainConformation& c) { a.push_back(c); });
    const auto nb = enumerate_conformations({5, cis, 12, 4}, [&](const ChainConformation& c) { b.push_back(c); });
    EXPECT_EQ(na, nb);
    EXPECT_EQ(a, b);
  }
}

TEST(Enumerate, LexicographicOrder) {
  std::vector<std::vector<TorsionChoice>> seen;
  enumerate_conformations({3, true}, [&](const ChainConformation& c) { seen.push_back(c.choices); });
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
}

TEST(Enumerate, CapIsEnforced) {
  EXPECT_THROW(enumerate_conformations({13, false}), ResourceError);
  EXPECT_THROW(enumerate_conformations({5, false, 4}), ResourceError);
}

TEST(Coordinates, BondsAndAngles) {
  enumerate_conformations({4, false}, [](const ChainConformation& c) {
    const auto xyz = conformation_to_coordinates(c, 1.53);
    EXPECT_EQ(xyz.front(), (Vec3{0, 0, 0}));
    for (std::size_t i = 1; i < xyz.size(); ++i) EXPECT_NEAR(norm(xyz[i] - xyz[i - 1]), 1.53, 1e-12);
    for (std::size_t i = 2; i < xyz.size(); ++i)
      EXPECT_NEAR(bond_angle_deg(xyz[i - 2], xyz[i - 1], xyz[i]), kTetrahedralDeg, 1e-9);
  });
  const auto seed = conformation_to_coordinates(seed_conformation(), 1.0);
  ASSERT_EQ(seed.size(), 3u);
  EXPECT_NEAR(norm(seed[1] - seed[0]), 1.0, 1e-12);
  EXPECT_NEAR(norm(seed[2] - seed[1]), 1.0, 1e-12);
}

TEST(Angles, NormalizeAndDistance) {
  EXPECT_EQ(normalize_angle_deg(-180.0), 180.0);
  EXPECT_EQ(normalize_angle_deg(540.0), 180.0);
  EXPECT_NEAR(normalize_angle_deg(-190.0), 170.0, 1e-12);
  EXPECT_NEAR(circular_distance_deg(170.0, -170.0), 20.0, 1e-12);
  EXPECT_NEAR(circular_distance_deg(0.0, 180.0), 180.0, 1e-12);
}

TEST(Discretize, Examples) {
  const auto star = discretize_angles({180.0, 180.0});
  EXPECT_EQ(star.star.phi_deg(), 180.0);
  EXPECT_EQ(star.star.psi_deg(), 180.0);
  EXPECT_EQ(star.distance_deg, 0.0);

  const auto helix = discretize_angles({-57.0, -47.0});
  EXPECT_EQ(helix.star.phi_deg(), -60.0);
  EXPECT_EQ(helix.star.psi_deg(), -60.0);
  EXPECT_NEAR(helix.distance_deg, 13.0, 1e-12);

  const auto tie = discretize_angles({120.0, 0.0});
  EXPECT_EQ(tie.star.phi_index, 1);  // 60 beats 180
  EXPECT_NEAR(tie.distance_deg, 60.0, 1e-12);
}

TEST(Discretize, BatchMatchesSerial) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-180.0, 180.0);
  std::vector<RamachandranPoint> pts(10000);
  for (auto& p : pts) p = {u(rng), u(rng)};
  const auto a = discretize_batch(pts);
  const auto b = serial::discretize_batch(pts);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].star, b[i].star);
    EXPECT_EQ(a[i].distance_deg, b[i].distance_deg);
  }
}

TEST(TorsionChoice, Text) {
  EXPECT_EQ((TorsionChoice{0, 2, Omega::Trans}).to_string(), "02");
  EXPECT_EQ((TorsionChoice{1, 0, Omega::Cis}).to_string(), "10c");
  EXPECT_EQ((TorsionChoice{2, 0, Omega::Cis}).realised_phi_deg(), 0.0);
}
