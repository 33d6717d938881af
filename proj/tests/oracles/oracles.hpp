#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library's numerical code paths.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

// Target probability after q iterations, by explicit N x N matrix products.
double grover_probability(std::size_t n, std::size_t target, std::size_t q);
// Full amplitude vector after q iterations.
std::vector<double> grover_amplitudes(std::size_t n, std::size_t target, std::size_t q);

// Self-avoiding all-trans chains counted as alternating-sublattice walks on
// the integer diamond lattice.
std::uint64_t count_trans_walks(std::size_t n_units);

struct TorsionStep {
  int phi_index;
  int psi_index;
  bool cis;
};

// Backbone built by internal-coordinate placement (fixed bond length and
// tetrahedral bond angle, prescribed torsions), in lattice units.
std::vector<Eigen::Vector3d> place_chain(const std::vector<TorsionStep>& steps);

// Counts every choice sequence whose placed chain has no repeated site.
std::uint64_t count_by_placement(std::size_t n_units, bool allow_cis);

// Second-largest eigenvalue modulus of a dense matrix.
double second_eigen_modulus(const Eigen::MatrixXd& m);
// Perron vector (eigenvalue 1), normalised to unit sum.
Eigen::VectorXd perron_vector(const Eigen::MatrixXd& m);

}  // namespace oracle
