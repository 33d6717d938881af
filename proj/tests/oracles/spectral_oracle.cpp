#include <algorithm>
#include <functional>

#include "oracles/oracles.hpp"

#include <Eigen/Eigenvalues>

namespace oracle {

double second_eigen_modulus(const Eigen::MatrixXd& m) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
  std::vector<double> moduli;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) moduli.push_back(std::abs(solver.eigenvalues()[i]));
  std::sort(moduli.begin(), moduli.end(), std::greater<>());
  return moduli.size() > 1 ? moduli[1] : 0.0;
}

Eigen::VectorXd perron_vector(const Eigen::MatrixXd& m) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, true);
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < solver.eigenvalues().size(); ++i) {
    if (std::abs(solver.eigenvalues()[i] - 1.0) < std::abs(solver.eigenvalues()[best] - 1.0)) best = i;
  }
  Eigen::VectorXd v = solver.eigenvectors().col(best).real();
  return v / v.sum();
}

}  // namespace oracle
