#ifndef TILTOSC_LAGUERRE_HPP
#define TILTOSC_LAGUERRE_HPP

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace tiltosc {

/// Associated Laguerre polynomial L_n^alpha(x) by the stable three-term
/// recurrence (avoids factorial overflow past n ~ 10).
inline double associated_laguerre(int n, int alpha, double x) {
  if (n < 0 || alpha < 0)
    throw std::invalid_argument("associated_laguerre: need n, alpha >= 0");
  if (n == 0) return 1.0;
  double lm1 = 1.0;
  double l = 1.0 + alpha - x;
  for (int k = 2; k <= n; ++k) {
    double next = ((2.0 * k - 1.0 + alpha - x) * l - (k - 1.0 + alpha) * lm1) / k;
    lm1 = l;
    l = next;
  }
  return l;
}

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Laguerre rule for integrals of the form
///   int_0^inf f(u) e^{-u} du ~= sum_i w_i f(u_i),
/// exact for polynomial f up to degree 2n - 1. Nodes and weights come from
/// the symmetric tridiagonal Jacobi matrix (Golub-Welsch).
inline QuadratureRule gauss_laguerre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_laguerre: need n >= 1");
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    jacobi(i, i) = 2.0 * i + 1.0;
    if (i > 0) {
      jacobi(i, i - 1) = double(i);
      jacobi(i - 1, i) = double(i);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  QuadratureRule rule;
  rule.nodes.resize(std::size_t(n));
  rule.weights.resize(std::size_t(n));
  for (int i = 0; i < n; ++i) {
    rule.nodes[std::size_t(i)] = es.eigenvalues()(i);
    double v0 = es.eigenvectors()(0, i);
    rule.weights[std::size_t(i)] = v0 * v0;  // mu_0 = int e^{-u} du = 1
  }
  return rule;
}

}  // namespace tiltosc

#endif  // TILTOSC_LAGUERRE_HPP
