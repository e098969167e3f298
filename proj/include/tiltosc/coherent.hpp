#ifndef TILTOSC_COHERENT_HPP
#define TILTOSC_COHERENT_HPP

#include "tiltosc/algebra.hpp"

#include <vector>

namespace tiltosc {

/// Parameters of the two displacement operators
///   D(xi)  = exp(xi K+ - xi* K-),  xi  = -(tau/2)   e^{-i phi_xi},
///   D(chi) = exp(chi J+ - chi* J-), chi = -(theta/2) e^{-i phi_theta},
/// together with the derived quantities their closed-form expansions use.
struct TiltParams {
  double tau = 0.0;
  double phi_xi = 0.0;
  double theta = 0.0;
  double phi_theta = 0.0;

  Complex xi() const {
    return -0.5 * tau * std::exp(Complex(0.0, -phi_xi));
  }
  Complex chi() const {
    return -0.5 * theta * std::exp(Complex(0.0, -phi_theta));
  }

  double alpha_xi() const { return std::sinh(2.0 * std::abs(xi())); }
  double beta_xi() const { return 0.5 * (std::cosh(2.0 * std::abs(xi())) - 1.0); }
  double alpha_chi() const { return std::sin(2.0 * std::abs(chi())); }
  double beta_chi() const { return 0.5 * (std::cos(2.0 * std::abs(chi())) - 1.0); }

  Complex zeta_xi() const {
    return -std::tanh(0.5 * tau) * std::exp(Complex(0.0, -phi_xi));
  }
  double eta_xi() const { return std::log1p(-std::norm(zeta_xi())); }
  Complex zeta_chi() const {
    return -std::tan(0.5 * theta) * std::exp(Complex(0.0, -phi_theta));
  }
  double eta_chi() const { return std::log1p(std::norm(zeta_chi())); }
};

namespace detail {

// exp of an anti-Hermitian operator that is block diagonal under a conserved
// label (n_a - n_b for K+/K-, n_a + n_b for J+/J-): exponentiate each block.
// Identical to matrix_exponential(m) up to roundoff, much cheaper.
inline OperatorMatrix blocked_unitary_exp(
    const OperatorMatrix& m, const std::vector<std::vector<int>>& blocks) {
  const TwoModeBasis& basis = m.basis();
  OperatorMatrix out(basis);
  const Complex i_unit(0.0, 1.0);
  for (const auto& block : blocks) {
    const int n = int(block.size());
    Matrix sub(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) sub(r, c) = m(block[r], block[c]);
    Eigen::SelfAdjointEigenSolver<Matrix> es(i_unit * sub);
    Vector phases = (-i_unit * es.eigenvalues().array()).exp();
    Matrix esub =
        es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) out(block[r], block[c]) = esub(r, c);
  }
  return out;
}

inline std::vector<std::vector<int>> fixed_difference_blocks(
    const TwoModeBasis& basis) {
  std::vector<std::vector<int>> blocks;
  for (int m = -basis.cutoff(); m <= basis.cutoff(); ++m) {
    std::vector<int> block;
    for (int n_a = std::max(0, m); n_a <= basis.cutoff(); ++n_a) {
      int n_b = n_a - m;
      if (n_b >= 0 && n_b <= basis.cutoff()) block.push_back(basis.index(n_a, n_b));
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

inline std::vector<std::vector<int>> fixed_total_blocks(
    const TwoModeBasis& basis) {
  std::vector<std::vector<int>> blocks;
  for (int total = 0; total <= 2 * basis.cutoff(); ++total) {
    std::vector<int> block;
    for (int n_a = 0; n_a <= basis.cutoff(); ++n_a) {
      int n_b = total - n_a;
      if (n_b >= 0 && n_b <= basis.cutoff()) block.push_back(basis.index(n_a, n_b));
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

}  // namespace detail

/// D(xi) in the two-boson realization (K+ = a†b†, K- = ba). K+/K- conserve
/// n_a - n_b, so the exponent is exponentiated per fixed-difference block;
/// the result equals matrix_exponential(xi K+ - xi* K-).
inline OperatorMatrix displacement_su11(const TwoModeBasis& basis,
                                        const TiltParams& tilt) {
  if (tilt.tau == 0.0) return OperatorMatrix::identity(basis);
  BosonOperators op = boson_operators(basis);
  Complex xi = tilt.xi();
  OperatorMatrix exponent =
      xi * (op.a_dag * op.b_dag) - std::conj(xi) * (op.b * op.a);
  return detail::blocked_unitary_exp(exponent,
                                     detail::fixed_difference_blocks(basis));
}

/// D(chi) in the Schwinger su(2) realization (J+ = a†b, J- = b†a); block
/// diagonal over the n_a + n_b shells, which J+/J- preserve.
inline OperatorMatrix displacement_su2(const TwoModeBasis& basis,
                                       const TiltParams& tilt) {
  if (tilt.theta == 0.0) return OperatorMatrix::identity(basis);
  BosonOperators op = boson_operators(basis);
  Complex chi = tilt.chi();
  OperatorMatrix exponent =
      chi * (op.a_dag * op.b) - std::conj(chi) * (op.b_dag * op.a);
  return detail::blocked_unitary_exp(exponent, detail::fixed_total_blocks(basis));
}

inline int default_perelomov_terms(const TiltParams& tilt) {
  return 8 * (1 + int(std::ceil(std::abs(tilt.zeta_xi()) * 20.0)));
}

/// Coefficients of D(xi)|k, n> over the tower states |k, n - j + s>,
/// indexed by the target label t = n - j + s:
///
///   sum_{s>=0} sum_{j=0}^{n} zeta^s/s! (-zeta*)^j/j! e^{eta (k+n-j)}
///     * sqrt(G(2k+n) G(2k+t)) / G(2k+n-j) * sqrt(G(n+1) G(t+1)) / G(n-j+1)
///
/// with zeta = -tanh(tau/2) e^{-i phi_xi}, eta = ln(1 - |zeta|^2), and the
/// Gamma ratios evaluated in log space. The s-sum is truncated at max_s and
/// the discarded tail is bounded geometrically; a tail estimate above 1e-14
/// is an error. The coefficients are normalized by construction (D is
/// unitary), so no renormalization is applied.
inline std::vector<Complex> perelomov_su11_coefficients(double k, int n,
                                                        const TiltParams& tilt,
                                                        int max_s = -1) {
  if (n < 0 || k <= 0.0)
    throw std::invalid_argument(
        "perelomov_su11_coefficients: need n >= 0 and k > 0");
  if (max_s < 0) max_s = default_perelomov_terms(tilt);
  std::vector<Complex> coeff(std::size_t(n + max_s + 1), Complex(0.0));
  if (tilt.tau == 0.0) {
    coeff[std::size_t(n)] = 1.0;
    return coeff;
  }
  const Complex zeta = tilt.zeta_xi();
  const double eta = tilt.eta_xi();
  const double abs_zeta = std::abs(zeta);
  double tail_bound = 0.0;
  for (int j = 0; j <= n; ++j) {
    Complex j_factor = std::pow(-std::conj(zeta), j);
    double last_term_mag = 0.0;
    for (int s = 0; s <= max_s; ++s) {
      int t = n - j + s;
      double lg = 0.5 * (std::lgamma(2.0 * k + n) + std::lgamma(2.0 * k + t) +
                         std::lgamma(n + 1.0) + std::lgamma(t + 1.0)) -
                  std::lgamma(2.0 * k + n - j) - std::lgamma(n - j + 1.0) -
                  std::lgamma(s + 1.0) - std::lgamma(j + 1.0);
      Complex term = std::pow(zeta, s) * j_factor *
                     std::exp(eta * (k + n - j) + lg);
      coeff[std::size_t(t)] += term;
      last_term_mag = std::abs(term);
    }
    // One more term ratio: |zeta| * sqrt((2k+t+1)(t+2)) / (max_s+1).
    int t_last = n - j + max_s;
    double ratio = abs_zeta *
                   std::sqrt((2.0 * k + t_last + 1.0) * (t_last + 2.0)) /
                   (max_s + 1.0);
    if (ratio >= 1.0)
      throw std::runtime_error(
          "perelomov_su11_coefficients: series not yet decaying at max_s");
    tail_bound += last_term_mag * ratio / (1.0 - ratio);
  }
  if (tail_bound > 1e-14)
    throw std::runtime_error(
        "perelomov_su11_coefficients: truncated tail above tolerance");
  return coeff;
}

/// Coefficients of D(chi)|j, mu> over |j, mu - n + s>, indexed by
/// t + j (so the vector has 2j + 1 entries, lowest weight first):
///
///   sum_{n=0}^{mu+j} sum_{s=0}^{j-mu+n} zeta^s/s! (-zeta*)^n/n!
///     * e^{eta (mu-n)} * G(j-mu+n+1)/G(j+mu-n+1)
///     * sqrt( G(j+mu+1) G(j+mu-n+s+1) / (G(j-mu+1) G(j-mu+n-s+1)) )
///
/// with zeta = -tan(theta/2) e^{-i phi_theta}, eta = ln(1 + |zeta|^2).
/// Both sums are finite; as printed their ranges reference each other, and
/// this iteration order (outer n, inner s) is the one the matrix oracle
/// confirms. Every target t then lands inside [-j, j] automatically.
inline std::vector<Complex> perelomov_su2_coefficients(double j, double mu,
                                                       const TiltParams& tilt) {
  const long two_j = std::lround(2.0 * j);
  const long two_mu = std::lround(2.0 * mu);
  if (two_j < 0 || std::abs(two_mu) > two_j || (two_j - two_mu) % 2 != 0)
    throw std::invalid_argument("perelomov_su2_coefficients: bad (j, mu)");
  std::vector<Complex> coeff(std::size_t(two_j + 1), Complex(0.0));
  if (tilt.theta == 0.0) {
    coeff[std::size_t((two_mu + two_j) / 2)] = 1.0;
    return coeff;
  }
  const Complex zeta = tilt.zeta_chi();
  const double eta = tilt.eta_chi();
  if (!std::isfinite(std::abs(zeta)))
    throw std::domain_error(
        "perelomov_su2_coefficients: tan(theta/2) diverges");
  const int n_max = int((two_mu + two_j) / 2);
  for (int n = 0; n <= n_max; ++n) {
    const int s_max = int((two_j - two_mu) / 2) + n;
    for (int s = 0; s <= s_max; ++s) {
      double lg = std::lgamma(j - mu + n + 1.0) - std::lgamma(j + mu - n + 1.0) +
                  0.5 * (std::lgamma(j + mu + 1.0) +
                         std::lgamma(j + mu - n + s + 1.0) -
                         std::lgamma(j - mu + 1.0) -
                         std::lgamma(j - mu + n - s + 1.0)) -
                  std::lgamma(s + 1.0) - std::lgamma(n + 1.0);
      Complex term = std::pow(zeta, s) * std::pow(-std::conj(zeta), n) *
                     std::exp(eta * (mu - n) + lg);
      // t = mu - n + s; vector slot t + j.
      int slot = int((two_mu + two_j) / 2) - n + s;
      coeff[std::size_t(slot)] += term;
    }
  }
  return coeff;
}

}  // namespace tiltosc

#endif  // TILTOSC_COHERENT_HPP
