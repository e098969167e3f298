#ifndef TILTOSC_HAMILTONIAN_HPP
#define TILTOSC_HAMILTONIAN_HPP

#include "tiltosc/laguerre.hpp"
#include "tiltosc/similarity.hpp"

#include <algorithm>
#include <numbers>

namespace tiltosc {

/// Two identical oscillators with phase-dressed coupling (hbar = 1):
///   H = omega (a†a + b†b + 1)
///     + lambda e^{-i psi} (a†b† + a†b) + lambda e^{i psi} (b†a + ba).
struct ModelParams {
  double omega = 4.0;
  double lambda = 0.5;
  double psi = 0.0;
  int cutoff = 24;

  void validate() const {
    if (!(omega > 0.0))
      throw std::invalid_argument("ModelParams: omega must be > 0");
    if (!(lambda >= 0.0))
      throw std::invalid_argument("ModelParams: lambda must be >= 0");
    if (!(lambda < omega))
      throw std::invalid_argument(
          "ModelParams: need lambda < omega (tanh^-1(lambda/omega) must exist)");
    if (cutoff < 1)
      throw std::invalid_argument("ModelParams: cutoff must be >= 1");
  }

  TwoModeBasis basis() const { return TwoModeBasis(cutoff); }
};

/// Position-position coupling 2 kappa m omega x y between two oscillators
/// of equal mass and frequency.
struct PositionCouplingParams {
  double mass = 1.0;
  double omega = 1.0;
  double kappa = 0.0;
};

/// Boson form of the position-coupled pair: the mass drops out and the
/// coupling sign is absorbed into the phase (e^{i pi} = -1).
inline ModelParams from_position_coupling(const PositionCouplingParams& p,
                                          int cutoff = 24) {
  if (!(p.mass > 0.0) || !(p.omega > 0.0))
    throw std::invalid_argument(
        "from_position_coupling: mass and omega must be > 0");
  if (!(std::abs(p.kappa) < p.omega))
    throw std::invalid_argument("from_position_coupling: need |kappa| < omega");
  ModelParams out;
  out.omega = p.omega;
  out.lambda = std::abs(p.kappa);
  out.psi = p.kappa < 0.0 ? std::numbers::pi : 0.0;
  out.cutoff = cutoff;
  return out;
}

inline double reduced_frequency(const ModelParams& p) {
  return std::sqrt(p.omega * p.omega - p.lambda * p.lambda);
}

inline OperatorMatrix build_hamiltonian(const ModelParams& p) {
  p.validate();
  TwoModeBasis basis = p.basis();
  BosonOperators op = boson_operators(basis);
  Complex phase = std::exp(Complex(0.0, -p.psi));
  OperatorMatrix h =
      p.omega * (op.a_dag * op.a + op.b_dag * op.b + OperatorMatrix::identity(basis));
  h += (p.lambda * phase) * (op.a_dag * op.b_dag + op.a_dag * op.b);
  h += (p.lambda * std::conj(phase)) * (op.b_dag * op.a + op.b * op.a);
  return h;
}

/// Same operator written over the group generators,
///   H = 2 omega K0 + lambda e^{-i psi}(K+ + J+) + lambda e^{i psi}(K- + J-);
/// equals build_hamiltonian entry for entry.
inline OperatorMatrix group_form_hamiltonian(const ModelParams& p) {
  p.validate();
  TwoModeBasis basis = p.basis();
  GeneratorSet k = su11_two_boson(basis);
  GeneratorSet j = su2_generators(basis);
  Complex phase = std::exp(Complex(0.0, -p.psi));
  OperatorMatrix h = 2.0 * p.omega * k.diagonal;
  h += (p.lambda * phase) * (k.raising + j.raising);
  h += (p.lambda * std::conj(phase)) * (k.lowering + j.lowering);
  return h;
}

/// The tilt angles that cancel the off-diagonal generators:
/// K+/K- vanish at tau = tanh^-1(lambda/omega), phi_xi = psi;
/// J+/J- vanish at theta = pi/2 (the n = 0 branch of (2n+1) pi/2),
/// phi_theta = psi.
inline TiltParams tilt_parameters(const ModelParams& p) {
  p.validate();
  TiltParams tilt;
  tilt.tau = std::atanh(p.lambda / p.omega);
  tilt.phi_xi = p.psi;
  tilt.theta = 0.5 * std::numbers::pi;
  tilt.phi_theta = p.psi;
  return tilt;
}

/// H'' after both tiltings, with no approximation:
///   2 sqrt(w^2-l^2) K0 + (2wl/sqrt) J0
///   - (l^2/sqrt) (K+(b) + K-(b))
///   - (l^2/sqrt) (K+(a) e^{-2i psi} + K-(a) e^{2i psi}).
inline OperatorMatrix tilted_hamiltonian_exact(const ModelParams& p) {
  p.validate();
  TwoModeBasis basis = p.basis();
  GeneratorTable table = GeneratorTable::build(basis);
  const double s = reduced_frequency(p);
  const Complex phase2 = std::exp(Complex(0.0, -2.0 * p.psi));
  OperatorMatrix h = 2.0 * s * table.matrices.at(Gen::K0);
  h += (2.0 * p.omega * p.lambda / s) * table.matrices.at(Gen::J0);
  h += (-p.lambda * p.lambda / s) *
       (table.matrices.at(Gen::KpB) + table.matrices.at(Gen::KmB));
  h += (-p.lambda * p.lambda / s) *
       (phase2 * table.matrices.at(Gen::KpA) +
        std::conj(phase2) * table.matrices.at(Gen::KmA));
  return h;
}

/// Weak-coupling H'': the single-mode squeezing terms (coefficient
/// lambda^2/sqrt(w^2-l^2)) are dropped, leaving a matrix diagonal in |N,m>.
inline OperatorMatrix tilted_hamiltonian_weak(const ModelParams& p) {
  p.validate();
  TwoModeBasis basis = p.basis();
  GeneratorSet k = su11_two_boson(basis);
  GeneratorSet j = su2_generators(basis);
  const double s = reduced_frequency(p);
  OperatorMatrix h = 2.0 * s * k.diagonal;
  h += (2.0 * p.omega * p.lambda / s) * j.diagonal;
  return h;
}

/// Closed-form weak-coupling level:
///   E = sqrt(w^2 - l^2)(N + 1) + (w l / sqrt(w^2 - l^2)) |m|,
/// reducing to omega (N + 1) = omega (2 n_r + |m| + 1) at lambda = 0.
inline double energy(const ModelParams& p, const QuantumNumbers& q) {
  p.validate();
  require_valid(q);
  const double s = reduced_frequency(p);
  return s * (q.N + 1.0) + (p.omega * p.lambda / s) * std::abs(q.m);
}

/// Polar-coordinate eigenfunction of the weak-coupling H'':
///   Psi_{n_r,m}(r, phi) = e^{i m phi}/sqrt(pi) (-1)^{n_r}
///     sqrt(2 n_r!/(n_r+|m|)!) r^{|m|} L_{n_r}^{|m|}(r^2) e^{-r^2/2}.
inline Complex eigenfunction(const QuantumNumbers& q, double r, double phi) {
  require_valid(q);
  if (r < 0.0) throw std::invalid_argument("eigenfunction: need r >= 0");
  const int n_r = q.radial();
  const int am = std::abs(q.m);
  const double sign = (n_r % 2 == 0) ? 1.0 : -1.0;
  const double norm =
      std::sqrt(2.0) *
      std::exp(0.5 * (std::lgamma(n_r + 1.0) - std::lgamma(n_r + am + 1.0)));
  double radial = std::pow(r, am) * associated_laguerre(n_r, am, r * r) *
                  std::exp(-0.5 * r * r);
  return sign * norm / std::sqrt(std::numbers::pi) *
         std::exp(Complex(0.0, q.m * phi)) * radial;
}

struct EigenstateResult {
  StateVector state;
  /// Occupation near the truncation boundary (within 2 of the cutoff);
  /// above ~1e-8 the cutoff is too small for this state.
  double leakage;
};

/// Fock-space eigenstate D(xi) D(chi) |N, m> at the model's tilt, normalized.
inline EigenstateResult full_eigenstate(const ModelParams& p,
                                        const QuantumNumbers& q) {
  TwoModeBasis basis = p.basis();
  TiltParams tilt = tilt_parameters(p);
  StateVector seed = nm_state(basis, q);
  StateVector state =
      displacement_su11(basis, tilt) * (displacement_su2(basis, tilt) * seed);
  return {state.normalized(), state.boundary_mass(2)};
}

/// Ascending eigenvalues of a Hermitian operator.
inline std::vector<double> lowest_eigenvalues(const OperatorMatrix& h,
                                              int count) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.raw(), Eigen::EigenvaluesOnly);
  count = std::min<int>(count, int(es.eigenvalues().size()));
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out[std::size_t(i)] = es.eigenvalues()(i);
  return out;
}

struct SpectrumEntry {
  QuantumNumbers q;
  double energy;
};

/// Closed-form levels over N <= n_max, sorted ascending; degenerate values
/// are ordered by |m| ascending (then m descending) so the pairing against a
/// sorted numerical spectrum is deterministic.
inline std::vector<SpectrumEntry> closed_form_spectrum(const ModelParams& p,
                                                       int n_max) {
  std::vector<SpectrumEntry> out;
  for (int N = 0; N <= n_max; ++N)
    for (int m = N; m >= -N; m -= 2)
      out.push_back({{N, m}, energy(p, {N, m})});
  std::sort(out.begin(), out.end(),
            [](const SpectrumEntry& x, const SpectrumEntry& y) {
              if (x.energy != y.energy) return x.energy < y.energy;
              if (std::abs(x.q.m) != std::abs(y.q.m))
                return std::abs(x.q.m) < std::abs(y.q.m);
              if (x.q.m != y.q.m) return x.q.m > y.q.m;
              return x.q.N < y.q.N;
            });
  return out;
}

}  // namespace tiltosc

#endif  // TILTOSC_HAMILTONIAN_HPP
