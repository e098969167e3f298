#ifndef TILTOSC_ALGEBRA_HPP
#define TILTOSC_ALGEBRA_HPP

#include "tiltosc/fock.hpp"

#include <cstdlib>

namespace tiltosc {

enum class Mode { A, B };

/// Labels |N, m> of the common eigenbasis of K0 and J0:
///   K0|N,m> = (N+1)/2 |N,m>,   J0|N,m> = m/2 |N,m>,
/// realized on Fock states via n_a = (N+m)/2, n_b = (N-m)/2.
struct QuantumNumbers {
  int N = 0;  ///< principal
  int m = 0;  ///< angular; |m| <= N and N - |m| even

  bool is_valid() const {
    return N >= 0 && std::abs(m) <= N && (N - std::abs(m)) % 2 == 0;
  }
  int radial() const { return (N - std::abs(m)) / 2; }
  int mode_a_occupation() const { return (N + m) / 2; }
  int mode_b_occupation() const { return (N - m) / 2; }
};

inline void require_valid(const QuantumNumbers& q) {
  if (!q.is_valid())
    throw std::invalid_argument(
        "QuantumNumbers: need N >= 0, |m| <= N, N - |m| even");
}

/// Unit Fock vector carrying |N, m>. Rejects labels outside the cutoff.
inline StateVector nm_state(const TwoModeBasis& basis,
                            const QuantumNumbers& q) {
  require_valid(q);
  int n_a = q.mode_a_occupation(), n_b = q.mode_b_occupation();
  if (n_a > basis.cutoff() || n_b > basis.cutoff())
    throw std::out_of_range("nm_state: |N,m> exceeds the cutoff");
  return StateVector::basis_state(basis, n_a, n_b);
}

enum class Realization { Su2, Su11TwoBoson, Su11OneBosonA, Su11OneBosonB };

/// One realization of su(2) or su(1,1) as boson bilinears, with its Casimir
/// assembled as a matrix polynomial of the generators (the closed forms for
/// the Casimirs are checked in tests, not assumed here).
struct GeneratorSet {
  Realization realization;
  OperatorMatrix raising, lowering, diagonal, casimir;
};

/// J+ = a†b, J- = b†a, J0 = (a†a - b†b)/2; J² = J0² + (J+J- + J-J+)/2.
inline GeneratorSet su2_generators(const TwoModeBasis& basis) {
  BosonOperators op = boson_operators(basis);
  OperatorMatrix jp = op.a_dag * op.b;
  OperatorMatrix jm = op.b_dag * op.a;
  OperatorMatrix j0 = 0.5 * (op.a_dag * op.a - op.b_dag * op.b);
  OperatorMatrix casimir = j0 * j0 + 0.5 * (jp * jm + jm * jp);
  return {Realization::Su2, jp, jm, j0, casimir};
}

/// K+ = a†b†, K- = ba, K0 = (a†a + b†b + 1)/2; K² = K0² - (K+K- + K-K+)/2.
inline GeneratorSet su11_two_boson(const TwoModeBasis& basis) {
  BosonOperators op = boson_operators(basis);
  OperatorMatrix kp = op.a_dag * op.b_dag;
  OperatorMatrix km = op.b * op.a;
  OperatorMatrix k0 =
      0.5 * (op.a_dag * op.a + op.b_dag * op.b + OperatorMatrix::identity(basis));
  OperatorMatrix casimir = k0 * k0 - 0.5 * (kp * km + km * kp);
  return {Realization::Su11TwoBoson, kp, km, k0, casimir};
}

/// One-boson realization on the chosen mode:
/// K+ = a†²/2, K- = a²/2, K0 = (a†a + 1/2)/2.
inline GeneratorSet su11_one_boson(const TwoModeBasis& basis, Mode mode) {
  BosonOperators op = boson_operators(basis);
  const OperatorMatrix& c = (mode == Mode::A) ? op.a : op.b;
  const OperatorMatrix& cd = (mode == Mode::A) ? op.a_dag : op.b_dag;
  OperatorMatrix kp = 0.5 * (cd * cd);
  OperatorMatrix km = 0.5 * (c * c);
  OperatorMatrix k0 = 0.5 * (cd * c + 0.5 * OperatorMatrix::identity(basis));
  OperatorMatrix casimir = k0 * k0 - 0.5 * (kp * km + km * kp);
  return {mode == Mode::A ? Realization::Su11OneBosonA
                          : Realization::Su11OneBosonB,
          kp, km, k0, casimir};
}

enum class LadderAction { Raise, Lower, Weight, Casimir };

/// Closed-form matrix elements of the su(1,1) discrete representation
/// labeled by the Bargmann index k on |k, n>:
///   K+: sqrt((n+1)(2k+n)), K-: sqrt(n(2k+n-1)), K0: k+n, K²: k(k-1).
/// Used as an independent check on the Schwinger matrices.
inline double su11_rep_coefficient(LadderAction action, double k, int n) {
  if (n < 0 || k <= 0.0)
    throw std::out_of_range("su11_rep_coefficient: need n >= 0 and k > 0");
  switch (action) {
    case LadderAction::Raise:
      return std::sqrt((n + 1.0) * (2.0 * k + n));
    case LadderAction::Lower:
      return n == 0 ? 0.0 : std::sqrt(n * (2.0 * k + n - 1.0));
    case LadderAction::Weight:
      return k + n;
    case LadderAction::Casimir:
      return k * (k - 1.0);
  }
  throw std::logic_error("su11_rep_coefficient: unreachable");
}

/// su(2) analog on |j, mu>:
///   J+: sqrt((j-mu)(j+mu+1)), J-: sqrt((j+mu)(j-mu+1)), J0: mu, J²: j(j+1).
inline double su2_rep_coefficient(LadderAction action, double j, double mu) {
  long two_j = std::lround(2.0 * j);
  long two_mu = std::lround(2.0 * mu);
  if (two_j < 0 || std::abs(two_mu) > two_j || (two_j - two_mu) % 2 != 0)
    throw std::out_of_range("su2_rep_coefficient: labels out of range");
  switch (action) {
    case LadderAction::Raise:
      return std::sqrt((j - mu) * (j + mu + 1.0));
    case LadderAction::Lower:
      return std::sqrt((j + mu) * (j - mu + 1.0));
    case LadderAction::Weight:
      return mu;
    case LadderAction::Casimir:
      return j * (j + 1.0);
  }
  throw std::logic_error("su2_rep_coefficient: unreachable");
}

}  // namespace tiltosc

#endif  // TILTOSC_ALGEBRA_HPP
