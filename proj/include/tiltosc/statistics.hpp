#ifndef TILTOSC_STATISTICS_HPP
#define TILTOSC_STATISTICS_HPP

#include "tiltosc/hamiltonian.hpp"

#include <optional>

namespace tiltosc {

/// The ten generator expectations on |N, m> that the Mandel parameter is
/// assembled from. All follow from the ladder actions on |N, m>.
struct ExpectationTable {
  double k0;       ///< <K0> = (N+1)/2
  double j0;       ///< <J0> = m/2
  double kp_km;    ///< <K+K-> = (N²-m²)/4
  double km_kp;    ///< <K-K+> = (N²-m²)/4 + N + 1
  double jp_jm;    ///< <J+J-> = (N²-m²)/4 + (N+m)/2
  double jm_jp;    ///< <J-J+> = (N²-m²)/4 + (N-m)/2
  double kma_kpa;  ///< <K-(a)K+(a)> = (N²+m²)/16 + Nm/8 + 3(N+m)/8 + 1/2
  double kpa_kma;  ///< <K+(a)K-(a)> = (N²+m²)/16 + (Nm-N-m)/8
  double kmb_kpb;  ///< <K-(b)K+(b)> = (N²+m²)/16 - Nm/8 + 3(N-m)/8 + 1/2
  double kpb_kmb;  ///< <K+(b)K-(b)> = (N²+m²)/16 - (Nm+N-m)/8
};

inline ExpectationTable expectation_table(const QuantumNumbers& q) {
  require_valid(q);
  const double N = q.N, m = q.m;
  const double d = N * N - m * m;
  const double s = N * N + m * m;
  ExpectationTable t;
  t.k0 = 0.5 * (N + 1.0);
  t.j0 = 0.5 * m;
  t.kp_km = 0.25 * d;
  t.km_kp = 0.25 * d + N + 1.0;
  t.jp_jm = 0.25 * d + 0.5 * (N + m);
  t.jm_jp = 0.25 * d + 0.5 * (N - m);
  t.kma_kpa = s / 16.0 + N * m / 8.0 + 3.0 / 8.0 * (N + m) + 0.5;
  t.kpa_kma = s / 16.0 + (N * m - N - m) / 8.0;
  t.kmb_kpb = s / 16.0 - N * m / 8.0 + 3.0 / 8.0 * (N - m) + 0.5;
  t.kpb_kmb = s / 16.0 - (N * m + N - m) / 8.0;
  return t;
}

/// <n_a> (or <n_b>) of D(xi)D(chi)|N,m> in closed form; the two modes differ
/// only in the sign of the cos(theta) <J0> term.
inline double mean_photon_general(const TiltParams& tilt,
                                  const QuantumNumbers& q, Mode mode) {
  ExpectationTable t = expectation_table(q);
  double sign = (mode == Mode::A) ? 1.0 : -1.0;
  return std::cosh(tilt.tau) * t.k0 + sign * std::cos(tilt.theta) * t.j0 - 0.5;
}

/// Mandel Q of D(xi)D(chi)|N,m> for arbitrary tilt angles, assembled from
/// the expectation table. The numerator is mode independent; empty when the
/// mean photon number vanishes (Q divides by it).
inline std::optional<double> mandel_q_general(const TiltParams& tilt,
                                              const QuantumNumbers& q,
                                              Mode mode = Mode::A) {
  ExpectationTable t = expectation_table(q);
  const double st2 = std::pow(std::sin(tilt.theta), 2);
  const double ct2 = std::pow(std::cos(tilt.theta), 2);
  const double sh2 = std::pow(std::sinh(tilt.tau), 2);
  const double numerator =
      0.25 * (st2 * (t.jm_jp + t.jp_jm) + ct2 * sh2 * (t.km_kp + t.kp_km) +
              st2 * sh2 * (t.kma_kpa + t.kpa_kma) +
              st2 * sh2 * (t.kmb_kpb + t.kpb_kmb));
  const double mean = mean_photon_general(tilt, q, mode);
  if (mean <= 1e-12) return std::nullopt;
  return numerator / mean - 1.0;
}

/// <n_a> = <n_b> at the model's tilt (cos theta = 0):
/// cosh(tau) (N+1)/2 - 1/2 = (omega (N+1) - sqrt(w^2-l^2)) / (2 sqrt(w^2-l^2)).
inline double mean_photon_weak(const ModelParams& p, const QuantumNumbers& q) {
  p.validate();
  require_valid(q);
  const double s = reduced_frequency(p);
  return (p.omega * (q.N + 1.0) - s) / (2.0 * s);
}

/// Weak-coupling Mandel parameter (identical for both photon numbers):
///
///   Q = [w^2 (2(N^2-m^2) + 4N) - l^2 (N(N+2) - 3m^2 - 4)]
///       / (8 sqrt(w^2-l^2) [w(N+1) - sqrt(w^2-l^2)])  -  1.
///
/// Empty at the lambda = 0 vacuum, where <n> = 0 and Q is 0/0.
inline std::optional<double> mandel_q_weak(const ModelParams& p,
                                           const QuantumNumbers& q) {
  p.validate();
  require_valid(q);
  const double s = reduced_frequency(p);
  const double N = q.N, m = q.m;
  const double denominator = 8.0 * s * (p.omega * (N + 1.0) - s);
  if (mean_photon_weak(p, q) <= 1e-12) return std::nullopt;
  const double numerator = p.omega * p.omega * (2.0 * (N * N - m * m) + 4.0 * N) -
                           p.lambda * p.lambda * (N * (N + 2.0) - 3.0 * m * m - 4.0);
  return numerator / denominator - 1.0;
}

/// Weak-coupling second-order correlation (same for both modes):
///
///   g2(0) = [2 w^2 (3N(N+2) - m^2 + 8) - l^2 (N(N+2) - 3m^2 + 8)
///            - 16 w (N+1) sqrt(w^2-l^2)] / (4 [w(N+1) - sqrt(w^2-l^2)]^2),
///
/// algebraically equal to Q/<n> + 1.
inline std::optional<double> g2_weak(const ModelParams& p,
                                     const QuantumNumbers& q) {
  p.validate();
  require_valid(q);
  if (mean_photon_weak(p, q) <= 1e-12) return std::nullopt;
  const double s = reduced_frequency(p);
  const double N = q.N, m = q.m;
  const double numerator =
      2.0 * p.omega * p.omega * (3.0 * N * (N + 2.0) - m * m + 8.0) -
      p.lambda * p.lambda * (N * (N + 2.0) - 3.0 * m * m + 8.0) -
      16.0 * p.omega * (N + 1.0) * s;
  const double d = p.omega * (N + 1.0) - s;
  return numerator / (4.0 * d * d);
}

enum class QClass {
  SuperPoissonian,
  Poissonian,
  SubPoissonian,
  NumberState,
  Undefined
};

enum class G2Class { Bunching, AntiBunching, Coherent, Undefined };

/// Sign classification with a 1e-9 dead band so boundary labels are
/// deterministic under floating point.
inline QClass classify_q(std::optional<double> q) {
  if (!q) return QClass::Undefined;
  if (std::abs(*q + 1.0) <= 1e-9) return QClass::NumberState;
  if (std::abs(*q) <= 1e-9) return QClass::Poissonian;
  return *q > 0.0 ? QClass::SuperPoissonian : QClass::SubPoissonian;
}

inline G2Class classify_g2(std::optional<double> g2) {
  if (!g2) return G2Class::Undefined;
  if (std::abs(*g2 - 1.0) <= 1e-9) return G2Class::Coherent;
  return *g2 > 1.0 ? G2Class::Bunching : G2Class::AntiBunching;
}

inline const char* to_string(QClass c) {
  switch (c) {
    case QClass::SuperPoissonian: return "super-poissonian";
    case QClass::Poissonian: return "poissonian";
    case QClass::SubPoissonian: return "sub-poissonian";
    case QClass::NumberState: return "number-state";
    case QClass::Undefined: return "undefined";
  }
  return "?";
}

inline const char* to_string(G2Class c) {
  switch (c) {
    case G2Class::Bunching: return "bunching";
    case G2Class::AntiBunching: return "anti-bunching";
    case G2Class::Coherent: return "coherent";
    case G2Class::Undefined: return "undefined";
  }
  return "?";
}

struct StatisticsReport {
  double mean_n = 0.0;
  double mean_n2 = 0.0;
  std::optional<double> q;
  std::optional<double> g2;
  QClass q_class = QClass::Undefined;
  G2Class g2_class = G2Class::Undefined;
  double leakage = 0.0;
  bool reliable = true;
};

/// The number operator of one mode (diagonal in the Fock basis).
inline OperatorMatrix number_operator(const TwoModeBasis& basis, Mode mode) {
  OperatorMatrix n(basis);
  for (int i = 0; i < basis.dim(); ++i) {
    auto [n_a, n_b] = basis.occupation(i);
    n(i, i) = (mode == Mode::A) ? double(n_a) : double(n_b);
  }
  return n;
}

/// Photon statistics of an already-built (unnormalized) state: <n> and <n²>
/// read off the number-operator matrix, then Q and g2 from their
/// definitions. Flagged unreliable when the state carries weight near the
/// truncation boundary.
inline StatisticsReport statistics_of_state(const StateVector& raw, Mode mode,
                                            double leakage_threshold = 1e-8) {
  StatisticsReport report;
  report.leakage = raw.boundary_mass(2);
  report.reliable = report.leakage <= leakage_threshold;
  StateVector state = raw.normalized();
  OperatorMatrix number = number_operator(raw.basis(), mode);
  OperatorMatrix number_sq(raw.basis());  // n^2 is diagonal with entries n_i^2
  for (int i = 0; i < raw.basis().dim(); ++i)
    number_sq(i, i) = number(i, i) * number(i, i);
  report.mean_n = expectation(state, number).real();
  report.mean_n2 = expectation(state, number_sq).real();
  if (report.mean_n > 1e-12) {
    double variance = report.mean_n2 - report.mean_n * report.mean_n;
    report.q = variance / report.mean_n - 1.0;
    report.g2 = (report.mean_n2 - report.mean_n) / (report.mean_n * report.mean_n);
  }
  report.q_class = classify_q(report.q);
  report.g2_class = classify_g2(report.g2);
  return report;
}

/// Brute-force route: build |Psi> = D(xi) D(chi) |N, m> by matrix
/// application, then measure. No closed form is involved anywhere.
inline StatisticsReport statistics_oracle(const TwoModeBasis& basis,
                                          const TiltParams& tilt,
                                          const QuantumNumbers& q, Mode mode,
                                          double leakage_threshold = 1e-8) {
  StateVector seed = nm_state(basis, q);
  StateVector raw =
      displacement_su11(basis, tilt) * (displacement_su2(basis, tilt) * seed);
  return statistics_of_state(raw, mode, leakage_threshold);
}

inline StatisticsReport statistics_oracle(const ModelParams& p,
                                          const QuantumNumbers& q, Mode mode) {
  return statistics_oracle(p.basis(), tilt_parameters(p), q, mode);
}

}  // namespace tiltosc

#endif  // TILTOSC_STATISTICS_HPP
