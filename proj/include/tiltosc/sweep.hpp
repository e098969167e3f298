#ifndef TILTOSC_SWEEP_HPP
#define TILTOSC_SWEEP_HPP

#include "tiltosc/verify.hpp"

#include <cstdio>
#include <string>

namespace tiltosc {

/// Parameters shared by the CLI commands. The shadow constraint
/// N_max <= cutoff - 8 applies to the grid commands (sweep, energy-table);
/// verify runs its own pinned grids and only needs a valid model.
struct SweepConfig {
  double omega = 4.0;
  double lambda = 0.5;
  double psi = 0.0;
  int n_max = 6;
  int cutoff = 24;

  ModelParams model() const { return {omega, lambda, psi, cutoff}; }

  void validate_model() const { model().validate(); }

  void validate_grid() const {
    validate_model();
    if (n_max < 0) throw std::invalid_argument("SweepConfig: n_max must be >= 0");
    if (n_max > cutoff - 8)
      throw std::invalid_argument(
          "SweepConfig: need n_max <= cutoff - 8 to stay inside the "
          "truncation shadow");
  }
};

namespace detail {

// Fixed float formatting so output bytes depend only on the config:
// 17 significant digits round-trip any double.
inline std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string format_value(const std::optional<double>& v) {
  return v ? format_value(*v) : "undefined";
}

}  // namespace detail

/// One CSV row per (N, m), N <= n_max, m in {N, N-2, ..., -N}, N ascending
/// and m descending. Columns:
///   N,m,Q,g2,q_class,g2_class,oracle_Q,oracle_abs_err
/// Q and g2 come from the weak-coupling closed forms; oracle_Q from the
/// brute-force matrix statistics. Undefined values (zero mean photon
/// number) print as "undefined".
inline void run_sweep(const SweepConfig& config, std::ostream& out) {
  config.validate_grid();
  ModelParams params = config.model();
  TwoModeBasis basis = params.basis();
  TiltParams tilt = tilt_parameters(params);
  OperatorMatrix displacement =
      displacement_su11(basis, tilt) * displacement_su2(basis, tilt);
  out << "N,m,Q,g2,q_class,g2_class,oracle_Q,oracle_abs_err\n";
  for (int N = 0; N <= config.n_max; ++N) {
    for (int m = N; m >= -N; m -= 2) {
      QuantumNumbers q{N, m};
      auto closed_q = mandel_q_weak(params, q);
      auto closed_g2 = g2_weak(params, q);
      StatisticsReport oracle =
          statistics_of_state(displacement * nm_state(basis, q), Mode::A);
      std::optional<double> abs_err;
      if (closed_q && oracle.q) abs_err = std::abs(*closed_q - *oracle.q);
      out << N << ',' << m << ',' << detail::format_value(closed_q) << ','
          << detail::format_value(closed_g2) << ','
          << to_string(classify_q(closed_q)) << ','
          << to_string(classify_g2(closed_g2)) << ','
          << detail::format_value(oracle.q) << ','
          << detail::format_value(abs_err) << '\n';
    }
  }
}

/// Energy table. E_closed is the weak-coupling closed form; E_numeric is
/// assigned by sorting the low end of the numerical spectrum of H and the
/// sorted closed-form list and pairing them rank by rank (ties in the
/// closed-form sort broken by |m| ascending).
inline void run_energy_table(const SweepConfig& config, std::ostream& out) {
  config.validate_grid();
  ModelParams params = config.model();
  std::vector<SpectrumEntry> closed = closed_form_spectrum(params, config.n_max);
  std::vector<double> numeric =
      lowest_eigenvalues(build_hamiltonian(params), int(closed.size()));
  // map each (N, m) row back to its rank in the sorted closed-form list
  out << "N,m,E_closed,E_numeric,abs_err\n";
  for (int N = 0; N <= config.n_max; ++N) {
    for (int m = N; m >= -N; m -= 2) {
      std::size_t rank = 0;
      while (rank < closed.size() &&
             (closed[rank].q.N != N || closed[rank].q.m != m))
        ++rank;
      double e_closed = closed[rank].energy;
      double e_numeric = numeric[rank];
      out << N << ',' << m << ',' << detail::format_value(e_closed) << ','
          << detail::format_value(e_numeric) << ','
          << detail::format_value(std::abs(e_closed - e_numeric)) << '\n';
    }
  }
}

}  // namespace tiltosc

#endif  // TILTOSC_SWEEP_HPP
