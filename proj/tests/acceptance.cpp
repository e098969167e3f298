// Acceptance suite: each numbered criterion prints one PASS/FAIL line with
// the measured residual and its pinned tolerance. Exit code is the number of
// failed criteria.

#include "tiltosc/tiltosc.hpp"

#include <chrono>
#include <cstdio>
#include <numbers>

using namespace tiltosc;

namespace {

const double pi = std::numbers::pi;
int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

void report(int criterion, const char* name, bool ok, double seconds,
            const std::string& detail) {
  if (!ok) ++failures;
  std::printf("%s  criterion-%d  %-28s  %6.2f s  %s\n", ok ? "PASS" : "FAIL",
              criterion, name, seconds, detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* pattern, double a, double b = 0.0,
                double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), pattern, a, b, c);
  return buf;
}

const ModelParams kReference{4.0, 0.5, 0.0, 24};

// 1. headline ground-state Mandel parameter, closed form and oracle
void criterion_1() {
  Timer timer;
  auto closed = mandel_q_weak(kReference, {0, 0});
  double closed_err = std::abs(*closed - 0.00395263);
  StatisticsReport oracle = statistics_oracle(kReference, {0, 0}, Mode::A);
  double oracle_err = std::abs(*oracle.q - *closed);
  double elapsed = timer.seconds();
  bool ok = closed_err <= 1e-6 && oracle_err <= 1e-6 && elapsed < 1.0;
  report(1, "ground-state-mandel", ok, elapsed,
         fmt("|Q-0.00395263|=%.2e  |Q-oracle|=%.2e  tol=1e-6", closed_err,
             oracle_err));
}

// 2. sign structure of the Q surface over the N <= 6 grid
void criterion_2() {
  Timer timer;
  bool ok = true;
  std::string offender;
  for (int N = 1; N <= 6 && ok; ++N) {
    for (int m = N; m >= -N; m -= 2) {
      double q = *mandel_q_weak(kReference, {N, m});
      bool edge = std::abs(m) == N;
      if ((edge && q >= 0.0) || (!edge && q <= 0.0)) {
        ok = false;
        offender = fmt("Q(N,m)=%.3e at N=%d m=%d", q, N, m);
        break;
      }
    }
  }
  report(2, "q-sign-structure", ok && timer.seconds() < 1.0, timer.seconds(),
         ok ? "Q<0 iff |m|=N (N>=1), Q>0 inside" : offender);
}

// 3. g2 surface: bunching exactly where Q > 0, and g2 = Q/<n> + 1 cell-wise
void criterion_3() {
  Timer timer;
  bool ok = true;
  double worst_identity = 0.0;
  for (int N = 0; N <= 6; ++N) {
    for (int m = N; m >= -N; m -= 2) {
      auto q = mandel_q_weak(kReference, {N, m});
      auto g2 = g2_weak(kReference, {N, m});
      if (N >= 1 && ((*q < 0.0) != (*g2 < 1.0))) ok = false;
      if (N >= 1 && ((*q > 0.0) != (*g2 > 1.0))) ok = false;
      worst_identity =
          std::max(worst_identity,
                   std::abs(*g2 - (*q / mean_photon_weak(kReference, {N, m}) +
                                   1.0)));
    }
  }
  ok = ok && worst_identity <= 1e-10 && timer.seconds() < 1.0;
  report(3, "g2-structure", ok, timer.seconds(),
         fmt("max |g2 - (Q/<n>+1)| = %.2e  tol=1e-10", worst_identity));
}

// 4. Appendix-B certification over the full label x tilt grid
void criterion_4() {
  Timer timer;
  TwoModeBasis basis = kReference.basis();
  GeneratorTable table = GeneratorTable::build(basis);
  double worst = 0.0;
  int combos = 0;
  const double phases[] = {0.0, pi / 3.0, pi};
  const Gen su11_labels[] = {Gen::K0, Gen::Kp, Gen::Km,
                             Gen::J0, Gen::Jp, Gen::Jm};
  for (double tau : {0.0, 0.05, 0.1254, 0.3}) {
    for (double phase : phases) {
      TiltParams tilt{tau, phase, 0.0, 0.0};
      OperatorMatrix d = displacement_su11(basis, tilt);
      OperatorMatrix dd = d.adjoint();
      for (Gen g : su11_labels) {
        OperatorMatrix direct = dd * (table.matrices.at(g) * d);
        OperatorMatrix closed = materialize(conjugate_su11(g, tilt), table);
        worst = std::max(worst, interior_max_abs(direct - closed, 16));
        ++combos;
      }
    }
  }
  const Gen su2_labels[] = {Gen::K0,  Gen::Kp,  Gen::Km,  Gen::J0,  Gen::Jp,
                            Gen::Jm,  Gen::KpA, Gen::KmA, Gen::KpB, Gen::KmB};
  for (double theta : {0.0, pi / 2.0, 3.0 * pi / 2.0}) {
    for (double phase : phases) {
      TiltParams tilt{0.0, 0.0, theta, phase};
      OperatorMatrix d = displacement_su2(basis, tilt);
      OperatorMatrix dd = d.adjoint();
      for (Gen g : su2_labels) {
        OperatorMatrix direct = dd * (table.matrices.at(g) * d);
        OperatorMatrix closed = materialize(conjugate_su2(g, tilt), table);
        worst = std::max(worst, interior_max_abs(direct - closed, 16));
        ++combos;
      }
    }
  }
  bool ok = worst <= 1e-9 && combos >= 24 && timer.seconds() < 120.0;
  report(4, "appendix-b-certification", ok, timer.seconds(),
         fmt("max residual %.2e over %g combinations  tol=1e-9", worst,
             double(combos)));
}

// 5. exact tilt identity at psi in {0, pi/3}
void criterion_5() {
  Timer timer;
  double worst = 0.0;
  for (double psi : {0.0, pi / 3.0}) {
    ModelParams p = kReference;
    p.psi = psi;
    TwoModeBasis basis = p.basis();
    TiltParams tilt = tilt_parameters(p);
    OperatorMatrix d =
        displacement_su11(basis, tilt) * displacement_su2(basis, tilt);
    OperatorMatrix direct = d.adjoint() * (build_hamiltonian(p) * d);
    worst = std::max(
        worst, interior_max_abs(direct - tilted_hamiltonian_exact(p), 16));
  }
  bool ok = worst <= 1e-9 && timer.seconds() < 60.0;
  report(5, "exact-tilt-identity", ok, timer.seconds(),
         fmt("max residual %.2e  tol=1e-9", worst));
}

// 6. expectation-table oracle across the grid
void criterion_6() {
  Timer timer;
  TwoModeBasis basis = kReference.basis();
  GeneratorTable g = GeneratorTable::build(basis);
  double worst = 0.0;
  for (int N = 0; N <= 6; ++N) {
    for (int m = N; m >= -N; m -= 2) {
      StateVector v = nm_state(basis, {N, m});
      ExpectationTable t = expectation_table({N, m});
      auto ev = [&](Gen x, Gen y) {
        return expectation(v, g.matrices.at(x) * g.matrices.at(y)).real();
      };
      worst = std::max(
          worst, std::abs(expectation(v, g.matrices.at(Gen::K0)).real() - t.k0));
      worst = std::max(
          worst, std::abs(expectation(v, g.matrices.at(Gen::J0)).real() - t.j0));
      worst = std::max(worst, std::abs(ev(Gen::Kp, Gen::Km) - t.kp_km));
      worst = std::max(worst, std::abs(ev(Gen::Km, Gen::Kp) - t.km_kp));
      worst = std::max(worst, std::abs(ev(Gen::Jp, Gen::Jm) - t.jp_jm));
      worst = std::max(worst, std::abs(ev(Gen::Jm, Gen::Jp) - t.jm_jp));
      worst = std::max(worst, std::abs(ev(Gen::KmA, Gen::KpA) - t.kma_kpa));
      worst = std::max(worst, std::abs(ev(Gen::KpA, Gen::KmA) - t.kpa_kma));
      worst = std::max(worst, std::abs(ev(Gen::KmB, Gen::KpB) - t.kmb_kpb));
      worst = std::max(worst, std::abs(ev(Gen::KpB, Gen::KmB) - t.kpb_kmb));
    }
  }
  report(6, "expectation-table", worst <= 1e-12, timer.seconds(),
         fmt("max residual %.2e  tol=1e-12", worst));
}

// 7. Perelomov closed forms against matrix-built displacement columns
void criterion_7() {
  Timer timer;
  TwoModeBasis basis = kReference.basis();
  double worst = 0.0;
  for (double tau : {0.05, 0.1254}) {
    for (double phase : {0.0, pi / 3.0}) {
      TiltParams tilt{tau, phase, 0.0, 0.0};
      OperatorMatrix d = displacement_su11(basis, tilt);
      for (int N = 0; N <= 6; ++N) {
        for (int m = N; m >= -N; m -= 2) {
          QuantumNumbers q{N, m};
          StateVector image = d * nm_state(basis, q);
          auto coeff = perelomov_su11_coefficients(0.5 * (std::abs(m) + 1.0),
                                                   q.radial(), tilt);
          for (std::size_t t = 0; t < coeff.size(); ++t) {
            QuantumNumbers target{std::abs(m) + 2 * int(t), m};
            if (target.mode_a_occupation() > basis.cutoff() ||
                target.mode_b_occupation() > basis.cutoff())
              continue;
            int i = basis.index(target.mode_a_occupation(),
                                target.mode_b_occupation());
            worst = std::max(worst, std::abs(image[i] - coeff[t]));
          }
        }
      }
    }
  }
  for (double phase : {0.0, pi / 3.0}) {
    TiltParams tilt{0.0, 0.0, pi / 2.0, phase};
    OperatorMatrix d = displacement_su2(basis, tilt);
    for (int N = 0; N <= 6; ++N) {
      for (int m = N; m >= -N; m -= 2) {
        StateVector image = d * nm_state(basis, {N, m});
        auto coeff = perelomov_su2_coefficients(0.5 * N, 0.5 * m, tilt);
        for (std::size_t slot = 0; slot < coeff.size(); ++slot) {
          int target_m = 2 * int(slot) - N;
          int i = basis.index((N + target_m) / 2, (N - target_m) / 2);
          worst = std::max(worst, std::abs(image[i] - coeff[slot]));
        }
      }
    }
  }
  report(7, "perelomov-closed-forms", worst <= 1e-9, timer.seconds(),
         fmt("max residual %.2e  tol=1e-9", worst));
}

// 8. weak-coupling error law: |eig(H) - E_closed| over N <= 4 at omega = 1,
// fitted exponent between lambda = 0.02 and lambda = 0.01 must land in
// [1.8, 2.2]
void criterion_8() {
  Timer timer;
  auto max_err = [](double lambda) {
    ModelParams p{1.0, lambda, 0.0, 24};
    auto closed = closed_form_spectrum(p, 4);
    auto numeric = lowest_eigenvalues(build_hamiltonian(p), int(closed.size()));
    double worst = 0.0;
    for (std::size_t i = 0; i < closed.size(); ++i)
      worst = std::max(worst, std::abs(closed[i].energy - numeric[i]));
    return worst;
  };
  double err_2 = max_err(0.02);
  double err_1 = max_err(0.01);
  double fitted = std::log2(err_2 / err_1);
  bool ok = fitted >= 1.8 && fitted <= 2.2;
  report(8, "weak-coupling-error-law", ok, timer.seconds(),
         fmt("fitted p=%.3f (err@0.02=%.3e, err@0.01=%.3e), required 1.8..2.2",
             fitted, err_2, err_1));
}

// 9. full invariant-family verification at the reference parameters
void criterion_9() {
  Timer timer;
  VerifyReport verify = run_verify(kReference);
  print_report(verify, std::cout);
  report(9, "invariant-suites", verify.all_passed(), timer.seconds(),
         fmt("%g/%g families passed",
             double(std::count_if(verify.families.begin(),
                                  verify.families.end(),
                                  [](const FamilyResult& f) { return f.passed; })),
             double(verify.families.size())));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  std::printf("%d of 9 criteria passed\n", 9 - failures);
  return failures;
}
