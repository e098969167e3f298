#include "tiltosc/algebra.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace tiltosc;

namespace {
const TwoModeBasis basis(14);
}

TEST_CASE("quantum number bookkeeping") {
  QuantumNumbers q{4, -2};
  REQUIRE(q.is_valid());
  REQUIRE(q.radial() == 1);
  REQUIRE(q.mode_a_occupation() == 1);
  REQUIRE(q.mode_b_occupation() == 3);

  REQUIRE_FALSE(QuantumNumbers{3, 2}.is_valid());   // N - |m| odd
  REQUIRE_FALSE(QuantumNumbers{2, -4}.is_valid());  // |m| > N
  REQUIRE_FALSE(QuantumNumbers{-1, 1}.is_valid());
}

TEST_CASE("nm_state lands on the right Fock vector") {
  StateVector ground = nm_state(basis, {0, 0});
  REQUIRE(ground[basis.index(0, 0)] == Complex(1.0));

  StateVector s = nm_state(basis, {4, -2});
  REQUIRE(s[basis.index(1, 3)] == Complex(1.0));

  REQUIRE_THROWS_AS(nm_state(basis, {3, 2}), std::invalid_argument);
  REQUIRE_THROWS_AS(nm_state(TwoModeBasis(2), {8, 0}), std::out_of_range);
}

TEST_CASE("su(2) realization") {
  GeneratorSet j = su2_generators(basis);

  REQUIRE(interior_max_abs(commutator(j.raising, j.lowering) -
                           2.0 * j.diagonal) <= 1e-10);
  REQUIRE(interior_max_abs(commutator(j.diagonal, j.raising) - j.raising) <=
          1e-10);
  REQUIRE((j.raising - j.lowering.adjoint()).max_abs() == 0.0);
  REQUIRE((j.diagonal - j.diagonal.adjoint()).max_abs() == 0.0);

  StateVector s = nm_state(basis, {3, 1});
  REQUIRE(std::abs(expectation(s, j.diagonal) - 0.5) <= 1e-13);

  // J^2 |N=2, m> = (1/4) 2 (2+2) |N=2, m> = 2 |N=2, m>
  for (int m : {-2, 0, 2}) {
    StateVector v = nm_state(basis, {2, m});
    StateVector jv = j.casimir * v;
    REQUIRE(std::abs(inner(v, jv) - 2.0) <= 1e-12);
    REQUIRE(std::abs((jv.raw() - 2.0 * v.raw()).norm()) <= 1e-12);
  }

  // closed form of the Casimir: J^2 = (1/4) Ntot (Ntot + 2)
  BosonOperators op = boson_operators(basis);
  OperatorMatrix total = op.a_dag * op.a + op.b_dag * op.b;
  OperatorMatrix closed =
      0.25 * (total * (total + 2.0 * OperatorMatrix::identity(basis)));
  REQUIRE(interior_max_abs(j.casimir - closed) <= 1e-10);
}

TEST_CASE("two-boson su(1,1) realization") {
  GeneratorSet k = su11_two_boson(basis);
  GeneratorSet j = su2_generators(basis);

  REQUIRE(interior_max_abs(commutator(k.lowering, k.raising) -
                           2.0 * k.diagonal) <= 1e-10);
  REQUIRE(interior_max_abs(commutator(k.diagonal, k.raising) - k.raising) <=
          1e-10);

  // K0 |N, m> = (N+1)/2 |N, m>
  StateVector s = nm_state(basis, {2, 0});
  REQUIRE(std::abs(expectation(s, k.diagonal) - 1.5) <= 1e-13);

  // K^2 = J0^2 - 1/4 as matrices
  OperatorMatrix closed = j.diagonal * j.diagonal -
                          0.25 * OperatorMatrix::identity(basis);
  REQUIRE(interior_max_abs(k.casimir - closed) <= 1e-10);

  // and on |N, m>: (m^2 - 1)/4
  for (int m : {-4, -2, 0, 2, 4}) {
    StateVector v = nm_state(basis, {4, m});
    REQUIRE(std::abs(expectation(v, k.casimir) - (m * m / 4.0 - 0.25)) <=
            1e-12);
  }
}

TEST_CASE("one-boson su(1,1) realization") {
  for (Mode mode : {Mode::A, Mode::B}) {
    GeneratorSet k = su11_one_boson(basis, mode);
    REQUIRE(interior_max_abs(commutator(k.lowering, k.raising) -
                             2.0 * k.diagonal) <= 1e-10);
    // constant Casimir -3/16
    OperatorMatrix id = OperatorMatrix::identity(basis);
    REQUIRE(interior_max_abs(k.casimir + (3.0 / 16.0) * id) <= 1e-10);
  }

  // K+(a) |0,0> = (sqrt(2)/2) |2,0>
  GeneratorSet ka = su11_one_boson(basis, Mode::A);
  StateVector image = ka.raising * StateVector::basis_state(basis, 0, 0);
  REQUIRE(std::abs(image[basis.index(2, 0)] - std::sqrt(2.0) / 2.0) <= 1e-15);
}

TEST_CASE("discrete representation coefficients") {
  REQUIRE(std::abs(su2_rep_coefficient(LadderAction::Raise, 1.0, 0.0) -
                   std::sqrt(2.0)) <= 1e-15);
  REQUIRE(su11_rep_coefficient(LadderAction::Lower, 0.75, 0) == 0.0);
  REQUIRE(su11_rep_coefficient(LadderAction::Weight, 1.0, 2) == 3.0);
  REQUIRE(su11_rep_coefficient(LadderAction::Casimir, 0.25, 5) ==
          0.25 * (0.25 - 1.0));

  REQUIRE_THROWS_AS(su2_rep_coefficient(LadderAction::Raise, 1.0, 2.0),
                    std::out_of_range);
  REQUIRE_THROWS_AS(su2_rep_coefficient(LadderAction::Raise, 1.5, 1.0),
                    std::out_of_range);
  REQUIRE_THROWS_AS(su11_rep_coefficient(LadderAction::Raise, 0.5, -1),
                    std::out_of_range);
}

TEST_CASE("Schwinger matrices reproduce the discrete representation") {
  // two-boson su(1,1) acts on fixed-m towers with k = (|m|+1)/2;
  // su(2) acts on fixed-N shells with (j, mu) = (N/2, m/2)
  GeneratorSet k = su11_two_boson(basis);
  GeneratorSet j = su2_generators(basis);
  for (int N = 0; N <= 8; ++N) {
    for (int m = N; m >= -N; m -= 2) {
      QuantumNumbers q{N, m};
      StateVector v = nm_state(basis, q);
      double bargmann = 0.5 * (std::abs(m) + 1.0);
      int n = q.radial();

      StateVector up = nm_state(basis, {N + 2, m});
      REQUIRE(std::abs(inner(up, k.raising * v) -
                       su11_rep_coefficient(LadderAction::Raise, bargmann, n)) <=
              1e-12);
      if (n > 0) {
        StateVector down = nm_state(basis, {N - 2, m});
        REQUIRE(std::abs(inner(down, k.lowering * v) -
                         su11_rep_coefficient(LadderAction::Lower, bargmann,
                                              n)) <= 1e-12);
      }

      if (m + 2 <= N) {
        StateVector raised = nm_state(basis, {N, m + 2});
        REQUIRE(std::abs(inner(raised, j.raising * v) -
                         su2_rep_coefficient(LadderAction::Raise, 0.5 * N,
                                             0.5 * m)) <= 1e-12);
      }
    }
  }
}
