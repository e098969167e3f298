#ifndef TILTOSC_FOCK_HPP
#define TILTOSC_FOCK_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

namespace tiltosc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Truncated two-mode Fock space |n_a, n_b> with 0 <= n_a, n_b <= cutoff.
///
/// States are ordered lexicographically, n_a major:
///   index(n_a, n_b) = n_a * (cutoff + 1) + n_b.
class TwoModeBasis {
 public:
  explicit TwoModeBasis(int cutoff) : cutoff_(cutoff) {
    if (cutoff < 1)
      throw std::invalid_argument("TwoModeBasis: cutoff must be >= 1");
  }

  int cutoff() const { return cutoff_; }
  int side() const { return cutoff_ + 1; }
  int dim() const { return side() * side(); }

  int index(int n_a, int n_b) const {
    if (n_a < 0 || n_b < 0 || n_a > cutoff_ || n_b > cutoff_)
      throw std::out_of_range("TwoModeBasis::index: occupation out of range");
    return n_a * side() + n_b;
  }

  /// Inverse of index(): i -> (n_a, n_b).
  std::pair<int, int> occupation(int i) const {
    if (i < 0 || i >= dim())
      throw std::out_of_range("TwoModeBasis::occupation: index out of range");
    return {i / side(), i % side()};
  }

  /// True when |n_a, n_b> lies at least `buffer` steps away from the
  /// truncation boundary in both modes.
  bool is_interior(int i, int buffer) const {
    auto [n_a, n_b] = occupation(i);
    return n_a <= cutoff_ - buffer && n_b <= cutoff_ - buffer;
  }

  friend bool operator==(const TwoModeBasis& x, const TwoModeBasis& y) {
    return x.cutoff_ == y.cutoff_;
  }
  friend bool operator!=(const TwoModeBasis& x, const TwoModeBasis& y) {
    return !(x == y);
  }

 private:
  int cutoff_;
};

namespace detail {
inline void require_same_basis(const TwoModeBasis& x, const TwoModeBasis& y,
                               const char* what) {
  if (x != y)
    throw std::invalid_argument(std::string(what) + ": basis mismatch");
}
}  // namespace detail

/// Dense complex operator on a TwoModeBasis. Arithmetic is only defined
/// between operators over the same basis.
class OperatorMatrix {
 public:
  explicit OperatorMatrix(const TwoModeBasis& basis)
      : basis_(basis), m_(Matrix::Zero(basis.dim(), basis.dim())) {}

  OperatorMatrix(const TwoModeBasis& basis, Matrix m)
      : basis_(basis), m_(std::move(m)) {
    if (m_.rows() != basis_.dim() || m_.cols() != basis_.dim())
      throw std::invalid_argument("OperatorMatrix: shape does not match basis");
  }

  static OperatorMatrix identity(const TwoModeBasis& basis) {
    return {basis, Matrix::Identity(basis.dim(), basis.dim())};
  }

  const TwoModeBasis& basis() const { return basis_; }
  const Matrix& raw() const { return m_; }
  Matrix& raw() { return m_; }

  Complex operator()(int i, int j) const { return m_(i, j); }
  Complex& operator()(int i, int j) { return m_(i, j); }

  OperatorMatrix adjoint() const { return {basis_, m_.adjoint()}; }

  double max_abs() const { return m_.cwiseAbs().maxCoeff(); }

  bool all_finite() const { return m_.allFinite(); }

  OperatorMatrix& operator+=(const OperatorMatrix& o) {
    detail::require_same_basis(basis_, o.basis_, "operator+");
    m_ += o.m_;
    return *this;
  }
  OperatorMatrix& operator-=(const OperatorMatrix& o) {
    detail::require_same_basis(basis_, o.basis_, "operator-");
    m_ -= o.m_;
    return *this;
  }
  OperatorMatrix& operator*=(Complex c) {
    m_ *= c;
    return *this;
  }

  friend OperatorMatrix operator+(OperatorMatrix x, const OperatorMatrix& y) {
    return x += y;
  }
  friend OperatorMatrix operator-(OperatorMatrix x, const OperatorMatrix& y) {
    return x -= y;
  }
  friend OperatorMatrix operator-(OperatorMatrix x) {
    x.m_ = -x.m_;
    return x;
  }
  friend OperatorMatrix operator*(const OperatorMatrix& x,
                                  const OperatorMatrix& y) {
    detail::require_same_basis(x.basis_, y.basis_, "operator*");
    return {x.basis_, x.m_ * y.m_};
  }
  friend OperatorMatrix operator*(Complex c, OperatorMatrix x) {
    return x *= c;
  }
  friend OperatorMatrix operator*(double c, OperatorMatrix x) {
    return x *= Complex(c);
  }

 private:
  TwoModeBasis basis_;
  Matrix m_;
};

inline OperatorMatrix commutator(const OperatorMatrix& x,
                                 const OperatorMatrix& y) {
  return x * y - y * x;
}

/// State on a TwoModeBasis.
class StateVector {
 public:
  explicit StateVector(const TwoModeBasis& basis)
      : basis_(basis), v_(Vector::Zero(basis.dim())) {}

  StateVector(const TwoModeBasis& basis, Vector v)
      : basis_(basis), v_(std::move(v)) {
    if (v_.size() != basis_.dim())
      throw std::invalid_argument("StateVector: size does not match basis");
  }

  /// Unit vector on |n_a, n_b>.
  static StateVector basis_state(const TwoModeBasis& basis, int n_a, int n_b) {
    StateVector s(basis);
    s.v_(basis.index(n_a, n_b)) = 1.0;
    return s;
  }

  const TwoModeBasis& basis() const { return basis_; }
  const Vector& raw() const { return v_; }
  Vector& raw() { return v_; }

  Complex operator[](int i) const { return v_(i); }
  Complex& operator[](int i) { return v_(i); }

  double norm() const { return v_.norm(); }

  bool is_normalized(double tol = 1e-12) const {
    return std::abs(norm() - 1.0) <= tol;
  }

  StateVector normalized() const {
    double n = norm();
    if (n == 0.0)
      throw std::domain_error("StateVector::normalized: zero vector");
    return {basis_, v_ / n};
  }

  /// Occupation probability within `margin` of the truncation boundary.
  double boundary_mass(int margin = 2) const {
    double mass = 0.0;
    for (int i = 0; i < basis_.dim(); ++i)
      if (!basis_.is_interior(i, margin)) mass += std::norm(v_(i));
    return mass;
  }

  friend StateVector operator*(const OperatorMatrix& m, const StateVector& s) {
    detail::require_same_basis(m.basis(), s.basis_, "operator*state");
    return {s.basis_, m.raw() * s.v_};
  }

 private:
  TwoModeBasis basis_;
  Vector v_;
};

inline Complex inner(const StateVector& x, const StateVector& y) {
  detail::require_same_basis(x.basis(), y.basis(), "inner");
  return x.raw().dot(y.raw());  // Eigen dot conjugates the left argument
}

/// <state| M |state>. The state must be normalized; only the basis is checked.
inline Complex expectation(const StateVector& state, const OperatorMatrix& m) {
  detail::require_same_basis(state.basis(), m.basis(), "expectation");
  return state.raw().dot(m.raw() * state.raw());
}

/// Annihilation/creation matrices for both modes:
/// a|n_a,n_b> = sqrt(n_a)|n_a-1,n_b>, b acts on the second label,
/// daggered operators are conjugate transposes.
struct BosonOperators {
  OperatorMatrix a, a_dag, b, b_dag;
};

inline BosonOperators boson_operators(const TwoModeBasis& basis) {
  OperatorMatrix a(basis), b(basis);
  for (int n_a = 0; n_a <= basis.cutoff(); ++n_a) {
    for (int n_b = 0; n_b <= basis.cutoff(); ++n_b) {
      if (n_a > 0)
        a(basis.index(n_a - 1, n_b), basis.index(n_a, n_b)) =
            std::sqrt(double(n_a));
      if (n_b > 0)
        b(basis.index(n_a, n_b - 1), basis.index(n_a, n_b)) =
            std::sqrt(double(n_b));
    }
  }
  return {a, a.adjoint(), b, b.adjoint()};
}

/// exp(M). Hermitian and anti-Hermitian inputs go through an
/// eigendecomposition (exact up to roundoff, unitary result for
/// anti-Hermitian M); anything else falls back to scaling-and-squaring.
inline OperatorMatrix matrix_exponential(const OperatorMatrix& op) {
  if (!op.all_finite())
    throw std::invalid_argument("matrix_exponential: non-finite entries");
  const Matrix& m = op.raw();
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double herm_err = (m - m.adjoint()).cwiseAbs().maxCoeff();
  const double anti_err = (m + m.adjoint()).cwiseAbs().maxCoeff();
  const Complex i_unit(0.0, 1.0);
  if (anti_err <= 1e-13 * scale) {
    // i*M is Hermitian; exp(M) = V exp(-i diag) V^dag.
    Eigen::SelfAdjointEigenSolver<Matrix> es(i_unit * m);
    Vector phases = (-i_unit * es.eigenvalues().array()).exp();
    return {op.basis(),
            es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint()};
  }
  if (herm_err <= 1e-13 * scale) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    Eigen::VectorXd ev = es.eigenvalues().array().exp();
    return {op.basis(),
            es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint()};
  }
  // Scaling and squaring with a Taylor kernel; adequate for the occasional
  // non-normal input (everything hot in this library is anti-Hermitian).
  int squarings = 0;
  double norm1 = m.cwiseAbs().colwise().sum().maxCoeff();
  while (norm1 > 0.5) {
    norm1 /= 2.0;
    ++squarings;
  }
  Matrix x = m / std::pow(2.0, squarings);
  Matrix result = Matrix::Identity(m.rows(), m.cols());
  Matrix term = result;
  for (int k = 1; k <= 24; ++k) {
    term = term * x / double(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int k = 0; k < squarings; ++k) result = result * result;
  return {op.basis(), result};
}

/// Largest |entry| of M over rows and columns in interior(cutoff - buffer).
///
/// Identities between truncated operators are only meaningful on states far
/// enough from the truncation boundary; this is the norm every algebraic
/// assertion in the test suites uses.
inline double interior_max_abs(const OperatorMatrix& m, int buffer = 4) {
  const TwoModeBasis& basis = m.basis();
  const int c = basis.cutoff() - buffer;
  if (c < 0)
    throw std::invalid_argument(
        "interior_max_abs: buffer leaves no interior states");
  double worst = 0.0;
  for (int ra = 0; ra <= c; ++ra)
    for (int rb = 0; rb <= c; ++rb)
      for (int ca = 0; ca <= c; ++ca)
        for (int cb = 0; cb <= c; ++cb)
          worst = std::max(worst, std::abs(m(basis.index(ra, rb),
                                            basis.index(ca, cb))));
  return worst;
}

}  // namespace tiltosc

#endif  // TILTOSC_FOCK_HPP
