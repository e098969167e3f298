#ifndef TILTOSC_SIMILARITY_HPP
#define TILTOSC_SIMILARITY_HPP

#include "tiltosc/coherent.hpp"

#include <array>
#include <map>
#include <string>

namespace tiltosc {

/// The closed label set the similarity transformations act on. Id carries
/// constant terms (e.g. the -1/2 in a†a = K0 + J0 - 1/2).
enum class Gen {
  K0, Kp, Km,    // two-boson su(1,1)
  J0, Jp, Jm,    // Schwinger su(2)
  KpA, KmA,      // one-boson su(1,1), mode a
  KpB, KmB,      // one-boson su(1,1), mode b
  Id
};

inline constexpr std::array<Gen, 11> kAllGenerators = {
    Gen::K0, Gen::Kp, Gen::Km, Gen::J0,  Gen::Jp,  Gen::Jm,
    Gen::KpA, Gen::KmA, Gen::KpB, Gen::KmB, Gen::Id};

inline const char* to_string(Gen g) {
  switch (g) {
    case Gen::K0: return "K0";
    case Gen::Kp: return "K+";
    case Gen::Km: return "K-";
    case Gen::J0: return "J0";
    case Gen::Jp: return "J+";
    case Gen::Jm: return "J-";
    case Gen::KpA: return "K+(a)";
    case Gen::KmA: return "K-(a)";
    case Gen::KpB: return "K+(b)";
    case Gen::KmB: return "K-(b)";
    case Gen::Id: return "I";
  }
  return "?";
}

/// Finitely supported linear combination of generators.
class OperatorCombo {
 public:
  OperatorCombo() = default;
  OperatorCombo(std::initializer_list<std::pair<const Gen, Complex>> init)
      : terms_(init) {}

  static OperatorCombo single(Gen g, Complex c = 1.0) {
    OperatorCombo combo;
    combo.add(g, c);
    return combo;
  }

  Complex coefficient(Gen g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Complex(0.0) : it->second;
  }

  void add(Gen g, Complex c) {
    if (c != Complex(0.0)) terms_[g] += c;
  }

  OperatorCombo& operator+=(const OperatorCombo& o) {
    for (const auto& [g, c] : o.terms_) terms_[g] += c;
    return *this;
  }
  friend OperatorCombo operator+(OperatorCombo x, const OperatorCombo& y) {
    return x += y;
  }
  friend OperatorCombo operator*(Complex c, const OperatorCombo& x) {
    OperatorCombo out;
    for (const auto& [g, v] : x.terms_) out.terms_[g] = c * v;
    return out;
  }

  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }

 private:
  std::map<Gen, Complex> terms_;
};

/// All eleven generator matrices over one basis, for materializing combos.
struct GeneratorTable {
  TwoModeBasis basis;
  std::map<Gen, OperatorMatrix> matrices;

  static GeneratorTable build(const TwoModeBasis& basis) {
    GeneratorSet k = su11_two_boson(basis);
    GeneratorSet j = su2_generators(basis);
    GeneratorSet ka = su11_one_boson(basis, Mode::A);
    GeneratorSet kb = su11_one_boson(basis, Mode::B);
    GeneratorTable table{basis, {}};
    table.matrices.emplace(Gen::K0, k.diagonal);
    table.matrices.emplace(Gen::Kp, k.raising);
    table.matrices.emplace(Gen::Km, k.lowering);
    table.matrices.emplace(Gen::J0, j.diagonal);
    table.matrices.emplace(Gen::Jp, j.raising);
    table.matrices.emplace(Gen::Jm, j.lowering);
    table.matrices.emplace(Gen::KpA, ka.raising);
    table.matrices.emplace(Gen::KmA, ka.lowering);
    table.matrices.emplace(Gen::KpB, kb.raising);
    table.matrices.emplace(Gen::KmB, kb.lowering);
    table.matrices.emplace(Gen::Id, OperatorMatrix::identity(basis));
    return table;
  }
};

inline OperatorMatrix materialize(const OperatorCombo& combo,
                                  const GeneratorTable& table) {
  OperatorMatrix out(table.basis);
  for (const auto& [g, c] : combo) out += c * table.matrices.at(g);
  return out;
}

inline OperatorMatrix materialize(const OperatorCombo& combo,
                                  const TwoModeBasis& basis) {
  return materialize(combo, GeneratorTable::build(basis));
}

/// D†(xi) G D(xi) as a combo over the label set, for
/// G in {K0, K+, K-, J0, J+, J-, I}. At tau = 0 every label maps to itself
/// (the xi/|xi| phases only appear multiplied by vanishing factors).
inline OperatorCombo conjugate_su11(Gen label, const TiltParams& tilt) {
  if (label == Gen::Id) return OperatorCombo::single(Gen::Id);
  if (tilt.tau == 0.0) return OperatorCombo::single(label);
  const Complex xi = tilt.xi();
  const double alpha = tilt.alpha_xi();
  const double beta = tilt.beta_xi();
  const Complex u = xi / std::abs(xi);
  const Complex ub = std::conj(u);
  OperatorCombo out;
  switch (label) {
    case Gen::K0:
      out.add(Gen::K0, 2.0 * beta + 1.0);
      out.add(Gen::Kp, 0.5 * alpha * u);
      out.add(Gen::Km, 0.5 * alpha * ub);
      break;
    case Gen::Kp:
      out.add(Gen::K0, ub * alpha);
      out.add(Gen::Kp, beta + 1.0);
      out.add(Gen::Km, beta * ub / u);
      break;
    case Gen::Km:
      out.add(Gen::K0, u * alpha);
      out.add(Gen::Km, beta + 1.0);
      out.add(Gen::Kp, beta * u / ub);
      break;
    case Gen::J0:
      out.add(Gen::J0, 1.0);
      break;
    case Gen::Jp:
      out.add(Gen::KmB, ub * alpha);
      out.add(Gen::KpA, u * alpha);
      out.add(Gen::Jp, 2.0 * beta + 1.0);
      break;
    case Gen::Jm:
      out.add(Gen::KmA, ub * alpha);
      out.add(Gen::KpB, u * alpha);
      out.add(Gen::Jm, 2.0 * beta + 1.0);
      break;
    default:
      throw std::invalid_argument(
          "conjugate_su11: no closed form for this label");
  }
  return out;
}

/// D†(chi) G D(chi) for every label (the one-boson ladder operators mix into
/// each other and into K+/K- under the su(2) rotation).
inline OperatorCombo conjugate_su2(Gen label, const TiltParams& tilt) {
  if (label == Gen::Id) return OperatorCombo::single(Gen::Id);
  if (tilt.theta == 0.0) return OperatorCombo::single(label);
  const Complex chi = tilt.chi();
  const double alpha = tilt.alpha_chi();
  const double beta = tilt.beta_chi();
  const Complex v = chi / std::abs(chi);
  const Complex vb = std::conj(v);
  OperatorCombo out;
  switch (label) {
    case Gen::J0:
      out.add(Gen::J0, 2.0 * beta + 1.0);
      out.add(Gen::Jp, 0.5 * alpha * v);
      out.add(Gen::Jm, 0.5 * alpha * vb);
      break;
    case Gen::Jp:
      out.add(Gen::J0, -vb * alpha);
      out.add(Gen::Jp, beta + 1.0);
      out.add(Gen::Jm, beta * vb / v);
      break;
    case Gen::Jm:
      out.add(Gen::J0, -v * alpha);
      out.add(Gen::Jm, beta + 1.0);
      out.add(Gen::Jp, beta * v / vb);
      break;
    case Gen::K0:
      out.add(Gen::K0, 1.0);
      break;
    case Gen::Kp:
      out.add(Gen::Kp, 2.0 * beta + 1.0);
      out.add(Gen::KpA, -v * alpha);
      out.add(Gen::KpB, vb * alpha);
      break;
    case Gen::Km:
      out.add(Gen::Km, 2.0 * beta + 1.0);
      out.add(Gen::KmA, -vb * alpha);
      out.add(Gen::KmB, v * alpha);
      break;
    case Gen::KpA:
      out.add(Gen::KpA, beta + 1.0);
      out.add(Gen::Kp, 0.5 * vb * alpha);
      out.add(Gen::KpB, -beta * vb / v);
      break;
    case Gen::KmA:
      out.add(Gen::KmA, beta + 1.0);
      out.add(Gen::Km, 0.5 * v * alpha);
      out.add(Gen::KmB, -beta * v / vb);
      break;
    case Gen::KpB:
      out.add(Gen::KpB, beta + 1.0);
      out.add(Gen::Kp, -0.5 * v * alpha);
      out.add(Gen::KpA, -beta * v / vb);
      break;
    case Gen::KmB:
      out.add(Gen::KmB, beta + 1.0);
      out.add(Gen::Km, -0.5 * vb * alpha);
      out.add(Gen::KmA, -beta * vb / v);
      break;
    default:
      throw std::invalid_argument("conjugate_su2: unknown label");
  }
  return out;
}

inline OperatorCombo conjugate_su11(const OperatorCombo& combo,
                                    const TiltParams& tilt) {
  OperatorCombo out;
  for (const auto& [g, c] : combo) out += c * conjugate_su11(g, tilt);
  return out;
}

inline OperatorCombo conjugate_su2(const OperatorCombo& combo,
                                   const TiltParams& tilt) {
  OperatorCombo out;
  for (const auto& [g, c] : combo) out += c * conjugate_su2(g, tilt);
  return out;
}

/// D†(chi) D†(xi) X D(xi) D(chi) by linearity: the su(1,1) conjugation is
/// applied first (it sits innermost), then the su(2) one.
inline OperatorCombo conjugate_chain(const OperatorCombo& combo,
                                     const TiltParams& tilt) {
  return conjugate_su2(conjugate_su11(combo, tilt), tilt);
}

/// a†a = K0 + J0 - 1/2,  b†b = K0 - J0 - 1/2.
inline OperatorCombo number_operator_combo(Mode mode) {
  OperatorCombo combo;
  combo.add(Gen::K0, 1.0);
  combo.add(Gen::J0, mode == Mode::A ? 1.0 : -1.0);
  combo.add(Gen::Id, -0.5);
  return combo;
}

}  // namespace tiltosc

#endif  // TILTOSC_SIMILARITY_HPP
