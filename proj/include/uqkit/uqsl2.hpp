#pragma once

// U_q(sl_2) in the PBW basis K^l E^i F^j.
//
// Relations:  K K^-1 = 1,  K E K^-1 = q^2 E,  K F K^-1 = q^-2 F,
//             E F - F E = (K - K^-1) / (q - q^-1).
// Hopf structure on generators:
//   Delta(E) = 1 (x) E + E (x) K,   Delta(F) = K^-1 (x) F + F (x) 1,   Delta(K) = K (x) K,
//   eps(E) = eps(F) = 0,  eps(K) = 1,   S(E) = -E K^-1,  S(F) = -K F,  S(K) = K^-1.
// Delta and eps are extended multiplicatively and S anti-multiplicatively;
// nothing else is hard-coded.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "uqkit/combination.hpp"
#include "uqkit/qscalar.hpp"

namespace uqkit {

/// K^l E^i F^j.
struct Monomial {
  int l = 0;
  int i = 0;
  int j = 0;

  int degree() const { return i + j; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

using UqElement = Combination<Monomial>;
using UqTensor = Tensor<Monomial>;

UqElement uq_monomial(int l, int i, int j, const QScalar& c = 1);
inline UqElement uq_scalar(const QScalar& c) { return uq_monomial(0, 0, 0, c); }

/// Generators of the free algebra that U_q(sl_2) is a quotient of.
enum class UqGen : std::uint8_t { K, Kinv, E, F };

enum class RewriteOrder {
  Leftmost,  ///< always reduce the first out-of-order adjacent pair
  Random,    ///< reduce a uniformly chosen out-of-order pair (seeded)
};

/// Rewrites coeff * word into the PBW basis.
///
/// Rules: K K^-1 -> 1, K^-1 K -> 1, E K^{+-1} -> q^{-+2} K^{+-1} E,
/// F K^{+-1} -> q^{+-2} K^{+-1} F, F E -> E F - (q - q^-1)^-1 (K - K^-1).
UqElement normal_form(const QScalar& coeff, std::span<const UqGen> word,
                      RewriteOrder order = RewriteOrder::Leftmost, std::uint64_t seed = 0);

/// Associative product in the PBW basis.
UqElement multiply(const UqElement& u, const UqElement& v);

/// g * u for a single generator g.
UqElement left_multiply(UqGen g, const UqElement& u);

/// Legwise product of two tensors of equal arity.
UqTensor multiply(const UqTensor& a, const UqTensor& b);

UqTensor tensor_of(std::span<const UqElement> legs);

UqTensor coproduct(const UqElement& u);

/// Delta^n = (Id (x) Delta^{n-1}) o Delta; arity n + 1. n = 0 is the identity.
UqTensor iterated_coproduct(const UqElement& u, int n);

/// Applies Delta to leg `leg` of t, producing arity t.arity() + 1.
UqTensor coproduct_at(const UqTensor& t, int leg);

QScalar counit(const UqElement& u);
UqElement antipode(const UqElement& u);

/// Multiplies the two legs of an arity-2 tensor together.
UqElement multiply_legs(const UqTensor& t);

/// Degree-n homogeneous part (monomials with i + j = n).
UqElement graded_component(const UqElement& u, int n);

/// K^l E'^i F^j with E' = K^-1 E, expanded in the PBW basis.
UqElement primed_monomial(int l, int i, int j);

/// Weakly decreasing pair (s, r) of equal length.
struct SRProfile {
  std::vector<int> s;
  std::vector<int> r;
};

/// Product of Gaussian binomials and the q-power attached to an (s, r) profile.
QScalar sr_coefficient(const SRProfile& p);

/// Closed-form expansion of Delta^{legs-1}(K^l E'^i F^j) as a sum over
/// (s, r) profiles with s_0 = i and r_0 = j. Legs default to i + j.
UqTensor delta_closed_form(int l, int i, int j, int legs = -1);

std::string to_string(const Monomial& m);
std::string to_string(const UqElement& u);
std::string to_string(const UqTensor& t);

}  // namespace uqkit
