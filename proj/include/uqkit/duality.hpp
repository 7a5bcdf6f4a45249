#pragma once

// The pairing psi: SL_q(2) -> U_q(sl_2)^* and the SL_q(2)-module structure it
// induces on comodules, x.m = sum psi(x)(m_1) m_0.
//
// On the PBW basis:
//   psi(a)(K^l E^i F^j) = d_{i0} d_{j0} q^l + d_{i1} d_{j1} q^l
//   psi(b)(K^l E^i F^j) = d_{i1} d_{j0} q^l
//   psi(c)(K^l E^i F^j) = d_{i0} d_{j1} q^-l
//   psi(d)(K^l E^i F^j) = d_{i0} d_{j0} q^-l
// and psi(xy)(u) = sum psi(x)(u_1) psi(y)(u_2). SL_q(2) elements stay as
// formal combinations of words; no normal form is attempted.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "uqkit/combination.hpp"
#include "uqkit/quiverrep.hpp"
#include "uqkit/uqsl2.hpp"

namespace uqkit {

enum class SlGen : std::uint8_t { a, b, c, d };

using SlWord = std::vector<SlGen>;

/// coefficient * letters; the empty word is the unit.
struct GenWord {
  QScalar coeff = 1;
  SlWord letters;
};

/// Formal linear combination of words.
using SlPoly = Combination<SlWord>;

SlPoly to_poly(const GenWord& w);
/// Concatenation product of formal combinations.
SlPoly concat(const SlPoly& x, const SlPoly& y);

char letter(SlGen g);

/// Parses e.g. `d*a - q*b*c - 1`. Letters and scalar factors are joined by
/// `*`; a run of letters such as `da` is also read as a word. The empty string
/// is the unit.
SlPoly parse_word(std::string_view text);
std::string to_string(const SlPoly& x);

struct Relation {
  std::string name;
  SlPoly poly;
};

/// ba-qab, db-qbd, ca-qac, dc-qcd, bc-cb, ad-da-(q^-1-q)bc, da-qbc-1.
const std::vector<Relation>& slq2_relations();

QScalar psi_gen(SlGen x, const UqElement& u);
/// Convolution along the iterated coproduct; the empty word gives the counit.
QScalar psi_word(const SlWord& w, const UqElement& u);
QScalar psi_word(const GenWord& w, const UqElement& u);
QScalar psi(const SlPoly& x, const UqElement& u);

/// phi(u)(x) = psi(x)(u).
inline QScalar phi(const UqElement& u, const SlPoly& x) { return psi(x, u); }

/// The U_q(sl_2) element whose image under theta is b(l, n, i):
/// q^{i(i+1)} / (i!_{q^2} j!_{q^-2}) K^l E'^i F^j with j = n - i.
UqElement b_preimage(int l, int n, int i);

/// psi(x)(b(l, n, i)). Zero for n > 2 * (longest word length in x).
QScalar psi_on_b(const SlPoly& x, int l, int n, int i);

/// The primed-basis table K^l E'^i F^j, written out independently.
QScalar psi_primed_table(SlGen x, int l, int i, int j);

/// Compares psi_gen on primed_monomial(l, i, j) with psi_primed_table for all
/// four generators, |l| <= max_l and i, j <= max_ij. Returns the mismatches.
std::vector<std::string> check_primed_table(int max_l, int max_ij);

/// x.m via the coaction, grouped along the b-basis. Throws ValidationError if
/// rep fails condition (i) or the grouped path images are inconsistent.
RepElement act_word(const SlPoly& x, const QuiverRep& rep, const RepElement& m);

/// Same formula evaluated with one fixed representative sign vector per
/// (n, i), plus-signs first, and no validation. Agrees with act_word on
/// comodules and with act_closed on every representation.
RepElement act_word_unchecked(const SlPoly& x, const QuiverRep& rep, const RepElement& m);

/// Each word applied letter by letter, rightmost first, through the
/// single-letter operators. psi kills every relation, so relations can only
/// fail on an invalid representation through this composition.
RepElement act_composed(const SlPoly& x, const QuiverRep& rep, const RepElement& m);

/// Closed forms: a.m = q^l m + q^{l-1} f^{(1,-1)} m, b.m = q^{l-1} f^{(1)} m,
/// c.m = q^-l f^{(-1)} m, d.m = q^-l m for m in V_l.
RepElement act_closed(SlGen x, const QuiverRep& rep, const RepElement& m);

struct RelationViolation {
  std::string relation;
  int vertex = 0;
  int index = 0;
  std::string image;
};

struct RelationReport {
  std::vector<std::string> relations;
  std::vector<bool> passed;
  std::vector<RelationViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Every relation, acting through act_composed, must annihilate every basis
/// vector.
RelationReport check_slq2_relations(const QuiverRep& rep);

/// Antipode of SL_q(2): S(a) = d, S(b) = -q b, S(c) = -q^-1 c, S(d) = a,
/// extended anti-multiplicatively.
SlPoly slq2_antipode(const SlPoly& x);

/// Coproduct of SL_q(2): Delta(a) = a(x)a + b(x)c, Delta(b) = a(x)b + b(x)d,
/// Delta(c) = c(x)a + d(x)c, Delta(d) = c(x)b + d(x)d, extended multiplicatively.
/// Returned as pairs of words with coefficients.
Combination<std::pair<SlWord, SlWord>> slq2_coproduct(const SlWord& w);

/// psi(x)(S_U u) == phi(u)(S_H x).
bool check_duality_antipode(const SlPoly& x, const UqElement& u);

/// phi(uv)(x) == sum phi(u)(x_1) phi(v)(x_2).
bool check_phi_multiplicative(const SlWord& x, const UqElement& u, const UqElement& v);

}  // namespace uqkit
