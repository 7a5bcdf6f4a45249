#pragma once

// Path coalgebra of the doubled line quiver: vertices e_l for l in Z and two
// arrows (upper, lower) from e_l to e_{l-1}. A path P_l^{(v)} starts at e_l and
// takes the upper arrow at step t when v_t = +1, the lower one when v_t = -1;
// it ends at e_{l-|v|}. Nothing is materialized: vertices and arrows are
// integer indices generated on demand.

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uqkit/combination.hpp"
#include "uqkit/uqsl2.hpp"

namespace uqkit {

/// Sequence over {+1, -1}; empty denotes a vertex.
using SignVector = std::vector<int>;

struct Path {
  int start = 0;
  SignVector signs;

  int length() const { return static_cast<int>(signs.size()); }
  int end() const { return start - length(); }
  friend auto operator<=>(const Path&, const Path&) = default;
};

using PathVector = Combination<Path>;
using PathTensor = Tensor<Path>;

inline Path vertex(int l) { return Path{l, {}}; }

/// q^{2 * sum of positions t (1-based) with v_t = +1}; 1 when there are none.
QScalar chi(std::span<const int> v);

/// All sign vectors of length n with exactly i entries equal to +1, in
/// lexicographic order with -1 < +1.
std::vector<SignVector> sign_vectors(int n, int i);

/// b(l, n, i) = sum over |v| = n with i plus-signs of chi(v) P_l^{(v)}.
PathVector basis_b(int l, int n, int i);

/// Deconcatenation: Delta(p) = sum over p = beta alpha of beta (x) alpha, where
/// alpha is the initial segment (starting at s(p)).
PathTensor path_delta(const PathVector& x);
PathTensor path_delta_at(const PathTensor& t, int leg);
/// Coefficient sum on vertices.
QScalar path_counit(const PathVector& x);

/// Graded coalgebra map U_q(sl_2) -> path coalgebra, computed on each degree-n
/// component as the arrow projection of Delta^{n-1}, legs concatenated
/// (leftmost leg = last arrow). Degree 0: K^l -> e_l.
PathVector theta(const UqElement& u);

struct Identity31Result {
  bool equal = false;
  PathVector lhs;         ///< theta(K^l E'^i F^j)
  PathVector rhs;         ///< i!_{q^2} j!_{q^-2} q^{-i(i+1)} b(l, i+j, i)
  PathVector difference;  ///< lhs - rhs, empty iff equal
};

Identity31Result verify_identity_31(int l, int i, int j);

/// Index of a b-basis element.
struct BIndex {
  int l = 0;
  int n = 0;
  int i = 0;
  friend auto operator<=>(const BIndex&, const BIndex&) = default;
};

/// Coordinates of x in the b-basis, or nullopt when x is outside their span.
std::optional<Combination<BIndex>> b_coordinates(const PathVector& x);
/// Same for arity-2 tensors against the basis {b (x) b'}.
std::optional<Combination<std::vector<BIndex>>> b_coordinates(const PathTensor& t);

std::string to_string(const Path& p);
/// Parses `l:[+,-,+]`, with `l:[]` for a vertex.
Path parse_path(std::string_view text);
std::string to_string(const PathVector& x);

}  // namespace uqkit
