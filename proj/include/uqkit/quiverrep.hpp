#pragma once

// Finite-support representations of the doubled line quiver and the
// corresponding right U_q(sl_2)-comodules.
//
// A representation assigns V_l to each vertex and, for each l, two maps
// f_l^{(+1)} (upper) and f_l^{(-1)} (lower) from V_l to V_{l-1}. Matrices act
// on column vectors. Along P_l^{(v)} the path map is
//   f_l^{(v)} = f_{l-n+1}^{(v_n)} o ... o f_{l-1}^{(v_2)} o f_l^{(v_1)}.
// Such a representation is a U_q(sl_2)-comodule iff
//   f_{l-1}^{(+1)} f_l^{(-1)} = q^2 f_{l-1}^{(-1)} f_l^{(+1)}  for all l;
// local nilpotency is automatic for finite support.

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "uqkit/linalg.hpp"
#include "uqkit/pathcoalg.hpp"

namespace uqkit {

class QuiverRep {
 public:
  /// The zero representation.
  QuiverRep() = default;

  /// Vertices start .. start + dims.size() - 1. upper[k] and lower[k] are the
  /// maps out of vertex start + k + 1, of shape dims[k] x dims[k + 1].
  /// Throws ShapeMismatch on inconsistent shapes.
  QuiverRep(int start, std::vector<int> dims, std::vector<Matrix> upper, std::vector<Matrix> lower);

  int start() const { return start_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim(int l) const;
  /// f_l^{(+1)} : V_l -> V_{l-1} (zero map outside the stored range).
  Matrix upper(int l) const;
  /// f_l^{(-1)} : V_l -> V_{l-1}.
  Matrix lower(int l) const;
  Matrix arrow(int l, int sign) const { return sign == 1 ? upper(l) : lower(l); }

  /// Vertices with nonzero dimension, ascending.
  std::vector<int> support() const;
  bool is_zero() const { return support().empty(); }
  /// Upper minus lower support vertex; bounds the length of nonzero paths.
  int support_diameter() const;

 private:
  int start_ = 0;
  std::vector<int> dims_;
  std::vector<Matrix> upper_;
  std::vector<Matrix> lower_;
};

/// Element of the direct sum of the vertex spaces. Components are kept only
/// when nonzero.
class RepElement {
 public:
  RepElement() = default;
  RepElement(int l, QVector v) { add(l, v); }

  const std::map<int, QVector>& components() const { return components_; }
  bool is_zero() const { return components_.empty(); }
  void add(int l, const QVector& v);
  RepElement& operator+=(const RepElement& o);
  friend RepElement operator+(RepElement a, const RepElement& b) { return a += b; }
  friend RepElement operator*(const QScalar& s, const RepElement& e);
  friend bool operator==(const RepElement&, const RepElement&) = default;

  std::string str() const;

 private:
  std::map<int, QVector> components_;
};

/// Standard basis vector k of V_l.
RepElement basis_element(const QuiverRep& rep, int l, int k);
/// Basis of the whole representation space, ordered by vertex then index.
std::vector<RepElement> all_basis_elements(const QuiverRep& rep);

struct ValidationReport {
  bool condition_i_ok = true;
  bool locally_nilpotent_ok = true;
  std::vector<std::string> violations;
  bool ok() const { return condition_i_ok && locally_nilpotent_ok; }
};

ValidationReport validate_rep(const QuiverRep& rep);

/// Composite map along p: V_{s(p)} -> V_{t(p)}; f of a vertex is the identity.
Matrix path_map(const QuiverRep& rep, const Path& p);

/// rho(m) = sum over paths p from the vertices of m of f_p(m) (x) p. Only
/// nonzero terms are kept. Throws ValidationError if condition (i) fails.
std::map<Path, RepElement> coaction(const QuiverRep& rep, const RepElement& m);

struct ChiRatioViolation {
  int vertex = 0;
  SignVector v;
  SignVector w;
};

struct ComoduleReport {
  bool chi_ratio_ok = true;
  bool coassociativity_ok = true;
  bool counit_ok = true;
  std::vector<ChiRatioViolation> chi_violations;
  std::vector<std::string> diagnostics;
  bool ok() const { return chi_ratio_ok && coassociativity_ok && counit_ok; }
};

/// For every support vertex and every v, v' of equal length and equal number
/// of plus-signs, checks f^{(v)}/chi(v) = f^{(v')}/chi(v'); then checks the
/// comodule laws of rho inside the path coalgebra.
ComoduleReport comodule_axiom_check(const QuiverRep& rep);

/// Module over the quantum plane X Y = q^2 Y X.
struct QuantumPlaneModule {
  Matrix x;
  Matrix y;
  int dim() const { return x.rows(); }
  bool satisfies_relation() const;
};

/// V_j = U on [l, l+n]; upper maps X and lower maps Y out of l+1 .. l+n.
QuiverRep from_quantum_plane(int l, int n, const QuantumPlaneModule& u);

struct Infinity {
  friend bool operator==(Infinity, Infinity) { return true; }
};
/// A point of Q(q) or the symbol infinity.
using Lambda = std::variant<QScalar, Infinity>;
std::string to_string(const Lambda& lambda);
/// Accepts the qscalar grammar or `inf` / `infinity`.
Lambda parse_lambda(std::string_view text);

/// One-dimensional at each vertex of [l, l+n]. For finite lambda the upper maps
/// are 1 and the lower map out of j is lambda q^{-2(l+n-j)}; for infinity the
/// upper maps are 0 and the lower maps are 1.
QuiverRep schurian_rep(int l, int n, const Lambda& lambda);

struct SchurianData {
  int l = 0;
  int n = 0;
  Lambda lambda = QScalar();
  friend bool operator==(const SchurianData&, const SchurianData&) = default;
};

struct Rejection {
  enum class Kind { Zero, NotSchurian, NotComodule, Decomposable };
  Kind kind = Kind::Zero;
  std::string reason;
};

/// Identifies (l, n, lambda) for an indecomposable Schurian comodule, or says
/// why the input is not one. n = 0 returns lambda = 0.
std::variant<SchurianData, Rejection> classify_schurian(const QuiverRep& rep);

struct HomSpace {
  int dimension = 0;
  /// Each basis morphism maps vertex l to a dims2(l) x dims1(l) matrix.
  std::vector<std::map<int, Matrix>> basis;
};

/// Families (phi_l) with phi_{l-1} f_l^{(s)} = g_l^{(s)} phi_l for both signs.
HomSpace hom_space(const QuiverRep& from, const QuiverRep& to);

}  // namespace uqkit
