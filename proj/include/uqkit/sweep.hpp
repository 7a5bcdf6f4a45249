#pragma once

// Grid sweeps over (l, i, j), monomial pairs and (relation, basis vector)
// pairs. Each sweep has a serial reference and an OpenMP version; both fill
// results by index, so the output order never depends on scheduling.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "uqkit/duality.hpp"
#include "uqkit/pathcoalg.hpp"
#include "uqkit/quiverrep.hpp"
#include "uqkit/uqsl2.hpp"

namespace uqkit {

enum class Exec { Serial, Parallel };

/// Runs body(k) for k in [0, n). With Exec::Parallel the iterations are
/// spread over OpenMP threads; the first exception (lowest k) is rethrown.
void for_each_index(std::size_t n, Exec exec, const std::function<void(std::size_t)>& body);

/// All K^l E^i F^j with l_min <= l <= l_max, i + j <= max_degree, ordered by
/// (l, i, j).
std::vector<Monomial> monomial_grid(int l_min, int l_max, int max_degree);

struct Identity31Cell {
  int l = 0;
  int i = 0;
  int j = 0;
  bool ok = false;
  std::string difference;  ///< empty when ok; exception text on error
  friend bool operator==(const Identity31Cell&, const Identity31Cell&) = default;
};

std::vector<Identity31Cell> sweep_identity_31(int max_degree, int l_min, int l_max, Exec exec);

struct HopfCell {
  Monomial m;
  bool coassociative = false;
  bool counit = false;
  bool antipode = false;
  bool ok() const { return coassociative && counit && antipode; }
  friend bool operator==(const HopfCell&, const HopfCell&) = default;
};

/// Coassociativity, both counit laws and both antipode convolution laws on u.
HopfCell hopf_axioms_at(const Monomial& m);
std::vector<HopfCell> sweep_hopf_axioms(int max_l, int max_degree, Exec exec);

struct BialgebraCell {
  Monomial x;
  Monomial y;
  bool coproduct_ok = false;  ///< Delta(xy) = Delta(x) Delta(y)
  bool counit_ok = false;     ///< eps(xy) = eps(x) eps(y)
  friend bool operator==(const BialgebraCell&, const BialgebraCell&) = default;
};

std::vector<BialgebraCell> sweep_bialgebra(int max_l, int max_degree, Exec exec);

struct ThetaCell {
  Monomial m;
  bool coalgebra_map = false;  ///< Delta theta = (theta (x) theta) Delta and eps theta = eps
  friend bool operator==(const ThetaCell&, const ThetaCell&) = default;
};

ThetaCell theta_coalgebra_at(const Monomial& m);
std::vector<ThetaCell> sweep_theta_coalgebra(int max_l, int max_degree, Exec exec);

/// check_slq2_relations, parallel over (relation, basis vector) pairs.
RelationReport sweep_relations(const QuiverRep& rep, Exec exec);

struct PsiRelationCell {
  std::size_t relation = 0;
  Monomial m;
  QScalar value;  ///< psi(relation)(m); zero when the relation holds
  friend bool operator==(const PsiRelationCell&, const PsiRelationCell&) = default;
};

std::vector<PsiRelationCell> sweep_psi_relations(int max_l, int max_degree, Exec exec);

}  // namespace uqkit
