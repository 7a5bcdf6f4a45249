#include "uqkit/sweep.hpp"

#include <exception>
#include <map>

#include <omp.h>

namespace uqkit {

void for_each_index(std::size_t n, Exec exec, const std::function<void(std::size_t)>& body) {
  if (exec == Exec::Serial) {
    for (std::size_t k = 0; k < n; ++k) body(k);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < count; ++k) {
    try {
      body(static_cast<std::size_t>(k));
    } catch (...) {
      errors[static_cast<std::size_t>(k)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::vector<Monomial> monomial_grid(int l_min, int l_max, int max_degree) {
  std::vector<Monomial> out;
  for (int l = l_min; l <= l_max; ++l)
    for (int i = 0; i <= max_degree; ++i)
      for (int j = 0; i + j <= max_degree; ++j) out.push_back(Monomial{l, i, j});
  return out;
}

std::vector<Identity31Cell> sweep_identity_31(int max_degree, int l_min, int l_max, Exec exec) {
  const auto grid = monomial_grid(l_min, l_max, max_degree);
  std::vector<Identity31Cell> out(grid.size());
  for_each_index(grid.size(), exec, [&](std::size_t k) {
    const Monomial& m = grid[k];
    Identity31Cell cell{m.l, m.i, m.j, false, {}};
    try {
      const Identity31Result r = verify_identity_31(m.l, m.i, m.j);
      cell.ok = r.equal;
      if (!r.equal) cell.difference = to_string(r.difference);
    } catch (const std::exception& e) {
      cell.difference = e.what();
    }
    out[k] = std::move(cell);
  });
  return out;
}

namespace {

UqTensor map_leg(const UqTensor& t, int leg, const std::function<UqElement(const Monomial&)>& f) {
  UqTensor out(t.arity());
  std::map<Monomial, UqElement> memo;
  for (const auto& [key, c] : t.terms()) {
    auto it = memo.find(key[static_cast<std::size_t>(leg)]);
    if (it == memo.end()) it = memo.emplace(key[static_cast<std::size_t>(leg)], f(key[static_cast<std::size_t>(leg)])).first;
    for (const auto& [m, mc] : it->second.terms()) {
      auto k2 = key;
      k2[static_cast<std::size_t>(leg)] = m;
      out.add(k2, c * mc);
    }
  }
  return out;
}

UqElement contract_counit(const UqTensor& t, int leg) {
  UqElement out;
  for (const auto& [key, c] : t.terms()) {
    const Monomial& gone = key[static_cast<std::size_t>(leg)];
    if (gone.degree() != 0) continue;
    out.add(key[static_cast<std::size_t>(1 - leg)], c);
  }
  return out;
}

}  // namespace

HopfCell hopf_axioms_at(const Monomial& m) {
  const UqElement u(m, 1);
  HopfCell cell{m};
  const UqTensor d = coproduct(u);
  cell.coassociative = coproduct_at(d, 0) == coproduct_at(d, 1);
  cell.counit = contract_counit(d, 0) == u && contract_counit(d, 1) == u;
  const auto s = [](const Monomial& x) { return antipode(UqElement(x, 1)); };
  const UqElement unit = uq_scalar(counit(u));
  cell.antipode = multiply_legs(map_leg(d, 0, s)) == unit && multiply_legs(map_leg(d, 1, s)) == unit;
  return cell;
}

std::vector<HopfCell> sweep_hopf_axioms(int max_l, int max_degree, Exec exec) {
  const auto grid = monomial_grid(-max_l, max_l, max_degree);
  std::vector<HopfCell> out(grid.size());
  for_each_index(grid.size(), exec, [&](std::size_t k) { out[k] = hopf_axioms_at(grid[k]); });
  return out;
}

std::vector<BialgebraCell> sweep_bialgebra(int max_l, int max_degree, Exec exec) {
  const auto grid = monomial_grid(-max_l, max_l, max_degree);
  std::vector<UqTensor> deltas(grid.size());
  for_each_index(grid.size(), exec, [&](std::size_t k) { deltas[k] = coproduct(UqElement(grid[k], 1)); });
  const std::size_t n = grid.size();
  std::vector<BialgebraCell> out(n * n);
  for_each_index(n * n, exec, [&](std::size_t k) {
    const std::size_t a = k / n;
    const std::size_t b = k % n;
    const UqElement x(grid[a], 1);
    const UqElement y(grid[b], 1);
    const UqElement xy = multiply(x, y);
    out[k] = BialgebraCell{grid[a], grid[b], coproduct(xy) == multiply(deltas[a], deltas[b]),
                           counit(xy) == counit(x) * counit(y)};
  });
  return out;
}

ThetaCell theta_coalgebra_at(const Monomial& m) {
  const UqElement u(m, 1);
  const PathVector image = theta(u);
  PathTensor rhs(2);
  std::map<Monomial, PathVector> memo;
  auto theta_of = [&](const Monomial& x) -> const PathVector& {
    auto it = memo.find(x);
    if (it == memo.end()) it = memo.emplace(x, theta(UqElement(x, 1))).first;
    return it->second;
  };
  const UqTensor d = coproduct(u);
  for (const auto& [legs, c] : d.terms()) {
    const PathVector& left = theta_of(legs[0]);
    const PathVector& right = theta_of(legs[1]);
    for (const auto& [pl, cl] : left.terms())
      for (const auto& [pr, cr] : right.terms()) rhs.add({pl, pr}, c * cl * cr);
  }
  return ThetaCell{m, path_delta(image) == rhs && path_counit(image) == counit(u)};
}

std::vector<ThetaCell> sweep_theta_coalgebra(int max_l, int max_degree, Exec exec) {
  const auto grid = monomial_grid(-max_l, max_l, max_degree);
  std::vector<ThetaCell> out(grid.size());
  for_each_index(grid.size(), exec, [&](std::size_t k) { out[k] = theta_coalgebra_at(grid[k]); });
  return out;
}

RelationReport sweep_relations(const QuiverRep& rep, Exec exec) {
  const auto& rels = slq2_relations();
  const auto basis = all_basis_elements(rep);
  const std::size_t nb = basis.size();
  std::vector<RepElement> images(rels.size() * nb);
  for_each_index(images.size(), exec, [&](std::size_t k) {
    images[k] = act_composed(rels[k / nb].poly, rep, basis[k % nb]);
  });
  RelationReport report;
  for (std::size_t r = 0; r < rels.size(); ++r) {
    bool ok = true;
    for (std::size_t b = 0; b < nb; ++b) {
      const RepElement& img = images[r * nb + b];
      if (img.is_zero()) continue;
      ok = false;
      const auto& [l, vec] = *basis[b].components().begin();
      int index = 0;
      while (vec[static_cast<std::size_t>(index)].is_zero()) ++index;
      report.violations.push_back({rels[r].name, l, index, img.str()});
    }
    report.relations.push_back(rels[r].name);
    report.passed.push_back(ok);
  }
  return report;
}

std::vector<PsiRelationCell> sweep_psi_relations(int max_l, int max_degree, Exec exec) {
  const auto grid = monomial_grid(-max_l, max_l, max_degree);
  const auto& rels = slq2_relations();
  std::vector<PsiRelationCell> out(rels.size() * grid.size());
  for_each_index(out.size(), exec, [&](std::size_t k) {
    const std::size_t r = k / grid.size();
    const Monomial& m = grid[k % grid.size()];
    out[k] = PsiRelationCell{r, m, psi(rels[r].poly, UqElement(m, 1))};
  });
  return out;
}

}  // namespace uqkit
