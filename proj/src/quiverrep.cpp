#include "uqkit/quiverrep.hpp"

#include <algorithm>
#include <cctype>

#include "uqkit/errors.hpp"

namespace uqkit {

QuiverRep::QuiverRep(int start, std::vector<int> dims, std::vector<Matrix> upper, std::vector<Matrix> lower)
    : start_(start), dims_(std::move(dims)), upper_(std::move(upper)), lower_(std::move(lower)) {
  const std::size_t arrows = dims_.empty() ? 0 : dims_.size() - 1;
  if (upper_.size() != arrows || lower_.size() != arrows)
    throw ShapeMismatch("expected " + std::to_string(arrows) + " upper and lower maps, got " +
                        std::to_string(upper_.size()) + " and " + std::to_string(lower_.size()));
  for (int d : dims_)
    if (d < 0) throw ShapeMismatch("negative vertex dimension");
  for (std::size_t k = 0; k < arrows; ++k) {
    for (const Matrix* m : {&upper_[k], &lower_[k]})
      if (m->rows() != dims_[k] || m->cols() != dims_[k + 1])
        throw ShapeMismatch("map out of vertex " + std::to_string(start_ + static_cast<int>(k) + 1) +
                            " has shape " + std::to_string(m->rows()) + "x" + std::to_string(m->cols()) +
                            ", expected " + std::to_string(dims_[k]) + "x" + std::to_string(dims_[k + 1]));
  }
}

int QuiverRep::dim(int l) const {
  const int k = l - start_;
  return k >= 0 && k < static_cast<int>(dims_.size()) ? dims_[static_cast<std::size_t>(k)] : 0;
}

Matrix QuiverRep::upper(int l) const {
  const int k = l - start_ - 1;
  if (k >= 0 && k < static_cast<int>(upper_.size())) return upper_[static_cast<std::size_t>(k)];
  return Matrix(dim(l - 1), dim(l));
}

Matrix QuiverRep::lower(int l) const {
  const int k = l - start_ - 1;
  if (k >= 0 && k < static_cast<int>(lower_.size())) return lower_[static_cast<std::size_t>(k)];
  return Matrix(dim(l - 1), dim(l));
}

std::vector<int> QuiverRep::support() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < dims_.size(); ++k)
    if (dims_[k] > 0) out.push_back(start_ + static_cast<int>(k));
  return out;
}

int QuiverRep::support_diameter() const {
  const auto s = support();
  return s.empty() ? 0 : s.back() - s.front();
}

// ---------------------------------------------------------------------------

void RepElement::add(int l, const QVector& v) {
  if (uqkit::is_zero(v)) return;
  auto [it, fresh] = components_.try_emplace(l, v);
  if (fresh) return;
  if (it->second.size() != v.size()) throw ShapeMismatch("vector length mismatch at vertex " + std::to_string(l));
  for (std::size_t k = 0; k < v.size(); ++k) it->second[k] += v[k];
  if (uqkit::is_zero(it->second)) components_.erase(it);
}

RepElement& RepElement::operator+=(const RepElement& o) {
  for (const auto& [l, v] : o.components_) add(l, v);
  return *this;
}

RepElement operator*(const QScalar& s, const RepElement& e) {
  RepElement out;
  for (const auto& [l, v] : e.components_) {
    QVector w = v;
    for (auto& x : w) x *= s;
    out.add(l, w);
  }
  return out;
}

std::string RepElement::str() const {
  if (components_.empty()) return "0";
  std::string out;
  for (const auto& [l, v] : components_) {
    if (!out.empty()) out += " + ";
    out += "V" + std::to_string(l) + "[";
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + v[k].str();
    out += "]";
  }
  return out;
}

RepElement basis_element(const QuiverRep& rep, int l, int k) {
  const int d = rep.dim(l);
  if (k < 0 || k >= d) throw PreconditionViolation("basis_element: index out of range at vertex " + std::to_string(l));
  QVector v(static_cast<std::size_t>(d));
  v[static_cast<std::size_t>(k)] = 1;
  return RepElement(l, v);
}

std::vector<RepElement> all_basis_elements(const QuiverRep& rep) {
  std::vector<RepElement> out;
  for (int l : rep.support())
    for (int k = 0; k < rep.dim(l); ++k) out.push_back(basis_element(rep, l, k));
  return out;
}

// ---------------------------------------------------------------------------

ValidationReport validate_rep(const QuiverRep& rep) {
  ValidationReport report;
  const auto support = rep.support();
  if (support.empty()) return report;
  const QScalar q2 = qpow(2);
  for (int l = support.front() + 2; l <= support.back(); ++l) {
    const Matrix lhs = rep.upper(l - 1) * rep.lower(l);
    const Matrix rhs = q2 * (rep.lower(l - 1) * rep.upper(l));
    if (!(lhs == rhs)) {
      report.condition_i_ok = false;
      report.violations.push_back("condition (i) fails at vertex " + std::to_string(l) + ": upper(l-1)*lower(l) = " +
                                  lhs.str() + " but q^2*lower(l-1)*upper(l) = " + rhs.str());
    }
  }
  return report;
}

Matrix path_map(const QuiverRep& rep, const Path& p) {
  Matrix m = Matrix::identity(rep.dim(p.start));
  for (int k = 0; k < p.length(); ++k) m = rep.arrow(p.start - k, p.signs[static_cast<std::size_t>(k)]) * m;
  return m;
}

namespace {

// Depth-first walk over all paths from l, pruning once the image vanishes.
template <class Visit>
void walk_paths(const QuiverRep& rep, int l, const QVector& m, Visit&& visit) {
  Path p{l, {}};
  auto rec = [&](auto&& self, const QVector& w) -> void {
    visit(p, w);
    const int at = p.end();
    for (int sign : {1, -1}) {
      if (rep.dim(at - 1) == 0) return;
      QVector next = rep.arrow(at, sign).apply(w);
      if (is_zero(next)) continue;
      p.signs.push_back(sign);
      self(self, next);
      p.signs.pop_back();
    }
  };
  if (!is_zero(m)) rec(rec, m);
}

std::map<Path, RepElement> raw_coaction(const QuiverRep& rep, const RepElement& m) {
  std::map<Path, RepElement> out;
  for (const auto& [l, v] : m.components()) {
    if (static_cast<int>(v.size()) != rep.dim(l))
      throw ShapeMismatch("element component at vertex " + std::to_string(l) + " has wrong length");
    walk_paths(rep, l, v, [&](const Path& p, const QVector& w) { out[p].add(p.end(), w); });
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace

std::map<Path, RepElement> coaction(const QuiverRep& rep, const RepElement& m) {
  const ValidationReport v = validate_rep(rep);
  if (!v.ok()) throw ValidationError(v.violations.front());
  return raw_coaction(rep, m);
}

ComoduleReport comodule_axiom_check(const QuiverRep& rep) {
  ComoduleReport report;
  const auto support = rep.support();
  if (support.empty()) return report;

  for (int l : support) {
    for (int n = 1; n <= l - support.front(); ++n)
      for (int i = 0; i <= n; ++i) {
        const auto vs = sign_vectors(n, i);
        const Matrix ref = inv(chi(vs.front())) * path_map(rep, Path{l, vs.front()});
        for (std::size_t k = 1; k < vs.size(); ++k) {
          const Matrix other = inv(chi(vs[k])) * path_map(rep, Path{l, vs[k]});
          if (!(other == ref)) {
            report.chi_ratio_ok = false;
            report.chi_violations.push_back({l, vs.front(), vs[k]});
          }
        }
      }
  }

  for (const RepElement& m : all_basis_elements(rep)) {
    const int l = m.components().begin()->first;
    const auto rho = raw_coaction(rep, m);

    auto at_vertex = rho.find(vertex(l));
    if (at_vertex == rho.end() || !(at_vertex->second == m)) {
      report.counit_ok = false;
      report.diagnostics.push_back("counit law fails for " + m.str());
    }

    // (rho (x) id) rho  versus  (id (x) Delta) rho, keyed by (outer, inner) path.
    std::map<std::pair<Path, Path>, RepElement> lhs;
    std::map<std::pair<Path, Path>, RepElement> rhs;
    for (const auto& [p, fm] : rho) {
      for (const auto& [p2, ffm] : raw_coaction(rep, fm)) lhs[{p2, p}] += ffm;
      PathTensor d = path_delta(PathVector(p, 1));
      for (const auto& [key, c] : d.terms()) rhs[{key[0], key[1]}] += c * fm;
    }
    std::erase_if(lhs, [](const auto& kv) { return kv.second.is_zero(); });
    std::erase_if(rhs, [](const auto& kv) { return kv.second.is_zero(); });
    if (lhs != rhs) {
      report.coassociativity_ok = false;
      report.diagnostics.push_back("coassociativity fails for " + m.str());
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

bool QuantumPlaneModule::satisfies_relation() const {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows()) return false;
  return x * y == qpow(2) * (y * x);
}

QuiverRep from_quantum_plane(int l, int n, const QuantumPlaneModule& u) {
  if (n < 0) throw PreconditionViolation("from_quantum_plane: n must be non-negative");
  if (u.x.rows() != u.x.cols() || u.y.rows() != u.y.cols() || u.x.rows() != u.y.rows())
    throw ShapeMismatch("quantum plane module: X and Y must be square of equal size");
  if (u.dim() < 1) throw PreconditionViolation("quantum plane module must have positive dimension");
  if (!u.satisfies_relation()) throw QuantumPlaneRelationError("X Y != q^2 Y X");
  return QuiverRep(l, std::vector<int>(static_cast<std::size_t>(n + 1), u.dim()),
                   std::vector<Matrix>(static_cast<std::size_t>(n), u.x),
                   std::vector<Matrix>(static_cast<std::size_t>(n), u.y));
}

std::string to_string(const Lambda& lambda) {
  if (std::holds_alternative<Infinity>(lambda)) return "inf";
  return std::get<QScalar>(lambda).str();
}

Lambda parse_lambda(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "inf" || s == "infinity" || s == "\xe2\x88\x9e") return Infinity{};
  return QScalar::parse(text);
}

QuiverRep schurian_rep(int l, int n, const Lambda& lambda) {
  if (n < 0) throw PreconditionViolation("schurian_rep: n must be non-negative");
  std::vector<Matrix> upper;
  std::vector<Matrix> lower;
  for (int j = l + 1; j <= l + n; ++j) {
    Matrix a(1, 1);
    Matrix b(1, 1);
    if (const auto* finite = std::get_if<QScalar>(&lambda)) {
      a(0, 0) = 1;
      b(0, 0) = *finite * qpow(-2 * (l + n - j));
    } else {
      b(0, 0) = 1;
    }
    upper.push_back(std::move(a));
    lower.push_back(std::move(b));
  }
  return QuiverRep(l, std::vector<int>(static_cast<std::size_t>(n + 1), 1), std::move(upper), std::move(lower));
}

std::variant<SchurianData, Rejection> classify_schurian(const QuiverRep& rep) {
  using Kind = Rejection::Kind;
  const auto support = rep.support();
  if (support.empty()) return Rejection{Kind::Zero, "zero representation"};
  for (int j : support)
    if (rep.dim(j) > 1)
      return Rejection{Kind::NotSchurian, "not Schurian: dimension " + std::to_string(rep.dim(j)) + " at vertex " +
                                              std::to_string(j)};
  const int l = support.front();
  const int n = support.back() - l;
  for (int j = l; j <= l + n; ++j)
    if (rep.dim(j) == 0) return Rejection{Kind::Decomposable, "decomposable: support gap at vertex " + std::to_string(j)};

  const ValidationReport v = validate_rep(rep);
  if (!v.ok()) return Rejection{Kind::NotComodule, "not a comodule: " + v.violations.front()};

  if (n == 0) return SchurianData{l, 0, QScalar()};

  std::vector<QScalar> a;
  std::vector<QScalar> b;
  for (int j = l + 1; j <= l + n; ++j) {
    a.push_back(rep.upper(j)(0, 0));
    b.push_back(rep.lower(j)(0, 0));
    if (a.back().is_zero() && b.back().is_zero())
      return Rejection{Kind::Decomposable, "decomposable: dead vertex " + std::to_string(j)};
  }
  const bool some_b_zero = std::any_of(b.begin(), b.end(), [](const QScalar& x) { return x.is_zero(); });
  const bool some_a_zero = std::any_of(a.begin(), a.end(), [](const QScalar& x) { return x.is_zero(); });
  if (some_b_zero) return SchurianData{l, n, QScalar()};
  if (some_a_zero) return SchurianData{l, n, Infinity{}};
  return SchurianData{l, n, b.front() / a.front() * qpow(2 * (n - 1))};
}

HomSpace hom_space(const QuiverRep& from, const QuiverRep& to) {
  const auto s1 = from.support();
  const auto s2 = to.support();
  HomSpace out;
  if (s1.empty() || s2.empty()) return out;
  const int lo = std::min(s1.front(), s2.front());
  const int hi = std::max(s1.back(), s2.back());

  // Unknown phi_j is a dims2(j) x dims1(j) block, row-major.
  std::map<int, int> offset;
  int unknowns = 0;
  for (int j = lo; j <= hi; ++j) {
    offset[j] = unknowns;
    unknowns += to.dim(j) * from.dim(j);
  }
  if (unknowns == 0) return out;
  auto index = [&](int j, int r, int c) { return offset[j] + r * from.dim(j) + c; };

  std::vector<std::vector<QScalar>> rows;
  for (int j = lo + 1; j <= hi; ++j)
    for (int sign : {1, -1}) {
      const Matrix f = from.arrow(j, sign);
      const Matrix g = to.arrow(j, sign);
      for (int r = 0; r < to.dim(j - 1); ++r)
        for (int c = 0; c < from.dim(j); ++c) {
          std::vector<QScalar> row(static_cast<std::size_t>(unknowns));
          for (int k = 0; k < from.dim(j - 1); ++k) row[static_cast<std::size_t>(index(j - 1, r, k))] += f(k, c);
          for (int k = 0; k < to.dim(j); ++k) row[static_cast<std::size_t>(index(j, k, c))] -= g(r, k);
          if (!is_zero(row)) rows.push_back(std::move(row));
        }
    }

  const auto basis = nullspace(Matrix::from_rows(rows, unknowns));
  out.dimension = static_cast<int>(basis.size());
  for (const auto& vec : basis) {
    std::map<int, Matrix> phi;
    for (int j = lo; j <= hi; ++j) {
      if (to.dim(j) * from.dim(j) == 0) continue;
      Matrix m(to.dim(j), from.dim(j));
      for (int r = 0; r < to.dim(j); ++r)
        for (int c = 0; c < from.dim(j); ++c) m(r, c) = vec[static_cast<std::size_t>(index(j, r, c))];
      phi.emplace(j, std::move(m));
    }
    out.basis.push_back(std::move(phi));
  }
  return out;
}

}  // namespace uqkit
