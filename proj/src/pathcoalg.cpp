#include "uqkit/pathcoalg.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "uqkit/errors.hpp"

namespace uqkit {

QScalar chi(std::span<const int> v) {
  int sum = 0;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (v[t] != 1 && v[t] != -1) throw PreconditionViolation("sign vector entries must be +1 or -1");
    if (v[t] == 1) sum += static_cast<int>(t) + 1;
  }
  return qpow(2 * sum);
}

std::vector<SignVector> sign_vectors(int n, int i) {
  if (n < 0 || i < 0 || i > n) throw PreconditionViolation("sign_vectors: requires 0 <= i <= n");
  std::vector<SignVector> out;
  SignVector v(static_cast<std::size_t>(n), -1);
  std::fill(v.end() - i, v.end(), 1);
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

PathVector basis_b(int l, int n, int i) {
  if (n < 0 || i < 0 || i > n) throw PreconditionViolation("basis_b: requires 0 <= i <= n");
  PathVector out;
  for (auto& v : sign_vectors(n, i)) {
    QScalar c = chi(v);
    out.add(Path{l, std::move(v)}, c);
  }
  return out;
}

namespace {

// All splittings p = beta alpha as (beta, alpha).
std::vector<std::pair<Path, Path>> splittings(const Path& p) {
  std::vector<std::pair<Path, Path>> out;
  for (int k = 0; k <= p.length(); ++k) {
    Path alpha{p.start, SignVector(p.signs.begin(), p.signs.begin() + k)};
    Path beta{p.start - k, SignVector(p.signs.begin() + k, p.signs.end())};
    out.emplace_back(std::move(beta), std::move(alpha));
  }
  return out;
}

}  // namespace

PathTensor path_delta(const PathVector& x) {
  PathTensor out(2);
  for (const auto& [p, c] : x.terms())
    for (auto& [beta, alpha] : splittings(p)) out.add({beta, alpha}, c);
  return out;
}

PathTensor path_delta_at(const PathTensor& t, int leg) {
  if (leg < 0 || leg >= t.arity()) throw PreconditionViolation("path_delta_at: leg out of range");
  PathTensor out(t.arity() + 1);
  for (const auto& [key, c] : t.terms())
    for (auto& [beta, alpha] : splittings(key[static_cast<std::size_t>(leg)])) {
      std::vector<Path> k2(key.begin(), key.begin() + leg);
      k2.push_back(beta);
      k2.push_back(alpha);
      k2.insert(k2.end(), key.begin() + leg + 1, key.end());
      out.add(k2, c);
    }
  return out;
}

QScalar path_counit(const PathVector& x) {
  QScalar out;
  for (const auto& [p, c] : x.terms())
    if (p.length() == 0) out += c;
  return out;
}

namespace {

struct Arrow {
  int start;
  int sign;
};

// Projection of U_q(sl_2) onto its degree-one part, identified with arrows:
// K^{l-1} E -> upper arrow at e_l, K^l F -> lower arrow at e_l.
std::optional<Arrow> project_to_arrow(const Monomial& m) {
  if (m.i == 1 && m.j == 0) return Arrow{m.l + 1, 1};
  if (m.i == 0 && m.j == 1) return Arrow{m.l, -1};
  return std::nullopt;
}

}  // namespace

PathVector theta(const UqElement& u) {
  PathVector out;
  std::map<int, UqElement> by_degree;
  for (const auto& [m, c] : u.terms()) by_degree[m.degree()].add(m, c);

  for (const auto& [n, part] : by_degree) {
    if (n == 0) {
      for (const auto& [m, c] : part.terms()) out.add(vertex(m.l), c);
      continue;
    }
    // pi^{(x) n} o Delta^{n-1}, splitting the last leg and discarding terms
    // whose finished legs are not of degree one (they project to zero).
    UqTensor t(1);
    for (const auto& [m, c] : part.terms()) t.add({m}, c);
    for (int k = 0; k + 1 < n; ++k) {
      UqTensor split = coproduct_at(t, t.arity() - 1);
      UqTensor kept(split.arity());
      for (const auto& [key, c] : split.terms())
        if (key[key.size() - 2].degree() == 1) kept.add(key, c);
      t = std::move(kept);
    }

    // Arrow tuples that do not compose must cancel in the image.
    Combination<std::vector<std::pair<int, int>>> stray;
    for (const auto& [key, c] : t.terms()) {
      std::vector<Arrow> arrows;
      for (const auto& m : key) {
        auto a = project_to_arrow(m);
        if (!a) break;
        arrows.push_back(*a);
      }
      if (arrows.size() != key.size()) continue;
      // The rightmost leg is the first arrow of the path.
      Path p{arrows.back().start, {}};
      bool composable = true;
      for (std::size_t k = arrows.size(); k-- > 0;) {
        if (arrows[k].start != p.start - p.length()) composable = false;
        p.signs.push_back(arrows[k].sign);
      }
      if (composable) {
        out.add(p, c);
      } else {
        std::vector<std::pair<int, int>> raw;
        for (const auto& a : arrows) raw.emplace_back(a.start, a.sign);
        stray.add(raw, c);
      }
    }
    if (!stray.is_zero()) throw std::logic_error("theta: non-composable arrow tensor did not cancel");
  }
  return out;
}

Identity31Result verify_identity_31(int l, int i, int j) {
  if (i < 0 || j < 0) throw PreconditionViolation("verify_identity_31: negative exponent");
  Identity31Result r;
  r.lhs = theta(primed_monomial(l, i, j));
  const QScalar scale = gauss_factorial(i, qpow(2)) * gauss_factorial(j, qpow(-2)) * qpow(-i * (i + 1));
  r.rhs = basis_b(l, i + j, i) * scale;
  r.difference = r.lhs - r.rhs;
  r.equal = r.difference.is_zero();
  return r;
}

namespace {

BIndex b_index_of(const Path& p) {
  return BIndex{p.start, p.length(), static_cast<int>(std::count(p.signs.begin(), p.signs.end(), 1))};
}

}  // namespace

std::optional<Combination<BIndex>> b_coordinates(const PathVector& x) {
  // The b-basis elements have pairwise disjoint path supports, so the linear
  // system is block diagonal: one unknown per block, fixed by any one path.
  std::map<BIndex, QScalar> coord;
  for (const auto& [p, c] : x.terms()) {
    const BIndex b = b_index_of(p);
    if (!coord.contains(b)) coord.emplace(b, c / chi(p.signs));
  }
  Combination<BIndex> out;
  PathVector residual = x;
  for (const auto& [b, c] : coord) {
    out.add(b, c);
    residual -= basis_b(b.l, b.n, b.i) * c;
  }
  if (!residual.is_zero()) return std::nullopt;
  return out;
}

std::optional<Combination<std::vector<BIndex>>> b_coordinates(const PathTensor& t) {
  if (t.arity() != 2) throw ShapeMismatch("b_coordinates: arity-2 tensor expected");
  std::map<std::vector<BIndex>, QScalar> coord;
  for (const auto& [key, c] : t.terms()) {
    std::vector<BIndex> b{b_index_of(key[0]), b_index_of(key[1])};
    if (!coord.contains(b)) coord.emplace(b, c / (chi(key[0].signs) * chi(key[1].signs)));
  }
  Combination<std::vector<BIndex>> out;
  PathTensor residual = t;
  for (const auto& [b, c] : coord) {
    out.add(b, c);
    const PathVector left = basis_b(b[0].l, b[0].n, b[0].i);
    const PathVector right = basis_b(b[1].l, b[1].n, b[1].i);
    for (const auto& [pl, cl] : left.terms())
      for (const auto& [pr, cr] : right.terms()) residual.add({pl, pr}, -(c * cl * cr));
  }
  if (!residual.is_zero()) return std::nullopt;
  return out;
}

std::string to_string(const Path& p) {
  std::string out = std::to_string(p.start) + ":[";
  for (std::size_t t = 0; t < p.signs.size(); ++t) {
    if (t) out += ',';
    out += p.signs[t] == 1 ? '+' : '-';
  }
  return out + "]";
}

Path parse_path(std::string_view text) {
  auto fail = [&](const char* what) -> Path {
    throw ParseError(std::string("path: ") + what + " in \"" + std::string(text) + "\"");
  };
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  const auto colon = s.find(':');
  if (colon == std::string::npos || colon == 0) return fail("expected `l:[...]`");
  Path p;
  try {
    std::size_t used = 0;
    p.start = std::stoi(s.substr(0, colon), &used);
    if (used != colon) return fail("bad start vertex");
  } catch (const std::logic_error&) {
    return fail("bad start vertex");
  }
  if (s.size() < colon + 3 || s[colon + 1] != '[' || s.back() != ']') return fail("expected bracketed sign list");
  const std::string body = s.substr(colon + 2, s.size() - colon - 3);
  for (std::size_t k = 0; k < body.size(); ++k) {
    const bool sep = k % 2 == 1;
    if (sep) {
      if (body[k] != ',') return fail("expected ','");
      if (k + 1 == body.size()) return fail("trailing ','");
    } else if (body[k] == '+') {
      p.signs.push_back(1);
    } else if (body[k] == '-') {
      p.signs.push_back(-1);
    } else {
      return fail("sign must be '+' or '-'");
    }
  }
  return p;
}

std::string to_string(const PathVector& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [p, c] : x.terms()) {
    const bool simple = c.is_laurent() && c.num().term_count() == 1;
    std::string t = c.is_one() ? "P" + to_string(p)
                   : c == QScalar(-1) ? "-P" + to_string(p)
                   : (simple ? c.str() : "(" + c.str() + ")") + "*P" + to_string(p);
    if (out.empty()) out = t;
    else if (t.front() == '-') out += " - " + t.substr(1);
    else out += " + " + t;
  }
  return out;
}

}  // namespace uqkit
