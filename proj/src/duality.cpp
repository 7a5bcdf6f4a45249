#include "uqkit/duality.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <tuple>

#include "uqkit/errors.hpp"

namespace uqkit {

SlPoly to_poly(const GenWord& w) { return SlPoly(w.letters, w.coeff); }

SlPoly concat(const SlPoly& x, const SlPoly& y) {
  SlPoly out;
  for (const auto& [wx, cx] : x.terms())
    for (const auto& [wy, cy] : y.terms()) {
      SlWord w = wx;
      w.insert(w.end(), wy.begin(), wy.end());
      out.add(w, cx * cy);
    }
  return out;
}

char letter(SlGen g) { return static_cast<char>('a' + static_cast<int>(g)); }

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string strip(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  return s;
}

// Splits at depth-0 occurrences of any character in `seps`; a sign directly
// after '^' belongs to an exponent and does not split.
std::vector<std::pair<char, std::string>> split_top(const std::string& s, std::string_view seps) {
  std::vector<std::pair<char, std::string>> out;
  int depth = 0;
  char pending = '+';
  std::string cur;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const char ch = s[k];
    if (ch == '(' || ch == '{') ++depth;
    if (ch == ')' || ch == '}') --depth;
    if (depth < 0) throw ParseError("word: unbalanced parentheses in \"" + s + "\"");
    const bool exponent_sign = k > 0 && s[k - 1] == '^';
    if (depth == 0 && seps.find(ch) != std::string_view::npos && !exponent_sign) {
      out.emplace_back(pending, cur);
      pending = ch;
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (depth != 0) throw ParseError("word: unbalanced parentheses in \"" + s + "\"");
  out.emplace_back(pending, cur);
  return out;
}

bool all_letters(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= 'a' && c <= 'd'; });
}

}  // namespace

SlPoly parse_word(std::string_view text) {
  const std::string s = strip(text);
  SlPoly out;
  if (s.empty()) return SlPoly(SlWord{}, 1);
  auto terms = split_top(s, "+-");
  // A leading sign yields an empty first piece.
  if (terms.front().second.empty() && terms.size() > 1) terms.erase(terms.begin());
  for (const auto& [sign, body] : terms) {
    if (body.empty()) throw ParseError("word: empty term in \"" + s + "\"");
    QScalar coeff = sign == '-' ? QScalar(-1) : QScalar(1);
    SlWord letters;
    for (const auto& [sep, piece] : split_top(body, "*")) {
      if (piece.empty()) throw ParseError("word: empty factor in \"" + s + "\"");
      if (all_letters(piece)) {
        for (char c : piece) letters.push_back(static_cast<SlGen>(c - 'a'));
      } else {
        coeff *= QScalar::parse(piece);
      }
    }
    out.add(letters, coeff);
  }
  return out;
}

std::string to_string(const SlPoly& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : x.terms()) {
    std::string basis;
    for (SlGen g : w) {
      if (!basis.empty()) basis += '*';
      basis += letter(g);
    }
    const bool simple = c.is_laurent() && c.num().term_count() == 1;
    const std::string cs = simple ? c.str() : "(" + c.str() + ")";
    std::string t = basis.empty() ? cs
                    : c.is_one() ? basis
                    : c == QScalar(-1) ? "-" + basis
                    : cs + "*" + basis;
    if (out.empty()) out = t;
    else if (t.front() == '-') out += " - " + t.substr(1);
    else out += " + " + t;
  }
  return out;
}

const std::vector<Relation>& slq2_relations() {
  static const std::vector<Relation> rels = [] {
    const char* text[] = {"b*a - q*a*b",         "d*b - q*b*d", "c*a - q*a*c",
                          "d*c - q*c*d",         "b*c - c*b",   "a*d - d*a - (q^-1 - q)*b*c",
                          "d*a - q*b*c - 1"};
    std::vector<Relation> out;
    for (const char* t : text) out.push_back({t, parse_word(t)});
    return out;
  }();
  return rels;
}

// ---------------------------------------------------------------------------
// psi

namespace {

QScalar psi_monomial(SlGen x, const Monomial& m) {
  switch (x) {
    case SlGen::a:
      return (m.i == 0 && m.j == 0) || (m.i == 1 && m.j == 1) ? qpow(m.l) : QScalar();
    case SlGen::b:
      return m.i == 1 && m.j == 0 ? qpow(m.l) : QScalar();
    case SlGen::c:
      return m.i == 0 && m.j == 1 ? qpow(-m.l) : QScalar();
    case SlGen::d:
      return m.i == 0 && m.j == 0 ? qpow(-m.l) : QScalar();
  }
  return QScalar();
}

}  // namespace

QScalar psi_gen(SlGen x, const UqElement& u) {
  QScalar out;
  for (const auto& [m, c] : u.terms()) {
    const QScalar v = psi_monomial(x, m);
    if (!v.is_zero()) out += c * v;
  }
  return out;
}

QScalar psi_word(const SlWord& w, const UqElement& u) {
  if (w.empty()) return counit(u);
  if (w.size() == 1) return psi_gen(w.front(), u);
  // Each letter only sees degree <= 2, so higher components pair to zero.
  UqElement low;
  for (const auto& [m, c] : u.terms())
    if (m.degree() <= 2 * static_cast<int>(w.size())) low.add(m, c);
  QScalar out;
  const UqTensor t = iterated_coproduct(low, static_cast<int>(w.size()) - 1);
  for (const auto& [legs, c] : t.terms()) {
    QScalar prod = c;
    for (std::size_t k = 0; k < legs.size() && !prod.is_zero(); ++k) prod *= psi_monomial(w[k], legs[k]);
    if (!prod.is_zero()) out += prod;
  }
  return out;
}

QScalar psi_word(const GenWord& w, const UqElement& u) { return w.coeff * psi_word(w.letters, u); }

QScalar psi(const SlPoly& x, const UqElement& u) {
  QScalar out;
  for (const auto& [w, c] : x.terms()) out += c * psi_word(w, u);
  return out;
}

UqElement b_preimage(int l, int n, int i) {
  if (n < 0 || i < 0 || i > n) throw PreconditionViolation("b_preimage: requires 0 <= i <= n");
  const int j = n - i;
  const QScalar scale = qpow(i * (i + 1)) / (gauss_factorial(i, qpow(2)) * gauss_factorial(j, qpow(-2)));
  return primed_monomial(l, i, j) * scale;
}

namespace {

QScalar psi_word_on_b(const SlWord& w, int l, int n, int i) {
  if (n > 2 * static_cast<int>(w.size())) return QScalar();
  static std::mutex mu;
  static std::map<std::tuple<SlWord, int, int, int>, QScalar> cache;
  const auto key = std::make_tuple(w, l, n, i);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  QScalar v = psi_word(w, b_preimage(l, n, i));
  std::lock_guard lock(mu);
  cache.emplace(key, v);
  return v;
}

}  // namespace

QScalar psi_on_b(const SlPoly& x, int l, int n, int i) {
  QScalar out;
  for (const auto& [w, c] : x.terms()) {
    const QScalar v = psi_word_on_b(w, l, n, i);
    if (!v.is_zero()) out += c * v;
  }
  return out;
}

QScalar psi_primed_table(SlGen x, int l, int i, int j) {
  switch (x) {
    case SlGen::a:
      if (i == 0 && j == 0) return qpow(l);
      return i == 1 && j == 1 ? qpow(l - 1) : QScalar();
    case SlGen::b:
      return i == 1 && j == 0 ? qpow(l - 1) : QScalar();
    case SlGen::c:
      return i == 0 && j == 1 ? qpow(-l) : QScalar();
    case SlGen::d:
      return i == 0 && j == 0 ? qpow(-l) : QScalar();
  }
  return QScalar();
}

std::vector<std::string> check_primed_table(int max_l, int max_ij) {
  std::vector<std::string> bad;
  for (int l = -max_l; l <= max_l; ++l)
    for (int i = 0; i <= max_ij; ++i)
      for (int j = 0; j <= max_ij; ++j) {
        const UqElement u = primed_monomial(l, i, j);
        for (SlGen x : {SlGen::a, SlGen::b, SlGen::c, SlGen::d}) {
          const QScalar got = psi_gen(x, u);
          const QScalar want = psi_primed_table(x, l, i, j);
          if (got != want)
            bad.push_back(std::string("psi(") + letter(x) + ")(K^" + std::to_string(l) + " E'^" + std::to_string(i) +
                          " F^" + std::to_string(j) + "): " + got.str() + " vs " + want.str());
        }
      }
  return bad;
}

// ---------------------------------------------------------------------------
// Actions

namespace {

int longest_word(const SlPoly& x) {
  int n = 0;
  for (const auto& [w, c] : x.terms()) n = std::max(n, static_cast<int>(w.size()));
  return n;
}

}  // namespace

RepElement act_word(const SlPoly& x, const QuiverRep& rep, const RepElement& m) {
  const ValidationReport v = validate_rep(rep);
  if (!v.ok()) throw ValidationError(v.violations.front());
  const int reach = 2 * longest_word(x);
  RepElement out;
  for (const auto& [l, vec] : m.components()) {
    // rho(m) = sum over (n, i) of m(n, i) (x) b(l, n, i), with
    // m(n, i) = f^{(v)}(m) / chi(v) for any v of that shape.
    std::map<std::pair<int, int>, std::vector<RepElement>> groups;
    for (const auto& [p, fm] : coaction(rep, RepElement(l, vec))) {
      if (p.length() > reach) continue;
      const int plus = static_cast<int>(std::count(p.signs.begin(), p.signs.end(), 1));
      groups[{p.length(), plus}].push_back(inv(chi(p.signs)) * fm);
    }
    for (const auto& [ni, images] : groups) {
      const auto [n, i] = ni;
      const std::size_t expected = sign_vectors(n, i).size();
      const bool consistent = images.size() == expected &&
                              std::all_of(images.begin(), images.end(), [&](const RepElement& e) { return e == images.front(); });
      if (!consistent)
        throw ValidationError("coaction of a vector at vertex " + std::to_string(l) +
                              " does not factor through b(" + std::to_string(l) + ", " + std::to_string(n) + ", " +
                              std::to_string(i) + ")");
      const QScalar c = psi_on_b(x, l, n, i);
      if (!c.is_zero()) out += c * images.front();
    }
  }
  return out;
}

RepElement act_word_unchecked(const SlPoly& x, const QuiverRep& rep, const RepElement& m) {
  const int reach = 2 * longest_word(x);
  RepElement out;
  for (const auto& [l, vec] : m.components())
    for (int n = 0; n <= reach; ++n)
      for (int i = 0; i <= n; ++i) {
        const QScalar c = psi_on_b(x, l, n, i);
        if (c.is_zero()) continue;
        // Plus-signs first; for (2, 1) this is (1, -1), as in the closed form.
        const SignVector v = sign_vectors(n, i).back();
        QVector img = path_map(rep, Path{l, v}).apply(vec);
        out += (c / chi(v)) * RepElement(l - n, img);
      }
  return out;
}

RepElement act_composed(const SlPoly& x, const QuiverRep& rep, const RepElement& m) {
  RepElement out;
  for (const auto& [w, c] : x.terms()) {
    RepElement cur = m;
    for (auto it = w.rbegin(); it != w.rend() && !cur.is_zero(); ++it)
      cur = act_word_unchecked(SlPoly(SlWord{*it}, 1), rep, cur);
    out += c * cur;
  }
  return out;
}

RepElement act_closed(SlGen x, const QuiverRep& rep, const RepElement& m) {
  RepElement out;
  for (const auto& [l, vec] : m.components()) {
    switch (x) {
      case SlGen::a:
        out += qpow(l) * RepElement(l, vec);
        out += qpow(l - 1) * RepElement(l - 2, path_map(rep, Path{l, {1, -1}}).apply(vec));
        break;
      case SlGen::b:
        out += qpow(l - 1) * RepElement(l - 1, rep.upper(l).apply(vec));
        break;
      case SlGen::c:
        out += qpow(-l) * RepElement(l - 1, rep.lower(l).apply(vec));
        break;
      case SlGen::d:
        out += qpow(-l) * RepElement(l, vec);
        break;
    }
  }
  return out;
}

RelationReport check_slq2_relations(const QuiverRep& rep) {
  RelationReport report;
  const auto basis = all_basis_elements(rep);
  for (const Relation& r : slq2_relations()) {
    bool ok = true;
    for (const RepElement& m : basis) {
      const RepElement img = act_composed(r.poly, rep, m);
      if (img.is_zero()) continue;
      ok = false;
      const auto& [l, vec] = *m.components().begin();
      const int index = static_cast<int>(std::find_if(vec.begin(), vec.end(), [](const QScalar& c) { return !c.is_zero(); }) -
                                         vec.begin());
      report.violations.push_back({r.name, l, index, img.str()});
    }
    report.relations.push_back(r.name);
    report.passed.push_back(ok);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Hopf compatibility

SlPoly slq2_antipode(const SlPoly& x) {
  SlPoly out;
  for (const auto& [w, c] : x.terms()) {
    SlWord image;
    QScalar coeff = c;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      switch (*it) {
        case SlGen::a: image.push_back(SlGen::d); break;
        case SlGen::b: image.push_back(SlGen::b); coeff *= -qpow(1); break;
        case SlGen::c: image.push_back(SlGen::c); coeff *= -qpow(-1); break;
        case SlGen::d: image.push_back(SlGen::a); break;
      }
    }
    out.add(image, coeff);
  }
  return out;
}

Combination<std::pair<SlWord, SlWord>> slq2_coproduct(const SlWord& w) {
  using Pair = std::pair<SlWord, SlWord>;
  using G = SlGen;
  Combination<Pair> acc(Pair{}, 1);
  for (SlGen g : w) {
    std::vector<std::pair<G, G>> parts;
    switch (g) {
      case G::a: parts = {{G::a, G::a}, {G::b, G::c}}; break;
      case G::b: parts = {{G::a, G::b}, {G::b, G::d}}; break;
      case G::c: parts = {{G::c, G::a}, {G::d, G::c}}; break;
      case G::d: parts = {{G::c, G::b}, {G::d, G::d}}; break;
    }
    Combination<Pair> next;
    for (const auto& [key, c] : acc.terms())
      for (const auto& [x1, x2] : parts) {
        Pair k = key;
        k.first.push_back(x1);
        k.second.push_back(x2);
        next.add(k, c);
      }
    acc = std::move(next);
  }
  return acc;
}

bool check_duality_antipode(const SlPoly& x, const UqElement& u) {
  return psi(x, antipode(u)) == phi(u, slq2_antipode(x));
}

bool check_phi_multiplicative(const SlWord& x, const UqElement& u, const UqElement& v) {
  const QScalar lhs = psi_word(x, multiply(u, v));
  QScalar rhs;
  const auto split = slq2_coproduct(x);
  for (const auto& [parts, c] : split.terms())
    rhs += c * psi_word(parts.first, u) * psi_word(parts.second, v);
  return lhs == rhs;
}

}  // namespace uqkit
