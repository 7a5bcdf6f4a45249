#include "uqkit/uqsl2.hpp"

#include <map>
#include <random>

#include "uqkit/errors.hpp"

namespace uqkit {

UqElement uq_monomial(int l, int i, int j, const QScalar& c) {
  if (i < 0 || j < 0) throw PreconditionViolation("PBW exponents of E and F must be non-negative");
  return UqElement(Monomial{l, i, j}, c);
}

namespace {

// 1 / (q - q^-1)
const QScalar& commutator_scale() {
  static const QScalar c = inv(qpow(1) - qpow(-1));
  return c;
}

// ---------------------------------------------------------------------------
// Word rewriting

using Word = std::vector<UqGen>;

bool out_of_order(UqGen a, UqGen b) {
  switch (a) {
    case UqGen::K:
      return b == UqGen::Kinv;
    case UqGen::Kinv:
      return b == UqGen::K;
    case UqGen::E:
      return b == UqGen::K || b == UqGen::Kinv;
    case UqGen::F:
      return b != UqGen::F;
  }
  return false;
}

Monomial read_sorted(const Word& w) {
  Monomial m;
  for (UqGen g : w) {
    switch (g) {
      case UqGen::K: ++m.l; break;
      case UqGen::Kinv: --m.l; break;
      case UqGen::E: ++m.i; break;
      case UqGen::F: ++m.j; break;
    }
  }
  return m;
}

}  // namespace

UqElement normal_form(const QScalar& coeff, std::span<const UqGen> word, RewriteOrder order, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Pending words, merged by key so identical words are reduced once.
  std::map<Word, QScalar> pending;
  pending[Word(word.begin(), word.end())] = coeff;
  UqElement out;

  auto push = [&](Word w, const QScalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = pending.try_emplace(std::move(w), c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) pending.erase(it);
    }
  };

  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    Word w = std::move(node.key());
    const QScalar c = std::move(node.mapped());

    std::vector<std::size_t> redexes;
    for (std::size_t p = 0; p + 1 < w.size(); ++p)
      if (out_of_order(w[p], w[p + 1])) {
        redexes.push_back(p);
        if (order == RewriteOrder::Leftmost) break;
      }
    if (redexes.empty()) {
      out.add(read_sorted(w), c);
      continue;
    }
    std::size_t p = redexes.front();
    if (order == RewriteOrder::Random)
      p = redexes[std::uniform_int_distribution<std::size_t>(0, redexes.size() - 1)(rng)];

    const UqGen a = w[p];
    const UqGen b = w[p + 1];
    auto splice = [&](std::initializer_list<UqGen> repl) {
      Word r(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
      r.insert(r.end(), repl);
      r.insert(r.end(), w.begin() + static_cast<std::ptrdiff_t>(p + 2), w.end());
      return r;
    };

    if ((a == UqGen::K && b == UqGen::Kinv) || (a == UqGen::Kinv && b == UqGen::K)) {
      push(splice({}), c);
    } else if (a == UqGen::E) {
      push(splice({b, a}), c * qpow(b == UqGen::K ? -2 : 2));
    } else if (b == UqGen::K || b == UqGen::Kinv) {  // a == F
      push(splice({b, a}), c * qpow(b == UqGen::K ? 2 : -2));
    } else {  // F E
      push(splice({UqGen::E, UqGen::F}), c);
      push(splice({UqGen::K}), -c * commutator_scale());
      push(splice({UqGen::Kinv}), c * commutator_scale());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Product via left action of generators on normal forms

namespace {

// F * E^x, by peeling one E at a time with F E = E F - c (K - K^-1).
UqElement f_times_e_power(int x) {
  UqElement acc = uq_monomial(0, 0, 1);  // F * E^0
  for (int k = 1; k <= x; ++k) {
    // F E^k = (F E^{k-1}) E ... expressed as E (F E^{k-1}) - c (K - K^-1) E^{k-1}
    UqElement next;
    for (const auto& [m, c] : acc.terms()) {
      // E * K^t E^a F^b = q^{-2t} K^t E^{a+1} F^b
      next.add(Monomial{m.l, m.i + 1, m.j}, c * qpow(-2 * m.l));
    }
    next.add(Monomial{1, k - 1, 0}, -commutator_scale());
    next.add(Monomial{-1, k - 1, 0}, commutator_scale());
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

UqElement left_multiply(UqGen g, const UqElement& u) {
  UqElement out;
  for (const auto& [m, c] : u.terms()) {
    switch (g) {
      case UqGen::K:
        out.add(Monomial{m.l + 1, m.i, m.j}, c);
        break;
      case UqGen::Kinv:
        out.add(Monomial{m.l - 1, m.i, m.j}, c);
        break;
      case UqGen::E:
        out.add(Monomial{m.l, m.i + 1, m.j}, c * qpow(-2 * m.l));
        break;
      case UqGen::F: {
        // F K^t = q^{2t} K^t F, then F E^i expands, then append F^j.
        const QScalar shift = c * qpow(2 * m.l);
        const UqElement fe = f_times_e_power(m.i);
        for (const auto& [fm, fc] : fe.terms())
          out.add(Monomial{m.l + fm.l, fm.i, fm.j + m.j}, shift * fc);
        break;
      }
    }
  }
  return out;
}

namespace {

UqElement monomial_product(const Monomial& a, const Monomial& b) {
  UqElement acc(b, 1);
  for (int k = 0; k < a.j; ++k) acc = left_multiply(UqGen::F, acc);
  for (int k = 0; k < a.i; ++k) acc = left_multiply(UqGen::E, acc);
  const UqGen kg = a.l >= 0 ? UqGen::K : UqGen::Kinv;
  for (int k = 0; k < std::abs(a.l); ++k) acc = left_multiply(kg, acc);
  return acc;
}

}  // namespace

UqElement multiply(const UqElement& u, const UqElement& v) {
  UqElement out;
  for (const auto& [a, ca] : u.terms())
    for (const auto& [b, cb] : v.terms()) {
      UqElement p = monomial_product(a, b);
      p *= ca * cb;
      out += p;
    }
  return out;
}

// ---------------------------------------------------------------------------
// Tensors

UqTensor tensor_of(std::span<const UqElement> legs) {
  const int arity = static_cast<int>(legs.size());
  UqTensor acc(arity);
  std::vector<Monomial> key(legs.size());
  // Depth-first expansion of the product of leg sums.
  auto rec = [&](auto&& self, std::size_t k, const QScalar& c) -> void {
    if (k == legs.size()) {
      acc.add(key, c);
      return;
    }
    for (const auto& [m, mc] : legs[k].terms()) {
      key[k] = m;
      self(self, k + 1, c * mc);
    }
  };
  rec(rec, 0, QScalar(1));
  return acc;
}

UqTensor multiply(const UqTensor& a, const UqTensor& b) {
  if (a.arity() != b.arity()) throw ShapeMismatch("tensor arity mismatch in product");
  UqTensor out(a.arity());
  std::vector<UqElement> legs(static_cast<std::size_t>(a.arity()));
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      for (std::size_t t = 0; t < legs.size(); ++t) legs[t] = monomial_product(ka[t], kb[t]);
      UqTensor part = tensor_of(legs);
      part *= ca * cb;
      out += part;
    }
  return out;
}

namespace {

UqTensor generator_coproduct(UqGen g) {
  UqTensor t(2);
  switch (g) {
    case UqGen::K:
      t.add({{1, 0, 0}, {1, 0, 0}}, 1);
      break;
    case UqGen::Kinv:
      t.add({{-1, 0, 0}, {-1, 0, 0}}, 1);
      break;
    case UqGen::E:
      t.add({{0, 0, 0}, {0, 1, 0}}, 1);
      t.add({{0, 1, 0}, {1, 0, 0}}, 1);
      break;
    case UqGen::F:
      t.add({{-1, 0, 0}, {0, 0, 1}}, 1);
      t.add({{0, 0, 1}, {0, 0, 0}}, 1);
      break;
  }
  return t;
}

UqTensor monomial_coproduct(const Monomial& m) {
  UqTensor acc(2);
  acc.add({{0, 0, 0}, {0, 0, 0}}, 1);
  const UqTensor dk = generator_coproduct(m.l >= 0 ? UqGen::K : UqGen::Kinv);
  for (int k = 0; k < std::abs(m.l); ++k) acc = multiply(acc, dk);
  const UqTensor de = generator_coproduct(UqGen::E);
  for (int k = 0; k < m.i; ++k) acc = multiply(acc, de);
  const UqTensor df = generator_coproduct(UqGen::F);
  for (int k = 0; k < m.j; ++k) acc = multiply(acc, df);
  return acc;
}

}  // namespace

UqTensor coproduct(const UqElement& u) {
  UqTensor out(2);
  for (const auto& [m, c] : u.terms()) {
    UqTensor d = monomial_coproduct(m);
    d *= c;
    out += d;
  }
  return out;
}

UqTensor coproduct_at(const UqTensor& t, int leg) {
  if (leg < 0 || leg >= t.arity()) throw PreconditionViolation("coproduct_at: leg out of range");
  UqTensor out(t.arity() + 1);
  std::map<Monomial, UqTensor> cache;
  for (const auto& [key, c] : t.terms()) {
    auto it = cache.find(key[leg]);
    if (it == cache.end()) it = cache.emplace(key[leg], monomial_coproduct(key[leg])).first;
    for (const auto& [pair, pc] : it->second.terms()) {
      std::vector<Monomial> k2;
      k2.reserve(key.size() + 1);
      k2.insert(k2.end(), key.begin(), key.begin() + leg);
      k2.push_back(pair[0]);
      k2.push_back(pair[1]);
      k2.insert(k2.end(), key.begin() + leg + 1, key.end());
      out.add(k2, c * pc);
    }
  }
  return out;
}

UqTensor iterated_coproduct(const UqElement& u, int n) {
  if (n < 0) throw PreconditionViolation("iterated_coproduct: n must be non-negative");
  UqTensor t(1);
  for (const auto& [m, c] : u.terms()) t.add({m}, c);
  // (Id (x) Delta^{n-1}) o Delta: split the last leg each time.
  for (int k = 0; k < n; ++k) t = coproduct_at(t, t.arity() - 1);
  return t;
}

QScalar counit(const UqElement& u) {
  QScalar out;
  for (const auto& [m, c] : u.terms())
    if (m.i == 0 && m.j == 0) out += c;
  return out;
}

UqElement antipode(const UqElement& u) {
  const UqElement s_e = multiply(uq_monomial(0, 1, 0, -1), uq_monomial(-1, 0, 0));  // -E K^-1
  const UqElement s_f = multiply(uq_monomial(1, 0, 0, -1), uq_monomial(0, 0, 1));   // -K F
  UqElement out;
  for (const auto& [m, c] : u.terms()) {
    // S(K^l E^i F^j) = S(F)^j S(E)^i S(K)^l
    UqElement acc = uq_scalar(c);
    for (int k = 0; k < m.j; ++k) acc = multiply(acc, s_f);
    for (int k = 0; k < m.i; ++k) acc = multiply(acc, s_e);
    acc = multiply(acc, uq_monomial(-m.l, 0, 0));
    out += acc;
  }
  return out;
}

UqElement multiply_legs(const UqTensor& t) {
  if (t.arity() != 2) throw ShapeMismatch("multiply_legs requires an arity-2 tensor");
  UqElement out;
  for (const auto& [key, c] : t.terms()) {
    UqElement p = monomial_product(key[0], key[1]);
    p *= c;
    out += p;
  }
  return out;
}

UqElement graded_component(const UqElement& u, int n) {
  UqElement out;
  for (const auto& [m, c] : u.terms())
    if (m.degree() == n) out.add(m, c);
  return out;
}

UqElement primed_monomial(int l, int i, int j) {
  if (i < 0 || j < 0) throw PreconditionViolation("primed_monomial: negative exponent");
  UqElement acc = uq_monomial(0, 0, j);
  for (int k = 0; k < i; ++k) acc = left_multiply(UqGen::Kinv, left_multiply(UqGen::E, acc));
  return multiply(uq_monomial(l, 0, 0), acc);
}

// ---------------------------------------------------------------------------
// Closed form of the iterated coproduct on K^l E'^i F^j

QScalar sr_coefficient(const SRProfile& p) {
  const std::size_t n = p.s.size();
  if (n == 0 || p.r.size() != n) throw PreconditionViolation("SRProfile: s and r must have equal length >= 1");
  for (std::size_t t = 1; t < n; ++t)
    if (p.s[t] > p.s[t - 1] || p.r[t] > p.r[t - 1])
      throw PreconditionViolation("SRProfile: sequences must be weakly decreasing");
  if (p.s[n - 1] < 0 || p.r[n - 1] < 0) throw PreconditionViolation("SRProfile: entries must be non-negative");

  const QScalar q2 = qpow(2);
  const QScalar qm2 = qpow(-2);
  QScalar c = 1;
  int exponent = 0;
  for (std::size_t t = 1; t < n; ++t) {
    c *= gauss_binomial(p.s[t - 1], p.s[t], q2);
    c *= gauss_binomial(p.r[t - 1], p.r[t], qm2);
    exponent += p.r[t] * (p.s[t - 1] - p.s[t]);
  }
  return c * qpow(2 * exponent);
}

namespace {

// All weakly decreasing sequences of the given length starting at `top`.
void decreasing_chains(int top, int length, std::vector<std::vector<int>>& out) {
  std::vector<int> cur{top};
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= cur.back(); ++v) {
      cur.push_back(v);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
}

}  // namespace

UqTensor delta_closed_form(int l, int i, int j, int legs) {
  if (i < 0 || j < 0) throw PreconditionViolation("delta_closed_form: negative exponent");
  if (legs < 0) legs = i + j;
  if (legs < 1) throw PreconditionViolation("delta_closed_form: requires i + j >= 1 (or legs >= 1)");

  std::vector<std::vector<int>> ss;
  std::vector<std::vector<int>> rs;
  decreasing_chains(i, legs, ss);
  decreasing_chains(j, legs, rs);

  UqTensor out(legs);
  std::vector<UqElement> factors(static_cast<std::size_t>(legs));
  const auto n = static_cast<std::size_t>(legs);
  for (const auto& s : ss)
    for (const auto& r : rs) {
      const QScalar c = sr_coefficient({s, r});
      for (std::size_t t = 1; t < n; ++t)
        factors[t - 1] = primed_monomial(l - s[t] - r[t], s[t - 1] - s[t], r[t - 1] - r[t]);
      factors[n - 1] = primed_monomial(l, s[n - 1], r[n - 1]);
      UqTensor part = tensor_of(factors);
      part *= c;
      out += part;
    }
  return out;
}

// ---------------------------------------------------------------------------
// Printing

std::string to_string(const Monomial& m) {
  std::string out;
  auto factor = [&](const char* g, int e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += g;
    if (e != 1) out += "^" + std::to_string(e);
  };
  factor("K", m.l);
  factor("E", m.i);
  factor("F", m.j);
  return out.empty() ? "1" : out;
}

namespace {

std::string scaled_term(const QScalar& c, const std::string& basis) {
  const std::string s = c.str();
  const bool simple = c.is_laurent() && c.num().term_count() == 1;
  if (basis == "1") return simple ? s : "(" + s + ")";
  if (c.is_one()) return basis;
  if (c == QScalar(-1)) return "-" + basis;
  return (simple ? s : "(" + s + ")") + "*" + basis;
}

template <class T, class F>
std::string join_terms(const T& terms, F&& basis_of) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms) {
    std::string t = scaled_term(c, basis_of(k));
    if (out.empty()) out = t;
    else if (t.front() == '-') out += " - " + t.substr(1);
    else out += " + " + t;
  }
  return out;
}

}  // namespace

std::string to_string(const UqElement& u) {
  return join_terms(u.terms(), [](const Monomial& m) { return to_string(m); });
}

std::string to_string(const UqTensor& t) {
  return join_terms(t.terms(), [](const std::vector<Monomial>& legs) {
    std::string s;
    for (const auto& m : legs) {
      if (!s.empty()) s += " (x) ";
      s += to_string(m);
    }
    return legs.size() > 1 ? "[" + s + "]" : s;
  });
}

}  // namespace uqkit
