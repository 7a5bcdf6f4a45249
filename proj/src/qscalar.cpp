#include "uqkit/qscalar.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "uqkit/errors.hpp"

namespace uqkit {

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(Rational c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

LaurentPoly LaurentPoly::monomial(int exponent, Rational c) {
  LaurentPoly p(std::move(c));
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(int low, std::vector<Rational> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
}

bool LaurentPoly::is_one() const {
  return low_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1;
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; }));
}

Rational LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<int, Rational>> LaurentPoly::terms() const {
  std::vector<std::pair<int, Rational>> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) out.emplace_back(low_ + static_cast<int>(k), coeffs_[k]);
  return out;
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += by;
  return p;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  LaurentPoly p = *this;
  for (auto& x : p.coeffs_) x *= c;
  return p;
}

Rational LaurentPoly::eval(const Rational& q0) const {
  if (is_zero()) return 0;
  // Horner on the ordinary part, then the shift.
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q0 + *it;
  Rational shift = 1;
  const Rational step = low_ >= 0 ? q0 : Rational(1) / q0;
  for (int k = 0; k < std::abs(low_); ++k) shift *= step;
  return acc * shift;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
    coeffs_[static_cast<std::size_t>(o.low_ - low_) + k] += o.coeffs_[k];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t x = 0; x < a.coeffs_.size(); ++x) {
    if (a.coeffs_[x] == 0) continue;
    for (std::size_t y = 0; y < b.coeffs_.size(); ++y) out[x + y] += a.coeffs_[x] * b.coeffs_[y];
  }
  return LaurentPoly::from_coeffs(a.low_ + b.low_, std::move(out));
}

namespace {

std::string rational_str(const Rational& c) {
  return c.get_den() == 1 ? c.get_num().get_str() : c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string term_str(int e, const Rational& c) {
  if (e == 0) return rational_str(c);
  const std::string power = e == 1 ? "q" : "q^" + std::to_string(e);
  if (c == 1) return power;
  if (c == -1) return "-" + power;
  return rational_str(c) + "*" + power;
}

}  // namespace

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  auto ts = terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    std::string t = term_str(it->first, it->second);
    if (!out.empty() && t.front() != '-') out += '+';
    out += t;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ordinary polynomial helpers (index = exponent) used by canonicalization.

namespace {

using Dense = std::vector<Rational>;

void strip(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division with remainder over Q.
std::pair<Dense, Dense> divmod(Dense a, const Dense& b) {
  strip(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {Dense{}, a};
  Dense quot(a.size() - db, Rational(0));
  const Rational& lead = b.back();
  for (std::size_t k = a.size(); k-- > db;) {
    if (a[k] == 0) continue;
    Rational f = a[k] / lead;
    quot[k - db] = f;
    for (std::size_t t = 0; t <= db; ++t) a[k - db + t] -= f * b[t];
  }
  strip(a);
  strip(quot);
  return {quot, a};
}

// Monic gcd by the Euclidean algorithm.
Dense gcd(Dense a, Dense b) {
  strip(a);
  strip(b);
  while (!b.empty()) {
    Dense r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  const Rational lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// QScalar

QScalar QScalar::fraction(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return QScalar();

  const int shift = num.low() - den.low();
  Dense n = num.dense();
  Dense d = den.dense();
  if (d.size() > 1 && n.size() > 1) {
    Dense g = gcd(n, d);
    if (g.size() > 1) {
      n = divmod(n, g).first;
      d = divmod(d, g).first;
    }
  }

  // Make d primitive over Z with positive leading coefficient.
  mpz_class den_lcm = 1;
  for (const auto& c : d) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  mpz_class content = 0;
  for (const auto& c : d) {
    mpz_class v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  Rational scale = Rational(den_lcm) / Rational(content);
  if (d.back() < 0) scale = -scale;
  for (auto& c : d) c *= scale;
  for (auto& c : n) c *= scale;

  return QScalar(LaurentPoly::from_coeffs(shift, std::move(n)), LaurentPoly::from_coeffs(0, std::move(d)), 0);
}

QScalar& QScalar::operator+=(const QScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (is_laurent() && o.is_laurent()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    *this = fraction(num_ + o.num_, den_);
    return *this;
  }
  *this = fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) { return *this += -o; }

QScalar& QScalar::operator*=(const QScalar& o) {
  if (is_zero() || o.is_zero()) return *this = QScalar();
  if (is_laurent() && o.is_laurent()) {
    num_ = num_ * o.num_;
    return *this;
  }
  *this = fraction(num_ * o.num_, den_ * o.den_);
  return *this;
}

QScalar& QScalar::operator/=(const QScalar& o) { return *this *= inv(o); }

QScalar QScalar::operator-() const { return QScalar(-num_, den_, 0); }

QScalar qpow(int e) { return QScalar(LaurentPoly::monomial(e)); }

QScalar inv(const QScalar& x) {
  if (x.is_zero()) throw DivisionByZero();
  return QScalar::fraction(x.den(), x.num());
}

QScalar pow(const QScalar& x, int e) {
  QScalar base = e < 0 ? inv(x) : x;
  QScalar out = 1;
  for (int k = 0; k < std::abs(e); ++k) out *= base;
  return out;
}

Rational evaluate(const QScalar& x, const Rational& q0) {
  if (q0 == 0 || q0 == 1 || q0 == -1)
    throw ForbiddenSpecialization("specialization q = " + q0.get_str() + " violates q != 0, q^2 != 1");
  Rational d = x.den().eval(q0);
  if (d == 0) throw PoleError("denominator " + x.den().str() + " vanishes at q = " + q0.get_str());
  return x.num().eval(q0) / d;
}

QScalar gauss_integer(int n, const QScalar& base) {
  QScalar out;
  QScalar term = 1;
  for (int k = 0; k < n; ++k) {
    out += term;
    term *= base;
  }
  return out;
}

QScalar gauss_factorial(int n, const QScalar& base) {
  if (n < 0) throw PreconditionViolation("gauss_factorial: n must be non-negative");
  if (base.is_zero()) throw PreconditionViolation("gauss_factorial: base must be nonzero");
  QScalar out = 1;
  for (int k = 1; k <= n; ++k) out *= gauss_integer(k, base);
  return out;
}

QScalar gauss_binomial(int n, int m, const QScalar& base) {
  if (m < 0 || m > n) throw PreconditionViolation("gauss_binomial: requires n >= m >= 0");
  return gauss_factorial(n, base) / (gauss_factorial(m, base) * gauss_factorial(n - m, base));
}

// ---------------------------------------------------------------------------
// Text form

std::string QScalar::str() const {
  if (is_laurent()) return num_.str();
  const bool bare = num_.term_count() == 1 && num_.terms().front().second.get_den() == 1;
  std::string n = bare ? num_.str() : "(" + num_.str() + ")";
  return n + "/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const QScalar& x) { return os << x.str(); }

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view s) : s_(s) {}

  QScalar run() {
    QScalar x = scalar();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("qscalar: " + what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  QScalar scalar() {
    bool grouped = false;
    QScalar num = operand(grouped);
    if (!accept('/')) return num;
    if (!grouped && multi_term_) fail("multi-term numerator before '/' must be parenthesized");
    QScalar den = operand(grouped);
    if (!grouped && multi_term_) fail("multi-term denominator after '/' must be parenthesized");
    if (den.is_zero()) throw DivisionByZero();
    return num / den;
  }

  QScalar operand(bool& grouped) {
    if (accept('(')) {
      QScalar x = scalar();
      if (!accept(')')) fail("expected ')'");
      grouped = true;
      multi_term_ = false;
      return x;
    }
    grouped = false;
    return sum();
  }

  QScalar sum() {
    QScalar acc;
    int count = 0;
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    for (;;) {
      QScalar t = term();
      acc += negate ? -t : t;
      ++count;
      const char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        negate = c == '-';
        continue;
      }
      break;
    }
    multi_term_ = count > 1;
    return acc;
  }

  QScalar term() {
    QScalar acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  mpz_class integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  int exponent() {
    char close = '\0';
    if (accept('(')) close = ')';
    else if (accept('{')) close = '}';
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    mpz_class e = integer();
    if (close != '\0' && !accept(close)) fail("unbalanced exponent group");
    if (!e.fits_sint_p()) fail("exponent out of range");
    return neg ? -static_cast<int>(e.get_si()) : static_cast<int>(e.get_si());
  }

  QScalar factor() {
    const char c = peek();
    if (c == 'q') {
      ++pos_;
      if (accept('^')) return qpow(exponent());
      return qpow(1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class n = integer();
      // `/` followed directly by a digit is a rational coefficient.
      skip();
      if (pos_ + 1 < s_.size() && s_[pos_] == '/') {
        std::size_t look = pos_ + 1;
        while (look < s_.size() && std::isspace(static_cast<unsigned char>(s_[look]))) ++look;
        if (look < s_.size() && std::isdigit(static_cast<unsigned char>(s_[look]))) {
          pos_ = look;
          mpz_class d = integer();
          if (d == 0) throw DivisionByZero();
          Rational r(n, d);
          r.canonicalize();
          return QScalar(r);
        }
      }
      return QScalar(Rational(n));
    }
    if (c == '(') {
      ++pos_;
      QScalar x = scalar();
      if (!accept(')')) fail("expected ')'");
      return x;
    }
    fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  bool multi_term_ = false;
};

}  // namespace

QScalar QScalar::parse(std::string_view text) { return ScalarParser(text).run(); }

}  // namespace uqkit
