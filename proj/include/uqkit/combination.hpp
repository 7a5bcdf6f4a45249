#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "uqkit/errors.hpp"
#include "uqkit/qscalar.hpp"

namespace uqkit {

/// Finitely supported linear combination of basis keys over Q(q).
/// No stored coefficient is zero.
template <class Key>
class Combination {
 public:
  using Terms = std::map<Key, QScalar>;

  Combination() = default;
  Combination(const Key& k, const QScalar& c) { add(k, c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  QScalar coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? QScalar() : it->second;
  }

  void add(const Key& k, const QScalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Combination& operator+=(const Combination& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  Combination& operator*=(const QScalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator*(Combination a, const QScalar& s) { return a *= s; }
  friend Combination operator*(const QScalar& s, Combination a) { return a *= s; }
  Combination operator-() const { return *this * QScalar(-1); }

  friend bool operator==(const Combination& a, const Combination& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Linear combination of fixed-length tuples of basis keys (elements of a
/// tensor power). Arity is carried explicitly so that the zero tensor keeps it.
template <class Key>
class Tensor : public Combination<std::vector<Key>> {
 public:
  using Base = Combination<std::vector<Key>>;

  explicit Tensor(int arity = 2) : arity_(arity) {}

  int arity() const { return arity_; }

  void add(const std::vector<Key>& legs, const QScalar& c) {
    if (static_cast<int>(legs.size()) != arity_)
      throw ShapeMismatch("tensor term has " + std::to_string(legs.size()) + " legs, expected " +
                          std::to_string(arity_));
    Base::add(legs, c);
  }

  Tensor& operator+=(const Tensor& o) {
    check_arity(o);
    Base::operator+=(o);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    check_arity(o);
    Base::operator-=(o);
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  Tensor& operator*=(const QScalar& s) {
    Base::operator*=(s);
    return *this;
  }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.arity_ == b.arity_ && static_cast<const Base&>(a) == static_cast<const Base&>(b);
  }

 private:
  void check_arity(const Tensor& o) const {
    if (o.arity_ != arity_) throw ShapeMismatch("tensor arity mismatch");
  }

  int arity_;
};

}  // namespace uqkit
