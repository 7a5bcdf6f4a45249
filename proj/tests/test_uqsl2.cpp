#include <doctest.h>

#include <random>
#include <vector>

#include "uqkit/sweep.hpp"
#include "uqkit/uqsl2.hpp"

using namespace uqkit;

namespace {
const QScalar q = qpow(1);
const UqElement K = uq_monomial(1, 0, 0), Ki = uq_monomial(-1, 0, 0), E = uq_monomial(0, 1, 0),
                F = uq_monomial(0, 0, 1), one = uq_scalar(1);

UqElement word_product(const std::vector<UqGen>& w) {
  UqElement out = one;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = left_multiply(*it, out);
  return out;
}
}  // namespace

TEST_CASE("defining relations") {
  CHECK(multiply(K, Ki) == one);
  CHECK(multiply(multiply(K, E), Ki) == qpow(2) * E);
  CHECK(multiply(multiply(K, F), Ki) == qpow(-2) * F);
  CHECK(multiply(E, F) - multiply(F, E) == (1 / (q - inv(q))) * (K - Ki));
}

TEST_CASE("frozen products") {
  // E K = q^-2 K E
  CHECK(multiply(E, K) == uq_monomial(1, 1, 0, qpow(-2)));
  // F E = E F - (K - K^-1)/(q - q^-1)
  CHECK(multiply(F, E) == uq_monomial(0, 1, 1) - (1 / (q - inv(q))) * (K - Ki));
  CHECK(to_string(coproduct(E)) == "[1 (x) E] + [E (x) K]");
  CHECK(coproduct(F) == [] {
    UqTensor t(2);
    t.add({Monomial{-1, 0, 0}, Monomial{0, 0, 1}}, 1);
    t.add({Monomial{0, 0, 1}, Monomial{0, 0, 0}}, 1);
    return t;
  }());
}

TEST_CASE("counit and antipode on generators") {
  CHECK(counit(K) == QScalar(1));
  CHECK(counit(E).is_zero());
  CHECK(counit(uq_monomial(3, 0, 0, q)) == q);
  CHECK(antipode(K) == Ki);
  CHECK(antipode(E) == -multiply(E, Ki));
  CHECK(antipode(F) == -multiply(K, F));
  CHECK(antipode(E) == uq_monomial(-1, 1, 0, -qpow(2)));
}

TEST_CASE("normal form is confluent on random words") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> gen(0, 3), len(0, 7);
  for (int t = 0; t < 250; ++t) {
    std::vector<UqGen> w(static_cast<std::size_t>(len(rng)));
    for (auto& g : w) g = static_cast<UqGen>(gen(rng));
    const UqElement left = normal_form(1, w);
    CHECK(normal_form(1, w, RewriteOrder::Random, rng()) == left);
    CHECK(word_product(w) == left);
  }
}

TEST_CASE("multiplication is associative on monomials") {
  const auto grid = monomial_grid(-1, 1, 2);
  for (const auto& a : grid)
    for (const auto& b : {Monomial{0, 1, 1}, Monomial{-1, 0, 2}, Monomial{1, 2, 0}})
      for (const auto& c : {Monomial{0, 0, 1}, Monomial{1, 1, 0}}) {
        const UqElement x(a, 1), y(b, 1), z(c, 1);
        CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
      }
}

TEST_CASE("Hopf axioms on a grid") {
  for (const auto& cell : sweep_hopf_axioms(2, 3, Exec::Serial)) {
    INFO(to_string(cell.m));
    CHECK(cell.coassociative);
    CHECK(cell.counit);
    CHECK(cell.antipode);
  }
}

TEST_CASE("coproduct is an algebra map") {
  for (const auto& cell : sweep_bialgebra(1, 2, Exec::Serial)) {
    INFO(to_string(cell.x), " ", to_string(cell.y));
    CHECK(cell.coproduct_ok);
    CHECK(cell.counit_ok);
  }
}

TEST_CASE("primed monomials") {
  CHECK(primed_monomial(0, 1, 0) == multiply(Ki, E));
  CHECK(primed_monomial(2, 2, 1) == multiply(multiply(uq_monomial(2, 0, 0), multiply(multiply(Ki, E), multiply(Ki, E))), F));
}

TEST_CASE("closed-form iterated coproduct agrees with the recursive one") {
  for (int l = -1; l <= 1; ++l)
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; i + j <= 3; ++j)
        for (int legs = 1; legs <= 4; ++legs) {
          INFO(l, " ", i, " ", j, " legs ", legs);
          CHECK(delta_closed_form(l, i, j, legs) == iterated_coproduct(primed_monomial(l, i, j), legs - 1));
        }
}

TEST_CASE("iterated coproduct is legwise coassociative") {
  const UqElement u = primed_monomial(1, 2, 1);
  const UqTensor d2 = iterated_coproduct(u, 2);
  CHECK(d2 == coproduct_at(coproduct(u), 0));
  CHECK(d2 == coproduct_at(coproduct(u), 1));
  CHECK(iterated_coproduct(u, 0).arity() == 1);
}

TEST_CASE("graded components") {
  const UqElement u = K + E + multiply(E, F) + uq_monomial(0, 0, 2, q);
  CHECK(graded_component(u, 0) == K);
  CHECK(graded_component(u, 1) == E);
  CHECK(graded_component(u, 2) == multiply(E, F) + uq_monomial(0, 0, 2, q));
  CHECK(graded_component(u, 3).is_zero());
}
