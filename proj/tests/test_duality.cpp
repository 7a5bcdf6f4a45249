#include <doctest.h>

#include <random>

#include "uqkit/duality.hpp"
#include "uqkit/suite.hpp"

using namespace uqkit;

namespace {
const QScalar q = qpow(1);

SlWord random_word(std::mt19937_64& rng, int max_len) {
  SlWord w(static_cast<std::size_t>(std::uniform_int_distribution<int>(0, max_len)(rng)));
  for (auto& g : w) g = static_cast<SlGen>(std::uniform_int_distribution<int>(0, 3)(rng));
  return w;
}
}  // namespace

TEST_CASE("word parsing") {
  CHECK(to_string(parse_word("d*a - q*b*c - 1")) == "-1 - q*b*c + d*a");
  CHECK(parse_word("") == to_poly(GenWord{}));
  CHECK(parse_word("da") == parse_word("d*a"));
  CHECK(parse_word("q^2*a + a") == (qpow(2) + 1) * parse_word("a"));
  CHECK(slq2_relations().size() == 7);
}

TEST_CASE("psi on generators") {
  const UqElement E = uq_monomial(0, 1, 0), F = uq_monomial(0, 0, 1);
  CHECK(psi_gen(SlGen::a, uq_monomial(3, 0, 0)) == qpow(3));
  CHECK(psi_gen(SlGen::d, uq_monomial(3, 0, 0)) == qpow(-3));
  CHECK(psi_gen(SlGen::b, E) == QScalar(1));
  CHECK(psi_gen(SlGen::c, F) == QScalar(1));
  CHECK(psi_gen(SlGen::a, uq_monomial(2, 1, 1)) == qpow(2));
  CHECK(psi_gen(SlGen::b, F).is_zero());
  CHECK(psi_word(SlWord{}, uq_monomial(5, 0, 0)) == QScalar(1));
  CHECK(psi_word(SlWord{}, E).is_zero());
}

TEST_CASE("primed table") { CHECK(check_primed_table(3, 3).empty()); }

TEST_CASE("psi annihilates the defining relations") {
  for (const auto& cell : sweep_psi_relations(1, 4, Exec::Serial)) {
    INFO(slq2_relations()[cell.relation].name, " ", to_string(cell.m));
    CHECK(cell.value.is_zero());
  }
}

TEST_CASE("psi on the b-basis") {
  CHECK(psi_on_b(parse_word("b"), 0, 1, 1) == psi(parse_word("b"), b_preimage(0, 1, 1)));
  CHECK(psi_on_b(parse_word("b*c"), 1, 2, 1) == psi(parse_word("b*c"), b_preimage(1, 2, 1)));
  CHECK(psi_on_b(parse_word("a"), 0, 3, 1).is_zero());
  CHECK(psi_on_b(parse_word("a*d"), 2, 0, 0) == QScalar(1));
}

TEST_CASE("Schurian action matches the string formulas") {
  const int l = -1, n = 3;
  const QScalar lambda = q;
  const QuiverRep r = schurian_rep(l, n, lambda);
  for (int i = 0; i <= n; ++i) {
    const RepElement v = basis_element(r, l + i, 0);
    const auto at = [&](int k, const QScalar& c) { return k < 0 ? RepElement() : c * basis_element(r, l + k, 0); };
    INFO("i=", i);
    CHECK(act_word(parse_word("b"), r, v) == at(i - 1, qpow(l + i - 1)));
    CHECK(act_word(parse_word("c"), r, v) == at(i - 1, lambda * qpow(-2 * n + i - l)));
    CHECK(act_word(parse_word("d"), r, v) == at(i, qpow(-(l + i))));
    CHECK(act_word(parse_word("a"), r, v) == at(i, qpow(l + i)) + at(i - 2, lambda * qpow(-2 * n + l + 3 * i - 3)));
  }
  const QuiverRep s = schurian_rep(l, n, Infinity{});
  for (int i = 1; i <= n; ++i) {
    const RepElement v = basis_element(s, l + i, 0);
    CHECK(act_word(parse_word("b"), s, v).is_zero());
    CHECK(act_word(parse_word("c"), s, v) == qpow(-(l + i)) * basis_element(s, l + i - 1, 0));
  }
}

TEST_CASE("generic action agrees with the closed forms") {
  for (const auto& rep : constructed_reps(1, 3))
    for (const auto& m : all_basis_elements(rep))
      for (SlGen g : {SlGen::a, SlGen::b, SlGen::c, SlGen::d}) {
        SlPoly x = to_poly(GenWord{1, {g}});
        CHECK(act_word(x, rep, m) == act_closed(g, rep, m));
        CHECK(act_word_unchecked(x, rep, m) == act_closed(g, rep, m));
      }
}

TEST_CASE("the action is a module structure") {
  std::mt19937_64 rng(5);
  const auto reps = constructed_reps(1, 3);
  for (int t = 0; t < 120; ++t) {
    const QuiverRep& rep = reps[rng() % reps.size()];
    const auto basis = all_basis_elements(rep);
    const RepElement& m = basis[rng() % basis.size()];
    const SlWord x = random_word(rng, 3), y = random_word(rng, 3);
    SlWord xy = x;
    xy.insert(xy.end(), y.begin(), y.end());
    const SlPoly px = to_poly(GenWord{1, x}), py = to_poly(GenWord{1, y});
    CHECK(act_word(to_poly(GenWord{1, xy}), rep, m) == act_word(px, rep, act_word(py, rep, m)));
    CHECK(act_word(px, rep, m) == act_composed(px, rep, m));
  }
}

TEST_CASE("relations hold on comodules and fail on the violator") {
  for (const auto& rep : constructed_reps(1, 3)) CHECK(check_slq2_relations(rep).ok());
  const RelationReport bad = check_slq2_relations(condition_i_violator(0));
  CHECK_FALSE(bad.ok());
  CHECK(std::count(bad.passed.begin(), bad.passed.end(), false) > 0);
  CHECK_THROWS_AS(act_word(parse_word("a"), condition_i_violator(0), RepElement(2, {1})), ValidationError);
}

TEST_CASE("Hopf pairing compatibilities") {
  std::mt19937_64 rng(11);
  const auto grid = monomial_grid(-1, 1, 2);
  for (int t = 0; t < 60; ++t) {
    const SlWord w = random_word(rng, 2);
    const UqElement u(grid[rng() % grid.size()], 1), v(grid[rng() % grid.size()], 1);
    CHECK(check_duality_antipode(to_poly(GenWord{1, w}), u));
    CHECK(check_phi_multiplicative(w, u, v));
  }
}

TEST_CASE("SL_q(2) structure maps") {
  CHECK(slq2_antipode(parse_word("a")) == parse_word("d"));
  CHECK(slq2_antipode(parse_word("b")) == parse_word("-q*b"));
  CHECK(slq2_antipode(parse_word("a*b")) == parse_word("-q*b*d"));
  CHECK(slq2_coproduct(SlWord{SlGen::a}).size() == 2);
  CHECK(slq2_coproduct(SlWord{SlGen::a, SlGen::d}).size() == 4);
}
