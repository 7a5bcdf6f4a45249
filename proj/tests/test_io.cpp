#include <doctest.h>

#include "uqkit/errors.hpp"
#include "uqkit/io.hpp"
#include "uqkit/suite.hpp"

using namespace uqkit;

TEST_CASE("representations round-trip") {
  for (const auto& rep : constructed_reps(1, 2)) {
    const QuiverRep back = rep_from_json(parse_json(to_json(rep).dump()));
    CHECK(back.start() == rep.start());
    CHECK(back.dims() == rep.dims());
    for (int l : rep.support()) {
      CHECK(back.upper(l) == rep.upper(l));
      CHECK(back.lower(l) == rep.lower(l));
    }
  }
}

TEST_CASE("frozen representation text") {
  CHECK(to_json(schurian_rep(0, 1, QScalar(qpow(1)))).dump() ==
        R"({"start":0,"dims":[1,1],"upper":[[["1"]]],"lower":[[["q"]]]})");
}

TEST_CASE("elements in both input forms") {
  const RepElement a = rep_element_from_json(parse_json(R"({"l":2,"v":["q",0]})"));
  const RepElement b = rep_element_from_json(parse_json(R"({"components":[{"l":2,"v":["q","0"]}]})"));
  CHECK(a == b);
  CHECK(a == RepElement(2, {qpow(1), QScalar(0)}));
  CHECK(rep_element_from_json(to_json(a)) == a);
}

TEST_CASE("U_q(sl_2) elements and path vectors round-trip") {
  const UqElement u = primed_monomial(1, 2, 1);
  CHECK(uq_element_from_json(to_json(u)) == u);
  const PathVector x = basis_b(-1, 3, 2);
  CHECK(path_vector_from_json(to_json(x)) == x);
}

TEST_CASE("Schurian triples") {
  const SchurianData s{-1, 2, Infinity{}};
  CHECK(to_json(s).dump() == R"({"l":-1,"n":2,"lambda":"inf"})");
  CHECK(schurian_from_json(to_json(s)) == s);
  const SchurianData t{0, 3, QScalar(qpow(3))};
  CHECK(schurian_from_json(to_json(t)) == t);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_json("{"), ParseError);
  CHECK_THROWS_AS(rep_from_json(parse_json(R"({"start":0,"dims":[1,2],"upper":[[["1"]]],"lower":[[["1"]]]})")),
                  ShapeMismatch);
  CHECK_THROWS_AS(rep_element_from_json(parse_json(R"({"l":0,"v":["q^"]})")), ParseError);
}
