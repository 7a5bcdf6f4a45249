#include <doctest.h>

#include "uqkit/errors.hpp"
#include "uqkit/pathcoalg.hpp"
#include "uqkit/sweep.hpp"

using namespace uqkit;

TEST_CASE("chi") {
  CHECK(chi(std::vector<int>{}) == QScalar(1));
  CHECK(chi(std::vector<int>{-1, -1}) == QScalar(1));
  CHECK(chi(std::vector<int>{1, -1, 1}) == qpow(8));
  CHECK(chi(std::vector<int>{-1, 1}) == qpow(4));
}

TEST_CASE("sign vectors are listed lexicographically") {
  const auto v = sign_vectors(3, 1);
  REQUIRE(v.size() == 3);
  CHECK(v[0] == SignVector{-1, -1, 1});
  CHECK(v[1] == SignVector{-1, 1, -1});
  CHECK(v[2] == SignVector{1, -1, -1});
  CHECK(sign_vectors(4, 2).size() == 6);
  CHECK(sign_vectors(0, 0).size() == 1);
}

TEST_CASE("frozen b-basis elements") {
  CHECK(to_string(basis_b(0, 2, 1)) == "q^4*P0:[-,+] + q^2*P0:[+,-]");
  CHECK(basis_b(3, 0, 0) == PathVector(vertex(3), 1));
  CHECK(basis_b(-1, 2, 2) == PathVector(Path{-1, {1, 1}}, qpow(6)));
}

TEST_CASE("path text round trip") {
  for (const char* s : {"0:[]", "-3:[+,-,+]", "2:[-]"}) CHECK(to_string(parse_path(s)) == s);
  CHECK(parse_path("1:[+,-]").end() == -1);
  CHECK_THROWS_AS(parse_path("1:[+,x]"), ParseError);
}

TEST_CASE("deconcatenation") {
  const Path p{2, {1, -1}};
  const PathTensor d = path_delta(PathVector(p, 1));
  CHECK(d.size() == 3);
  // beta (x) alpha with alpha starting at 2
  CHECK(d.coeff({Path{1, {-1}}, Path{2, {1}}}) == QScalar(1));
  CHECK(d.coeff({vertex(0), p}) == QScalar(1));
  CHECK(d.coeff({p, vertex(2)}) == QScalar(1));
  CHECK(path_counit(PathVector(p, 1)).is_zero());
  CHECK(path_counit(PathVector(vertex(5), qpow(2))) == qpow(2));
}

TEST_CASE("path coalgebra is coassociative") {
  PathVector x;
  x.add(Path{1, {1, -1, 1}}, qpow(1));
  x.add(Path{0, {-1}}, 3);
  const PathTensor d = path_delta(x);
  CHECK(path_delta_at(d, 0) == path_delta_at(d, 1));
}

TEST_CASE("theta in low degree") {
  CHECK(theta(uq_monomial(2, 0, 0)) == PathVector(vertex(2), 1));
  // E = K E', so its image starts one vertex up
  CHECK(theta(uq_monomial(0, 1, 0)) == PathVector(Path{1, {1}}, 1));
  CHECK(theta(uq_monomial(0, 0, 1)) == PathVector(Path{0, {-1}}, 1));
}

TEST_CASE("theta of primed monomials is a scaled b-basis element") {
  for (const auto& cell : sweep_identity_31(4, -2, 2, Exec::Serial)) {
    INFO(cell.l, " ", cell.i, " ", cell.j, " ", cell.difference);
    CHECK(cell.ok);
  }
}

TEST_CASE("theta is a coalgebra map") {
  for (const auto& cell : sweep_theta_coalgebra(1, 3, Exec::Serial)) CHECK(cell.coalgebra_map);
}

TEST_CASE("b-coordinates") {
  PathVector x = qpow(3) * basis_b(0, 2, 1) + basis_b(1, 1, 0);
  const auto c = b_coordinates(x);
  REQUIRE(c);
  CHECK(c->coeff(BIndex{0, 2, 1}) == qpow(3));
  CHECK(c->coeff(BIndex{1, 1, 0}) == QScalar(1));
  CHECK_FALSE(b_coordinates(PathVector(Path{0, {1, -1}}, 1)));
  const auto t = b_coordinates(path_delta(basis_b(0, 2, 1)));
  CHECK(t.has_value());
}
