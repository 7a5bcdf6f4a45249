#include <doctest.h>

#include "uqkit/errors.hpp"
#include "uqkit/quiverrep.hpp"
#include "uqkit/suite.hpp"

using namespace uqkit;

namespace {
const QScalar q = qpow(1);
Matrix M(std::vector<std::vector<QScalar>> rows) { return Matrix::from_rows(rows); }
}  // namespace

TEST_CASE("shapes are checked") {
  CHECK_THROWS_AS(QuiverRep(0, {1, 2}, {M({{1}})}, {M({{1}})}), ShapeMismatch);
  CHECK_THROWS_AS(QuiverRep(0, {1, 1}, {M({{1}})}, {}), ShapeMismatch);
  const QuiverRep r(0, {1, 1}, {M({{1}})}, {M({{2}})});
  CHECK(r.dim(5) == 0);
  CHECK(r.upper(7).rows() == 0);
  CHECK(r.lower(1) == M({{2}}));
}

TEST_CASE("Schurian representations") {
  const QuiverRep r = schurian_rep(-1, 2, QScalar(q));
  CHECK(r.dims() == std::vector<int>{1, 1, 1});
  CHECK(r.upper(0) == M({{1}}));
  // lambda q^{-2(l+n-j)} with l=-1, n=2 out of j=0, 1
  CHECK(r.lower(0) == M({{qpow(-1)}}));
  CHECK(r.lower(1) == M({{q}}));
  const QuiverRep s = schurian_rep(0, 2, Infinity{});
  CHECK(s.upper(1).is_zero());
  CHECK(s.lower(2) == M({{1}}));
  CHECK(validate_rep(r).ok());
  CHECK(comodule_axiom_check(r).ok());
  CHECK(comodule_axiom_check(s).ok());
}

TEST_CASE("condition (i) violator") {
  const QuiverRep r = condition_i_violator(0);
  const auto report = validate_rep(r);
  CHECK_FALSE(report.condition_i_ok);
  CHECK_FALSE(report.violations.empty());
  CHECK_THROWS_AS(coaction(r, basis_element(r, 2, 0)), ValidationError);
  CHECK_FALSE(comodule_axiom_check(r).ok());
}

TEST_CASE("path maps compose from the start vertex") {
  const QuiverRep r(0, {1, 1, 1}, {M({{2}}), M({{3}})}, {M({{5}}), M({{7}})});
  CHECK(path_map(r, Path{2, {1, -1}}) == M({{15}}));
  CHECK(path_map(r, Path{2, {-1, 1}}) == M({{14}}));
  CHECK(path_map(r, vertex(1)) == Matrix::identity(1));
}

TEST_CASE("coaction contains m on the vertex path") {
  const QuiverRep r = schurian_rep(0, 3, QScalar(1));
  const RepElement m = basis_element(r, 2, 0);
  const auto rho = coaction(r, m);
  CHECK(rho.at(vertex(2)) == m);
  CHECK(rho.size() == 1 + 2 + 4);
}

TEST_CASE("quantum-plane representations") {
  const QuiverRep r = from_quantum_plane(0, 2, sample_quantum_plane());
  CHECK(r.dims() == std::vector<int>{2, 2, 2});
  CHECK(validate_rep(r).ok());
  CHECK(comodule_axiom_check(r).ok());
  QuantumPlaneModule bad{M({{0, 1}, {0, 0}}), Matrix::identity(2)};
  CHECK_FALSE(bad.satisfies_relation());
  CHECK_THROWS_AS(from_quantum_plane(0, 2, bad), QuantumPlaneRelationError);
  CHECK_THROWS_AS(from_quantum_plane(0, 2, QuantumPlaneModule{Matrix::identity(2), Matrix::identity(3)}), ShapeMismatch);
}

TEST_CASE("lambda parsing") {
  CHECK(std::holds_alternative<Infinity>(parse_lambda("inf")));
  CHECK(std::holds_alternative<Infinity>(parse_lambda("infinity")));
  CHECK(std::get<QScalar>(parse_lambda("q^3")) == qpow(3));
  CHECK(to_string(parse_lambda("inf")) == "inf");
}

TEST_CASE("classification recovers the parameters") {
  for (int l = -2; l <= 2; ++l)
    for (int n = 0; n <= 3; ++n)
      for (const auto& lambda : sample_lambdas()) {
        const auto got = classify_schurian(schurian_rep(l, n, lambda));
        REQUIRE(std::holds_alternative<SchurianData>(got));
        const auto& s = std::get<SchurianData>(got);
        CHECK(s.l == l);
        CHECK(s.n == n);
        // n = 0 has a single representation; it is reported with lambda = 0
        CHECK(s.lambda == (n == 0 ? Lambda(QScalar(0)) : lambda));
      }
}

TEST_CASE("classification rejections") {
  auto kind = [](const QuiverRep& r) { return std::get<Rejection>(classify_schurian(r)).kind; };
  CHECK(kind(QuiverRep()) == Rejection::Kind::Zero);
  CHECK(kind(from_quantum_plane(0, 1, sample_quantum_plane())) == Rejection::Kind::NotSchurian);
  CHECK(kind(condition_i_violator(0)) == Rejection::Kind::NotComodule);
  // one-dimensional, both maps zero out of vertex 1
  CHECK(kind(QuiverRep(0, {1, 1}, {M({{0}})}, {M({{0}})})) == Rejection::Kind::Decomposable);
  CHECK(kind(QuiverRep(0, {1, 0, 1}, {Matrix(1, 0), Matrix(0, 1)}, {Matrix(1, 0), Matrix(0, 1)})) ==
        Rejection::Kind::Decomposable);
}

TEST_CASE("Hom spaces between Schurian comodules") {
  const QuiverRep a = schurian_rep(0, 2, QScalar(q));
  CHECK(hom_space(a, a).dimension == 1);
  CHECK(hom_space(a, schurian_rep(0, 2, QScalar(1))).dimension == 0);
  CHECK(hom_space(a, schurian_rep(0, 2, Infinity{})).dimension == 0);
  CHECK(hom_space(a, schurian_rep(1, 2, QScalar(q))).dimension == 0);
  // a bottom segment of a string is a subcomodule, a top segment a quotient
  CHECK(hom_space(schurian_rep(-2, 1, QScalar(0)), schurian_rep(-2, 2, QScalar(0))).dimension == 1);
  CHECK(hom_space(a, schurian_rep(1, 1, QScalar(q))).dimension == 1);
}
