#include <doctest.h>

#include <atomic>
#include <stdexcept>

#include "uqkit/suite.hpp"
#include "uqkit/sweep.hpp"

using namespace uqkit;

TEST_CASE("parallel sweeps reproduce the serial reference") {
  CHECK(sweep_identity_31(4, -2, 2, Exec::Serial) == sweep_identity_31(4, -2, 2, Exec::Parallel));
  CHECK(sweep_hopf_axioms(1, 3, Exec::Serial) == sweep_hopf_axioms(1, 3, Exec::Parallel));
  CHECK(sweep_bialgebra(1, 1, Exec::Serial) == sweep_bialgebra(1, 1, Exec::Parallel));
  CHECK(sweep_theta_coalgebra(1, 3, Exec::Serial) == sweep_theta_coalgebra(1, 3, Exec::Parallel));
  CHECK(sweep_psi_relations(1, 3, Exec::Serial) == sweep_psi_relations(1, 3, Exec::Parallel));
  const QuiverRep bad = condition_i_violator(0);
  const auto s = sweep_relations(bad, Exec::Serial), p = sweep_relations(bad, Exec::Parallel);
  CHECK(s.passed == p.passed);
  CHECK(s.violations.size() == p.violations.size());
}

TEST_CASE("grid size") {
  CHECK(monomial_grid(-2, 2, 4).size() == 5 * 15);
  CHECK(monomial_grid(0, 0, 0).size() == 1);
}

TEST_CASE("every index runs once and the first failure is rethrown") {
  for (Exec e : {Exec::Serial, Exec::Parallel}) {
    std::atomic<int> count = 0;
    for_each_index(100, e, [&](std::size_t) { ++count; });
    CHECK(count == 100);
    try {
      for_each_index(50, e, [](std::size_t k) {
        if (k % 7 == 3) throw std::runtime_error(std::to_string(k));
      });
      FAIL("expected a throw");
    } catch (const std::runtime_error& err) {
      CHECK(std::string(err.what()) == "3");
    }
  }
}
