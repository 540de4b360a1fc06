#include "doctest.h"

#include "agmswarm/agm_classical.hpp"

using namespace agmswarm::classical;
using boost::multiprecision::abs;
using boost::multiprecision::sqrt;

namespace {

const Real kPi("3.14159265358979323846264338327950288419716939937510");
const Real kAgmSqrt2("1.19814023473559220743992249228032387822721266321565");

}  // namespace

TEST_CASE("pi constant") { CHECK(abs(pi() - kPi) < Real("1e-49")); }

TEST_CASE("real AGM step") {
  auto s = real_agm_step({Real(1), Real(1)});
  CHECK(s.a == 1);
  CHECK(s.b == 1);
  s = real_agm_step({sqrt(Real(2)), Real(1)});
  CHECK(abs(s.a - (sqrt(Real(2)) + 1) / 2) < Real("1e-55"));
  CHECK(abs(s.b - sqrt(sqrt(Real(2)))) < Real("1e-55"));
  s = real_agm_step({Real(4), Real(2)});
  CHECK(s.a == 3);
  CHECK(abs(s.b - 2 * sqrt(Real(2))) < Real("1e-55"));
  CHECK_THROWS(real_agm_step({Real(-1), Real(1)}));
}

TEST_CASE("real AGM limit and quadratic convergence") {
  CHECK(real_agm_limit({Real(1), Real(1)}, Real("1e-50")).value == 1);
  CHECK(real_agm_limit({Real(5), Real(5)}, Real("1e-50")).value == 5);
  const auto lim = real_agm_limit({sqrt(Real(2)), Real(1)}, Real("1e-50"));
  CHECK(abs(lim.value - kAgmSqrt2) < Real("1e-48"));
  REQUIRE(lim.gaps.size() >= 4);
  for (std::size_t i = 1; i + 1 < lim.gaps.size(); ++i) {
    if (lim.gaps[i] < Real("1e-40")) break;
    CHECK(lim.gaps[i] < lim.gaps[i - 1] * lim.gaps[i - 1]);
  }
}

TEST_CASE("pi sequence from (sqrt 2, 1)") {
  const auto st = pi_sequence(5);
  REQUIRE(st.p.size() == 5);
  CHECK(abs(st.p[0] - 4) < Real("1e-50"));
  CHECK(abs(st.p[1] - kPi) < Real("0.05"));
  CHECK(abs(st.p[3] - kPi) < Real("1e-9"));
  CHECK(abs(st.p[4] - kPi) < Real("1e-19"));
  for (std::size_t i = 1; i < st.p.size(); ++i) CHECK(abs(st.p[i] - kPi) < abs(st.p[i - 1] - kPi));
}

TEST_CASE("pi sequence from a degenerate seed is constant") {
  const auto st = pi_sequence({Real(1), Real(1)}, 4);
  for (const auto& p : st.p) CHECK(p == st.p.front());
}

TEST_CASE("classical 2F1 series") {
  const Real tol("1e-40");
  CHECK(classical_2f1({1, 2}, {1, 2}, {1, 1}, Real(0), tol) == 1);
  CHECK(classical_2f1({3, 7}, {-5, 2}, {2, 3}, Real(0), tol) == 1);
  // 2K(1/sqrt 2)/pi with K(1/sqrt 2) = 1.85407467730137191843...
  const Real k("1.85407467730137191843385034719526005");
  CHECK(abs(classical_2f1({1, 2}, {1, 2}, {1, 1}, Real("0.5"), tol) - 2 * k / kPi) < Real("1e-30"));
  CHECK_THROWS(classical_2f1({1, 2}, {1, 2}, {1, 1}, Real(1), tol));
  CHECK_THROWS(classical_2f1({1, 2}, {1, 2}, {-2, 1}, Real("0.5"), tol));
}

TEST_CASE("elliptic integral I(a, b)") {
  CHECK(abs(elliptic_integral_I(Real(1), Real(1)) - kPi / 2) < Real("1e-50"));
  CHECK(abs(elliptic_integral_I(sqrt(Real(2)), Real(1)) - kPi / (2 * kAgmSqrt2)) < Real("1e-45"));
  CHECK(abs(elliptic_integral_I(Real(4), Real(2)) - elliptic_integral_I(Real(3), 2 * sqrt(Real(2)))) <
        Real("1e-12"));
}

TEST_CASE("I(a, b) against its series and its quadrature") {
  for (auto [a, b] : {std::pair{sqrt(Real(2)), Real(1)}, {Real(4), Real(2)}, {Real(3), Real(2)}}) {
    const Real via_agm = elliptic_integral_I(a, b);
    const Real x = 1 - b * b / (a * a);
    const Real via_series = kPi / (2 * a) * classical_2f1({1, 2}, {1, 2}, {1, 1}, x, Real("1e-40"));
    CHECK(abs(via_agm - via_series) < Real("1e-9"));
    CHECK(abs(via_agm - elliptic_integral_I_quadrature(a, b)) < Real("1e-9"));
  }
}

TEST_CASE("Legendre period by quadrature and by series") {
  for (const char* l : {"0.1", "0.5", "0.9"}) {
    const Real lambda(l);
    CHECK(abs(legendre_period_quadrature(lambda) - legendre_period_hypergeometric(lambda)) < Real("1e-6"));
  }
}
