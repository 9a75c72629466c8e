#include <complex>

#include "doctest.h"
#include "support.hpp"

using namespace nichols;
using testing::Gen;
using testing::numeric;
using testing::params;

namespace {

std::complex<double> eval(const Monomial& m, std::complex<double> nu) { return numeric(m.coeff) * std::pow(nu, double(m.exp)); }

// ℘(ξ) as the limit of (1 − Q(ν))/(ν − ξ), by a central difference.
std::complex<double> numeric_phi(const Monomial& Q, const RootOfUnity& xi) {
  const std::complex<double> x = numeric(xi), h(1e-6, 0.0);
  auto f = [&](std::complex<double> nu) { return 1.0 - eval(Q, nu); };
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

struct Setup {
  Analysis a;
  const PhiMatrix& pm() const { return *a.pm; }
};

Setup setup(const FamilyParams& p) {
  Setup s{testing::run(p)};
  REQUIRE(s.a.pm);
  return s;
}

ParamBraidingMatrix lift2(int64_t t11, int64_t t12, int64_t t21, int64_t t22) {
  ParamBraidingMatrix bq(2);
  bq(0, 0) = {RootOfUnity{}, t11};
  bq(0, 1) = {RootOfUnity{}, t12};
  bq(1, 0) = {RootOfUnity{}, t21};
  bq(1, 1) = {RootOfUnity{}, t22};
  return bq;
}

}  // namespace

TEST_CASE("phi_value matches a numeric derivative") {
  Gen g(61);
  int checked = 0;
  for (int trial = 0; trial < 2000 && checked < 300; ++trial) {
    const size_t n = g.range(1, 3);
    const int64_t N = g.range(3, 12);
    const RootOfUnity xi = make_root(1, N);
    ParamBraidingMatrix bq(n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) bq(i, j) = {make_root(g.range(0, N - 1), N), g.range(-3, 3)};
    RootVec b = g.vec(n, 0, 2), c = g.vec(n, 0, 2);
    const int64_t nb = g.range(1, 3), nc = g.range(1, 3);
    Monomial Q = bq.bilinear(b, c).pow(nb * nc);
    if (!Q.at(xi).is_one()) {
      CHECK_THROWS_AS(phi_value(bq, xi, b, c, nb, nc), Error);
      continue;
    }
    PhiValue v = phi_value(bq, xi, b, c, nb, nc);
    std::complex<double> expected = numeric_phi(Q, xi);
    std::complex<double> got = v.coeff.get_d() * numeric(xi.inverse());
    CHECK(std::abs(got - expected) < 1e-4 * (1 + std::abs(expected)));
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("Cartan rows: phi entries are -t_ij N_i N_j and the t-form on Pi is T") {
  for (const auto& p : {testing::cartan("A", 3, 7), testing::cartan("B", 3, 5), testing::cartan("C", 3, 8),
                        testing::cartan("G", 2, 7), testing::cartan("D", 4, 5), testing::cartan("F", 4, 7)}) {
    Setup s = setup(p);
    const PhiMatrix& pm = s.pm();
    INFO(s.a.input.label);
    REQUIRE(pm.simple_count == pm.basis.size());
    const SmallMat t = pm.bq.exponents();
    for (size_t i = 0; i < pm.simple_count; ++i) {
      // Π is the simple roots in order for Cartan rows.
      CHECK(pm.basis[i].root == simple_root(t.rows(), i));
      for (size_t j = 0; j < pm.simple_count; ++j) {
        CHECK(pm.P(i, j) == Rational(-t(i, j) * pm.basis[i].order * pm.basis[j].order));
        CHECK(pm.TT(i, j) == t(i, j));
      }
    }
  }
}

TEST_CASE("build_T returns a nondegenerate matrix deterministically") {
  for (const auto& p : {params("wk4", "", 0, 0, 5), params("superB", "", 3, 1, 7), testing::cartan("A", 2, 5)}) {
    Setup s = setup(p);
    const PhiMatrix& pm = s.pm();
    CHECK(pm.nondegenerate);
    CHECK(determinant(to_rational(pm.TT)) != 0);
    CHECK(determinant(pm.P) != 0);
    PhiMatrix again = build_T(*s.a.input.lift, s.a.input.xi, *s.a.crd, 4096);
    CHECK(again.P == pm.P);
    CHECK(again.shifts == pm.shifts);
    // Shifts by multiples of N leave the evaluated matrix alone.
    CHECK(evaluate(pm.bq, pm.xi) == s.a.q);
  }
  Setup wk = setup(params("wk4", "", 0, 0, 5));
  REQUIRE(wk.pm().candidates > 1);
  try {
    build_T(*wk.a.input.lift, wk.a.input.xi, *wk.a.crd, 1);
    FAIL("expected SearchFailed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SearchFailed);
  }
}

TEST_CASE("symmetric re-lift") {
  const RootOfUnity xi = make_root(1, 5);
  ParamBraidingMatrix bq = lift2(1, 2, -3, 1);
  REQUIRE(evaluate(bq, xi).is_symmetric());
  auto [sym, root] = symmetric_relift(bq, xi);
  CHECK(sym.is_symmetric());
  CHECK(root.pow(2) == xi);
  CHECK(evaluate(sym, root) == evaluate(bq, xi));
  CHECK(sym(0, 0).exp == 2);
  CHECK(sym(0, 1).exp == -1);
  try {
    symmetric_relift(lift2(1, 0, -1, 1), xi);
    FAIL("accepted a non-symmetric matrix");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionError);
  }
}

TEST_CASE("Cartan recovery equals the root-string matrix") {
  for (const auto& p : {testing::cartan("B", 4, 8), testing::cartan("G", 2, 5), params("superB", "", 4, 2, 5),
                        params("superD", "", 4, 3, 7), params("D21", "", 0, 0, 7), params("superG3", "", 0, 0, 7),
                        params("wk4", "", 0, 0, 8), params("br2", "", 0, 0, 5), params("superA", "", 4, 2, 5)}) {
    Setup s = setup(p);
    INFO(s.a.input.label);
    CHECK(cartan_recovery(s.pm()) == *s.a.cm);
  }
}

TEST_CASE("eta row is antisymmetric on super A") {
  for (auto [theta, k] : {std::pair{2, 1}, {3, 1}, {4, 1}, {4, 2}, {5, 2}}) {
    Setup s = setup(params("superA", "", theta, k, 7));
    REQUIRE(s.a.eta);
    CHECK(s.a.eta->present);
    CHECK(s.a.eta->antisymmetric);
    CHECK(s.a.eta->phi_eta_eta != 0);
  }
  // θ + 1 = 2k: the central η is isotropic.
  Setup iso = setup(params("superA", "", 3, 2, 7));
  REQUIRE(iso.a.eta);
  CHECK(iso.a.eta->antisymmetric);
  CHECK(iso.a.eta->phi_eta_eta == 0);
}

TEST_CASE("kappa is constant on each simple factor") {
  for (const auto& p : {testing::cartan("B", 3, 7), testing::cartan("G", 2, 5), params("superB", "", 4, 2, 7),
                        params("wk4", "", 0, 0, 7), params("superF4", "", 0, 0, 5)}) {
    Setup s = setup(p);
    REQUIRE(s.a.scalars);
    CHECK(s.a.scalars->kappa_constant_per_factor);
    CHECK(s.a.scalars->kappa.size() == s.pm().basis.size());
  }
}

TEST_CASE("generic Cartan matrix and denominators") {
  FamilyInstance inst = family(testing::cartan("B", 3, 7));
  SmallMat c = generic_cartan_matrix(inst.bq);
  CHECK(recognize_type(c).str() == "B3");
  LambdaReport l = lambda_and_denominators(inst.bq, inst.xi);
  CHECK(l.specialization_valid);
  for (const auto& d : l.denominators) {
    CHECK(d.nonzero_at_xi);
    for (const auto& z : d.zeros) CHECK(d.value.at(z).is_one());
  }
  // q_11 = 1 generically with an edge: no finite string.
  ParamBraidingMatrix bad = lift2(0, -1, 0, 1);
  try {
    generic_cartan_matrix(bad);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotArithmetic);
  }
}

TEST_CASE("rho_param evaluates to the reflected object") {
  for (const auto& p : {params("superA", "", 3, 1, 5), params("wk4", "", 0, 0, 7), params("superG3", "", 0, 0, 7)}) {
    Setup s = setup(p);
    const Groupoid& g = s.a.rs->groupoid;
    for (size_t i = 0; i < s.a.q.theta(); ++i) {
      ParamBraidingMatrix r = rho_param(*s.a.input.lift, g.cartan[0], i);
      CHECK(evaluate(r, s.a.input.xi) == g.objects[g.rho[0][i]]);
    }
  }
}

TEST_CASE("phi matrices are equivariant under the groupoid") {
  for (const auto& p : {testing::cartan("A", 3, 5), testing::cartan("C", 3, 8), params("superA", "", 3, 1, 5),
                        params("superB", "", 3, 2, 7), params("superD", "", 4, 2, 5), params("wk4", "", 0, 0, 5),
                        params("br2", "", 0, 0, 7)}) {
    Setup s = setup(p);
    INFO(s.a.input.label);
    for (size_t i = 0; i < s.a.q.theta(); ++i) {
      EquivarianceResult r = phi_equivariance_check(s.pm(), *s.a.rs, *s.a.crd, i);
      CHECK(r.evaluation_matches);
      CHECK(r.basis_valid);
      CHECK(r.phi_equal);
      CHECK((r.cartan_vertex || r.set_equal));
    }
  }
}

TEST_CASE("formal scalars form a commutative ring") {
  Gen g(62);
  auto random_scalar = [&] {
    FormalScalar s;
    for (int t = 0; t < g.range(0, 3); ++t) {
      Rational c(static_cast<long>(g.range(-5, 5)), static_cast<unsigned long>(g.range(1, 4)));
      c.canonicalize();
      s += FormalScalar(c) * FormalScalar::xi_power(g.range(-2, 2)) * FormalScalar::symbol(g.range(0, 2), g.range(-2, 2));
    }
    return s;
  };
  for (int trial = 0; trial < 300; ++trial) {
    FormalScalar a = random_scalar(), b = random_scalar(), c = random_scalar();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * FormalScalar(1) == a);
  }
  FormalScalar m = FormalScalar::xi_power(-1, Rational(3, 2)) * FormalScalar::symbol(2, -1);
  CHECK(m.str() == "3/2*xi^-1*D2^-1");
  CHECK(m * m.inverse() == FormalScalar(1));
  CHECK_THROWS_AS((m + FormalScalar(1)).inverse(), Error);
  CHECK(FormalScalar().str() == "0");
}
