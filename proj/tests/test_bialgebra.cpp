#include "doctest.h"
#include "support.hpp"

using namespace nichols;
using testing::Gen;
using testing::params;

namespace {

struct Built {
  Analysis a;
  LieBialgebra lb() const { return mstar_structure(*a.pm, *a.crd, a.q); }
};

Built built(const FamilyParams& p) {
  Built b{testing::run(p)};
  REQUIRE(b.a.pm);
  return b;
}

FormalScalar phi(const PhiMatrix& pm, const ScaledRoot& x, const ScaledRoot& y) {
  return phi_value(pm.bq, pm.xi, x.root, y.root, x.order, y.order).formal();
}

}  // namespace

TEST_CASE("dimension and basis layout") {
  for (const auto& p : {testing::cartan("A", 3, 5), params("superA", "", 3, 1, 5), params("wk4", "", 0, 0, 5)}) {
    Built b = built(p);
    LieBialgebra lb = b.lb();
    const size_t o = b.a.crd->O_plus.size(), t = b.a.crd->Pi_tilde.size();
    CHECK(lb.dimension() == 2 * o + 2 * t);
    CHECK(lb.root_count() == o);
    CHECK(lb.cartan_count() == t);
    CHECK(lb.basis()[lb.de(0)].kind == GenKind::de);
    CHECK(lb.basis()[lb.df(0)].kind == GenKind::df);
    CHECK(lb.basis()[lb.dK(0)].kind == GenKind::dK);
    CHECK(lb.basis()[lb.dL(t - 1)].kind == GenKind::dL);
  }
}

TEST_CASE("Cartan brackets follow the phi matrix") {
  Built b = built(params("wk4", "", 0, 0, 7));
  LieBialgebra lb = b.lb();
  const PhiMatrix& pm = *b.a.pm;
  const auto& O = b.a.crd->O_plus;
  for (size_t m = 0; m < lb.cartan_count(); ++m)
    for (size_t r = 0; r < lb.root_count(); ++r) {
      CHECK(*lb.bracket(lb.dK(m), lb.de(r)) == unit(lb.de(r), -phi(pm, pm.basis[m], O[r])));
      CHECK(*lb.bracket(lb.dK(m), lb.df(r)) == unit(lb.df(r), phi(pm, pm.basis[m], O[r])));
      CHECK(*lb.bracket(lb.dL(m), lb.de(r)) == unit(lb.de(r), -phi(pm, O[r], pm.basis[m])));
      CHECK(*lb.bracket(lb.dL(m), lb.df(r)) == unit(lb.df(r), phi(pm, O[r], pm.basis[m])));
    }
  for (size_t m = 0; m < lb.cartan_count(); ++m)
    for (size_t l = 0; l < lb.cartan_count(); ++l) {
      CHECK(lb.bracket(lb.dK(m), lb.dL(l))->empty());
      CHECK(lb.bracket(lb.dK(m), lb.dK(l))->empty());
    }
}

TEST_CASE("brackets are antisymmetric wherever determined") {
  Built b = built(params("superB", "", 3, 1, 7));
  LieBialgebra lb = b.lb();
  size_t undetermined = 0;
  for (size_t i = 0; i < lb.dimension(); ++i)
    for (size_t j = 0; j < lb.dimension(); ++j) {
      auto ij = lb.bracket(i, j), ji = lb.bracket(j, i);
      CHECK(ij.has_value() == ji.has_value());
      if (!ij) {
        ++undetermined;
        continue;
      }
      CHECK((*ij + *ji).empty());
    }
  CHECK(undetermined > 0);
}

TEST_CASE("e-f brackets on simple roots and cobrackets") {
  Built b = built(testing::cartan("B", 2, 7));
  LieBialgebra lb = b.lb();
  const PhiMatrix& pm = *b.a.pm;
  for (size_t p = 0; p < pm.simple_count; ++p) {
    const size_t r = lb.simple_root(p);
    FormalScalar c = -pm.at(p, p).formal() / lb.D(r);
    CHECK(*lb.bracket(lb.de(r), lb.df(r)) == unit(lb.dK(p), c) + unit(lb.dL(p), c));
    CHECK(*lb.cobracket(unit(lb.de(r))) == wedge(unit(lb.dK(p)), unit(lb.de(r))));
    CHECK(*lb.cobracket(unit(lb.df(r))) == wedge(unit(lb.dL(p)), unit(lb.df(r))));
    for (size_t s = 0; s < pm.simple_count; ++s)
      if (s != p) CHECK(lb.bracket(lb.de(r), lb.df(lb.simple_root(s)))->empty());
  }
  CHECK(lb.cobracket(unit(lb.dK(0)))->empty());
  // A non-simple root has no stored cobracket.
  for (size_t r = 0; r < lb.root_count(); ++r) {
    bool simple = false;
    for (size_t p = 0; p < pm.simple_count; ++p) simple = simple || lb.simple_root(p) == r;
    if (!simple) CHECK_FALSE(lb.cobracket(unit(lb.de(r))).has_value());
  }
  CHECK(lb.bracket_table().size() == 2 * lb.cartan_count() * 2 * lb.root_count() + pm.simple_count * pm.simple_count);
  CHECK(lb.cobracket_table().size() == 2 * pm.simple_count + 2 * lb.cartan_count());
}

TEST_CASE("Chevalley embedding and Manin checks hold") {
  for (const auto& p : {testing::cartan("A", 2, 5), testing::cartan("G", 2, 7), testing::cartan("C", 3, 8),
                        params("superA", "", 3, 1, 5), params("superA", "", 4, 2, 7), params("superD", "", 4, 2, 5),
                        params("D21", "", 0, 0, 7), params("wk4", "", 0, 0, 5), params("br2", "", 0, 0, 4)}) {
    Built b = built(p);
    INFO(b.a.input.label);
    LieBialgebra lb = b.lb();
    EmbeddingReport e = chevalley_embedding(lb, extended_cartan_matrix(*b.a.cm, *b.a.crd));
    CHECK(e.failures.empty());
    CHECK(e.jacobi_failed == 0);
    CHECK(e.jacobi_checked > 0);
    CHECK(e.cocycle_failed == 0);
    CHECK(e.cocycle_checked > 0);
    CHECK(e.htilde_basis.size() == b.a.pm->basis.size());
    CHECK(e.htilde_complement);
    BorelReport br = borel_and_form(*b.a.pm);
    CHECK(br.gram_nondegenerate);
    CHECK(br.geq_isotropic);
    CHECK(br.leq_isotropic);
    CHECK(br.geq_in_K);
    CHECK(br.leq_in_L);
    CHECK(br.complementary);
    CHECK(b.a.pm->P * br.leq_map == b.a.pm->P.transpose());
  }
}

TEST_CASE("isotropic eta breaks the embedding") {
  Analysis a = testing::run(params("superA", "", 3, 2, 5));
  REQUIRE(a.error);
  CHECK(a.error->kind == ErrorKind::EmbeddingMismatch);
  CHECK(a.exit_code() == 4);
  REQUIRE(a.pm);
  LieBialgebra lb = mstar_structure(*a.pm, *a.crd, a.q);
  EmbeddingReport e = chevalley_embedding(lb, extended_cartan_matrix(*a.cm, *a.crd), true);
  CHECK_FALSE(e.ok(a.pm->basis.size()));
  CHECK_THROWS_AS(chevalley_embedding(lb, extended_cartan_matrix(*a.cm, *a.crd)), Error);
  BorelReport br = borel_and_form(*a.pm, true);
  CHECK_FALSE(br.ok());
  try {
    borel_and_form(*a.pm);
    FAIL("expected ManinCheckFailed");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::ManinCheckFailed);
  }
}

TEST_CASE("wedge and vector algebra") {
  Gen g(11);
  for (int trial = 0; trial < 200; ++trial) {
    FormalVec a, b;
    for (int t = 0; t < 3; ++t) {
      a = a + unit(size_t(g.range(0, 5)), FormalScalar::xi_power(g.range(-2, 2), g.range(-3, 3)));
      b = b + unit(size_t(g.range(0, 5)), FormalScalar(int(g.range(-3, 3))));
    }
    CHECK(wedge(a, a).empty());
    CHECK((wedge(a, b) - (FormalWedge{} - wedge(b, a))).empty());
    CHECK((a - a).empty());
    CHECK(((FormalScalar(2) * a) - a - a).empty());
  }
}
