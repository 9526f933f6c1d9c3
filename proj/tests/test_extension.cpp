#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "semistar/extension.hpp"
#include "semistar/sample.hpp"

using namespace sst;

static Registry& R = Registry::get();

static ExtensionPair gauss_pair() {
  return make_extension_pair(R.integers(), R.quadratic_order(-1, 1),
                             ExtensionPair::Relation::T_INTEGRAL_CLOSURE_OF_D);
}

TEST_CASE("pairs verify the rational part") {
  ExtensionPair pair = gauss_pair();
  CHECK(!pair.prime_correspondence.empty());
  // Z is not the rational part of a localized overring
  CHECK_THROWS_AS(
      make_extension_pair(R.integers(),
                          R.localized_order(R.quadratic_order(-1, 1),
                                            primes_above(R.quadratic_order(-1, 1), 2)),
                          ExtensionPair::Relation::T_CONTAINS_D),
      BadSpecError);
  CHECK_THROWS_AS(
      make_extension_pair(R.integers(), R.quadratic_order(-1, 3),
                          ExtensionPair::Relation::T_INTEGRAL_CLOSURE_OF_D),
      PreconditionNotMetError);
}

TEST_CASE("restriction of the identity is the identity on samples") {
  ExtensionPair pair = gauss_pair();
  RestrictionOp rop = make_underline_restriction(
      make_identity(pair.T), pair, 15, 3);
  const Domain* Z = R.integers();
  FractionalIdeal two = ideal_parse(Z, "den=1;basis=[[2]]");
  CHECK(set_equal(closure(rop, two), two));
  for (const auto& E : sample_ideals(Z, 20, 13))
    CHECK(set_equal(closure(rop, E), E));
}

TEST_CASE("restriction of the divisorial closure") {
  ExtensionPair pair = gauss_pair();
  RestrictionOp rop = make_underline_restriction(
      make_divisorial(pair.T), pair, 15, 3);
  const Domain* Z = R.integers();
  CHECK(closure(rop, ideal_parse(Z, "den=1;basis=[[4],[6]]")).str() ==
        "den=1;basis=[[2]]");
}

TEST_CASE("extension of a spectral base operation") {
  ExtensionPair pair = gauss_pair();
  std::vector<PrimeIdeal> delta;
  for (long p : {2L, 3L})
    for (const auto& P : primes_above(R.integers(), p)) delta.push_back(P);
  SemistarOp over = make_overline_extension(make_spectral(R.integers(), delta), pair);
  CHECK(over.kind == SemistarOp::Kind::VALUATION_FAMILY);
  CHECK(over.family.size() == 2);  // one prime above 2, one above 3
  CHECK(over.eab == Tri::yes);
  // the extension fixes the overring on its support
  FractionalIdeal cT = closure(over, unit_ideal(pair.T));
  CHECK(set_equal(cT, extend_to(unit_ideal(pair.T), cT.domain)));
  CHECK(pmd_decide(pair.T, over).status == PmdVerdict::Status::YES);
  // contraction of each family member's center is a quasi-maximal downstairs
  QuasiMaxReport qm = quasi_star_maximals(over);
  CHECK(qm.status == QuasiMaxReport::Status::ENUMERATED);
}

TEST_CASE("gaps in the prime correspondence fail loudly") {
  ExtensionPair pair =
      make_extension_pair(R.integers(), R.quadratic_order(-1, 1),
                          ExtensionPair::Relation::T_INTEGRAL_CLOSURE_OF_D, 3);
  SemistarOp sp5 =
      make_spectral(R.integers(), {primes_above(R.integers(), 5).front()});
  CHECK_THROWS_AS(make_overline_extension(sp5, pair),
                  CorrespondenceIncompleteError);
}

TEST_CASE("the divisorial contraction formula") {
  ExtensionPair pair = gauss_pair();
  std::vector<FractionalIdeal> pool = sample_ideals(R.integers(), 40, 19);
  pool.push_back(ideal_parse(R.integers(), "den=3;basis=[[2]]"));
  pool.push_back(ideal_parse(R.integers(), "den=1;basis=[[4],[6]]"));
  KrullReport rep = krull_formula_check(pair, pool);
  CHECK(rep.ok);
  CHECK(rep.checked == 42);
}

TEST_CASE("divisorial decisions transfer across the extension") {
  AscentDescentReport rep = pvmd_ascent_descent_check(gauss_pair());
  CHECK(rep.agree == Tri::yes);
  CHECK(rep.down.status == PmdVerdict::Status::YES);

  const Domain* Z23 = R.localized_integers({2, 3});
  const Domain* Zi = R.quadratic_order(-1, 1);
  std::vector<PrimeIdeal> at;
  for (long p : {2L, 3L})
    for (const auto& P : primes_above(Zi, p)) at.push_back(P);
  ExtensionPair semilocal = make_extension_pair(
      Z23, R.localized_order(Zi, at),
      ExtensionPair::Relation::T_INTEGRAL_CLOSURE_OF_D);
  CHECK(pvmd_ascent_descent_check(semilocal).agree == Tri::yes);
}
