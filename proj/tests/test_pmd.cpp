#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include <random>

#include "semistar/pmd.hpp"
#include "semistar/sample.hpp"

using namespace sst;

static Registry& R = Registry::get();

static bool all_pass(const TheoremReport& rep) {
  return rep.passed() && rep.decided();
}

TEST_CASE("invertibility routes agree and decide hand examples") {
  const Domain* Z = R.integers();
  InvertReport yes =
      star_invertible(make_divisorial(Z), ideal_parse(Z, "den=1;basis=[[4],[6]]"));
  CHECK(yes.invertible);
  CHECK(yes.definition_route == Tri::yes);

  const Domain* Z3i = R.quadratic_order(-1, 3);
  FractionalIdeal P = prime_as_ideal(Z3i, primes_above(Z3i, 3).front());
  InvertReport no = star_invertible(make_divisorial(Z3i), P);
  CHECK(!no.invertible);

  const Domain* Z23 = R.localized_integers({2, 3});
  InvertReport loc =
      star_invertible(make_identity(Z23), ideal_parse(Z23, "den=1;basis=[[6]]"));
  CHECK(loc.invertible);
  CHECK(loc.local_route == Tri::yes);
  CHECK(loc.nagata_route == Tri::yes);
}

TEST_CASE("multiplication-domain decisions") {
  const Domain* Z3i = R.quadratic_order(-1, 3);
  SemistarOp sp = make_spectral(Z3i, {primes_above(Z3i, 5).front()});
  PmdVerdict v1 = pmd_decide(Z3i, sp);
  CHECK(v1.status == PmdVerdict::Status::YES);
  CHECK(Z3i->is_integrally_closed == Tri::no);

  PmdVerdict v2 = pmd_decide(Z3i, make_divisorial(Z3i));
  REQUIRE(v2.status == PmdVerdict::Status::NO);
  REQUIRE(v2.witness);
  CHECK(v2.witness->p == 3);

  CHECK(pmd_decide(R.integers(), make_divisorial(R.integers())).status ==
        PmdVerdict::Status::YES);
}

TEST_CASE("degree-one witnesses with unit content") {
  const Domain* Z23 = R.localized_integers({2, 3});
  SemistarOp d = make_identity(Z23);
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> small(1, 9);
  for (int i = 0; i < 6; ++i) {
    FieldElem a(mpq_class(small(rng)), Z23->field);
    FieldElem b(mpq_class(small(rng)), Z23->field);
    UpperToZeroReport rep = upper_to_zero_witness(d, a, b, 2);
    CHECK(rep.found);
    CHECK(set_equal(closure(d, content(rep.f, Z23)), unit_ideal(Z23)));
  }
  const Domain* Z3i = R.quadratic_order(-1, 3);
  FieldElem three(mpq_class(3), Z3i->field);
  FieldElem threei(mpq_class(0), mpq_class(3), Z3i->field);
  UpperToZeroReport none =
      upper_to_zero_witness(make_divisorial(Z3i), three, threei, 4);
  CHECK(!none.found);
}

TEST_CASE("six-way characterization on a semilocal PID") {
  TheoremInstance inst;
  inst.D = R.localized_integers({2, 3});
  inst.op = make_identity(inst.D);
  inst.pool_size = 30;
  TheoremReport rep = verify_theorem("THM_PR3", inst);
  CHECK(all_pass(rep));
  CHECK(rep.checks.size() == 5);
}

TEST_CASE("six-way characterization on a refuted instance") {
  TheoremInstance inst;
  inst.D = R.quadratic_order(-1, 3);
  inst.op = make_spectral(inst.D, primes_above(inst.D, 3));
  inst.pool_size = 20;
  TheoremReport rep = verify_theorem("THM_PR3", inst);
  CHECK(rep.passed());  // clauses track the NO anchor or stay UNKNOWN
}

TEST_CASE("ascent to overrings and the closure ring") {
  TheoremInstance inst;
  inst.D = R.localized_integers({2, 3});
  inst.op = make_identity(inst.D);
  inst.T = R.localized_integers({2});
  CHECK(all_pass(verify_theorem("PROP_PR5", inst)));

  TheoremInstance co7;
  co7.D = R.quadratic_order(-1, 3);
  co7.op = make_overring_family(co7.D, {R.quadratic_order(-1, 1)});
  TheoremReport rep = verify_theorem("COR_CO7", co7);
  CHECK(rep.checks.front().verdict == "UNKNOWN");  // hypothesis fails: not a P*MD
}

TEST_CASE("flat descent and the non-flat counterexample") {
  const Domain* Z3i = R.quadratic_order(-1, 3);
  const Domain* Tloc = R.localized_order(Z3i, primes_above(Z3i, 5));
  TheoremInstance pr8;
  pr8.D = Z3i;
  pr8.T = Tloc;
  pr8.op = make_identity(Tloc);
  CHECK(all_pass(verify_theorem("PROP_PR8", pr8)));

  const Domain* Dloc = R.localized_order(Z3i, primes_above(Z3i, 3));
  const Domain* Ti = R.localized_order(R.quadratic_order(-1, 1),
                                       primes_above(R.quadratic_order(-1, 1), 3));
  TheoremInstance re9;
  re9.D = Dloc;
  re9.T = Ti;
  re9.op = make_overring_family(Dloc, {Ti});
  CHECK(all_pass(verify_theorem("RE9", re9)));
}

TEST_CASE("equivalence with the stable companion") {
  TheoremInstance inst;
  inst.D = R.quadratic_order(-1, 3);
  inst.op = make_spectral(inst.D, {primes_above(inst.D, 5).front()});
  CHECK(all_pass(verify_theorem("PROP_CO11", inst)));
}

TEST_CASE("star operations against the divisorial one") {
  TheoremInstance zi;
  zi.D = R.quadratic_order(-1, 1);
  zi.op = make_divisorial(zi.D);
  zi.pool_size = 30;
  CHECK(all_pass(verify_theorem("PROP_PR34", zi)));

  TheoremInstance z3i;
  z3i.D = R.quadratic_order(-1, 3);
  z3i.op = make_divisorial(z3i.D);
  z3i.pool_size = 30;
  CHECK(verify_theorem("PROP_PR34", z3i).passed());
}

TEST_CASE("identity versus divisorial on integrally closed domains") {
  TheoremInstance z;
  z.D = R.integers();
  z.pool_size = 40;
  CHECK(all_pass(verify_theorem("COR_35", z)));
}

TEST_CASE("proper integral overring obstruction") {
  TheoremInstance inst;
  inst.D = R.quadratic_order(-1, 3);
  inst.T = R.quadratic_order(-1, 1);
  CHECK(all_pass(verify_theorem("EX_2_9", inst)));
}

TEST_CASE("dominating valuation overrings for a valuation family") {
  TheoremInstance inst;
  inst.D = R.localized_integers({2, 3});
  inst.op = make_valuation_family(
      inst.D, {R.localized_integers({2}), R.localized_integers({3})});
  CHECK(all_pass(verify_theorem("LM_MSTAR", inst)));
}

TEST_CASE("every finite-type operation cancels on a PID") {
  TheoremInstance inst;
  inst.D = R.integers();
  inst.pool_size = 15;
  CHECK(verify_theorem("RK_216", inst).passed());
}

TEST_CASE("unknown theorem ids are rejected") {
  TheoremInstance inst;
  inst.D = R.integers();
  CHECK_THROWS_AS(verify_theorem("NOPE", inst), UnknownTheoremIdError);
}
