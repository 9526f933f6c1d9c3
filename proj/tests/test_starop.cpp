#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "semistar/sample.hpp"
#include "semistar/starop.hpp"

using namespace sst;

static Registry& R = Registry::get();

TEST_CASE("divisorial closure on hand examples") {
  const Domain* Z = R.integers();
  FractionalIdeal E = ideal_parse(Z, "den=1;basis=[[4],[6]]");
  CHECK(closure(make_divisorial(Z), E).str() == "den=1;basis=[[2]]");
  CHECK(closure(make_divisorial(Z), ideal_parse(Z, "den=1;basis=[[6]]")).str() ==
        "den=1;basis=[[6]]");

  const Domain* Z3i = R.quadratic_order(-1, 3);
  FractionalIdeal P = prime_as_ideal(Z3i, primes_above(Z3i, 3).front());
  CHECK(set_equal(closure(make_divisorial(Z3i), P), P));
}

TEST_CASE("spectral closure lives over the localization handle") {
  const Domain* Z = R.integers();
  SemistarOp sp = make_spectral(Z, primes_above(Z, 2));
  FractionalIdeal E = ideal_parse(Z, "den=1;basis=[[6]]");
  FractionalIdeal c = closure(sp, E);
  CHECK(c.domain == R.localized_integers({2}));
  CHECK(c.str() == "den=1;basis=[[2]]");
  CHECK(member_of(FieldElem(mpq_class(2, 3), Z->field), c));
  CHECK(submodule_of(E, c));
}

TEST_CASE("overring family closure reaches the overring") {
  const Domain* Z3i = R.quadratic_order(-1, 3);
  const Domain* Zi = R.quadratic_order(-1, 1);
  SemistarOp op = make_overring_family(Z3i, {Zi});
  CHECK(set_equal(closure(op, unit_ideal(Z3i)), unit_ideal(Zi)));
  FractionalIdeal P = prime_as_ideal(Z3i, primes_above(Z3i, 3).front());
  CHECK(set_equal(closure(op, P), P));  // P3 is an ideal of Z[i] already
}

TEST_CASE("the bounded integral-closure surrogate") {
  const Domain* Zi = R.quadratic_order(-1, 1);
  SemistarOp b = make_b_operation(Zi, 13);
  FractionalIdeal E = ideal_from_elems(
      Zi, {FieldElem(mpq_class(4), Zi->field), FieldElem(mpq_class(6), Zi->field)});
  FractionalIdeal two = ideal_from_elems(Zi, {FieldElem(mpq_class(2), Zi->field)});
  FractionalIdeal c = closure(b, E);
  // the closure lives over the bounded support, where it agrees with 2Z[i]
  CHECK(set_equal(c, extend_to(two, c.domain)));
  CHECK(member_of(FieldElem(mpq_class(2), Zi->field), c));
  CHECK(!member_of(FieldElem(mpq_class(1), Zi->field), c));
}

TEST_CASE("operation comparison") {
  const Domain* Z = R.integers();
  auto pool = sample_ideals(Z, 50, 11);
  CHECK(compare_ops(make_identity(Z), make_divisorial(Z), pool).verdict ==
        CompareVerdict::EQ);
  const Domain* Z3i = R.quadratic_order(-1, 3);
  SemistarOp big = make_overring_family(Z3i, {R.quadratic_order(-1, 1)});
  CompareReport cmp =
      compare_ops(make_identity(Z3i), big, sample_ideals(Z3i, 30, 11));
  CHECK(cmp.verdict == CompareVerdict::LE);
}

TEST_CASE("stability and cancellation certificates") {
  const Domain* Z23 = R.localized_integers({2, 3});
  auto pairs = sample_ideal_pairs(Z23, 30, 5);
  StabilityReport st = is_stable(make_identity(Z23), pairs);
  CHECK(st.verdict == Tri::yes);
  CHECK(st.certified);
  SemistarOp w = make_valuation_family(
      Z23, {R.localized_integers({2}), R.localized_integers({3})});
  EabReport eab = eab_falsifier(w, sample_ideal_triples(Z23, 30, 5));
  CHECK(!eab.counterexample);
  CHECK(eab.certified);
  CHECK_NOTHROW(eab_associated_exact(w));
}

TEST_CASE("quasi-maximal spectra") {
  const Domain* Z23 = R.localized_integers({2, 3});
  QuasiMaxReport qm = quasi_star_maximals(make_identity(Z23));
  REQUIRE(qm.status == QuasiMaxReport::Status::ENUMERATED);
  CHECK(qm.primes.size() == 2);

  const Domain* Z3i = R.quadratic_order(-1, 3);
  QuasiMaxReport v = quasi_star_maximals(make_divisorial(Z3i));
  CHECK(v.status == QuasiMaxReport::Status::WITNESS_ONLY);
  REQUIRE(v.primes.size() == 1);
  CHECK(v.primes.front().p == 3);

  SemistarOp sp = make_spectral(Z3i, {primes_above(Z3i, 5).front()});
  QuasiMaxReport s = quasi_star_maximals(sp);
  REQUIRE(s.status == QuasiMaxReport::Status::ENUMERATED);
  CHECK(s.primes.size() == 1);
  CHECK(is_quasi_star_prime(sp, s.primes.front()));
  CHECK(!is_quasi_star_prime(sp, primes_above(Z3i, 3).front()));
}

TEST_CASE("tilde is the spectral companion") {
  const Domain* Z3i = R.quadratic_order(-1, 3);
  CHECK_THROWS_AS(tilde(make_divisorial(Z3i)), TildeUnsupportedError);
  SemistarOp sp = make_spectral(Z3i, {primes_above(Z3i, 5).front()});
  SemistarOp t = tilde(sp);
  CHECK(compare_ops(sp, t, sample_ideals(Z3i, 30, 9)).verdict ==
        CompareVerdict::EQ);
}

TEST_CASE("bounded derived operations") {
  const Domain* Z = R.integers();
  SemistarOp v = make_divisorial(Z);
  FractionalIdeal F = ideal_parse(Z, "den=1;basis=[[4],[6]]");
  auto pool = sample_ideals(Z, 20, 3);
  BoundedClosure sa = star_a_bounded(v, F, pool);
  CHECK(sa.stabilized);
  CHECK(set_equal(sa.value, ideal_parse(Z, "den=1;basis=[[2]]")));

  const Domain* Z3i = R.quadratic_order(-1, 3);
  FractionalIdeal P = prime_as_ideal(Z3i, primes_above(Z3i, 3).front());
  std::vector<FractionalIdeal> pool2 = sample_ideals(Z3i, 10, 3);
  pool2.push_back(P);
  BoundedClosure ic =
      semistar_integral_closure_bounded(make_identity(Z3i), unit_ideal(Z3i), pool2);
  // (P3 : P3) = Z[i], so the closure reaches the maximal order
  CHECK(member_of(FieldElem(mpq_class(0), mpq_class(1), Z3i->field), ic.value));

  const Domain* Z23 = R.localized_integers({2, 3});
  FractionalIdeal E = ideal_parse(Z23, "den=1;basis=[[4]]");
  BoundedClosure wc =
      w_closure_bounded(make_identity(Z23), E, sample_ideals(Z23, 20, 3));
  CHECK(set_equal(wc.value, E));
}

TEST_CASE("valuation overrings of an operation") {
  const Domain* Z23 = R.localized_integers({2, 3});
  const Domain* Z2 = R.localized_integers({2});
  const Domain* Z5 = R.localized_integers({5});
  SemistarOp w = make_valuation_family(Z23, {Z2, R.localized_integers({3})});
  CHECK(is_star_valuation_overring(w, Z2) == Tri::yes);
  CHECK(is_star_valuation_overring(w, Z5, sample_ideals(Z23, 20, 3)) != Tri::yes);
  CHECK_THROWS_AS(is_star_valuation_overring(w, R.integers()), NotDVRError);
}

TEST_CASE("constructors reject malformed families") {
  const Domain* Z = R.integers();
  CHECK_THROWS_AS(make_overring_family(Z, {}), EmptyFamilyError);
  const Domain* Z3i = R.quadratic_order(-1, 3);
  const Domain* P3loc = R.localized_order(Z3i, primes_above(Z3i, 3));
  // localization at the conductor prime is not a DVR
  CHECK_THROWS_AS(make_valuation_family(Z3i, {P3loc}), NotDVRError);
}
