#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "semistar/ideal.hpp"
#include "semistar/poly.hpp"

using namespace sst;

static Registry& R = Registry::get();

TEST_CASE("field elements canonicalize and parse") {
  FieldTag Qi = make_field(-1);
  FieldElem x = field_elem_parse(Qi, "1/2+3w");
  CHECK(x.a == mpq_class(1, 2));
  CHECK(x.b == mpq_class(3));
  FieldElem y(mpq_class(2, 4), Qi);
  CHECK(y.a == mpq_class(1, 2));
  CHECK((x * x).a == mpq_class(1, 4) + mpq_class(-9));
  CHECK((x - x).is_zero());
  FieldElem inv = FieldElem(mpq_class(1), Qi) / FieldElem(mpq_class(0), mpq_class(1), Qi);
  CHECK(inv == FieldElem(mpq_class(0), mpq_class(-1), Qi));
}

TEST_CASE("lattices stay in normal form") {
  FieldTag Qi = make_field(-1);
  Lattice L = lattice_make(Qi, 2, {{4, 6}, {2, 8}, {0, 10}});
  for (const auto& r : L.rows) CHECK((r[0] >= 0 && r[1] >= 0));
  CHECK(lattice_parse(Qi, L.str()) == L);

  Lattice a = lattice_make(Qi, 1, {{1, 1}, {0, 2}});  // Z(1+i) + 2iZ
  Lattice b = lattice_make(Qi, 1, {{1, 1}, {0, 2}});
  // (1+i)^2 = 2i, so the product contains 2i and 2(1+i)i = -2+2i
  Lattice p = lattice_product(a, b);
  CHECK(lattice_member(p, FieldElem(mpq_class(0), mpq_class(2), Qi)));
  CHECK(!lattice_member(p, FieldElem(mpq_class(1), Qi)));

  Lattice O = lattice_make(Qi, 1, {{1, 0}, {0, 1}});
  CHECK(lattice_intersect(O, lattice_make(Qi, 2, {{1, 0}, {0, 1}})) == O);
  CHECK(lattice_colon(O, a) == lattice_colon(O, a));
  CHECK(lattice_contains(O, p));

  Lattice slice = lattice_slice_rational(a);
  CHECK(slice.rank() == 1);
  CHECK(slice.rows[0][0] == 2);  // rationals of Z(1+i)+2iZ are 2Z
  CHECK(lattice_embed(slice, Qi).rank() == 1);
}

TEST_CASE("prime splitting in quadratic orders") {
  const Domain* Zi = R.quadratic_order(-1, 1);
  CHECK(primes_above(Zi, 5).size() == 2);   // split
  CHECK(primes_above(Zi, 3).size() == 1);   // inert
  CHECK(primes_above(Zi, 2).size() == 1);   // ramified
  const Domain* Z3i = R.quadratic_order(-1, 3);
  auto p3 = primes_above(Z3i, 3);
  REQUIRE(p3.size() == 1);
  CHECK(p3.front().contains_conductor);
  CHECK(!primes_above(Z3i, 5).front().contains_conductor);
  CHECK(integral_closure(Z3i) == Zi);
  CHECK(Z3i->is_integrally_closed == Tri::no);
  CHECK(Zi->is_prufer == Tri::yes);
}

TEST_CASE("registry interns localization handles") {
  const Domain* Z = R.integers();
  auto P2 = primes_above(Z, 2);
  CHECK(R.localization_of(Z, P2) == R.localization_of(Z, P2));
  CHECK(R.localized_integers({3, 2}) == R.localized_integers({2, 3}));
}

TEST_CASE("local valuations at a ramified prime") {
  const Domain* Zi = R.quadratic_order(-1, 1);
  PrimeIdeal P = primes_above(Zi, 2).front();
  FieldElem two(mpq_class(2), Zi->field);
  CHECK(local_valuation(two, P, Zi->ring) == 2);
  FieldElem opi(mpq_class(1), mpq_class(1), Zi->field);
  CHECK(local_valuation(opi, P, Zi->ring) == 1);
  CHECK(local_member(Zi->ring, two, P));
  CHECK(!local_member(Zi->ring, two / opi / opi / opi, P));
}

TEST_CASE("ideal arithmetic matches hand values") {
  const Domain* Z = R.integers();
  FieldElem four(mpq_class(4), Z->field), six(mpq_class(6), Z->field);
  FractionalIdeal E = ideal_from_elems(Z, {four, six});
  CHECK(E.str() == "den=1;basis=[[2]]");
  CHECK(ideal_parse(Z, "den=1;basis=[[4],[6]]").str() == "den=1;basis=[[2]]");

  const Domain* Z3i = R.quadratic_order(-1, 3);
  PrimeIdeal P3 = primes_above(Z3i, 3).front();
  FractionalIdeal P = prime_as_ideal(Z3i, P3);
  FractionalIdeal inv = ideal_colon(unit_ideal(Z3i), P);
  // (D : P3) is the maximal order Z[i]
  CHECK(inv.lat == R.quadratic_order(-1, 1)->ring);
  FractionalIdeal J = ideal_combine(CombineMode::PRODUCT, P, inv);
  CHECK(set_equal(J, P));
  CHECK(!set_equal(J, unit_ideal(Z3i)));
}

TEST_CASE("membership respects localized contexts") {
  const Domain* Z2 = R.localized_integers({2});
  FieldElem three(mpq_class(3), Z2->field);
  FieldElem half(mpq_class(1, 2), Z2->field);
  FractionalIdeal unit = unit_ideal(Z2);
  CHECK(member_of(three, unit));
  CHECK(member_of(three.inverse(), unit));  // 1/3 is a unit at 2
  CHECK(!member_of(half, unit));
  FractionalIdeal threeI = ideal_from_elems(Z2, {three});
  CHECK(set_equal(threeI, unit));
}

TEST_CASE("extension and contraction between contexts") {
  const Domain* Z = R.integers();
  const Domain* Z23 = R.localized_integers({2, 3});
  FieldElem six(mpq_class(6), Z->field);
  FractionalIdeal E = ideal_from_elems(Z, {six});
  FractionalIdeal Eloc = extend_to(E, Z23);
  CHECK(Eloc.domain == Z23);
  CHECK(member_of(FieldElem(mpq_class(6, 5), Z->field), Eloc));
  CHECK(!member_of(FieldElem(mpq_class(3), Z->field), Eloc));
  FractionalIdeal back = contract_to_subfield(
      extend_to(unit_ideal(R.quadratic_order(-1, 1)), R.quadratic_order(-1, 1)),
      Z);
  CHECK(set_equal(back, unit_ideal(Z)));
}

TEST_CASE("flatness of overrings") {
  const Domain* Z3i = R.quadratic_order(-1, 3);
  const Domain* Zi = R.quadratic_order(-1, 1);
  const Domain* Dloc = R.localized_order(Z3i, primes_above(Z3i, 3));
  const Domain* Tloc = R.localized_order(Zi, primes_above(Zi, 3));
  OverringDescriptor loc{Dloc, R.localized_order(Z3i, primes_above(Z3i, 5)),
                         OverringDescriptor::Kind::LOCALIZATION, Tri::unknown};
  CHECK(is_flat_overring(Z3i, loc, {}) == Tri::yes);
  OverringDescriptor bad{Dloc, Tloc, OverringDescriptor::Kind::EXPLICIT,
                         Tri::unknown};
  PrimeIdeal w;
  CHECK(is_flat_overring(Dloc, bad, Tloc->max_ideals(), &w) == Tri::no);
  CHECK(w.p == 3);
}
