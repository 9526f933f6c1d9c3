#include "semistar/sample.hpp"

#include <random>

namespace sst {

namespace {

// Small nonzero ring element: x + y*g with g the extra module generator.
FieldElem ring_element(const Domain* D, std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<long> small(-9, 9);
  for (;;) {
    FieldElem x(mpq_class(small(rng)), D->field);
    if (auto g = D->ring_generator()) {
      FieldElem y(mpq_class(small(rng)), D->field);
      x = x + y * *g;
    }
    if (!nonzero || !x.is_zero()) return x;
  }
}

FieldElem fraction(const Domain* D, std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<long> den(1, 6);
  FieldElem num = ring_element(D, rng, nonzero);
  return num * FieldElem(mpq_class(1, den(rng)), D->field);
}

FractionalIdeal one_ideal(const Domain* D, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> gens(1, 2);
  std::uniform_int_distribution<long> den(1, 6);
  std::vector<FieldElem> g;
  int n = gens(rng);
  for (int i = 0; i < n; ++i) g.push_back(ring_element(D, rng, i == 0));
  FractionalIdeal I = ideal_from_elems(D, g);
  return ideal_scale(I, FieldElem(mpq_class(1, den(rng)), D->field));
}

}  // namespace

std::vector<FieldElem> sample_elements(const Domain* D, int count,
                                       unsigned long seed) {
  std::mt19937_64 rng(seed);
  std::vector<FieldElem> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(fraction(D, rng, true));
  return out;
}

std::vector<FractionalIdeal> sample_ideals(const Domain* D, int count,
                                           unsigned long seed) {
  std::mt19937_64 rng(seed);
  std::vector<FractionalIdeal> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(one_ideal(D, rng));
  return out;
}

std::vector<std::pair<FractionalIdeal, FractionalIdeal>> sample_ideal_pairs(
    const Domain* D, int count, unsigned long seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<FractionalIdeal, FractionalIdeal>> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    FractionalIdeal a = one_ideal(D, rng);
    FractionalIdeal b = one_ideal(D, rng);
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

std::vector<std::array<FractionalIdeal, 3>> sample_ideal_triples(
    const Domain* D, int count, unsigned long seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::array<FractionalIdeal, 3>> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    FractionalIdeal a = one_ideal(D, rng);
    FractionalIdeal b = one_ideal(D, rng);
    FractionalIdeal c = one_ideal(D, rng);
    out.push_back({std::move(a), std::move(b), std::move(c)});
  }
  return out;
}

std::vector<PolyOverK> sample_polys(const Domain* D, int count,
                                    int degree_bound, unsigned long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> deg(0, degree_bound);
  std::vector<PolyOverK> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    int d = deg(rng);
    std::vector<FieldElem> coeffs;
    for (int i = 0; i <= d; ++i) coeffs.push_back(ring_element(D, rng, i == d));
    PolyOverK f = poly_make(D->field, std::move(coeffs));
    if (!f.is_zero()) out.push_back(std::move(f));
  }
  return out;
}

std::vector<RationalFunction> sample_ratfuns(const Domain* D, int count,
                                             int degree_bound,
                                             unsigned long seed) {
  std::mt19937_64 rng(seed);
  std::vector<PolyOverK> nums = sample_polys(D, count, degree_bound, rng());
  std::vector<PolyOverK> dens = sample_polys(D, count, degree_bound, rng());
  std::vector<RationalFunction> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i)
    out.push_back(ratfun_make(nums[i], dens[i]));
  return out;
}

}  // namespace sst
