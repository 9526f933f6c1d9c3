#ifndef SEMISTAR_SAMPLE_HPP
#define SEMISTAR_SAMPLE_HPP

#include "semistar/poly.hpp"

namespace sst {

// Deterministic seeded pools used by the property checks and verifiers.
std::vector<FieldElem> sample_elements(const Domain* D, int count,
                                       unsigned long seed);
std::vector<FractionalIdeal> sample_ideals(const Domain* D, int count,
                                           unsigned long seed);
std::vector<std::pair<FractionalIdeal, FractionalIdeal>> sample_ideal_pairs(
    const Domain* D, int count, unsigned long seed);
std::vector<std::array<FractionalIdeal, 3>> sample_ideal_triples(
    const Domain* D, int count, unsigned long seed);
// Nonzero polynomials with coefficients in D.
std::vector<PolyOverK> sample_polys(const Domain* D, int count,
                                    int degree_bound, unsigned long seed);
std::vector<RationalFunction> sample_ratfuns(const Domain* D, int count,
                                             int degree_bound,
                                             unsigned long seed);

}  // namespace sst

#endif
