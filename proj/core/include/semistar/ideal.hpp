#ifndef SEMISTAR_IDEAL_HPP
#define SEMISTAR_IDEAL_HPP

#include "semistar/domain.hpp"

namespace sst {

// Nonzero finitely generated module over its owning domain, as the canonical
// lattice of that domain's context.  For localized domains the lattice is the
// unique one matching the module at surviving primes and the ring elsewhere,
// so structural equality is set equality in every context.
struct FractionalIdeal {
  const Domain* domain = nullptr;
  Lattice lat;

  bool operator==(const FractionalIdeal& o) const {
    return domain == o.domain && lat == o.lat;
  }
  std::string str() const { return lat.str(); }
};

enum class CombineMode { SUM, PRODUCT, INTERSECT };

FractionalIdeal hnf_normalize(const Domain* D, const mpz_class& den,
                              std::vector<Vec2> vectors);
FractionalIdeal ideal_from_elems(const Domain* D,
                                 const std::vector<FieldElem>& gens);
FractionalIdeal ideal_from_lattice(const Domain* D, Lattice L);
FractionalIdeal ideal_parse(const Domain* D, const std::string& text);
FractionalIdeal unit_ideal(const Domain* D);
FractionalIdeal prime_as_ideal(const Domain* D, const PrimeIdeal& P);

FractionalIdeal ideal_combine(CombineMode mode, const FractionalIdeal& E,
                              const FractionalIdeal& F);
// { x in K : x*F subset E }
FractionalIdeal ideal_colon(const FractionalIdeal& E, const FractionalIdeal& F);
bool ideal_contains(const FractionalIdeal& E, const FractionalIdeal& F);
bool ideal_eq(const FractionalIdeal& E, const FractionalIdeal& F);
FractionalIdeal ideal_scale(const FractionalIdeal& E, const FieldElem& x);

// Primes of ring above Q.p inducing a constraint at the same place of K as Q
// (contraction along whichever of the two rings is smaller).
std::vector<PrimeIdeal> compatible_primes(const Domain* ring, const PrimeIdeal& Q);

// Set-level comparisons across module contexts (e.g. an ideal of D against a
// closure living over an overring of D).
bool member_of(const FieldElem& x, const FractionalIdeal& F);
bool submodule_of(const FractionalIdeal& E, const FractionalIdeal& F);
bool set_equal(const FractionalIdeal& E, const FractionalIdeal& F);

// E*T as a module in T's context (T an overring of E's domain).
FractionalIdeal extend_to(const FractionalIdeal& E, const Domain* T);
// E cap K for E over a quadratic domain, as a module over D (a domain with
// field Q).  Throws ZeroModuleError when the contraction is zero.
FractionalIdeal contract_to_subfield(const FractionalIdeal& E, const Domain* D);

// D_P is a valuation (here: discrete valuation) ring; exact.
bool is_valuation_at(const Domain* D, const PrimeIdeal& P);

struct OverringDescriptor {
  enum class Kind { LOCALIZATION, INTEGRAL_CLOSURE, EXPLICIT };
  const Domain* base = nullptr;
  const Domain* target = nullptr;
  Kind kind = Kind::EXPLICIT;
  Tri flat = Tri::unknown;
};

// LOCALIZATION: yes.  Otherwise the localization criterion T_N = D_{N cap D}
// over the supplied candidate maximal ideals of T: any failure gives no (with
// witness); exhaustion without a coverage guarantee gives unknown.
Tri is_flat_overring(const Domain* D, const OverringDescriptor& T,
                     const std::vector<PrimeIdeal>& candidates,
                     PrimeIdeal* witness = nullptr);

}  // namespace sst

#endif
