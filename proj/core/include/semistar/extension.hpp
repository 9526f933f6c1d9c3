#ifndef SEMISTAR_EXTENSION_HPP
#define SEMISTAR_EXTENSION_HPP

#include "semistar/pmd.hpp"

namespace sst {

struct PreconditionNotMetError : std::runtime_error {
  explicit PreconditionNotMetError(const std::string& m)
      : std::runtime_error(m) {}
};
struct CorrespondenceIncompleteError : std::runtime_error {
  explicit CorrespondenceIncompleteError(const std::string& m)
      : std::runtime_error(m) {}
};
struct AxiomFailureError : std::logic_error {
  explicit AxiomFailureError(const std::string& m) : std::logic_error(m) {}
};

// Registered algebraic extension Q inside Q(sqrt d): D a ring of rationals,
// T an overring of D inside the quadratic field with D = T cap Q.
struct ExtensionPair {
  enum class Relation { T_INTEGRAL_CLOSURE_OF_D, T_CONTAINS_D };
  const Domain* D = nullptr;
  const Domain* T = nullptr;
  Relation relation = Relation::T_CONTAINS_D;
  // rational prime of D's ring -> primes of T's global ring above it
  std::vector<std::pair<PrimeIdeal, std::vector<PrimeIdeal>>> prime_correspondence;
};
ExtensionPair make_extension_pair(const Domain* D, const Domain* T,
                                  ExtensionPair::Relation relation,
                                  long prime_bound = kDefaultPrimeBound);

// E over D carried into the quadratic field and spanned over T.
FractionalIdeal extend_to_quadratic(const FractionalIdeal& E, const Domain* T);
// E over (a localization handle of) T's ring pulled back to the rationals.
FractionalIdeal contract_to_rationals(const FractionalIdeal& E,
                                      const ExtensionPair& pair);

// Closure E -> (ET)^starT cap Q, an operation on D; the three closure axioms
// are verified on a seeded pool at construction.
struct RestrictionOp {
  ExtensionPair pair;
  SemistarOp starT;
  std::string name;
};
RestrictionOp make_underline_restriction(SemistarOp starT, ExtensionPair pair,
                                         int pool_size = 40,
                                         unsigned long seed = 1);
FractionalIdeal closure(const RestrictionOp& op, const FractionalIdeal& E);

// Valuation family on T whose members contract to the D_Q, one batch per
// enumerated quasi-maximal Q of starD.
SemistarOp make_overline_extension(const SemistarOp& starD,
                                   const ExtensionPair& pair);

struct KrullReport {
  bool ok = true;
  int checked = 0;
  std::optional<FractionalIdeal> witness;
};
// (ET)^v cap Q = E^v for each E in the pool; needs integrally closed D with
// T its integral closure in the quadratic field.
KrullReport krull_formula_check(const ExtensionPair& pair,
                                const std::vector<FractionalIdeal>& pool);

struct AscentDescentReport {
  PmdVerdict down;  // divisorial decision on D
  PmdVerdict up;    // divisorial decision on T
  Tri agree = Tri::unknown;
};
AscentDescentReport pvmd_ascent_descent_check(const ExtensionPair& pair);

}  // namespace sst

#endif
