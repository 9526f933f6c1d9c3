#ifndef SEMISTAR_FUNCRING_HPP
#define SEMISTAR_FUNCRING_HPP

#include "semistar/poly.hpp"
#include "semistar/starop.hpp"

namespace sst {

struct UnsupportedModeError : std::runtime_error {
  explicit UnsupportedModeError(const std::string& m) : std::runtime_error(m) {}
};
struct NoValuationFamilyError : std::runtime_error {
  NoValuationFamilyError()
      : std::runtime_error("no valuation family available for this operation") {}
};

enum class NaMode { CERTIFIED, LOCAL };

// u in the X-ring of op's domain localized at the polynomials with
// unit-closure content.  CERTIFIED uses the given fraction as a certificate
// (yes or unknown); LOCAL is exact and needs the enumerated quasi-maximals to
// have valuation localizations.
Tri na_membership(const SemistarOp& op, const RationalFunction& u, NaMode mode);
// Unit of the same ring: both numerator and denominator certify.
Tri na_unit(const SemistarOp& op, const RationalFunction& u, NaMode mode);

// The DVR localizations at the enumerated quasi-maximals, or empty when that
// description is unavailable.
std::vector<const Domain*> na_local_family(const SemistarOp& op);

struct NaContractionReport {
  FractionalIdeal value;  // tilde-closure of E
  bool agreed = false;    // dual route matched on every sample
  std::optional<FieldElem> witness;
};
NaContractionReport na_extension_contraction(const SemistarOp& op,
                                             const FractionalIdeal& E,
                                             const std::vector<FieldElem>& samples);

enum class KrMode { VALUATION_EXACT, BOUNDED_H };

// Kronecker-ring membership: exact by minimum coefficient valuations over a
// valuation family, or certified by an explicit multiplier h with
// (c(num) c(h))^op inside (c(den) c(h))^op.
Tri kr_membership(const SemistarOp& op, const RationalFunction& u, KrMode mode,
                  const std::vector<PolyOverK>& hpool = {});

struct ProbeReport {
  bool agree = true;
  long compared = 0;
  long unknowns = 0;
  std::optional<RationalFunction> witness;
};
ProbeReport na_eq_kr_probe(const SemistarOp& opNa, const SemistarOp& opKr,
                           const std::vector<RationalFunction>& samples);

struct PrincipalGenReport {
  bool ok = true;
  long compared = 0;
  std::optional<FieldElem> witness;
};
// F extended to the Kronecker ring is generated by the polynomial with F's
// generators as coefficients; checks x in F.Kr cap K <=> x in the op-closure
// of F on the samples.
PrincipalGenReport kr_principal_generation_check(
    const SemistarOp& op, const FractionalIdeal& F,
    const std::vector<FieldElem>& samples);

// Minimum valuation of the nonzero coefficients at a DVR prime.
long poly_min_valuation(const PolyOverK& f, const PrimeIdeal& N,
                        const Lattice& ring);

}  // namespace sst

#endif
