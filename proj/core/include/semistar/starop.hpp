#ifndef SEMISTAR_STAROP_HPP
#define SEMISTAR_STAROP_HPP

#include <memory>

#include "semistar/ideal.hpp"

namespace sst {

struct EmptyFamilyError : std::runtime_error {
  EmptyFamilyError() : std::runtime_error("operation family must be nonempty") {}
};
struct TrivialOperationError : std::runtime_error {
  TrivialOperationError()
      : std::runtime_error("closure collapses to the whole field") {}
};
struct TildeUnsupportedError : std::runtime_error {
  TildeUnsupportedError()
      : std::runtime_error("quasi-maximals are not enumerated for this operation") {}
};
struct NotEabError : std::runtime_error {
  NotEabError() : std::runtime_error("no cancellation certificate available") {}
};
struct NotDVRError : std::runtime_error {
  NotDVRError()
      : std::runtime_error("overring is not a discrete valuation localization") {}
};
struct EmptyPoolError : std::runtime_error {
  EmptyPoolError() : std::runtime_error("sample pool must be nonempty") {}
};

// Closure-operator descriptor on the modules of a fixed domain.
struct SemistarOp {
  enum class Kind {
    IDENTITY,
    DIVISORIAL_V,
    SPECTRAL,
    OVERRING_FAMILY,
    VALUATION_FAMILY,
    INDUCED_DOT,
    RESTRICTED,
  };

  const Domain* domain = nullptr;
  Kind kind = Kind::IDENTITY;
  std::vector<PrimeIdeal> primes;        // SPECTRAL
  std::vector<const Domain*> family;     // OVERRING_FAMILY / VALUATION_FAMILY
  std::shared_ptr<const SemistarOp> parent;  // INDUCED_DOT / RESTRICTED

  Tri finite_type = Tri::unknown;
  Tri stable = Tri::unknown;
  Tri eab = Tri::unknown;
  Tri is_star = Tri::unknown;
  std::string name;
};

SemistarOp make_identity(const Domain* D);
SemistarOp make_divisorial(const Domain* D);
SemistarOp make_spectral(const Domain* D, std::vector<PrimeIdeal> primes);
// Family of overrings: either all global rings, or all localizations of one
// common global ring (so finite intersections stay representable).
SemistarOp make_overring_family(const Domain* D, std::vector<const Domain*> family);
// Family of DVR localizations; carries the cancellation certificate.
SemistarOp make_valuation_family(const Domain* D, std::vector<const Domain*> family);
// Valuation family over all localizations of the integral closure at primes
// up to the bound (truncated surrogate for the b-operation).
SemistarOp make_b_operation(const Domain* D, long prime_bound = kDefaultPrimeBound);
// parent lives on a subring of T; the same closure read as an operation on T.
SemistarOp make_induced(const Domain* T, SemistarOp parent);
// parent lives on an overring T of D; closure E -> (ET)^parent.
SemistarOp make_restricted(const Domain* D, SemistarOp parent);

// Exact closure of a finitely generated module; the result may live over a
// localization handle (its set semantics are compared with set_equal &c).
FractionalIdeal closure(const SemistarOp& op, const FractionalIdeal& E);

enum class CompareVerdict { EQ, LE, GE, INCOMPARABLE };
struct CompareReport {
  CompareVerdict verdict = CompareVerdict::EQ;
  // sample whose op1-closure is not below its op2-closure (resp. converse)
  std::optional<FractionalIdeal> not_le_witness;
  std::optional<FractionalIdeal> not_ge_witness;
};
CompareReport compare_ops(const SemistarOp& op1, const SemistarOp& op2,
                          const std::vector<FractionalIdeal>& pool);

struct StabilityReport {
  Tri verdict = Tri::unknown;
  bool certified = false;  // yes by construction, not by sampling
  std::optional<std::pair<FractionalIdeal, FractionalIdeal>> witness;
};
StabilityReport is_stable(
    const SemistarOp& op,
    const std::vector<std::pair<FractionalIdeal, FractionalIdeal>>& pool);

struct EabReport {
  bool counterexample = false;
  bool certified = false;  // absence guaranteed, not just unobserved
  std::optional<std::array<FractionalIdeal, 3>> witness;  // E, F, G
};
EabReport eab_falsifier(
    const SemistarOp& op,
    const std::vector<std::array<FractionalIdeal, 3>>& pool);

struct QuasiMaxReport {
  enum class Status { ENUMERATED, WITNESS_ONLY, UNSUPPORTED };
  Status status = Status::UNSUPPORTED;
  std::vector<PrimeIdeal> primes;
};
// Maximal ideals P with P^op cap D = P.  ENUMERATED when the list is provably
// complete (finite spectra or finite family supports); WITNESS_ONLY when only
// verified members are known.
QuasiMaxReport quasi_star_maximals(const SemistarOp& op);

// P^op cap D = P (P maximal, so equivalent to 1 not in P^op).
bool is_quasi_star_prime(const SemistarOp& op, const PrimeIdeal& P);

// Spectral operation over the enumerated quasi-maximals.
SemistarOp tilde(const SemistarOp& op);

struct BoundedClosure {
  FractionalIdeal value;
  bool stabilized = false;  // no growth when the pool is extended one round
};

// Monotone union of ((FH)^op : H) over H in the pool.
BoundedClosure star_a_bounded(const SemistarOp& op, const FractionalIdeal& F,
                              const std::vector<FractionalIdeal>& pool);
// Returns op itself when certified e.a.b. of finite type; throws otherwise.
SemistarOp eab_associated_exact(const SemistarOp& op);
// Monotone union of ((H^op : H) E)^op over H in the pool.
BoundedClosure semistar_integral_closure_bounded(
    const SemistarOp& op, const FractionalIdeal& E,
    const std::vector<FractionalIdeal>& pool);
// Monotone union of (E : H) over H in the pool with H^op = D^op.
BoundedClosure w_closure_bounded(const SemistarOp& op, const FractionalIdeal& E,
                                 const std::vector<FractionalIdeal>& pool);

// V a DVR localization handle: V^op = V, decided exactly for the structured
// kinds, sampled (F^op subset FV) otherwise.
Tri is_star_valuation_overring(const SemistarOp& op, const Domain* V,
                               const std::vector<FractionalIdeal>& pool = {});

}  // namespace sst

#endif
