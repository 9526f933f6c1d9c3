#ifndef SEMISTAR_PMD_HPP
#define SEMISTAR_PMD_HPP

#include "semistar/funcring.hpp"

namespace sst {

struct RoutesDisagreeError : std::logic_error {
  RoutesDisagreeError()
      : std::logic_error("invertibility routes disagree (invariant breach)") {}
};
struct UnknownTheoremIdError : std::runtime_error {
  explicit UnknownTheoremIdError(const std::string& id)
      : std::runtime_error("unknown theorem id: " + id) {}
};

struct InvertReport {
  bool invertible = false;
  Tri definition_route = Tri::unknown;
  Tri local_route = Tri::unknown;
  Tri nagata_route = Tri::unknown;  // via the spectral finite-type companion
  std::optional<PrimeIdeal> blocking_prime;
};
// All definite routes must agree; disagreement throws.
InvertReport star_invertible(const SemistarOp& op, const FractionalIdeal& I);

struct PmdVerdict {
  enum class Status { YES, NO, UNKNOWN };
  Status status = Status::UNKNOWN;
  std::optional<PrimeIdeal> witness;   // non-valuation quasi-maximal
  std::vector<PrimeIdeal> evidence;    // enumerated quasi-maximals, all DVR
  std::string note;
};
const char* pmd_status_str(PmdVerdict::Status s);
// Every finitely generated ideal finite-type-invertible, decided through the
// quasi-maximal localizations (or a Prufer certificate).
PmdVerdict pmd_decide(const Domain* D, const SemistarOp& op);

struct UpperToZeroReport {
  bool found = false;
  PolyOverK f;
};
// Searches f = (aX+b) * l with coefficients of l drawn from the generators of
// (D : (a,b)), f in D[X] of unit-closure content; deterministic order.
UpperToZeroReport upper_to_zero_witness(const SemistarOp& op, const FieldElem& a,
                                        const FieldElem& b, int degree_bound);

struct TheoremCheck {
  std::string claim;
  std::string statement;  // self-contained formal statement of the clause
  std::string verdict;    // PASS / FAIL / UNKNOWN
  std::string witness;
};
struct TheoremReport {
  std::string theorem_id;
  std::string instance;
  std::vector<TheoremCheck> checks;
  unsigned long seed = 0;
  bool passed() const;   // no FAIL
  bool decided() const;  // no UNKNOWN either
};

struct TheoremInstance {
  const Domain* D = nullptr;
  std::optional<SemistarOp> op;
  const Domain* T = nullptr;
  unsigned long seed = 1;
  int pool_size = 60;
  int degree_bound = 8;
};

// Ids: THM_PR3, PROP_PR5, COR_CO7, PROP_PR8, RE9, PROP_CO11, PROP_PR34,
// COR_35, EX_2_9, LM_MSTAR, RK_216.
TheoremReport verify_theorem(const std::string& id, const TheoremInstance& inst);

}  // namespace sst

#endif
