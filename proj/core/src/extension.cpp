#include "semistar/extension.hpp"

#include "semistar/sample.hpp"

namespace sst {

namespace {

bool small_prime(long n) {
  if (n < 2) return false;
  for (long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

FieldElem embed(const FieldElem& x, FieldTag field) {
  return FieldElem(x.a, field);
}

// Rational localization handle covering exactly the given rational primes.
const Domain* rational_handle(const ExtensionPair& pair,
                              const std::vector<long>& ps) {
  const Domain* Z = pair.D->global_ring();
  std::vector<PrimeIdeal> at;
  for (long p : ps) at.push_back(primes_above(Z, p).front());
  return Registry::get().localization_of(Z, std::move(at));
}

void verify_rational_part(const ExtensionPair& pair) {
  const Domain* D = pair.D;
  const Domain* T = pair.T;
  FractionalIdeal uT = unit_ideal(T);
  FractionalIdeal contracted = contract_to_rationals(uT, pair);
  if (!set_equal(contracted, unit_ideal(D)))
    throw BadSpecError("the base ring is not the rational part of the overring");
  FractionalIdeal uD = unit_ideal(D);
  for (const auto& x : sample_elements(D, 30, 7)) {
    if (member_of(x, uD) != member_of(embed(x, T->field), uT))
      throw BadSpecError("rational element disagrees between base and overring: " +
                         x.str());
  }
}

}  // namespace

ExtensionPair make_extension_pair(const Domain* D, const Domain* T,
                                  ExtensionPair::Relation relation,
                                  long prime_bound) {
  if (D->field.quadratic() || !T->field.quadratic())
    throw BadSpecError("an extension pair joins a rational ring to a quadratic one");
  if (relation == ExtensionPair::Relation::T_INTEGRAL_CLOSURE_OF_D &&
      T->is_integrally_closed != Tri::yes)
    throw PreconditionNotMetError("the overring is not integrally closed");
  ExtensionPair pair{D, T, relation, {}};
  for (long p = 2; p <= prime_bound; ++p) {
    if (!small_prime(p)) continue;
    auto DPs = primes_above(D->global_ring(), p);
    if (DPs.empty()) continue;
    const PrimeIdeal& P = DPs.front();
    if (D->localized() && !D->survives(P)) continue;
    std::vector<PrimeIdeal> above;
    for (const auto& N : primes_above(T->global_ring(), p))
      if (!T->localized() || T->survives(N)) above.push_back(N);
    pair.prime_correspondence.emplace_back(P, std::move(above));
  }
  verify_rational_part(pair);
  return pair;
}

FractionalIdeal extend_to_quadratic(const FractionalIdeal& E, const Domain* T) {
  std::vector<FieldElem> gens;
  for (const auto& g : E.lat.generators()) gens.push_back(embed(g, T->field));
  return ideal_from_elems(T, gens);
}

FractionalIdeal contract_to_rationals(const FractionalIdeal& E,
                                      const ExtensionPair& pair) {
  if (!E.domain->localized())
    return contract_to_subfield(E, pair.D->global_ring());
  std::vector<long> ps;
  for (const auto& Q : E.domain->at)
    if (std::find(ps.begin(), ps.end(), Q.p) == ps.end()) ps.push_back(Q.p);
  return contract_to_subfield(E, rational_handle(pair, ps));
}

FractionalIdeal closure(const RestrictionOp& op, const FractionalIdeal& E) {
  FractionalIdeal ET = extend_to_quadratic(E, op.pair.T);
  return contract_to_rationals(closure(op.starT, ET), op.pair);
}

RestrictionOp make_underline_restriction(SemistarOp starT, ExtensionPair pair,
                                         int pool_size, unsigned long seed) {
  if (starT.domain != pair.T)
    throw BadSpecError("the restricted operation must live on the overring");
  RestrictionOp op{std::move(pair), std::move(starT), ""};
  op.name = "underline(" + op.starT.name + ")";
  const Domain* D = op.pair.D;
  auto ideals = sample_ideals(D, pool_size, seed);
  auto elems = sample_elements(D, pool_size, seed + 1);
  for (size_t i = 0; i < ideals.size(); ++i) {
    const FractionalIdeal& E = ideals[i];
    FractionalIdeal cE = closure(op, E);
    if (!submodule_of(E, cE))
      throw AxiomFailureError("closure is not extensive at " + E.str());
    if (!set_equal(closure(op, cE), cE))
      throw AxiomFailureError("closure is not idempotent at " + E.str());
    const FieldElem& x = elems[i % elems.size()];
    if (!set_equal(closure(op, ideal_scale(E, x)), ideal_scale(cE, x)))
      throw AxiomFailureError("closure does not commute with scaling at " +
                              E.str());
    FractionalIdeal F =
        ideal_combine(CombineMode::SUM, E, ideals[(i + 1) % ideals.size()]);
    if (!submodule_of(cE, closure(op, F)))
      throw AxiomFailureError("closure is not monotone at " + E.str());
  }
  return op;
}

SemistarOp make_overline_extension(const SemistarOp& starD,
                                   const ExtensionPair& pair) {
  if (starD.domain != pair.D)
    throw BadSpecError("the extended operation must live on the base ring");
  QuasiMaxReport qm = quasi_star_maximals(starD);
  if (qm.status != QuasiMaxReport::Status::ENUMERATED)
    throw PreconditionNotMetError(
        "extension needs an enumerated quasi-maximal spectrum");
  std::vector<const Domain*> family;
  for (const auto& Q : qm.primes) {
    if (!is_valuation_at(pair.D, Q))
      throw PreconditionNotMetError("quasi-maximal localization " + Q.str() +
                                    " is not a valuation ring");
    const std::vector<PrimeIdeal>* above = nullptr;
    for (const auto& [P, Ns] : pair.prime_correspondence)
      if (P == Q) above = &Ns;
    if (!above || above->empty())
      throw CorrespondenceIncompleteError("no overring prime above " + Q.str());
    for (const auto& N : *above) {
      if (N.contains_conductor)
        throw CorrespondenceIncompleteError(
            "no valuation localization above " + Q.str());
      const Domain* W = Registry::get().localization_of(pair.T->global_ring(), {N});
      if (std::find(family.begin(), family.end(), W) == family.end())
        family.push_back(W);
    }
  }
  SemistarOp op = make_valuation_family(pair.T, std::move(family));
  op.name = "overline(" + starD.name + ")";
  return op;
}

KrullReport krull_formula_check(const ExtensionPair& pair,
                                const std::vector<FractionalIdeal>& pool) {
  if (pair.relation != ExtensionPair::Relation::T_INTEGRAL_CLOSURE_OF_D ||
      pair.D->is_integrally_closed != Tri::yes)
    throw PreconditionNotMetError(
        "the formula needs an integrally closed base with its integral closure "
        "as overring");
  SemistarOp vD = make_divisorial(pair.D);
  SemistarOp vT = make_divisorial(pair.T);
  KrullReport rep;
  for (const auto& E : pool) {
    FractionalIdeal lhs =
        contract_to_rationals(closure(vT, extend_to_quadratic(E, pair.T)), pair);
    FractionalIdeal rhs = closure(vD, E);
    ++rep.checked;
    if (!set_equal(lhs, rhs)) {
      rep.ok = false;
      rep.witness = E;
      return rep;
    }
  }
  return rep;
}

AscentDescentReport pvmd_ascent_descent_check(const ExtensionPair& pair) {
  AscentDescentReport rep;
  rep.down = pmd_decide(pair.D, make_divisorial(pair.D));
  rep.up = pmd_decide(pair.T, make_divisorial(pair.T));
  if (rep.down.status == PmdVerdict::Status::UNKNOWN ||
      rep.up.status == PmdVerdict::Status::UNKNOWN)
    rep.agree = Tri::unknown;
  else
    rep.agree = rep.down.status == rep.up.status ? Tri::yes : Tri::no;
  return rep;
}

}  // namespace sst
