#include "semistar/starop.hpp"

#include <algorithm>
#include <sstream>

namespace sst {

namespace {

void push_unique(std::vector<PrimeIdeal>& v, const PrimeIdeal& P) {
  if (std::find(v.begin(), v.end(), P) == v.end()) v.push_back(P);
}

std::vector<PrimeIdeal> conductor_primes(const Domain* D) {
  std::vector<PrimeIdeal> out;
  long f = D->conductor;
  for (long p = 2; p <= f; ++p) {
    if (f % p != 0) continue;
    while (f % p == 0) f /= p;
    for (const auto& P : primes_above(D, p))
      if (P.contains_conductor) push_unique(out, P);
  }
  return out;
}

void check_overring(const Domain* D, const Domain* T) {
  if (!submodule_of(unit_ideal(D), unit_ideal(T)))
    throw BadSpecError("family member is not an overring of the base domain");
}

void check_family_shape(const std::vector<const Domain*>& family) {
  if (family.empty()) throw EmptyFamilyError();
  bool localized = family.front()->localized();
  for (const Domain* T : family) {
    if (T->localized() != localized)
      throw BadSpecError("family mixes global rings and localizations");
    if (localized && T->global_ring() != family.front()->global_ring())
      throw BadSpecError("localized family members must share one global ring");
  }
}

std::string family_name(const char* tag, const std::vector<const Domain*>& family) {
  std::ostringstream os;
  os << tag << "{";
  for (size_t i = 0; i < family.size(); ++i)
    os << (i ? "," : "") << family[i]->name;
  os << "}";
  return os.str();
}

// Set intersection of modules over localizations of one common ring,
// represented over the localization at the union of the supports.  Scaling by
// n (integral everywhere) makes the ring-padding of each canonical lattice
// harmless in a plain lattice intersection.
FractionalIdeal intersect_localized(const std::vector<FractionalIdeal>& parts) {
  const Domain* R = parts.front().domain->global_ring();
  std::vector<PrimeIdeal> sigma;
  mpz_class n = R->conductor;
  for (const auto& part : parts) {
    if (part.domain->global_ring() != R) throw DomainMismatchError();
    for (const auto& Q : part.domain->at) push_unique(sigma, Q);
    mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), part.lat.den.get_mpz_t());
  }
  const Domain* ctx = Registry::get().localization_of(R, sigma);
  FieldElem up(mpq_class(n), R->field);
  FieldElem down(mpq_class(1, n), R->field);
  std::optional<Lattice> acc;
  for (const auto& part : parts) {
    Lattice L = canonicalize_in(part.domain, lattice_scale(part.lat, up));
    acc = acc ? lattice_intersect(*acc, L) : L;
  }
  Lattice M = canonicalize_in(ctx, *acc);
  M = canonicalize_in(ctx, lattice_scale(M, down));
  return FractionalIdeal{ctx, std::move(M)};
}

FractionalIdeal spectral_closure(const SemistarOp& op, const FractionalIdeal& E) {
  const Domain* R = op.domain->global_ring();
  if (E.domain->global_ring() != R) throw DomainMismatchError();
  std::vector<PrimeIdeal> delta;
  for (const auto& P : op.primes)
    if (!E.domain->localized() || E.domain->survives(P)) delta.push_back(P);
  if (delta.empty()) throw TrivialOperationError();
  const Domain* ctx = Registry::get().localization_of(R, std::move(delta));
  return ideal_from_lattice(ctx, E.lat);
}

FractionalIdeal family_closure(const SemistarOp& op, const FractionalIdeal& E) {
  if (op.family.front()->localized()) {
    std::vector<FractionalIdeal> parts;
    parts.reserve(op.family.size());
    for (const Domain* T : op.family) parts.push_back(extend_to(E, T));
    return intersect_localized(parts);
  }
  if (E.domain->localized())
    throw BadSpecError("global-family closure of a localized module");
  std::optional<Lattice> acc;
  for (const Domain* T : op.family) {
    Lattice L = extend_to(E, T).lat;
    acc = acc ? lattice_intersect(*acc, L) : L;
  }
  return ideal_from_lattice(op.domain, std::move(*acc));
}

}  // namespace

SemistarOp make_identity(const Domain* D) {
  SemistarOp op;
  op.domain = D;
  op.kind = SemistarOp::Kind::IDENTITY;
  op.finite_type = Tri::yes;
  op.stable = Tri::yes;
  op.is_star = Tri::yes;
  op.name = "d";
  return op;
}

SemistarOp make_divisorial(const Domain* D) {
  SemistarOp op;
  op.domain = D;
  op.kind = SemistarOp::Kind::DIVISORIAL_V;
  op.is_star = Tri::yes;
  op.name = "v";
  return op;
}

SemistarOp make_spectral(const Domain* D, std::vector<PrimeIdeal> primes) {
  if (primes.empty()) throw EmptyFamilyError();
  for (const auto& P : primes) {
    if (P.ring_of != D->global_ring())
      throw BadSpecError("spectral prime belongs to a different ring");
    if (D->localized() && !D->survives(P))
      throw BadSpecError("spectral prime does not survive in the localization");
  }
  SemistarOp op;
  op.domain = D;
  op.kind = SemistarOp::Kind::SPECTRAL;
  op.primes = std::move(primes);
  op.finite_type = Tri::yes;
  op.stable = Tri::yes;
  std::ostringstream os;
  os << "sp{";
  for (size_t i = 0; i < op.primes.size(); ++i)
    os << (i ? "," : "") << op.primes[i].p << ":" << op.primes[i].index;
  os << "}";
  op.name = os.str();
  return op;
}

SemistarOp make_overring_family(const Domain* D,
                                std::vector<const Domain*> family) {
  check_family_shape(family);
  for (const Domain* T : family) check_overring(D, T);
  SemistarOp op;
  op.domain = D;
  op.kind = SemistarOp::Kind::OVERRING_FAMILY;
  op.family = std::move(family);
  op.finite_type = Tri::yes;
  op.name = family_name("ringfam", op.family);
  return op;
}

SemistarOp make_valuation_family(const Domain* D,
                                 std::vector<const Domain*> family) {
  check_family_shape(family);
  for (const Domain* T : family) {
    if (!T->localized()) throw NotDVRError();
    for (const auto& N : T->at)
      if (!is_valuation_at(T, N)) throw NotDVRError();
    check_overring(D, T);
  }
  SemistarOp op;
  op.domain = D;
  op.kind = SemistarOp::Kind::VALUATION_FAMILY;
  op.family = std::move(family);
  op.finite_type = Tri::yes;
  op.eab = Tri::yes;
  op.name = family_name("valfam", op.family);
  return op;
}

SemistarOp make_b_operation(const Domain* D, long prime_bound) {
  const Domain* C = integral_closure(D);
  const Domain* R = C->global_ring();
  std::vector<const Domain*> family;
  for (long p = 2; p <= prime_bound; ++p) {
    bool prime = p >= 2;
    for (long q = 2; q * q <= p; ++q)
      if (p % q == 0) { prime = false; break; }
    if (!prime) continue;
    for (const auto& N : Registry::get().primes_above_ring(R, p)) {
      if (C->localized() && !C->survives(N)) continue;
      family.push_back(Registry::get().localization_of(R, {N}));
    }
  }
  SemistarOp op = make_valuation_family(D, std::move(family));
  std::ostringstream os;
  os << "b<=" << prime_bound;
  op.name = os.str();
  return op;
}

SemistarOp make_induced(const Domain* T, SemistarOp parent) {
  check_overring(parent.domain, T);
  SemistarOp op;
  op.domain = T;
  op.kind = SemistarOp::Kind::INDUCED_DOT;
  op.finite_type = parent.finite_type;
  op.stable = parent.stable;
  op.eab = parent.eab;
  op.name = "induced(" + parent.name + ")";
  op.parent = std::make_shared<const SemistarOp>(std::move(parent));
  return op;
}

SemistarOp make_restricted(const Domain* D, SemistarOp parent) {
  check_overring(D, parent.domain);
  SemistarOp op;
  op.domain = D;
  op.kind = SemistarOp::Kind::RESTRICTED;
  op.finite_type = parent.finite_type;
  op.name = "restricted(" + parent.name + "@" + parent.domain->name + ")";
  op.parent = std::make_shared<const SemistarOp>(std::move(parent));
  return op;
}

FractionalIdeal closure(const SemistarOp& op, const FractionalIdeal& E) {
  if (E.domain->field != op.domain->field) throw DomainMismatchError();
  switch (op.kind) {
    case SemistarOp::Kind::IDENTITY:
      return E;
    case SemistarOp::Kind::DIVISORIAL_V: {
      if (E.domain != op.domain) throw DomainMismatchError();
      FractionalIdeal unit = unit_ideal(op.domain);
      return ideal_colon(unit, ideal_colon(unit, E));
    }
    case SemistarOp::Kind::SPECTRAL:
      return spectral_closure(op, E);
    case SemistarOp::Kind::OVERRING_FAMILY:
    case SemistarOp::Kind::VALUATION_FAMILY:
      return family_closure(op, E);
    case SemistarOp::Kind::INDUCED_DOT:
      return closure(*op.parent, E);
    case SemistarOp::Kind::RESTRICTED:
      return closure(*op.parent, extend_to(E, op.parent->domain));
  }
  throw std::logic_error("unhandled operation kind");
}

CompareReport compare_ops(const SemistarOp& op1, const SemistarOp& op2,
                          const std::vector<FractionalIdeal>& pool) {
  if (pool.empty()) throw EmptyPoolError();
  CompareReport r;
  bool le = true, ge = true;
  for (const auto& E : pool) {
    FractionalIdeal c1 = closure(op1, E);
    FractionalIdeal c2 = closure(op2, E);
    if (le && !submodule_of(c1, c2)) {
      le = false;
      r.not_le_witness = E;
    }
    if (ge && !submodule_of(c2, c1)) {
      ge = false;
      r.not_ge_witness = E;
    }
    if (!le && !ge) break;
  }
  r.verdict = le ? (ge ? CompareVerdict::EQ : CompareVerdict::LE)
                 : (ge ? CompareVerdict::GE : CompareVerdict::INCOMPARABLE);
  return r;
}

StabilityReport is_stable(
    const SemistarOp& op,
    const std::vector<std::pair<FractionalIdeal, FractionalIdeal>>& pool) {
  StabilityReport r;
  if (op.stable == Tri::yes) {
    r.verdict = Tri::yes;
    r.certified = true;
    return r;
  }
  for (const auto& [E, F] : pool) {
    FractionalIdeal lhs = closure(op, ideal_combine(CombineMode::INTERSECT, E, F));
    FractionalIdeal cE = closure(op, E);
    FractionalIdeal cF = closure(op, F);
    FractionalIdeal rhs =
        cE.domain == cF.domain ? ideal_combine(CombineMode::INTERSECT, cE, cF)
        : (cE.domain->localized() && cF.domain->localized()
               ? intersect_localized({cE, cF})
               : lhs);  // incomparable contexts: skip the sample
    if (!set_equal(lhs, rhs)) {
      r.verdict = Tri::no;
      r.witness = {E, F};
      return r;
    }
  }
  return r;
}

EabReport eab_falsifier(const SemistarOp& op,
                        const std::vector<std::array<FractionalIdeal, 3>>& pool) {
  EabReport r;
  if (op.eab == Tri::yes) {
    r.certified = true;
    return r;
  }
  for (const auto& [E, F, G] : pool) {
    FractionalIdeal lhs = closure(op, ideal_combine(CombineMode::PRODUCT, E, F));
    FractionalIdeal rhs = closure(op, ideal_combine(CombineMode::PRODUCT, E, G));
    if (submodule_of(lhs, rhs) &&
        !submodule_of(closure(op, F), closure(op, G))) {
      r.counterexample = true;
      r.witness = {{E, F, G}};
      return r;
    }
  }
  return r;
}

bool is_quasi_star_prime(const SemistarOp& op, const PrimeIdeal& P) {
  FractionalIdeal Pd = prime_as_ideal(op.domain, P);
  FieldElem one(mpq_class(1), op.domain->field);
  try {
    return !member_of(one, closure(op, Pd));
  } catch (const TrivialOperationError&) {
    return false;  // closure is all of K
  }
}

QuasiMaxReport quasi_star_maximals(const SemistarOp& op) {
  const Domain* D = op.domain;
  auto filtered = [&](std::vector<PrimeIdeal> cand) {
    std::vector<PrimeIdeal> keep;
    for (const auto& P : cand)
      if (std::find(keep.begin(), keep.end(), P) == keep.end() &&
          is_quasi_star_prime(op, P))
        keep.push_back(P);
    return keep;
  };
  auto enumerated = [&](std::vector<PrimeIdeal> cand) {
    return QuasiMaxReport{QuasiMaxReport::Status::ENUMERATED,
                          filtered(std::move(cand))};
  };
  auto conductor_witnesses = [&] {
    return QuasiMaxReport{QuasiMaxReport::Status::WITNESS_ONLY,
                          filtered(conductor_primes(D))};
  };
  QuasiMaxReport unsupported;
  switch (op.kind) {
    case SemistarOp::Kind::IDENTITY:
      return D->localized() ? enumerated(D->max_ideals()) : unsupported;
    case SemistarOp::Kind::SPECTRAL:
      return enumerated(op.primes);
    case SemistarOp::Kind::DIVISORIAL_V:
      if (D->localized()) return enumerated(D->max_ideals());
      if (D->field.quadratic() && D->conductor > 1) return conductor_witnesses();
      return unsupported;
    case SemistarOp::Kind::OVERRING_FAMILY:
    case SemistarOp::Kind::VALUATION_FAMILY: {
      if (op.family.front()->localized()) {
        // primes outside every member's support extend to the member itself,
        // so their closure meets 1: the candidate list is provably complete
        std::vector<PrimeIdeal> cand;
        for (const Domain* T : op.family)
          for (const auto& N : T->at)
            for (const auto& P : compatible_primes(D->global_ring(), N))
              if (!D->localized() || D->survives(P)) push_unique(cand, P);
        return enumerated(std::move(cand));
      }
      if (!D->localized() && D->field.quadratic() && D->conductor > 1)
        return conductor_witnesses();
      return unsupported;
    }
    case SemistarOp::Kind::INDUCED_DOT:
      return D->localized() ? enumerated(D->max_ideals()) : unsupported;
    case SemistarOp::Kind::RESTRICTED: {
      if (D->localized()) return enumerated(D->max_ideals());
      const Domain* T = op.parent->domain;
      if (T->localized()) {
        std::vector<PrimeIdeal> cand;
        for (const auto& N : T->at)
          for (const auto& P : compatible_primes(D->global_ring(), N))
            push_unique(cand, P);
        return enumerated(std::move(cand));
      }
      return unsupported;
    }
  }
  return unsupported;
}

SemistarOp tilde(const SemistarOp& op) {
  QuasiMaxReport r = quasi_star_maximals(op);
  if (r.status != QuasiMaxReport::Status::ENUMERATED)
    throw TildeUnsupportedError();
  if (r.primes.empty()) throw TrivialOperationError();
  SemistarOp t = make_spectral(op.domain, std::move(r.primes));
  t.name = "tilde(" + op.name + ")";
  return t;
}

SemistarOp eab_associated_exact(const SemistarOp& op) {
  if (op.eab == Tri::yes && op.finite_type == Tri::yes) return op;
  throw NotEabError();
}

BoundedClosure star_a_bounded(const SemistarOp& op, const FractionalIdeal& F,
                              const std::vector<FractionalIdeal>& pool) {
  if (pool.empty()) throw EmptyPoolError();
  auto term = [&](const FractionalIdeal& H) {
    FractionalIdeal c = closure(op, ideal_combine(CombineMode::PRODUCT, F, H));
    FractionalIdeal Hx = H.domain == c.domain ? H : extend_to(H, c.domain);
    return ideal_colon(c, Hx);
  };
  std::optional<FractionalIdeal> acc;
  for (const auto& H : pool) {
    FractionalIdeal t = term(H);
    acc = acc ? ideal_combine(CombineMode::SUM, *acc, t) : t;
  }
  bool stabilized = true;
  for (size_t i = 0; i < pool.size() && i < 4 && stabilized; ++i) {
    FractionalIdeal t =
        term(ideal_combine(CombineMode::PRODUCT, pool[i], pool.front()));
    if (!(ideal_combine(CombineMode::SUM, *acc, t) == *acc)) stabilized = false;
  }
  return {std::move(*acc), stabilized};
}

BoundedClosure semistar_integral_closure_bounded(
    const SemistarOp& op, const FractionalIdeal& E,
    const std::vector<FractionalIdeal>& pool) {
  auto term = [&](const FractionalIdeal& H) {
    FractionalIdeal c = closure(op, H);
    FractionalIdeal Hx = H.domain == c.domain ? H : extend_to(H, c.domain);
    FractionalIdeal mult = ideal_colon(c, Hx);  // (H^* : H)
    FractionalIdeal Ex = E.domain == mult.domain ? E : extend_to(E, mult.domain);
    return closure(op, ideal_combine(CombineMode::PRODUCT, mult, Ex));
  };
  FractionalIdeal acc = term(unit_ideal(op.domain));
  for (const auto& H : pool)
    acc = ideal_combine(CombineMode::SUM, acc, term(H));
  bool stabilized = true;
  for (size_t i = 0; i < pool.size() && i < 4 && stabilized; ++i) {
    FractionalIdeal t =
        term(ideal_combine(CombineMode::PRODUCT, pool[i], pool[i]));
    if (!(ideal_combine(CombineMode::SUM, acc, t) == acc)) stabilized = false;
  }
  return {std::move(acc), stabilized};
}

BoundedClosure w_closure_bounded(const SemistarOp& op, const FractionalIdeal& E,
                                 const std::vector<FractionalIdeal>& pool) {
  FractionalIdeal unitc = closure(op, unit_ideal(op.domain));
  auto qualifies = [&](const FractionalIdeal& H) {
    return set_equal(closure(op, H), unitc);
  };
  FractionalIdeal acc = E;  // the H = D term
  std::vector<FractionalIdeal> used;
  for (const auto& H : pool) {
    if (!qualifies(H)) continue;
    used.push_back(H);
    acc = ideal_combine(CombineMode::SUM, acc, ideal_colon(E, H));
  }
  bool stabilized = true;
  for (size_t i = 0; i < used.size() && i < 4 && stabilized; ++i) {
    FractionalIdeal H =
        ideal_combine(CombineMode::PRODUCT, used[i], used.front());
    if (!qualifies(H)) continue;
    FractionalIdeal t = ideal_colon(E, H);
    if (!(ideal_combine(CombineMode::SUM, acc, t) == acc)) stabilized = false;
  }
  return {std::move(acc), stabilized};
}

Tri is_star_valuation_overring(const SemistarOp& op, const Domain* V,
                               const std::vector<FractionalIdeal>& pool) {
  if (!V->localized() || V->at.size() != 1 || !is_valuation_at(V, V->at.front()))
    throw NotDVRError();
  FractionalIdeal Vu = unit_ideal(V);
  switch (op.kind) {
    case SemistarOp::Kind::IDENTITY:
      return Tri::yes;
    case SemistarOp::Kind::SPECTRAL: {
      // V^* = cap V D_P; a DVR has no proper overring besides K, so the
      // intersection fixes V exactly when some D_P sits inside V
      for (const auto& P : op.primes) {
        const Domain* DP =
            Registry::get().localization_of(op.domain->global_ring(), {P});
        if (submodule_of(unit_ideal(DP), Vu)) return Tri::yes;
      }
      return Tri::no;
    }
    case SemistarOp::Kind::OVERRING_FAMILY:
    case SemistarOp::Kind::VALUATION_FAMILY: {
      for (const Domain* T : op.family)
        if (submodule_of(unit_ideal(T), Vu)) return Tri::yes;
      return Tri::no;
    }
    default: {
      for (const auto& F : pool)
        if (!submodule_of(closure(op, F), extend_to(F, V))) return Tri::no;
      return Tri::unknown;
    }
  }
}

}  // namespace sst
