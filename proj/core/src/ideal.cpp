#include "semistar/ideal.hpp"

#include <algorithm>

namespace sst {

FractionalIdeal ideal_from_lattice(const Domain* D, Lattice L) {
  FractionalIdeal out;
  out.domain = D;
  out.lat = span_in(D, std::move(L));
  return out;
}

FractionalIdeal hnf_normalize(const Domain* D, const mpz_class& den,
                              std::vector<Vec2> vectors) {
  return ideal_from_lattice(D, lattice_make(D->field, den, std::move(vectors)));
}

FractionalIdeal ideal_from_elems(const Domain* D,
                                 const std::vector<FieldElem>& gens) {
  return ideal_from_lattice(D, lattice_from_elems(D->field, gens));
}

FractionalIdeal ideal_parse(const Domain* D, const std::string& text) {
  return ideal_from_lattice(D, lattice_parse(D->field, text));
}

FractionalIdeal unit_ideal(const Domain* D) {
  return ideal_from_lattice(D, D->ring);
}

FractionalIdeal prime_as_ideal(const Domain* D, const PrimeIdeal& P) {
  if (P.ring_of != D->global_ring()) throw DomainMismatchError();
  return ideal_from_lattice(D, P.under);
}

FractionalIdeal ideal_combine(CombineMode mode, const FractionalIdeal& E,
                              const FractionalIdeal& F) {
  if (E.domain != F.domain) throw DomainMismatchError();
  Lattice L;
  switch (mode) {
    case CombineMode::SUM: L = lattice_sum(E.lat, F.lat); break;
    case CombineMode::PRODUCT: L = lattice_product(E.lat, F.lat); break;
    case CombineMode::INTERSECT: L = lattice_intersect(E.lat, F.lat); break;
  }
  FractionalIdeal out;
  out.domain = E.domain;
  out.lat = canonicalize_in(E.domain, L);
  return out;
}

FractionalIdeal ideal_colon(const FractionalIdeal& E, const FractionalIdeal& F) {
  if (E.domain != F.domain) throw DomainMismatchError();
  FractionalIdeal out;
  out.domain = E.domain;
  out.lat = canonicalize_in(E.domain, lattice_colon(E.lat, F.lat));
  return out;
}

bool ideal_contains(const FractionalIdeal& E, const FractionalIdeal& F) {
  if (E.domain != F.domain) throw DomainMismatchError();
  return lattice_contains(E.lat, F.lat);
}

bool ideal_eq(const FractionalIdeal& E, const FractionalIdeal& F) {
  if (E.domain != F.domain) throw DomainMismatchError();
  return E.lat == F.lat;
}

FractionalIdeal ideal_scale(const FractionalIdeal& E, const FieldElem& x) {
  FractionalIdeal out;
  out.domain = E.domain;
  out.lat = canonicalize_in(E.domain, lattice_scale(E.lat, x));
  return out;
}

bool member_of(const FieldElem& x, const FractionalIdeal& F) {
  if (!F.domain->localized()) return lattice_member(F.lat, x);
  for (const auto& Q : F.domain->at)
    if (!local_member(F.lat, x, Q)) return false;
  return true;
}

std::vector<PrimeIdeal> compatible_primes(const Domain* ringE,
                                          const PrimeIdeal& Q) {
  const Domain* ringF = Q.ring_of;
  std::vector<PrimeIdeal> out;
  for (const auto& P : Registry::get().primes_above_ring(ringE, Q.p)) {
    bool compat;
    if (ringE == ringF) {
      compat = P == Q;
    } else if (lattice_contains(ringF->ring, ringE->ring)) {
      // ring(E) subset ring(F): Q contracts into ring(E)
      Lattice c = lattice_intersect(Q.under, ringE->ring);
      compat = lattice_contains(P.under, c);
    } else if (lattice_contains(ringE->ring, ringF->ring)) {
      Lattice c = lattice_intersect(P.under, ringF->ring);
      compat = lattice_contains(Q.under, c);
    } else {
      compat = false;
    }
    if (compat) out.push_back(P);
  }
  return out;
}

namespace {

bool locally_below(const FractionalIdeal& E, const FractionalIdeal& F,
                   const PrimeIdeal& Q) {
  const Domain* ringE = E.domain->global_ring();
  const Domain* ringF = Q.ring_of;
  if (E.domain->localized()) {
    auto C = compatible_primes(ringE, Q);
    if (C.empty()) return false;
    for (const auto& P : C)
      if (!E.domain->survives(P)) return false;  // E unbounded at Q
  }
  if (!lattice_contains(ringF->ring, ringE->ring)) {
    // ring(E) is the larger ring: F's local piece must be ring(E)-stable
    if (auto g = ringE->ring_generator()) {
      if (!local_contains(F.lat, lattice_scale(F.lat, *g), Q)) return false;
    }
  }
  return local_contains(F.lat, E.lat, Q);
}

}  // namespace

bool submodule_of(const FractionalIdeal& E, const FractionalIdeal& F) {
  if (E.domain == F.domain) return lattice_contains(F.lat, E.lat);
  if (E.domain->field != F.domain->field) throw DomainMismatchError();
  if (!F.domain->localized()) {
    if (E.domain->localized()) return false;  // unbounded outside finitely many primes
    return lattice_contains(F.lat, E.lat);
  }
  for (const auto& Q : F.domain->at)
    if (!locally_below(E, F, Q)) return false;
  return true;
}

bool set_equal(const FractionalIdeal& E, const FractionalIdeal& F) {
  return submodule_of(E, F) && submodule_of(F, E);
}

FractionalIdeal extend_to(const FractionalIdeal& E, const Domain* T) {
  const Domain* DE = E.domain;
  if (DE->field != T->field) throw DomainMismatchError();
  Lattice L = E.lat;
  const Domain* ctx = T;
  if (!T->localized()) {
    if (DE->localized()) {
      // E*T survives exactly at the primes of T compatible with E's support
      std::vector<PrimeIdeal> at;
      for (const auto& P : DE->at)
        for (const auto& N : Registry::get().primes_above_ring(T, P.p)) {
          auto C = compatible_primes(DE->global_ring(), N);
          bool ok = !C.empty();
          for (const auto& Pc : C) ok = ok && DE->survives(Pc);
          if (ok) at.push_back(N);
        }
      if (at.empty()) throw std::runtime_error("extension is no longer fractional");
      ctx = Registry::get().localization_of(T, std::move(at));
    }
  } else {
    for (const auto& N : T->at) {
      if (DE->localized()) {
        auto C = compatible_primes(DE->global_ring(), N);
        if (C.empty()) throw std::runtime_error("incompatible localizations");
        for (const auto& P : C)
          if (!DE->survives(P))
            throw std::runtime_error("extension is no longer fractional");
      }
    }
  }
  return ideal_from_lattice(ctx, std::move(L));
}

FractionalIdeal contract_to_subfield(const FractionalIdeal& E, const Domain* D) {
  if (D->field.quadratic() || !E.domain->field.quadratic())
    throw std::invalid_argument("contraction goes from a quadratic field to Q");
  if (!E.domain->localized()) {
    Lattice sl = lattice_slice_rational(E.lat);
    FractionalIdeal out;
    out.domain = D;
    out.lat = canonicalize_in(D, sl);
    return out;
  }
  // per rational prime: least k with p^k in every surviving local piece
  constexpr long cap = 4096;
  std::vector<long> ps;
  for (const auto& Q : E.domain->at)
    if (std::find(ps.begin(), ps.end(), Q.p) == ps.end()) ps.push_back(Q.p);
  if (D->kind != Domain::Kind::LocalizedIntegers)
    throw std::invalid_argument("contraction of a localized module needs a localized target");
  for (long p : D->S)
    if (std::find(ps.begin(), ps.end(), p) == ps.end())
      throw std::runtime_error("contraction is not fractional over the target");
  mpz_class num = 1, den = 1;
  FieldTag F = E.domain->field;
  for (long p : ps) {
    auto in_all = [&](long k) {
      mpz_class pk;
      mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p),
                    static_cast<unsigned long>(k < 0 ? -k : k));
      FieldElem x(k < 0 ? mpq_class(1, pk) : mpq_class(pk), F);
      for (const auto& Q : E.domain->at)
        if (Q.p == p && !local_member(E.lat, x, Q)) return false;
      return true;
    };
    long k = 0;
    if (in_all(0)) {
      while (k > -cap && in_all(k - 1)) --k;
    } else {
      while (k < cap && !in_all(k)) ++k;
      if (k >= cap) throw std::runtime_error("contraction valuation overflow");
    }
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(k < 0 ? -k : k));
    if (k >= 0) num *= pk; else den *= pk;
  }
  FractionalIdeal out;
  out.domain = D;
  out.lat = canonicalize_in(D, lattice_make(D->field, den, {{num, 0}}));
  return out;
}

bool is_valuation_at(const Domain* D, const PrimeIdeal& P) {
  if (!D->survives(P) && !(D->global_ring() == P.ring_of))
    throw DomainMismatchError();
  FractionalIdeal unit = unit_ideal(D);
  FractionalIdeal Pd = prime_as_ideal(D, P);
  FractionalIdeal inv = ideal_colon(unit, Pd);
  FractionalIdeal J = ideal_combine(CombineMode::PRODUCT, Pd, inv);
  bool dvr = !ideal_contains(Pd, J);
  if (D->field.quadratic()) {
    bool expected = !P.contains_conductor;
    if (dvr != expected)
      throw std::logic_error("valuation test disagrees with the conductor tag");
  }
  return dvr;
}

Tri is_flat_overring(const Domain* D, const OverringDescriptor& T,
                     const std::vector<PrimeIdeal>& candidates,
                     PrimeIdeal* witness) {
  if (T.kind == OverringDescriptor::Kind::LOCALIZATION) return Tri::yes;
  bool any = false;
  for (const auto& N : candidates) {
    any = true;
    // T localized at N
    const Domain* TN = Registry::get().localization_of(
        T.target->global_ring(), {N});
    // N cap D as a prime of D's ring
    auto C = compatible_primes(D->global_ring(), N);
    if (C.size() != 1) return Tri::unknown;
    if (D->localized() && !D->survives(C[0])) return Tri::unknown;
    const Domain* DP = Registry::get().localization_of(D->global_ring(), {C[0]});
    if (!set_equal(unit_ideal(TN), unit_ideal(DP))) {
      if (witness) *witness = N;
      return Tri::no;
    }
  }
  (void)any;
  return Tri::unknown;
}

}  // namespace sst
