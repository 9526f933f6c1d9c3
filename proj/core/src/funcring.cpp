#include "semistar/funcring.hpp"

namespace sst {

long poly_min_valuation(const PolyOverK& f, const PrimeIdeal& N,
                        const Lattice& ring) {
  if (f.is_zero()) throw ZeroPolynomialError();
  bool have = false;
  long best = 0;
  for (const auto& c : f.coeffs) {
    if (c.is_zero()) continue;
    long v = local_valuation(c, N, ring);
    if (!have || v < best) best = v;
    have = true;
  }
  return best;
}

std::vector<const Domain*> na_local_family(const SemistarOp& op) {
  QuasiMaxReport r = quasi_star_maximals(op);
  if (r.status != QuasiMaxReport::Status::ENUMERATED) return {};
  std::vector<const Domain*> family;
  const Domain* R = op.domain->global_ring();
  for (const auto& Q : r.primes) {
    const Domain* DQ = Registry::get().localization_of(R, {Q});
    if (!is_valuation_at(DQ, Q)) return {};
    family.push_back(DQ);
  }
  return family;
}

namespace {

Tri certified_content_unit(const SemistarOp& op, const PolyOverK& g) {
  const Domain* D = op.domain;
  if (!poly_in_ring(g, D)) return Tri::unknown;
  FractionalIdeal cg = closure(op, content(g, D));
  FractionalIdeal cu = closure(op, unit_ideal(D));
  return set_equal(cg, cu) ? Tri::yes : Tri::unknown;
}

// yes/no comparison of minimum coefficient valuations at every prime of the
// family; valuation route, exact.
Tri local_quotient_member(const std::vector<const Domain*>& family,
                          const PolyOverK& num, const PolyOverK& den,
                          bool require_equal) {
  for (const Domain* T : family) {
    const Lattice& ring = T->global_ring()->ring;
    for (const auto& N : T->at) {
      long vn = poly_min_valuation(num, N, ring);
      long vd = poly_min_valuation(den, N, ring);
      if (require_equal ? vn != vd : vn < vd) return Tri::no;
    }
  }
  return Tri::yes;
}

}  // namespace

Tri na_membership(const SemistarOp& op, const RationalFunction& u, NaMode mode) {
  if (u.den.is_zero()) throw ZeroPolynomialError();
  if (mode == NaMode::CERTIFIED) {
    if (!poly_in_ring(u.num, op.domain)) return Tri::unknown;
    return certified_content_unit(op, u.den);
  }
  std::vector<const Domain*> family = na_local_family(op);
  if (family.empty())
    throw UnsupportedModeError(
        "local membership needs enumerated valuation quasi-maximals");
  if (u.num.is_zero()) return Tri::yes;
  return local_quotient_member(family, u.num, u.den, false);
}

Tri na_unit(const SemistarOp& op, const RationalFunction& u, NaMode mode) {
  if (u.den.is_zero() || u.num.is_zero()) throw ZeroPolynomialError();
  if (mode == NaMode::CERTIFIED) {
    Tri a = certified_content_unit(op, u.num);
    Tri b = certified_content_unit(op, u.den);
    return (a == Tri::yes && b == Tri::yes) ? Tri::yes : Tri::unknown;
  }
  std::vector<const Domain*> family = na_local_family(op);
  if (family.empty())
    throw UnsupportedModeError(
        "local membership needs enumerated valuation quasi-maximals");
  return local_quotient_member(family, u.num, u.den, true);
}

NaContractionReport na_extension_contraction(
    const SemistarOp& op, const FractionalIdeal& E,
    const std::vector<FieldElem>& samples) {
  std::vector<const Domain*> family = na_local_family(op);
  if (family.empty())
    throw UnsupportedModeError(
        "contraction route needs enumerated valuation quasi-maximals");
  NaContractionReport rep;
  rep.value = closure(tilde(op), E);
  rep.agreed = true;
  for (const auto& x : samples) {
    if (x.is_zero()) continue;
    bool via_na = true;
    for (const Domain* T : family)
      if (!local_member(E.lat, x, T->at.front())) {
        via_na = false;
        break;
      }
    if (via_na != member_of(x, rep.value)) {
      rep.agreed = false;
      rep.witness = x;
      return rep;
    }
  }
  return rep;
}

Tri kr_membership(const SemistarOp& op, const RationalFunction& u, KrMode mode,
                  const std::vector<PolyOverK>& hpool) {
  if (u.den.is_zero()) throw ZeroPolynomialError();
  if (mode == KrMode::VALUATION_EXACT) {
    if (op.kind != SemistarOp::Kind::VALUATION_FAMILY)
      throw NoValuationFamilyError();
    if (u.num.is_zero()) return Tri::yes;
    return local_quotient_member(op.family, u.num, u.den, false);
  }
  const Domain* D = op.domain;
  if (u.num.is_zero()) return Tri::yes;
  if (!poly_in_ring(u.num, D) || !poly_in_ring(u.den, D)) return Tri::unknown;
  FractionalIdeal cf = content(u.num, D);
  FractionalIdeal cg = content(u.den, D);
  auto certifies = [&](const PolyOverK& h) {
    FractionalIdeal ch = content(h, D);
    FractionalIdeal lhs = closure(op, ideal_combine(CombineMode::PRODUCT, cf, ch));
    FractionalIdeal rhs = closure(op, ideal_combine(CombineMode::PRODUCT, cg, ch));
    return submodule_of(lhs, rhs);
  };
  if (certifies(poly_one(D->field))) return Tri::yes;
  for (const auto& h : hpool) {
    if (h.is_zero()) continue;
    if (certifies(h)) return Tri::yes;
  }
  return Tri::unknown;
}

ProbeReport na_eq_kr_probe(const SemistarOp& opNa, const SemistarOp& opKr,
                           const std::vector<RationalFunction>& samples) {
  if (samples.empty()) throw EmptyPoolError();
  ProbeReport rep;
  for (const auto& u : samples) {
    Tri a = na_membership(opNa, u, NaMode::LOCAL);
    Tri b = kr_membership(opKr, u, KrMode::VALUATION_EXACT);
    if (a == Tri::unknown || b == Tri::unknown) {
      ++rep.unknowns;
      continue;
    }
    ++rep.compared;
    if (a != b) {
      rep.agree = false;
      rep.witness = u;
      return rep;
    }
  }
  return rep;
}

PrincipalGenReport kr_principal_generation_check(
    const SemistarOp& op, const FractionalIdeal& F,
    const std::vector<FieldElem>& samples) {
  if (op.kind != SemistarOp::Kind::VALUATION_FAMILY)
    throw NoValuationFamilyError();
  PolyOverK f = poly_make(F.domain->field, F.lat.generators());
  FractionalIdeal cl = closure(op, F);
  PrincipalGenReport rep;
  for (const auto& x : samples) {
    if (x.is_zero()) continue;
    RationalFunction q{PolyOverK{f.field, {x}}, f};
    bool lhs = kr_membership(op, q, KrMode::VALUATION_EXACT) == Tri::yes;
    bool rhs = member_of(x, cl);
    ++rep.compared;
    if (lhs != rhs) {
      rep.ok = false;
      rep.witness = x;
      return rep;
    }
  }
  return rep;
}

}  // namespace sst
