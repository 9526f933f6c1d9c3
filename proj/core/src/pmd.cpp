#include "semistar/pmd.hpp"

#include "semistar/sample.hpp"

namespace sst {

const char* pmd_status_str(PmdVerdict::Status s) {
  switch (s) {
    case PmdVerdict::Status::YES: return "YES";
    case PmdVerdict::Status::NO: return "NO";
    case PmdVerdict::Status::UNKNOWN: return "UNKNOWN";
  }
  return "UNKNOWN";
}

bool TheoremReport::passed() const {
  for (const auto& c : checks)
    if (c.verdict == "FAIL") return false;
  return true;
}

bool TheoremReport::decided() const {
  for (const auto& c : checks)
    if (c.verdict != "PASS") return false;
  return true;
}

InvertReport star_invertible(const SemistarOp& op, const FractionalIdeal& I) {
  const Domain* D = op.domain;
  FractionalIdeal unit = unit_ideal(D);
  FractionalIdeal J =
      ideal_combine(CombineMode::PRODUCT, I, ideal_colon(unit, I));
  InvertReport rep;

  rep.definition_route =
      set_equal(closure(op, J), closure(op, unit)) ? Tri::yes : Tri::no;

  QuasiMaxReport qm = quasi_star_maximals(op);
  if (qm.status == QuasiMaxReport::Status::ENUMERATED) {
    rep.local_route = Tri::yes;
    for (const auto& Q : qm.primes)
      if (submodule_of(J, prime_as_ideal(D, Q))) {
        rep.local_route = Tri::no;
        rep.blocking_prime = Q;
        break;
      }
  }

  try {
    SemistarOp t = tilde(op);
    rep.nagata_route =
        set_equal(closure(t, J), closure(t, unit)) ? Tri::yes : Tri::no;
  } catch (const TildeUnsupportedError&) {
  } catch (const TrivialOperationError&) {
  }

  std::optional<bool> verdict;
  for (Tri r : {rep.definition_route, rep.local_route, rep.nagata_route}) {
    if (r == Tri::unknown) continue;
    bool v = r == Tri::yes;
    if (verdict && *verdict != v) throw RoutesDisagreeError();
    verdict = v;
  }
  if (!verdict) throw std::runtime_error("no invertibility route available");
  rep.invertible = *verdict;
  return rep;
}

PmdVerdict pmd_decide(const Domain* D, const SemistarOp& op) {
  PmdVerdict v;
  if (D->is_prufer == Tri::yes) {
    v.status = PmdVerdict::Status::YES;
    v.note = "prufer certificate: every operation qualifies";
    return v;
  }
  QuasiMaxReport qm = quasi_star_maximals(op);
  switch (qm.status) {
    case QuasiMaxReport::Status::ENUMERATED: {
      for (const auto& Q : qm.primes)
        if (!is_valuation_at(D, Q)) {
          v.status = PmdVerdict::Status::NO;
          v.witness = Q;
          v.note = "enumerated quasi-maximal with non-valuation localization";
          return v;
        }
      v.status = PmdVerdict::Status::YES;
      v.evidence = qm.primes;
      v.note = "all enumerated quasi-maximal localizations are valuation";
      return v;
    }
    case QuasiMaxReport::Status::WITNESS_ONLY: {
      for (const auto& Q : qm.primes)
        if (!is_valuation_at(D, Q)) {
          v.status = PmdVerdict::Status::NO;
          v.witness = Q;
          v.note = "verified quasi-maximal with non-valuation localization";
          return v;
        }
      v.note = "verified quasi-maximals all valuation, but the list may be partial";
      return v;
    }
    case QuasiMaxReport::Status::UNSUPPORTED:
      v.note = "quasi-maximals not describable for this operation";
      return v;
  }
  return v;
}

UpperToZeroReport upper_to_zero_witness(const SemistarOp& op, const FieldElem& a,
                                        const FieldElem& b, int degree_bound) {
  const Domain* D = op.domain;
  FractionalIdeal unit = unit_ideal(D);
  if (a.is_zero() || b.is_zero() || !member_of(a, unit) || !member_of(b, unit))
    throw BadSpecError("coefficients must be nonzero ring elements");
  FractionalIdeal J = ideal_colon(unit, ideal_from_elems(D, {a, b}));
  std::vector<FieldElem> choices = J.lat.generators();
  FieldElem zero(mpq_class(0), D->field);
  choices.push_back(zero);
  PolyOverK linear = poly_make(D->field, {b, a});
  FractionalIdeal target = closure(op, unit);

  UpperToZeroReport rep;
  for (int dl = 0; dl < degree_bound; ++dl) {
    std::vector<size_t> idx(dl + 1, 0);
    for (;;) {
      if (!choices[idx[dl]].is_zero()) {
        std::vector<FieldElem> cs;
        for (int i = 0; i <= dl; ++i) cs.push_back(choices[idx[i]]);
        PolyOverK f = poly_mul(linear, poly_make(D->field, std::move(cs)));
        if (poly_in_ring(f, D) &&
            set_equal(closure(op, content(f, D)), target)) {
          rep.found = true;
          rep.f = f;
          return rep;
        }
      }
      int k = 0;
      while (k <= dl && ++idx[k] == choices.size()) idx[k++] = 0;
      if (k > dl) break;
    }
  }
  return rep;
}

namespace {

using Status = PmdVerdict::Status;

TheoremCheck check(std::string claim, std::string statement, bool pass,
                   std::string witness = "") {
  return TheoremCheck{std::move(claim), std::move(statement),
                      pass ? "PASS" : "FAIL", std::move(witness)};
}

TheoremCheck unknown_check(std::string claim, std::string statement,
                           std::string witness = "") {
  return TheoremCheck{std::move(claim), std::move(statement), "UNKNOWN",
                      std::move(witness)};
}

std::string prime_text(const PrimeIdeal& P) { return P.str(); }

const SemistarOp& need_op(const TheoremInstance& inst) {
  if (!inst.op) throw BadSpecError("instance needs an operation");
  return *inst.op;
}

const Domain* need_T(const TheoremInstance& inst) {
  if (!inst.T) throw BadSpecError("instance needs an overring");
  return inst.T;
}

// Domain handle whose unit module equals the closure of D, when one exists.
const Domain* closure_ring_handle(const SemistarOp& op) {
  FractionalIdeal c = closure(op, unit_ideal(op.domain));
  if (set_equal(c, unit_ideal(c.domain))) return c.domain;
  if (set_equal(c, unit_ideal(op.domain))) return op.domain;
  return nullptr;
}

bool is_localization_of(const Domain* D, const Domain* T) {
  if (!T->localized() || T->global_ring() != D->global_ring()) return false;
  if (!D->localized()) return true;
  for (const auto& N : T->at)
    if (!D->survives(N)) return false;
  return true;
}

Tri flatness(const Domain* D, const Domain* T, PrimeIdeal* witness) {
  OverringDescriptor desc;
  desc.base = D;
  desc.target = T;
  desc.kind = is_localization_of(D, T) ? OverringDescriptor::Kind::LOCALIZATION
                                       : OverringDescriptor::Kind::EXPLICIT;
  std::vector<PrimeIdeal> candidates;
  if (T->localized()) candidates = T->max_ideals();
  return is_flat_overring(D, desc, candidates, witness);
}

TheoremReport thm_pr3(const TheoremInstance& inst) {
  const Domain* D = inst.D;
  const SemistarOp& op = need_op(inst);
  TheoremReport rep;
  PmdVerdict v = pmd_decide(D, op);
  bool anchor_known = v.status != Status::UNKNOWN;
  bool expected = v.status == Status::YES;

  rep.checks.push_back(anchor_known
      ? check("(i) finite-type invertibility of every finitely generated ideal",
              "each nonzero finitely generated I satisfies (I(D:I))^* = D^*",
              true, std::string("decision: ") + pmd_status_str(v.status))
      : unknown_check("(i) finite-type invertibility",
                      "each nonzero finitely generated I satisfies (I(D:I))^* = D^*"));

  QuasiMaxReport qm = quasi_star_maximals(op);
  if (qm.status == QuasiMaxReport::Status::ENUMERATED && anchor_known) {
    bool all = true;
    std::string w;
    for (const auto& Q : qm.primes)
      if (!is_valuation_at(D, Q)) {
        all = false;
        w = prime_text(Q);
        break;
      }
    rep.checks.push_back(check(
        "(ii) quasi-maximal localizations are valuation",
        "D_Q is a valuation domain for each enumerated quasi-maximal Q",
        all == expected, w));
  } else {
    rep.checks.push_back(
        unknown_check("(ii) quasi-maximal localizations are valuation",
                      "D_Q is a valuation domain for each quasi-maximal Q"));
  }

  std::vector<const Domain*> family = na_local_family(op);
  if (!family.empty() && anchor_known) {
    SemistarOp krop = make_valuation_family(D, family);
    ProbeReport probe = na_eq_kr_probe(
        op, krop, sample_ratfuns(D, inst.pool_size, inst.degree_bound, inst.seed));
    if (probe.agree && !expected) {
      rep.checks.push_back(unknown_check(
          "(iv) polynomial localization equals the valuation hull",
          "the two X-overrings coincide as sets",
          "no separating sample found; sampled route"));
    } else {
      rep.checks.push_back(check(
          "(iv) polynomial localization equals the valuation hull",
          "the two X-overrings coincide as sets",
          probe.agree == expected,
          probe.witness ? probe.witness->str() : "sampled route"));
    }
  } else {
    rep.checks.push_back(
        unknown_check("(iv) polynomial localization equals the valuation hull",
                      "the two X-overrings coincide as sets"));
  }

  try {
    SemistarOp t = tilde(op);
    EabReport eab =
        eab_falsifier(t, sample_ideal_triples(D, inst.pool_size, inst.seed + 1));
    if (!eab.counterexample && !expected && !eab.certified) {
      rep.checks.push_back(unknown_check(
          "(v) the stable companion cancels",
          "(EF)^~ inside (EG)^~ forces F^~ inside G^~",
          "no counterexample found; sampled route"));
    } else {
      rep.checks.push_back(check(
          "(v) the stable companion cancels",
          "(EF)^~ inside (EG)^~ forces F^~ inside G^~",
          !eab.counterexample == expected,
          eab.certified ? "certified" : "sampled route"));
    }
  } catch (const TildeUnsupportedError&) {
    rep.checks.push_back(unknown_check("(v) the stable companion cancels",
                                       "(EF)^~ inside (EG)^~ forces F^~ inside G^~"));
  }

  {
    StabilityReport st =
        is_stable(op, sample_ideal_pairs(D, inst.pool_size, inst.seed + 2));
    EabReport eab =
        eab_falsifier(op, sample_ideal_triples(D, inst.pool_size, inst.seed + 3));
    bool definite_false = st.verdict == Tri::no || eab.counterexample;
    bool certified_true = st.certified && eab.certified;
    std::string w = st.witness ? st.witness->first.str()
                               : (eab.witness ? (*eab.witness)[0].str() : "");
    if (definite_false || certified_true || expected) {
      bool holds = !definite_false;
      rep.checks.push_back(check(
          "(vi) the finite-type operation is stable and cancels",
          "closure commutes with finite intersections and (EF)^* inside (EG)^* forces F^* inside G^*",
          holds == expected,
          definite_false ? w : (certified_true ? "certified" : "sampled route")));
    } else {
      rep.checks.push_back(unknown_check(
          "(vi) the finite-type operation is stable and cancels",
          "closure commutes with finite intersections and cancellation holds",
          "no counterexample found; sampled route"));
    }
  }
  return rep;
}

TheoremReport ascent(const TheoremInstance& inst, bool to_closure_ring) {
  const Domain* D = inst.D;
  const SemistarOp& op = need_op(inst);
  TheoremReport rep;
  PmdVerdict base = pmd_decide(D, op);
  if (base.status != Status::YES) {
    rep.checks.push_back(unknown_check(
        "hypothesis: the base domain qualifies",
        "D is a P*MD for the given operation", pmd_status_str(base.status)));
    return rep;
  }
  rep.checks.push_back(check("hypothesis: the base domain qualifies",
                             "D is a P*MD for the given operation", true));
  const Domain* T = to_closure_ring ? closure_ring_handle(op) : need_T(inst);
  if (!T) {
    rep.checks.push_back(unknown_check(
        "conclusion: the overring qualifies for the induced operation",
        "T is a P*MD for the operation read on T",
        "closure of D is not a registered ring"));
    return rep;
  }
  PmdVerdict up = pmd_decide(T, make_induced(T, op));
  rep.checks.push_back(check(
      "conclusion: the overring qualifies for the induced operation",
      "T is a P*MD for the operation read on T", up.status == Status::YES,
      pmd_status_str(up.status)));
  return rep;
}

TheoremReport descent(const TheoremInstance& inst) {
  const Domain* D = inst.D;
  const Domain* T = need_T(inst);
  const SemistarOp& op = need_op(inst);  // operation on T
  if (op.domain != T) throw BadSpecError("descent instance needs the operation on T");
  TheoremReport rep;
  PrimeIdeal w;
  Tri flat = flatness(D, T, &w);
  rep.checks.push_back(
      flat == Tri::unknown
          ? unknown_check("hypothesis: T is a flat overring",
                          "T_N = D_{N cap D} at every maximal N of T")
          : check("hypothesis: T is a flat overring",
                  "T_N = D_{N cap D} at every maximal N of T", flat == Tri::yes,
                  flat == Tri::no ? prime_text(w) : ""));
  PmdVerdict top = pmd_decide(T, op);
  rep.checks.push_back(check("hypothesis: T qualifies", "T is a P*MD",
                             top.status == Status::YES,
                             pmd_status_str(top.status)));
  PmdVerdict down = pmd_decide(D, make_restricted(D, op));
  rep.checks.push_back(check(
      "conclusion: D qualifies for the restricted operation",
      "D is a P*MD for E -> (ET)^*", down.status == Status::YES,
      pmd_status_str(down.status)));
  return rep;
}

TheoremReport re9(const TheoremInstance& inst) {
  const Domain* D = inst.D;
  const Domain* T = need_T(inst);
  const SemistarOp& op = need_op(inst);  // star_{T} on D
  TheoremReport rep;
  PrimeIdeal w;
  Tri flat = flatness(D, T, &w);
  rep.checks.push_back(
      flat == Tri::unknown
          ? unknown_check("T is not flat over D",
                          "some maximal N of T has T_N != D_{N cap D}")
          : check("T is not flat over D",
                  "some maximal N of T has T_N != D_{N cap D}", flat == Tri::no,
                  flat == Tri::no ? prime_text(w) : ""));
  PmdVerdict top = pmd_decide(T, make_induced(T, op));
  rep.checks.push_back(check("T qualifies", "T is a P*MD for the induced operation",
                             top.status == Status::YES,
                             pmd_status_str(top.status)));
  PmdVerdict down = pmd_decide(D, op);
  rep.checks.push_back(check(
      "descent fails without flatness", "D is not a P*MD for E -> (ET)^*",
      down.status == Status::NO,
      down.witness ? prime_text(*down.witness) : pmd_status_str(down.status)));
  return rep;
}

TheoremReport co11(const TheoremInstance& inst) {
  const Domain* D = inst.D;
  const SemistarOp& op = need_op(inst);
  TheoremReport rep;
  PmdVerdict v1 = pmd_decide(D, op);
  std::optional<SemistarOp> t;
  try {
    t = tilde(op);
  } catch (const TildeUnsupportedError&) {
  } catch (const TrivialOperationError&) {
  }
  if (!t) {
    rep.checks.push_back(unknown_check(
        "equivalence with the stable companion",
        "D is a P*MD iff D is a P~*MD iff D^~* qualifies for the induced operation"));
    return rep;
  }
  PmdVerdict v2 = pmd_decide(D, *t);
  bool k12 = v1.status != Status::UNKNOWN && v2.status != Status::UNKNOWN;
  rep.checks.push_back(
      k12 ? check("P*MD iff P~*MD", "the decision is unchanged under ~",
                  v1.status == v2.status,
                  std::string(pmd_status_str(v1.status)) + "/" +
                      pmd_status_str(v2.status))
          : unknown_check("P*MD iff P~*MD", "the decision is unchanged under ~"));
  const Domain* Dt = closure_ring_handle(*t);
  if (!Dt) {
    rep.checks.push_back(unknown_check(
        "equivalence with the closure ring",
        "D^~* is a P*MD for the induced stable operation",
        "closure of D is not a registered ring"));
    return rep;
  }
  PmdVerdict v3 = pmd_decide(Dt, make_induced(Dt, *t));
  bool k13 = v1.status != Status::UNKNOWN && v3.status != Status::UNKNOWN;
  rep.checks.push_back(
      k13 ? check("P*MD iff the closure ring qualifies",
                  "D^~* is a P*MD for the induced stable operation",
                  v1.status == v3.status,
                  std::string(pmd_status_str(v1.status)) + "/" +
                      pmd_status_str(v3.status))
          : unknown_check("P*MD iff the closure ring qualifies",
                          "D^~* is a P*MD for the induced stable operation"));
  return rep;
}

TheoremReport pr34(const TheoremInstance& inst) {
  const Domain* D = inst.D;
  const SemistarOp& op = need_op(inst);
  TheoremReport rep;
  if (op.is_star != Tri::yes) {
    rep.checks.push_back(unknown_check("premise: star operation",
                                       "the operation fixes D"));
    return rep;
  }
  PmdVerdict s1 = pmd_decide(D, op);
  PmdVerdict sv = pmd_decide(D, make_divisorial(D));
  CompareReport cmp =
      compare_ops(op, make_divisorial(D), sample_ideals(D, inst.pool_size, inst.seed));
  bool eq = cmp.verdict == CompareVerdict::EQ;
  if (s1.status == Status::YES) {
    rep.checks.push_back(check("(i) implies (iii): D is a PvMD",
                               "the divisorial decision is also YES",
                               sv.status == Status::YES,
                               pmd_status_str(sv.status)));
    rep.checks.push_back(check(
        "(i) implies (iii): the finite-type operation is t",
        "closures of the operation and of v agree on finitely generated ideals",
        eq,
        eq ? "sampled route"
           : (cmp.not_le_witness ? cmp.not_le_witness->str()
                                 : cmp.not_ge_witness->str())));
  } else if (s1.status == Status::NO && sv.status != Status::UNKNOWN) {
    rep.checks.push_back(check(
        "(iii) implies (i), contrapositive",
        "a refuted P*MD cannot be a PvMD with star_f = t",
        !(sv.status == Status::YES && eq),
        std::string(pmd_status_str(sv.status)) +
            (eq ? ", closures agree on the pool" : ", closures differ")));
  } else {
    rep.checks.push_back(unknown_check(
        "equivalence", "P*MD iff PvMD together with star_f = t",
        std::string(pmd_status_str(s1.status)) + "/" + pmd_status_str(sv.status)));
  }
  return rep;
}

TheoremReport cor35(const TheoremInstance& inst) {
  const Domain* D = inst.D;
  TheoremReport rep;
  CompareReport cmp = compare_ops(make_identity(D), make_divisorial(D),
                                  sample_ideals(D, inst.pool_size, inst.seed));
  bool eq = cmp.verdict == CompareVerdict::EQ;
  if (D->is_prufer == Tri::yes) {
    rep.checks.push_back(check(
        "(i) implies (ii): the identity and divisorial closures agree",
        "E = E^v for every finitely generated E", eq,
        eq ? "sampled route"
           : (cmp.not_le_witness ? cmp.not_le_witness->str()
                                 : cmp.not_ge_witness->str())));
  } else if (D->is_integrally_closed == Tri::yes && D->is_prufer == Tri::no) {
    rep.checks.push_back(check(
        "(ii) implies (i), contrapositive: the closures must differ",
        "some finitely generated E has E != E^v", !eq,
        cmp.not_le_witness ? cmp.not_le_witness->str() : ""));
  } else {
    rep.checks.push_back(unknown_check(
        "premise", "the equivalence needs an integrally closed domain with a "
                   "known Prufer status",
        eq ? "closures agree on the pool" : "closures differ on the pool"));
  }
  return rep;
}

TheoremReport ex29(const TheoremInstance& inst) {
  const Domain* D = inst.D;
  const Domain* T = need_T(inst);
  TheoremReport rep;
  const Domain* IC = integral_closure(D);
  bool integral = submodule_of(unit_ideal(T), unit_ideal(IC));
  bool proper = !set_equal(unit_ideal(T), unit_ideal(D));
  rep.checks.push_back(check("hypothesis: T is integral over D and T != D",
                             "T sits inside the integral closure of D",
                             integral && proper));
  SemistarOp op = make_overring_family(D, {T});
  PmdVerdict v = pmd_decide(D, op);
  rep.checks.push_back(check(
      "conclusion: D is not a P*MD for E -> ET",
      "the one-overring operation never makes a proper integral extension work",
      v.status == Status::NO,
      v.witness ? prime_text(*v.witness) : pmd_status_str(v.status)));
  return rep;
}

TheoremReport lm_mstar(const TheoremInstance& inst) {
  const SemistarOp& op = need_op(inst);
  const Domain* D = op.domain;
  TheoremReport rep;
  if (op.kind != SemistarOp::Kind::VALUATION_FAMILY) {
    rep.checks.push_back(unknown_check(
        "dominating valuation overrings",
        "each quasi-maximal of the cancelling companion is dominated by a "
        "family member"));
    return rep;
  }
  QuasiMaxReport qm = quasi_star_maximals(op);
  bool all = true;
  std::string w;
  for (const auto& Q : qm.primes) {
    const Domain* DQ = Registry::get().localization_of(D->global_ring(), {Q});
    bool found = false;
    for (const Domain* V : op.family) {
      if (!submodule_of(unit_ideal(DQ), unit_ideal(V))) continue;
      for (const auto& N : V->at)
        for (const auto& P : compatible_primes(D->global_ring(), N))
          if (P == Q) found = true;
    }
    if (!found) {
      all = false;
      w = prime_text(Q);
      break;
    }
  }
  rep.checks.push_back(check(
      "dominating valuation overrings",
      "for each quasi-maximal Q some family member V has maximal ideal lying "
      "over Q and contains D_Q",
      all, w));
  return rep;
}

TheoremReport rk216(const TheoremInstance& inst) {
  const Domain* D = inst.D;
  TheoremReport rep;
  if (D->is_prufer != Tri::yes) {
    rep.checks.push_back(unknown_check("premise: Prufer domain",
                                       "every localization is a valuation ring"));
    return rep;
  }
  std::vector<SemistarOp> battery;
  battery.push_back(make_identity(D));
  for (long p : {2L, 3L, 5L})
    for (const auto& P : primes_above(D->global_ring(), p)) {
      if (D->localized() && !D->survives(P)) continue;
      battery.push_back(make_overring_family(
          D, {Registry::get().localization_of(D->global_ring(), {P})}));
    }
  auto triples = sample_ideal_triples(D, inst.pool_size, inst.seed);
  for (const auto& op : battery) {
    EabReport eab = eab_falsifier(op, triples);
    rep.checks.push_back(check(
        "cancellation for " + op.name,
        "(EF)^* inside (EG)^* forces F^* inside G^*", !eab.counterexample,
        eab.counterexample ? (*eab.witness)[0].str()
                           : (eab.certified ? "certified" : "sampled route")));
  }
  return rep;
}

std::string instance_text(const TheoremInstance& inst) {
  std::string s = inst.D ? inst.D->name : "";
  if (inst.op) s += "," + inst.op->name;
  if (inst.T) s += ",T=" + inst.T->name;
  return s;
}

}  // namespace

TheoremReport verify_theorem(const std::string& id, const TheoremInstance& inst) {
  if (!inst.D) throw BadSpecError("instance needs a domain");
  TheoremReport rep;
  if (id == "THM_PR3") rep = thm_pr3(inst);
  else if (id == "PROP_PR5") rep = ascent(inst, false);
  else if (id == "COR_CO7") rep = ascent(inst, true);
  else if (id == "PROP_PR8") rep = descent(inst);
  else if (id == "RE9") rep = re9(inst);
  else if (id == "PROP_CO11") rep = co11(inst);
  else if (id == "PROP_PR34") rep = pr34(inst);
  else if (id == "COR_35") rep = cor35(inst);
  else if (id == "EX_2_9") rep = ex29(inst);
  else if (id == "LM_MSTAR") rep = lm_mstar(inst);
  else if (id == "RK_216") rep = rk216(inst);
  else throw UnknownTheoremIdError(id);
  rep.theorem_id = id;
  rep.instance = instance_text(inst);
  rep.seed = inst.seed;
  return rep;
}

}  // namespace sst
