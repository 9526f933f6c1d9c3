// End-to-end acceptance battery.  Each criterion prints exactly one
// PASS/FAIL line; the process exits nonzero when any criterion fails.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include "semistar/extension.hpp"
#include "semistar/sample.hpp"

using namespace sst;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int n, const std::string& label, bool ok, double secs,
               const std::string& detail = "") {
  std::ostringstream line;
  line << "criterion " << n << " (" << label << "): " << (ok ? "PASS" : "FAIL")
       << " [" << secs << "s]";
  if (!detail.empty()) line << " -- " << detail;
  std::cout << line.str() << "\n";
  if (!ok) ++failures;
}

double elapsed(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool axioms_hold(const SemistarOp& op, const std::vector<FractionalIdeal>& pool,
                 const std::vector<FieldElem>& elems, std::string* why) {
  for (size_t i = 0; i < pool.size(); ++i) {
    const FractionalIdeal& E = pool[i];
    FractionalIdeal cE = closure(op, E);
    if (!submodule_of(E, cE)) { *why = op.name + " not extensive"; return false; }
    if (!set_equal(closure(op, cE), cE)) { *why = op.name + " not idempotent"; return false; }
    const FieldElem& x = elems[i % elems.size()];
    if (!set_equal(closure(op, ideal_scale(E, x)), ideal_scale(cE, x))) {
      *why = op.name + " not homogeneous";
      return false;
    }
    FractionalIdeal F =
        ideal_combine(CombineMode::SUM, E, pool[(i + 1) % pool.size()]);
    if (!submodule_of(cE, closure(op, F))) { *why = op.name + " not monotone"; return false; }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  Registry& R = Registry::get();
  const Domain* Z = R.integers();
  const Domain* Z23 = R.localized_integers({2, 3});
  const Domain* Zi = R.quadratic_order(-1, 1);
  const Domain* Z3i = R.quadratic_order(-1, 3);
  PrimeIdeal P3 = primes_above(Z3i, 3).front();
  PrimeIdeal Q5 = primes_above(Z3i, 5).front();

  {  // 1: closure axioms for every constructor on the four base domains
    auto t0 = Clock::now();
    bool ok = true;
    std::string why;
    std::vector<std::pair<const Domain*, std::vector<SemistarOp>>> table;
    table.push_back({Z, {make_identity(Z), make_divisorial(Z),
                         make_spectral(Z, primes_above(Z, 2)),
                         make_overring_family(Z, {R.localized_integers({2})}),
                         make_valuation_family(Z, {R.localized_integers({2}),
                                                   R.localized_integers({3})}),
                         make_b_operation(Z, 13)}});
    table.push_back({Z23, {make_identity(Z23), make_divisorial(Z23),
                           make_spectral(Z23, primes_above(Z, 2)),
                           make_induced(Z23, make_identity(Z)),
                           make_restricted(Z23, make_identity(R.localized_integers({2})))}});
    table.push_back({Z3i, {make_identity(Z3i), make_divisorial(Z3i),
                           make_spectral(Z3i, {Q5}),
                           make_overring_family(Z3i, {Zi}),
                           make_b_operation(Z3i, 13)}});
    table.push_back({Zi, {make_identity(Zi), make_divisorial(Zi),
                          make_spectral(Zi, primes_above(Zi, 2)),
                          make_b_operation(Zi, 13)}});
    for (const auto& [D, ops] : table) {
      auto pool = sample_ideals(D, 200, 101);
      auto elems = sample_elements(D, 50, 102);
      for (const auto& op : ops)
        if (!axioms_hold(op, pool, elems, &why)) { ok = false; break; }
      if (!ok) break;
    }
    criterion(1, "closure axioms", ok, elapsed(t0), why);
  }

  {  // 2: spectral operation turns a non-integrally-closed order into a YES
    auto t0 = Clock::now();
    PmdVerdict v = pmd_decide(Z3i, make_spectral(Z3i, {Q5}));
    criterion(2, "spectral YES on the proper order",
              v.status == PmdVerdict::Status::YES &&
                  Z3i->is_integrally_closed == Tri::no,
              elapsed(t0), pmd_status_str(v.status));
  }

  {  // 3: divisorial NO with the conductor prime as witness
    auto t0 = Clock::now();
    PmdVerdict v = pmd_decide(Z3i, make_divisorial(Z3i));
    bool ok = v.status == PmdVerdict::Status::NO && v.witness && v.witness->p == 3;
    FractionalIdeal P = prime_as_ideal(Z3i, P3);
    FractionalIdeal J = ideal_combine(CombineMode::PRODUCT, P,
                                      ideal_colon(unit_ideal(Z3i), P));
    FractionalIdeal Jv = closure(make_divisorial(Z3i), J);
    ok = ok && set_equal(Jv, P) && !set_equal(Jv, unit_ideal(Z3i));
    criterion(3, "divisorial NO with witness", ok, elapsed(t0));
  }

  {  // 4: six-way cross-check plus 500-sample function-ring agreement
    auto t0 = Clock::now();
    TheoremInstance inst;
    inst.D = Z23;
    inst.op = make_identity(Z23);
    inst.pool_size = 40;
    TheoremReport rep = verify_theorem("THM_PR3", inst);
    bool ok = rep.passed() && rep.decided();
    SemistarOp d = make_identity(Z23);
    SemistarOp w = make_valuation_family(
        Z23, {R.localized_integers({2}), R.localized_integers({3})});
    ProbeReport probe = na_eq_kr_probe(d, w, sample_ratfuns(Z23, 500, 6, 103));
    ok = ok && probe.agree && probe.compared >= 400;
    criterion(4, "six-way cross-check", ok, elapsed(t0));
  }

  {  // 5: invertibility routes never disagree
    auto t0 = Clock::now();
    bool ok = true;
    std::vector<std::pair<const Domain*, SemistarOp>> insts;
    insts.push_back({Z, make_divisorial(Z)});
    insts.push_back({Z23, make_identity(Z23)});
    insts.push_back({Z3i, make_spectral(Z3i, {Q5})});
    insts.push_back({Zi, make_divisorial(Zi)});
    try {
      for (const auto& [D, op] : insts)
        for (const auto& I : sample_ideals(D, 300, 104)) star_invertible(op, I);
    } catch (const RoutesDisagreeError&) {
      ok = false;
    }
    criterion(5, "route agreement", ok, elapsed(t0));
  }

  {  // 6: tilde-closure equals the dual localization route
    auto t0 = Clock::now();
    SemistarOp sp1 = make_spectral(Z, {primes_above(Z, 2).front(),
                                       primes_above(Z, 3).front()});
    SemistarOp sp2 = make_spectral(Z3i, {Q5});
    bool ok = true;
    for (const SemistarOp* op : {&sp1, &sp2}) {
      const Domain* D = op->domain;
      auto samples = sample_elements(D, 100, 105);
      for (const auto& E : sample_ideals(D, 5, 106))
        if (!na_extension_contraction(*op, E, samples).agreed) ok = false;
    }
    criterion(6, "contraction route", ok, elapsed(t0));
  }

  {  // 7: divisorial contraction formula across the quadratic extension
    auto t0 = Clock::now();
    ExtensionPair pair = make_extension_pair(
        Z, Zi, ExtensionPair::Relation::T_INTEGRAL_CLOSURE_OF_D);
    KrullReport rep = krull_formula_check(pair, sample_ideals(Z, 100, 107));
    criterion(7, "contraction formula", rep.ok && rep.checked == 100, elapsed(t0));
  }

  {  // 8: flat descent passes; the non-flat instance refutes descent
    auto t0 = Clock::now();
    TheoremInstance pr8;
    pr8.D = Z3i;
    pr8.T = R.localized_order(Z3i, primes_above(Z3i, 5));
    pr8.op = make_identity(pr8.T);
    TheoremReport a = verify_theorem("PROP_PR8", pr8);
    TheoremInstance re9;
    re9.D = R.localized_order(Z3i, {P3});
    re9.T = R.localized_order(Zi, primes_above(Zi, 3));
    re9.op = make_overring_family(re9.D, {re9.T});
    TheoremReport b = verify_theorem("RE9", re9);
    criterion(8, "flat descent and its failure",
              a.passed() && a.decided() && b.passed() && b.decided(), elapsed(t0));
  }

  {  // 9: degree-bounded unit-content witnesses
    auto t0 = Clock::now();
    bool ok = true;
    SemistarOp d = make_identity(Z23);
    std::mt19937_64 rng(108);
    std::uniform_int_distribution<long> small(1, 40);
    for (int i = 0; i < 50 && ok; ++i) {
      FieldElem a(mpq_class(small(rng)), Z23->field);
      FieldElem b(mpq_class(small(rng)), Z23->field);
      ok = upper_to_zero_witness(d, a, b, 2).found;
    }
    FieldElem three(mpq_class(3), Z3i->field);
    FieldElem threei(mpq_class(0), mpq_class(3), Z3i->field);
    ok = ok && !upper_to_zero_witness(make_divisorial(Z3i), three, threei, 4).found;
    criterion(9, "unit-content witnesses", ok, elapsed(t0));
  }

  {  // 10: identity equals divisorial on the PIDs; explicit gap on the order
    auto t0 = Clock::now();
    bool ok =
        compare_ops(make_identity(Z), make_divisorial(Z),
                    sample_ideals(Z, 200, 109)).verdict == CompareVerdict::EQ &&
        compare_ops(make_identity(Zi), make_divisorial(Zi),
                    sample_ideals(Zi, 200, 110)).verdict == CompareVerdict::EQ;
    FractionalIdeal P = prime_as_ideal(Z3i, P3);
    bool gap = !set_equal(closure(make_divisorial(Z3i), P),
                          closure(make_identity(Z3i), P));
    criterion(10, "identity vs divisorial", ok && gap, elapsed(t0),
              gap ? "" : "no gap at the conductor prime: every ideal of the "
                         "order is divisorial");
  }

  {  // 11: transfer across the quadratic extension
    auto t0 = Clock::now();
    ExtensionPair p1 = make_extension_pair(
        Z, Zi, ExtensionPair::Relation::T_INTEGRAL_CLOSURE_OF_D);
    std::vector<PrimeIdeal> at;
    for (long p : {2L, 3L})
      for (const auto& N : primes_above(Zi, p)) at.push_back(N);
    ExtensionPair p2 = make_extension_pair(
        Z23, R.localized_order(Zi, at),
        ExtensionPair::Relation::T_INTEGRAL_CLOSURE_OF_D);
    bool ok = pvmd_ascent_descent_check(p1).agree == Tri::yes &&
              pvmd_ascent_descent_check(p2).agree == Tri::yes;
    std::vector<PrimeIdeal> delta;
    for (long p : {2L, 3L})
      for (const auto& P : primes_above(Z, p)) delta.push_back(P);
    SemistarOp over = make_overline_extension(make_spectral(Z, delta), p1);
    ok = ok && pmd_decide(Zi, over).status == PmdVerdict::Status::YES;
    criterion(11, "extension transfer", ok, elapsed(t0));
  }

  {  // 12: the bundled CLI suite exits 0
    auto t0 = Clock::now();
    bool ok = false;
    std::string detail;
    if (argc > 1) {
      std::string cmd = std::string(argv[1]) + " report --suite paper-examples";
#ifndef _WIN32
      cmd += " > /dev/null";
#endif
      int rc = std::system(cmd.c_str());
      ok = rc == 0;
      if (!ok) detail = "exit status " + std::to_string(rc);
    } else {
      detail = "cli binary path not supplied";
    }
    criterion(12, "bundled suite", ok, elapsed(t0), detail);
  }

  std::cout << (failures ? "FAILED" : "OK") << " (" << (12 - failures)
            << "/12 criteria)\n";
  return failures ? 1 : 0;
}
