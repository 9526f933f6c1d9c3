#include "semistar/domain.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sst {

const char* tri_str(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    default: return "unknown";
  }
}

std::string PrimeIdeal::str() const {
  std::ostringstream os;
  os << "P[p=" << p << ",i=" << index << "]";
  return os.str();
}

namespace {

bool is_prime_long(long p) {
  if (p < 2) return false;
  for (long k = 2; k * k <= p; ++k)
    if (p % k == 0) return false;
  return true;
}

// class-number-one discriminant table for maximal orders
bool class_number_one(long d) {
  static const long table[] = {-1, -2, -3, -7, -11, 2, 3, 5, 13};
  return std::find(std::begin(table), std::end(table), d) != std::end(table);
}

Lattice unit_ring_lattice(FieldTag f, long conductor) {
  if (!f.quadratic()) return lattice_make(f, 1, {{1, 0}});
  return lattice_make(f, 1, {{1, 0}, {0, conductor}});
}

}  // namespace

std::vector<PrimeIdeal> Domain::max_ideals() const {
  if (!localized())
    throw std::logic_error("max_ideals: domain is not semilocal");
  return at;
}

bool Domain::survives(const PrimeIdeal& P) const {
  if (!localized()) return P.ring_of == this;
  return std::find(at.begin(), at.end(), P) != at.end();
}

const Domain* Domain::global_ring() const { return localized() ? parent : this; }

std::optional<FieldElem> Domain::ring_generator() const {
  if (!field.quadratic()) return std::nullopt;
  return FieldElem(0, mpq_class(global_ring()->conductor), field);
}

Registry& Registry::get() {
  static Registry r;
  return r;
}

const Domain* Registry::intern(std::unique_ptr<Domain> d) {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  auto it = by_key_.find(d->name);
  if (it != by_key_.end()) return it->second;
  const Domain* out = d.get();
  by_key_[d->name] = out;
  pool_.push_back(std::move(d));
  return out;
}

const Domain* Registry::integers() {
  auto d = std::make_unique<Domain>();
  d->kind = Domain::Kind::Integers;
  d->field = make_field(0);
  d->ring = unit_ring_lattice(d->field, 1);
  d->is_pid = d->is_prufer = d->is_integrally_closed = Tri::yes;
  d->name = "Z";
  return intern(std::move(d));
}

const Domain* Registry::quadratic_order(long dd, long f) {
  if (dd == 0 || dd == 1 || !is_squarefree(dd))
    throw BadSpecError("quadratic order needs squarefree d != 0, 1");
  if (f < 1) throw BadSpecError("conductor must be >= 1");
  auto d = std::make_unique<Domain>();
  d->kind = Domain::Kind::QuadraticOrder;
  d->field = make_field(dd);
  d->conductor = f;
  d->ring = unit_ring_lattice(d->field, f);
  if (f == 1) {
    d->is_integrally_closed = Tri::yes;
    d->is_prufer = Tri::yes;  // maximal orders are Dedekind
    d->is_pid = class_number_one(dd) ? Tri::yes : Tri::unknown;
  } else {
    d->is_integrally_closed = Tri::no;
    d->is_prufer = Tri::no;
    d->is_pid = Tri::no;
  }
  std::ostringstream os;
  os << "O(d=" << dd << ",f=" << f << ")";
  d->name = os.str();
  return intern(std::move(d));
}

const Domain* Registry::localized_integers(std::vector<long> S) {
  if (S.empty()) throw BadSpecError("localization needs a nonempty prime set");
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  for (long p : S)
    if (!is_prime_long(p)) throw BadSpecError("non-prime in localization set");
  auto d = std::make_unique<Domain>();
  d->kind = Domain::Kind::LocalizedIntegers;
  d->field = make_field(0);
  d->S = S;
  d->parent = integers();
  d->ring = unit_ring_lattice(d->field, 1);
  d->is_pid = d->is_prufer = d->is_integrally_closed = Tri::yes;
  std::ostringstream os;
  os << "Z_S{";
  for (size_t i = 0; i < S.size(); ++i) os << (i ? "," : "") << S[i];
  os << "}";
  d->name = os.str();
  for (long p : S) {
    const auto& ps = primes_above_ring(d->parent, p);
    d->at.push_back(ps.at(0));
  }
  return intern(std::move(d));
}

const Domain* Registry::localized_order(const Domain* global_order,
                                        std::vector<PrimeIdeal> at) {
  if (!global_order || global_order->localized() ||
      !global_order->field.quadratic())
    throw BadSpecError("localized order needs a global quadratic order");
  if (at.empty()) throw BadSpecError("localization needs a nonempty prime set");
  for (const auto& P : at)
    if (P.ring_of != global_order)
      throw BadSpecError("prime does not belong to the parent order");
  std::sort(at.begin(), at.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
    return a.p != b.p ? a.p < b.p : a.index < b.index;
  });
  at.erase(std::unique(at.begin(), at.end()), at.end());
  auto d = std::make_unique<Domain>();
  d->kind = Domain::Kind::LocalizedOrder;
  d->field = global_order->field;
  d->conductor = global_order->conductor;
  d->parent = global_order;
  d->at = at;
  d->ring = global_order->ring;
  bool bad = false;
  for (const auto& P : at) bad = bad || P.contains_conductor;
  d->is_pid = d->is_prufer = d->is_integrally_closed = bad ? Tri::no : Tri::yes;
  std::ostringstream os;
  os << global_order->name << "@[";
  for (size_t i = 0; i < at.size(); ++i)
    os << (i ? "," : "") << at[i].p << ":" << at[i].index;
  os << "]";
  d->name = os.str();
  return intern(std::move(d));
}

const Domain* Registry::localization_of(const Domain* global,
                                        std::vector<PrimeIdeal> at) {
  if (global->field.quadratic()) return localized_order(global, std::move(at));
  std::vector<long> S;
  for (const auto& P : at) S.push_back(P.p);
  return localized_integers(std::move(S));
}

const std::vector<PrimeIdeal>& Registry::primes_above_ring(const Domain* global,
                                                           long p, long bound) {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  auto key = std::make_pair(global, p);
  auto it = primes_.find(key);
  if (it != primes_.end()) return it->second;
  if (!is_prime_long(p)) throw BadSpecError("not a rational prime");
  if (p > bound) throw PrimeTooLargeError();

  std::vector<PrimeIdeal> out;
  FieldTag F = global->field;
  if (!F.quadratic()) {
    PrimeIdeal P;
    P.under = lattice_make(F, 1, {{p, 0}});
    P.p = p;
    P.index = 0;
    P.ring_of = global;
    out.push_back(P);
  } else {
    long f = global->conductor;
    const Lattice& O = global->ring;
    // maximal ideals of O/pO: brute force over the p^2 residues; every
    // ideal of O/pO is principal (quotient of F_p[t])
    std::vector<Lattice> proper;
    for (long x = 0; x < p; ++x)
      for (long y = 0; y < p; ++y) {
        std::vector<Vec2> rows = {{p, 0},
                                  {0, mpz_class(p) * f},
                                  {x, mpz_class(y) * f},
                                  {mpz_class(y) * f * f * F.d, mpz_class(x) * f}};
        Lattice I = lattice_make(F, 1, rows);
        if (I == O) continue;
        if (std::find(proper.begin(), proper.end(), I) == proper.end())
          proper.push_back(I);
      }
    // conductor of O in the maximal order: f*(Z + sqrt(d)Z)
    Lattice conductor_lat = lattice_make(F, 1, {{f, 0}, {0, f}});
    for (const auto& M : proper) {
      bool maximal = true;
      for (const auto& N : proper)
        if (!(N == M) && lattice_contains(N, M) && !lattice_contains(M, N))
          maximal = false;
      if (!maximal) continue;
      PrimeIdeal P;
      P.under = M;
      P.p = p;
      P.contains_conductor = f > 1 && lattice_contains(M, conductor_lat);
      P.ring_of = global;
      out.push_back(P);
    }
    std::sort(out.begin(), out.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
      return a.under.rows < b.under.rows;
    });
    for (size_t i = 0; i < out.size(); ++i) out[i].index = static_cast<int>(i);
  }
  return primes_.emplace(key, std::move(out)).first->second;
}

std::vector<PrimeIdeal> primes_above(const Domain* D, long p, long bound) {
  auto& reg = Registry::get();
  const auto& all = reg.primes_above_ring(D->global_ring(), p, bound);
  if (!D->localized()) return all;
  std::vector<PrimeIdeal> out;
  for (const auto& P : all)
    if (D->survives(P)) out.push_back(P);
  return out;
}

const Domain* integral_closure(const Domain* D) {
  auto& reg = Registry::get();
  switch (D->kind) {
    case Domain::Kind::Integers:
    case Domain::Kind::LocalizedIntegers:
      return D;
    case Domain::Kind::QuadraticOrder:
      return reg.quadratic_order(D->field.d, 1);
    case Domain::Kind::LocalizedOrder: {
      const Domain* closure = reg.quadratic_order(D->field.d, 1);
      std::vector<PrimeIdeal> at;
      for (const auto& P : D->at)
        for (const auto& N : reg.primes_above_ring(closure, P.p)) {
          Lattice contracted =
              lattice_intersect(N.under, D->global_ring()->ring);
          if (lattice_contains(P.under, contracted)) at.push_back(N);
        }
      return reg.localized_order(closure, std::move(at));
    }
  }
  throw std::logic_error("unreachable");
}

bool local_member(const Lattice& L, const FieldElem& x, const PrimeIdeal& P) {
  if (x.is_zero()) return true;
  Lattice xs = lattice_from_elems(L.field, {x});
  Lattice J = lattice_intersect(lattice_colon(L, xs), P.ring_of->ring);
  return !lattice_contains(P.under, J);
}

bool local_contains(const Lattice& A, const Lattice& B, const PrimeIdeal& P) {
  for (const auto& g : B.generators())
    if (!local_member(A, g, P)) return false;
  return true;
}

namespace {

Lattice prime_power(const PrimeIdeal& P, long k) {
  const Lattice& O = P.ring_of->ring;
  if (k == 0) return O;
  Lattice base = k > 0 ? P.under : lattice_colon(O, P.under);
  long n = k > 0 ? k : -k;
  Lattice acc = base;
  for (long i = 1; i < n; ++i) acc = lattice_product(acc, base);
  return acc;
}

}  // namespace

long local_valuation_module(const Lattice& L, const PrimeIdeal& P,
                            const Lattice& ring) {
  constexpr long cap = 4096;
  if (local_contains(prime_power(P, 1), L, P)) {
    long k = 1;
    while (k < cap && local_contains(prime_power(P, k + 1), L, P)) ++k;
    if (k >= cap) throw std::runtime_error("valuation overflow");
    return k;
  }
  long k = 0;
  while (k > -cap && !local_contains(prime_power(P, k), L, P)) --k;
  if (k <= -cap) throw std::runtime_error("valuation overflow");
  return k;
}

long local_valuation(const FieldElem& x, const PrimeIdeal& P,
                     const Lattice& ring) {
  if (x.is_zero()) throw std::domain_error("valuation of zero");
  return local_valuation_module(lattice_from_elems(ring.field, {x}), P, ring);
}

namespace {

// CRT integer u = 1 mod a, 0 mod b for coprime a, b
mpz_class crt_unit(const mpz_class& a, const mpz_class& b) {
  mpz_class g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  if (g != 1) throw std::logic_error("crt_unit: moduli not coprime");
  // s*a + t*b = 1  =>  u = t*b
  return t * b;
}

Lattice canonicalize_localized_order(const Domain* D, const Lattice& L) {
  const Domain* G = D->parent;
  const Lattice& O = G->ring;
  long f = G->conductor;
  FieldTag F = D->field;

  // n with n*O subset L subset (1/n)*O
  mpz_class n1 = L.den * f;
  Lattice sl = lattice_slice_rational(lattice_colon(L, O));
  mpz_class n2 = sl.rows[0][0];
  mpz_class n = n1 * n2;
  if (n < 0) n = -n;

  std::set<long> ps;
  for (const auto& P : D->at) ps.insert(P.p);
  mpz_class n_in = 1;
  std::map<long, long> vp;
  for (long p : ps) {
    long v = 0;
    mpz_class m = n;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= static_cast<unsigned long>(p);
      ++v;
    }
    vp[p] = v;
    for (long i = 0; i < v; ++i) n_in *= p;
  }
  mpz_class n_out = n / n_in;

  Lattice M = L;
  if (n_in == 1) {
    M = O;
  } else if (n_out > 1) {
    mpz_class a = n_in * n_in * n_in, b = n_out * n_out * n_out;
    mpz_class u = crt_unit(a, b);
    FieldElem fu(mpq_class(u), F), fv(mpq_class(1 - u), F);
    M = lattice_sum(lattice_scale(M, fu), lattice_scale(O, fv));
  }

  auto& reg = Registry::get();
  for (long p : ps) {
    long v = vp[p];
    if (v == 0 || n_in == 1) continue;
    const auto& all = reg.primes_above_ring(G, p);
    std::vector<PrimeIdeal> kept, dropped;
    for (const auto& P : all)
      (D->survives(P) ? kept : dropped).push_back(P);
    if (dropped.empty()) continue;
    long m = 6 * v + 6, t = 2 * v + 2;
    auto power_prod = [&](const std::vector<PrimeIdeal>& v_) {
      Lattice acc = prime_power(v_[0], m);
      for (size_t i = 1; i < v_.size(); ++i)
        acc = lattice_product(acc, prime_power(v_[i], m));
      return acc;
    };
    Lattice L1 = power_prod(kept), L2 = power_prod(dropped);
    FieldElem e = lattice_split_unit(L1, L2);
    FieldElem one(mpq_class(1), F);
    mpz_class pt;
    mpz_ui_pow_ui(pt.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(t));
    Lattice deep = lattice_scale(lattice_sum(M, O), FieldElem(mpq_class(pt), F));
    M = lattice_sum(lattice_sum(lattice_scale(M, e), lattice_scale(O, one - e)),
                    deep);
  }
  return M;
}

}  // namespace

Lattice canonicalize_in(const Domain* D, const Lattice& L) {
  if (L.field != D->field) throw DomainMismatchError();
  switch (D->kind) {
    case Domain::Kind::Integers:
    case Domain::Kind::QuadraticOrder:
      return L;
    case Domain::Kind::LocalizedIntegers: {
      mpq_class q(L.rows[0][0], L.den);
      q.canonicalize();
      mpz_class num = 1, den = 1;
      for (long p : D->S) {
        mpz_class m = q.get_num();
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
          m /= static_cast<unsigned long>(p);
          num *= p;
        }
        m = q.get_den();
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
          m /= static_cast<unsigned long>(p);
          den *= p;
        }
      }
      return lattice_make(D->field, den, {{num, 0}});
    }
    case Domain::Kind::LocalizedOrder:
      return canonicalize_localized_order(D, L);
  }
  throw std::logic_error("unreachable");
}

Lattice span_in(const Domain* D, Lattice L) {
  if (auto g = D->ring_generator()) {
    for (;;) {
      Lattice next = lattice_sum(L, lattice_scale(L, *g));
      if (next == L) break;
      L = std::move(next);
    }
  }
  return canonicalize_in(D, L);
}

}  // namespace sst
