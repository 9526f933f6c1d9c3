#ifndef SEMISTAR_DOMAIN_HPP
#define SEMISTAR_DOMAIN_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "semistar/lattice.hpp"

namespace sst {

enum class Tri { yes, no, unknown };
const char* tri_str(Tri t);

struct DomainMismatchError : std::runtime_error {
  DomainMismatchError() : std::runtime_error("operands belong to different domains") {}
};
struct BadSpecError : std::runtime_error {
  explicit BadSpecError(const std::string& m) : std::runtime_error(m) {}
};
struct PrimeTooLargeError : std::runtime_error {
  PrimeTooLargeError() : std::runtime_error("prime exceeds the configured bound") {}
};

inline constexpr long kDefaultPrimeBound = 97;

struct Domain;

// Maximal ideal of the underlying global ring, as an integral lattice.
struct PrimeIdeal {
  Lattice under;
  long p = 0;
  bool contains_conductor = false;
  int index = 0;                    // position within primes_above(ring, p)
  const Domain* ring_of = nullptr;  // global ring this is a prime of

  bool operator==(const PrimeIdeal& o) const {
    return p == o.p && under == o.under;
  }
  std::string str() const;
};

struct Domain {
  enum class Kind {
    Integers,
    LocalizedIntegers,
    QuadraticOrder,
    LocalizedOrder,
  };

  Kind kind;
  FieldTag field;
  long conductor = 1;             // orders only
  std::vector<long> S;            // LocalizedIntegers: surviving rational primes
  const Domain* parent = nullptr; // LocalizedOrder: the global order
  std::vector<PrimeIdeal> at;     // LocalizedOrder: surviving primes
  Lattice ring;                   // lattice of the underlying global ring
  Tri is_pid = Tri::unknown;
  Tri is_prufer = Tri::unknown;
  Tri is_integrally_closed = Tri::unknown;
  std::string name;

  bool localized() const {
    return kind == Kind::LocalizedIntegers || kind == Kind::LocalizedOrder;
  }
  // Localized domains are semilocal with these maximal ideals.
  std::vector<PrimeIdeal> max_ideals() const;
  bool survives(const PrimeIdeal& P) const;
  const Domain* global_ring() const;
  // The extra module generator of the ring beyond 1 (f*sqrt(d)), if any.
  std::optional<FieldElem> ring_generator() const;
};

class Registry {
 public:
  static Registry& get();

  const Domain* integers();
  const Domain* localized_integers(std::vector<long> S);
  const Domain* quadratic_order(long d, long f);
  const Domain* localized_order(const Domain* global_order,
                                std::vector<PrimeIdeal> at);
  // Find-or-create the handle matching a (ring, surviving set) context.
  const Domain* localization_of(const Domain* global, std::vector<PrimeIdeal> at);

  const std::vector<PrimeIdeal>& primes_above_ring(const Domain* global, long p,
                                                   long bound = kDefaultPrimeBound);

 private:
  const Domain* intern(std::unique_ptr<Domain> d);
  std::vector<std::unique_ptr<Domain>> pool_;
  std::map<std::string, const Domain*> by_key_;
  std::map<std::pair<const Domain*, long>, std::vector<PrimeIdeal>> primes_;
  std::recursive_mutex mu_;
};

// All maximal ideals of D containing p (empty when p is a unit in D).
std::vector<PrimeIdeal> primes_above(const Domain* D, long p,
                                     long bound = kDefaultPrimeBound);

const Domain* integral_closure(const Domain* D);

// x lies in L localized at P (denominator-ideal test; exact).
bool local_member(const Lattice& L, const FieldElem& x, const PrimeIdeal& P);
// Every generator of B lies in A localized at P.
bool local_contains(const Lattice& A, const Lattice& B, const PrimeIdeal& P);
// P-adic valuation of x (resp. of the module L) for a prime with DVR
// localization; min over generators for L.
long local_valuation(const FieldElem& x, const PrimeIdeal& P, const Lattice& ring);
long local_valuation_module(const Lattice& L, const PrimeIdeal& P, const Lattice& ring);

// Unique lattice M with M_P = L_P at surviving primes of D and M_Q = O_Q
// elsewhere; identity for global domains (plus denominator reduction).
Lattice canonicalize_in(const Domain* D, const Lattice& L);

// D-span of the given lattice: close under the ring generator, then
// canonicalize in D's context.
Lattice span_in(const Domain* D, Lattice L);

}  // namespace sst

#endif
