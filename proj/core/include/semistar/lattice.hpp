#ifndef SEMISTAR_LATTICE_HPP
#define SEMISTAR_LATTICE_HPP

#include <array>
#include <vector>

#include "semistar/field.hpp"

namespace sst {

struct ZeroModuleError : std::runtime_error {
  ZeroModuleError() : std::runtime_error("zero module is not representable") {}
};

using Vec2 = std::array<mpz_class, 2>;

// (1/den) * Z-span of rows, in coordinates w.r.t. {1, sqrt(d)} (second
// coordinate unused over Q).  Always kept in row HNF with positive pivots,
// off-pivot entries reduced into [0, pivot), and gcd(den, entries) = 1.
struct Lattice {
  FieldTag field;
  mpz_class den = 1;
  std::vector<Vec2> rows;  // size 1 or 2 after reduction

  int rank() const { return static_cast<int>(rows.size()); }
  bool full_rank() const { return rank() == field.dim(); }
  bool operator==(const Lattice&) const = default;

  std::vector<FieldElem> generators() const;
  std::string str() const;  // den=<n>;basis=[[..],[..]]
};

// HNF-reduce arbitrary integer vectors; throws ZeroModuleError if all zero.
Lattice lattice_make(FieldTag field, const mpz_class& den,
                     std::vector<Vec2> vectors);
Lattice lattice_from_elems(FieldTag field, const std::vector<FieldElem>& gens);
Lattice lattice_parse(FieldTag field, const std::string& text);

Lattice lattice_sum(const Lattice& a, const Lattice& b);
Lattice lattice_product(const Lattice& a, const Lattice& b);
Lattice lattice_intersect(const Lattice& a, const Lattice& b);
// { x in K : x * b subset a }
Lattice lattice_colon(const Lattice& a, const Lattice& b);
Lattice lattice_scale(const Lattice& a, const FieldElem& x);

bool lattice_member(const Lattice& a, const FieldElem& x);
bool lattice_contains(const Lattice& a, const Lattice& b);  // b subset a

// Elements of a with zero sqrt coordinate, as a rank-1 lattice over Q.
Lattice lattice_slice_rational(const Lattice& a);
// View a rank-1 lattice over Q inside a quadratic field.
Lattice lattice_embed(const Lattice& rational, FieldTag field);

// Solve 1 = x + y with x in a, y in b (a, b integral, comaximal); returns y
// as a field element.  Throws if a + b is not the unit lattice.
FieldElem lattice_split_unit(const Lattice& a, const Lattice& b);

}  // namespace sst

#endif
