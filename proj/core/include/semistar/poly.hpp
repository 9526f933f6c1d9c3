#ifndef SEMISTAR_POLY_HPP
#define SEMISTAR_POLY_HPP

#include "semistar/ideal.hpp"

namespace sst {

struct ZeroPolynomialError : std::runtime_error {
  ZeroPolynomialError() : std::runtime_error("polynomial must be nonzero") {}
};

// Dense univariate polynomial over K, low degree first, no trailing zeros.
struct PolyOverK {
  FieldTag field;
  std::vector<FieldElem> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool operator==(const PolyOverK& o) const {
    return field == o.field && coeffs == o.coeffs;
  }
  std::string str() const;  // [c0,c1,...]
};

PolyOverK poly_make(FieldTag field, std::vector<FieldElem> coeffs);
PolyOverK poly_one(FieldTag field);
PolyOverK poly_add(const PolyOverK& a, const PolyOverK& b);
PolyOverK poly_mul(const PolyOverK& a, const PolyOverK& b);
PolyOverK poly_scale(const PolyOverK& a, const FieldElem& x);
// Coefficient syntax: rational `p/q`, quadratic part with `w` for the square
// root, e.g. `1/2+3w`; list form `[c0,c1,...]`.
PolyOverK poly_parse(FieldTag field, const std::string& text);
FieldElem field_elem_parse(FieldTag field, const std::string& text);

// Element of K(X), kept as the given fraction (reduction is never implicit).
struct RationalFunction {
  PolyOverK num;
  PolyOverK den;
  std::string str() const;  // num=[...];den=[...]
};

RationalFunction ratfun_make(PolyOverK num, PolyOverK den);
RationalFunction ratfun_parse(FieldTag field, const std::string& text);

// Module generated by the coefficients.
FractionalIdeal content(const PolyOverK& f, const Domain* D);

bool poly_in_ring(const PolyOverK& f, const Domain* D);

struct DedekindMertensReport {
  long m = 0;
  bool ok = false;
  FractionalIdeal lhs;  // c(f) c(g) c(f)^m
  FractionalIdeal rhs;  // c(fg) c(f)^m
};
// Least m with c(f)c(g)c(f)^m = c(fg)c(f)^m, searched up to deg(g) + 1.
DedekindMertensReport dedekind_mertens_check(const PolyOverK& f,
                                             const PolyOverK& g,
                                             const Domain* D);

}  // namespace sst

#endif
