#ifndef SEMISTAR_FIELD_HPP
#define SEMISTAR_FIELD_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace sst {

// Ambient field K: the rationals (d == 0) or Q(sqrt(d)) with d squarefree.
struct FieldTag {
  long d = 0;

  bool quadratic() const { return d != 0; }
  int dim() const { return d == 0 ? 1 : 2; }
  bool operator==(const FieldTag&) const = default;
};

bool is_squarefree(long d);
FieldTag make_field(long d);

// Element a + b*sqrt(d) of K, exact.
struct FieldElem {
  mpq_class a;
  mpq_class b;
  FieldTag field;

  FieldElem() = default;
  FieldElem(mpq_class a_, FieldTag f) : a(std::move(a_)), field(f) { canon(); }
  FieldElem(mpq_class a_, mpq_class b_, FieldTag f)
      : a(std::move(a_)), b(std::move(b_)), field(f) {
    if (!field.quadratic() && b != 0)
      throw std::invalid_argument("nonzero sqrt coordinate over Q");
    canon();
  }

  bool is_zero() const { return a == 0 && b == 0; }
  bool operator==(const FieldElem& o) const { return a == o.a && b == o.b; }

  FieldElem operator+(const FieldElem& o) const {
    return FieldElem(a + o.a, b + o.b, field);
  }
  FieldElem operator-(const FieldElem& o) const {
    return FieldElem(a - o.a, b - o.b, field);
  }
  FieldElem operator-() const { return FieldElem(-a, -b, field); }
  FieldElem operator*(const FieldElem& o) const {
    return FieldElem(a * o.a + b * o.b * field.d, a * o.b + b * o.a, field);
  }
  // a^2 - d b^2, the norm to Q up to sign conventions.
  mpq_class norm() const { return a * a - field.d * b * b; }
  FieldElem inverse() const {
    mpq_class n = norm();
    if (n == 0) throw std::domain_error("inverse of zero");
    return FieldElem(a / n, -b / n, field);
  }
  FieldElem operator/(const FieldElem& o) const { return *this * o.inverse(); }

  std::string str() const;

 private:
  void canon() {
    a.canonicalize();
    b.canonicalize();
  }
};

}  // namespace sst

#endif
