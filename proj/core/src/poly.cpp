#include "semistar/poly.hpp"

#include <sstream>

namespace sst {

namespace {

void strip(std::vector<FieldElem>& coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

std::string elem_text(const FieldElem& x) {
  std::ostringstream os;
  os << x.a.get_str();
  if (x.b != 0) {
    if (x.b > 0) os << "+";
    os << x.b.get_str() << "w";
  }
  return os.str();
}

}  // namespace

PolyOverK poly_make(FieldTag field, std::vector<FieldElem> coeffs) {
  for (const auto& c : coeffs)
    if (c.field != field) throw std::invalid_argument("coefficient field mismatch");
  strip(coeffs);
  return PolyOverK{field, std::move(coeffs)};
}

PolyOverK poly_one(FieldTag field) {
  return PolyOverK{field, {FieldElem(mpq_class(1), field)}};
}

PolyOverK poly_add(const PolyOverK& a, const PolyOverK& b) {
  if (a.field != b.field) throw std::invalid_argument("field mismatch");
  std::vector<FieldElem> c(std::max(a.coeffs.size(), b.coeffs.size()),
                           FieldElem(mpq_class(0), a.field));
  for (size_t i = 0; i < a.coeffs.size(); ++i) c[i] = c[i] + a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) c[i] = c[i] + b.coeffs[i];
  strip(c);
  return PolyOverK{a.field, std::move(c)};
}

PolyOverK poly_mul(const PolyOverK& a, const PolyOverK& b) {
  if (a.field != b.field) throw std::invalid_argument("field mismatch");
  if (a.is_zero() || b.is_zero()) return PolyOverK{a.field, {}};
  std::vector<FieldElem> c(a.coeffs.size() + b.coeffs.size() - 1,
                           FieldElem(mpq_class(0), a.field));
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    for (size_t j = 0; j < b.coeffs.size(); ++j)
      c[i + j] = c[i + j] + a.coeffs[i] * b.coeffs[j];
  strip(c);
  return PolyOverK{a.field, std::move(c)};
}

PolyOverK poly_scale(const PolyOverK& a, const FieldElem& x) {
  std::vector<FieldElem> c;
  c.reserve(a.coeffs.size());
  for (const auto& ci : a.coeffs) c.push_back(ci * x);
  strip(c);
  return PolyOverK{a.field, std::move(c)};
}

FieldElem field_elem_parse(FieldTag field, const std::string& text) {
  // terms separated by +/-, each `p[/q]` or `p[/q]w` or `w`
  mpq_class a = 0, b = 0;
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && isspace(text[i])) ++i; };
  skip_ws();
  if (i == text.size()) throw std::invalid_argument("empty field element");
  while (i < text.size()) {
    skip_ws();
    int sign = 1;
    while (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      if (text[i] == '-') sign = -sign;
      ++i;
      skip_ws();
    }
    size_t start = i;
    while (i < text.size() && (isdigit(text[i]) || text[i] == '/')) ++i;
    mpq_class r = 1;
    if (i > start) {
      r = mpq_class(text.substr(start, i - start));
      r.canonicalize();
    }
    skip_ws();
    bool radical = i < text.size() && text[i] == 'w';
    if (radical) ++i;
    if (!radical && i == start)
      throw std::invalid_argument("malformed field element: " + text);
    (radical ? b : a) += sign * r;
    skip_ws();
  }
  return FieldElem(a, b, field);
}

PolyOverK poly_parse(FieldTag field, const std::string& text) {
  size_t open = text.find('[');
  size_t close = text.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw std::invalid_argument("polynomial must be a [c0,c1,...] list");
  std::vector<FieldElem> coeffs;
  std::string body = text.substr(open + 1, close - open - 1);
  size_t pos = 0;
  while (pos <= body.size()) {
    size_t comma = body.find(',', pos);
    std::string piece = body.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!piece.empty() &&
        piece.find_first_not_of(" \t") != std::string::npos)
      coeffs.push_back(field_elem_parse(field, piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return poly_make(field, std::move(coeffs));
}

std::string PolyOverK::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < coeffs.size(); ++i)
    os << (i ? "," : "") << elem_text(coeffs[i]);
  os << "]";
  return os.str();
}

RationalFunction ratfun_make(PolyOverK num, PolyOverK den) {
  if (den.is_zero()) throw ZeroPolynomialError();
  return RationalFunction{std::move(num), std::move(den)};
}

RationalFunction ratfun_parse(FieldTag field, const std::string& text) {
  size_t nu = text.find("num=");
  size_t de = text.find("den=");
  if (nu == std::string::npos || de == std::string::npos)
    throw std::invalid_argument("expected num=[...];den=[...]");
  std::string npart = text.substr(nu + 4, text.find(';', nu) - nu - 4);
  std::string dpart = text.substr(de + 4);
  return ratfun_make(poly_parse(field, npart), poly_parse(field, dpart));
}

std::string RationalFunction::str() const {
  return "num=" + num.str() + ";den=" + den.str();
}

FractionalIdeal content(const PolyOverK& f, const Domain* D) {
  if (f.is_zero()) throw ZeroPolynomialError();
  std::vector<FieldElem> gens;
  for (const auto& c : f.coeffs)
    if (!c.is_zero()) gens.push_back(c);
  return ideal_from_elems(D, gens);
}

bool poly_in_ring(const PolyOverK& f, const Domain* D) {
  FractionalIdeal unit = unit_ideal(D);
  for (const auto& c : f.coeffs)
    if (!c.is_zero() && !member_of(c, unit)) return false;
  return true;
}

DedekindMertensReport dedekind_mertens_check(const PolyOverK& f,
                                             const PolyOverK& g,
                                             const Domain* D) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomialError();
  FractionalIdeal cf = content(f, D);
  FractionalIdeal cg = content(g, D);
  FractionalIdeal cfg = content(poly_mul(f, g), D);
  FractionalIdeal lhs = ideal_combine(CombineMode::PRODUCT, cf, cg);
  FractionalIdeal rhs = cfg;
  DedekindMertensReport rep;
  for (long m = 0; m <= g.degree() + 1; ++m) {
    if (ideal_eq(lhs, rhs)) {
      rep.m = m;
      rep.ok = true;
      rep.lhs = lhs;
      rep.rhs = rhs;
      return rep;
    }
    lhs = ideal_combine(CombineMode::PRODUCT, lhs, cf);
    rhs = ideal_combine(CombineMode::PRODUCT, rhs, cf);
  }
  rep.m = g.degree() + 1;
  rep.lhs = lhs;
  rep.rhs = rhs;
  return rep;
}

}  // namespace sst
