#include "semistar/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace sst {

namespace {

using Transform = std::vector<std::vector<mpz_class>>;

void row_axpy(Vec2& r, const mpz_class& q, const Vec2& s, Transform* U,
              size_t i, size_t j) {
  r[0] -= q * s[0];
  r[1] -= q * s[1];
  if (U)
    for (size_t k = 0; k < (*U)[i].size(); ++k) (*U)[i][k] -= q * (*U)[j][k];
}

void row_negate(Vec2& r, Transform* U, size_t i) {
  r[0] = -r[0];
  r[1] = -r[1];
  if (U)
    for (auto& v : (*U)[i]) v = -v;
}

// Reduce the given column to a single nonzero entry among rows in `idx`;
// returns the index of the surviving row or SIZE_MAX.
size_t eliminate_column(std::vector<Vec2>& rows, std::vector<size_t>& idx,
                        int col, Transform* U) {
  for (;;) {
    size_t best = SIZE_MAX;
    for (size_t i : idx)
      if (rows[i][col] != 0 &&
          (best == SIZE_MAX ||
           cmp(abs(rows[i][col]), abs(rows[best][col])) < 0))
        best = i;
    if (best == SIZE_MAX) return SIZE_MAX;
    bool others = false;
    for (size_t i : idx) {
      if (i == best || rows[i][col] == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(),
                 rows[best][col].get_mpz_t());
      row_axpy(rows[i], q, rows[best], U, i, best);
      if (rows[i][col] != 0) others = true;
    }
    if (!others) {
      if (rows[best][col] < 0) row_negate(rows[best], U, best);
      return best;
    }
  }
}

// Row HNF: output ordered [(a,0),(c,e)] with a,e > 0 and 0 <= c < a when both
// pivots exist.  Zero rows are dropped.  If U is given it receives the
// unimodular transform applied to the original row list (rows are permuted
// into pivot order and the permutation is applied to U as well).
std::vector<Vec2> hnf_rows(std::vector<Vec2> rows, Transform* U) {
  std::vector<size_t> idx(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) idx[i] = i;
  size_t p1 = eliminate_column(rows, idx, 1, U);
  std::vector<size_t> rest;
  for (size_t i : idx)
    if (i != p1) rest.push_back(i);
  size_t p0 = eliminate_column(rows, rest, 0, U);
  if (p1 != SIZE_MAX && p0 != SIZE_MAX && rows[p1][0] != 0) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), rows[p1][0].get_mpz_t(),
               rows[p0][0].get_mpz_t());
    row_axpy(rows[p1], q, rows[p0], U, p1, p0);
  }
  std::vector<Vec2> out;
  Transform Uout;
  if (p0 != SIZE_MAX) {
    out.push_back(rows[p0]);
    if (U) Uout.push_back((*U)[p0]);
  }
  if (p1 != SIZE_MAX) {
    out.push_back(rows[p1]);
    if (U) Uout.push_back((*U)[p1]);
  }
  if (U) *U = std::move(Uout);
  return out;
}

Lattice reduce(FieldTag field, mpz_class den, std::vector<Vec2> rows) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    den = -den;
    for (auto& r : rows) {
      r[0] = -r[0];
      r[1] = -r[1];
    }
  }
  if (!field.quadratic())
    for (auto& r : rows)
      if (r[1] != 0) throw std::invalid_argument("sqrt coordinate over Q");
  rows = hnf_rows(std::move(rows), nullptr);
  if (rows.empty()) throw ZeroModuleError();
  mpz_class g = den;
  for (const auto& r : rows) {
    g = gcd(g, r[0]);
    g = gcd(g, r[1]);
  }
  if (g > 1) {
    den /= g;
    for (auto& r : rows) {
      r[0] /= g;
      r[1] /= g;
    }
  }
  Lattice L;
  L.field = field;
  L.den = den;
  L.rows = std::move(rows);
  return L;
}

}  // namespace

Lattice lattice_make(FieldTag field, const mpz_class& den,
                     std::vector<Vec2> vectors) {
  return reduce(field, den, std::move(vectors));
}

std::vector<FieldElem> Lattice::generators() const {
  std::vector<FieldElem> out;
  for (const auto& r : rows)
    out.emplace_back(mpq_class(r[0], den), mpq_class(r[1], den), field);
  return out;
}

Lattice lattice_from_elems(FieldTag field,
                           const std::vector<FieldElem>& gens) {
  mpz_class den = 1;
  for (const auto& g : gens) {
    den = lcm(den, g.a.get_den());
    den = lcm(den, g.b.get_den());
  }
  std::vector<Vec2> rows;
  for (const auto& g : gens) {
    mpq_class x = g.a * den, y = g.b * den;
    rows.push_back({x.get_num(), y.get_num()});
  }
  return reduce(field, den, std::move(rows));
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  if (a.field != b.field) throw std::invalid_argument("field mismatch");
  mpz_class den = lcm(a.den, b.den);
  std::vector<Vec2> rows;
  mpz_class fa = den / a.den, fb = den / b.den;
  for (const auto& r : a.rows) rows.push_back({r[0] * fa, r[1] * fa});
  for (const auto& r : b.rows) rows.push_back({r[0] * fb, r[1] * fb});
  return reduce(a.field, den, std::move(rows));
}

Lattice lattice_product(const Lattice& a, const Lattice& b) {
  if (a.field != b.field) throw std::invalid_argument("field mismatch");
  std::vector<FieldElem> gens;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) gens.push_back(x * y);
  return lattice_from_elems(a.field, gens);
}

Lattice lattice_scale(const Lattice& a, const FieldElem& x) {
  if (x.is_zero()) throw ZeroModuleError();
  std::vector<FieldElem> gens;
  for (const auto& g : a.generators()) gens.push_back(g * x);
  return lattice_from_elems(a.field, gens);
}

namespace {

// Dual of a full-rank rank-2 lattice w.r.t. the coordinate dot product.
Lattice lattice_dual(const Lattice& a) {
  const auto& r0 = a.rows[0];
  const auto& r1 = a.rows[1];
  mpz_class det = r0[0] * r1[1] - r0[1] * r1[0];
  std::vector<Vec2> rows = {{a.den * r1[1], -a.den * r1[0]},
                            {-a.den * r0[1], a.den * r0[0]}};
  return reduce(a.field, det, std::move(rows));
}

mpq_class rank1_value(const Lattice& a) {
  return mpq_class(a.rows[0][0], a.den);
}

}  // namespace

bool lattice_member(const Lattice& a, const FieldElem& x) {
  if (x.is_zero()) return true;
  mpq_class cx = x.a * a.den, cy = x.b * a.den;
  if (a.rank() == 2) {
    const auto& r0 = a.rows[0];
    const auto& r1 = a.rows[1];
    mpq_class det = r0[0] * r1[1] - r0[1] * r1[0];
    mpq_class n0 = (cx * r1[1] - cy * r1[0]) / det;
    mpq_class n1 = (cy * r0[0] - cx * r0[1]) / det;
    n0.canonicalize();
    n1.canonicalize();
    return n0.get_den() == 1 && n1.get_den() == 1;
  }
  const auto& r = a.rows[0];
  mpq_class t;
  if (r[0] != 0) {
    t = cx / r[0];
    t.canonicalize();
    if (t * r[1] != cy) return false;
  } else {
    if (cx != 0) return false;
    t = cy / r[1];
    t.canonicalize();
  }
  return t.get_den() == 1;
}

bool lattice_contains(const Lattice& a, const Lattice& b) {
  for (const auto& g : b.generators())
    if (!lattice_member(a, g)) return false;
  return true;
}

Lattice lattice_intersect(const Lattice& a, const Lattice& b) {
  if (a.field != b.field) throw std::invalid_argument("field mismatch");
  if (a.rank() == 2 && b.rank() == 2)
    return lattice_dual(lattice_sum(lattice_dual(a), lattice_dual(b)));
  if (!a.field.quadratic()) {
    mpq_class va = rank1_value(a), vb = rank1_value(b);
    mpz_class num = lcm(va.get_num() * vb.get_den(), vb.get_num() * va.get_den());
    return reduce(a.field, va.get_den() * vb.get_den(), {{num, 0}});
  }
  // rank-1 piece inside a quadratic field: intersect by scaling the line
  const Lattice& line = a.rank() == 1 ? a : b;
  const Lattice& other = a.rank() == 1 ? b : a;
  FieldElem v = line.generators()[0];
  if (other.rank() == 1) {
    FieldElem w = other.generators()[0];
    FieldElem ratio = w / v;
    if (ratio.b != 0) throw ZeroModuleError();  // skew lines meet only in 0
    mpq_class r = ratio.a;  // v*Z cap v*r*Z = v*num(r)*Z
    return lattice_from_elems(a.field,
                              {v * FieldElem(mpq_class(abs(r.get_num())), a.field)});
  }
  // t*v in other <=> t in (coords of v in other's basis) with integer entries
  const auto& r0 = other.rows[0];
  const auto& r1 = other.rows[1];
  mpq_class cx = v.a * other.den, cy = v.b * other.den;
  mpq_class det = r0[0] * r1[1] - r0[1] * r1[0];
  mpq_class n0 = (cx * r1[1] - cy * r1[0]) / det;
  mpq_class n1 = (cy * r0[0] - cx * r0[1]) / det;
  n0.canonicalize();
  n1.canonicalize();
  mpz_class t = lcm(n0.get_den(), n1.get_den());
  return lattice_from_elems(a.field, {v * FieldElem(mpq_class(t), a.field)});
}

Lattice lattice_colon(const Lattice& a, const Lattice& b) {
  if (a.field != b.field) throw std::invalid_argument("field mismatch");
  bool first = true;
  Lattice acc;
  for (const auto& g : b.generators()) {
    if (g.is_zero()) continue;
    Lattice piece = lattice_scale(a, g.inverse());
    acc = first ? piece : lattice_intersect(acc, piece);
    first = false;
  }
  if (first) throw ZeroModuleError();
  return acc;
}

Lattice lattice_slice_rational(const Lattice& a) {
  if (!a.field.quadratic()) return a;
  for (const auto& r : a.rows)
    if (r[1] == 0 && r[0] != 0)
      return reduce(make_field(0), a.den, {{r[0], 0}});
  throw ZeroModuleError();
}

Lattice lattice_embed(const Lattice& rational, FieldTag field) {
  if (rational.field.quadratic())
    throw std::invalid_argument("expected a lattice over Q");
  return reduce(field, rational.den, {{rational.rows[0][0], 0}});
}

FieldElem lattice_split_unit(const Lattice& a, const Lattice& b) {
  if (a.den != 1 || b.den != 1)
    throw std::invalid_argument("split_unit expects integral lattices");
  std::vector<Vec2> rows;
  for (const auto& r : a.rows) rows.push_back(r);
  for (const auto& r : b.rows) rows.push_back(r);
  size_t na = a.rows.size(), n = rows.size();
  Transform U(n, std::vector<mpz_class>(n, 0));
  for (size_t i = 0; i < n; ++i) U[i][i] = 1;
  std::vector<Vec2> H = hnf_rows(rows, &U);
  // solve (1,0) = c * H
  mpq_class c0, c1;
  if (H.size() == 2) {
    mpq_class det = H[0][0] * H[1][1] - H[0][1] * H[1][0];
    c0 = mpq_class(H[1][1]) / det;
    c1 = mpq_class(-H[0][1]) / det;
  } else {
    if (H[0][1] != 0 || H[0][0] == 0)
      throw std::runtime_error("lattices are not comaximal");
    c0 = mpq_class(1, 1) / mpq_class(H[0][0]);
    c1 = 0;
  }
  c0.canonicalize();
  c1.canonicalize();
  if (c0.get_den() != 1 || c1.get_den() != 1)
    throw std::runtime_error("lattices are not comaximal");
  mpz_class y0 = 0, y1 = 0;
  for (size_t k = na; k < n; ++k) {
    mpz_class coeff = c0.get_num() * U[0][k];
    if (H.size() == 2) coeff += c1.get_num() * U[1][k];
    const Vec2& src = k < na ? a.rows[k] : b.rows[k - na];
    y0 += coeff * src[0];
    y1 += coeff * src[1];
  }
  FieldElem y(mpq_class(y0), mpq_class(y1), a.field);
  FieldElem one(mpq_class(1), a.field);
  if (!lattice_member(a, one - y) || !lattice_member(b, y))
    throw std::runtime_error("split_unit consistency failure");
  return y;
}

std::string Lattice::str() const {
  std::ostringstream os;
  os << "den=" << den.get_str() << ";basis=[";
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) os << ",";
    os << "[" << rows[i][0].get_str();
    if (field.quadratic()) os << "," << rows[i][1].get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

Lattice lattice_parse(FieldTag field, const std::string& text) {
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto expect = [&](size_t& pos, const std::string& tok) {
    if (s.compare(pos, tok.size(), tok) != 0)
      throw std::invalid_argument("bad ideal literal near '" + s.substr(pos) + "'");
    pos += tok.size();
  };
  auto number = [&](size_t& pos) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("bad integer in ideal literal");
    return mpz_class(s.substr(start, pos - start));
  };
  size_t pos = 0;
  expect(pos, "den=");
  mpz_class den = number(pos);
  expect(pos, ";basis=[");
  std::vector<Vec2> rows;
  for (;;) {
    expect(pos, "[");
    Vec2 r{0, 0};
    r[0] = number(pos);
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      r[1] = number(pos);
    }
    expect(pos, "]");
    rows.push_back(r);
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  expect(pos, "]");
  if (pos != s.size()) throw std::invalid_argument("trailing data in ideal literal");
  return lattice_make(field, den, std::move(rows));
}

}  // namespace sst
