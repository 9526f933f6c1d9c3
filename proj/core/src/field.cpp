#include "semistar/field.hpp"

#include <sstream>

namespace sst {

bool is_squarefree(long d) {
  if (d == 0) return false;
  long n = d < 0 ? -d : d;
  for (long k = 2; k * k <= n; ++k)
    if (n % (k * k) == 0) return false;
  return true;
}

FieldTag make_field(long d) {
  if (d != 0 && (d == 1 || !is_squarefree(d)))
    throw std::invalid_argument("field discriminant must be squarefree, != 0, 1");
  return FieldTag{d};
}

std::string FieldElem::str() const {
  std::ostringstream os;
  os << a.get_str();
  if (field.quadratic() && b != 0)
    os << "+" << b.get_str() << "*sqrt(" << field.d << ")";
  return os.str();
}

}  // namespace sst
