#include "pontcalc/sign_vector.hpp"

namespace pontcalc {

std::string SignVec::str() const {
  std::string s;
  s.reserve(n);
  for (std::size_t e = 0; e < n; ++e) {
    int v = at(e);
    s += v > 0 ? '+' : v < 0 ? '-' : '0';
  }
  return s;
}

}  // namespace pontcalc
