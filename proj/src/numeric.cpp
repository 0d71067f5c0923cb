#include "sp4kl/numeric.hpp"

#include <cstdio>
#include <vector>

namespace sp4kl {

std::string BigFloat::str(int digits) const {
  // mpfr_snprintf with %.*Re gives a deterministic scientific rendering.
  std::vector<char> buf(digits + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits, v_);
  return std::string(buf.data());
}

}  // namespace sp4kl
