#include "clifford/scalar.hpp"

#include <charconv>

namespace clifford {

std::string ScalarTraits<double>::to_string(double x) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;
  return std::string(buf, end);
}

}  // namespace clifford
