#include "specat/matcat.hpp"

#include <charconv>

namespace specat {

std::string format_scalar(double x) {
  if (x == 0.0) return "0";  // folds -0
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

std::string format_scalar(std::complex<double> x) {
  return "[" + format_scalar(x.real()) + "," + format_scalar(x.imag()) + "]";
}

}  // namespace specat
