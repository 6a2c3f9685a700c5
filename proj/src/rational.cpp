#include "polywork/rational.hpp"

#include <ostream>

namespace polywork {

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw InputError("cannot parse rational '" + text + "'");
  }
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::size_t Rational::hash() const {
  // FNV over the limb data of numerator and denominator.
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](const mpz_class& z) {
    h ^= static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()));
    h *= 1099511628211ull;
    std::size_t n = mpz_size(z.get_mpz_t());
    for (std::size_t i = 0; i < n; ++i) {
      h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i));
      h *= 1099511628211ull;
    }
  };
  mix(num());
  mix(den());
  return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace polywork
