#include "pdr/rational.hpp"

#include <cctype>
#include <limits>

namespace pdr {

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::domain_error("Rational: empty string");
  std::string num, den = "1";
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    num = text;
  } else {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  auto valid = [](const std::string& s, bool sign_ok) {
    if (s.empty()) return false;
    size_t i = (sign_ok && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!valid(num, true) || !valid(den, false))
    throw std::domain_error("Rational: malformed value '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);  // mpz rejects an explicit plus
  mpz_class n(num), d(den);
  if (d == 0) throw std::domain_error("Rational: zero denominator in '" + text + "'");
  return Rational(n, d);
}

long long to_int64(const mpz_class& z) {
  if (!z.fits_slong_p())
    throw std::overflow_error("value exceeds supported 64-bit range");
  return static_cast<long long>(z.get_si());
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer multiplication overflow");
  return r;
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer addition overflow");
  return r;
}

long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && r < 0) ? q - 1 : q;
}

long long ceil_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && r > 0) ? q + 1 : q;
}

}  // namespace pdr
