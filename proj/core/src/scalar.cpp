#include "rayleigh/scalar.hpp"

#include <cctype>
#include <stdexcept>

#include "rayleigh/errors.hpp"

namespace rayleigh {

Scalar make_scalar(long n, long d) {
  if (d == 0) throw ValueParseError("zero denominator");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

Scalar parse_scalar(std::string_view text) {
  if (text.empty()) throw ValueParseError("empty rational literal");
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_int(num) || (slash != std::string_view::npos && !is_int(den)))
    throw ValueParseError("malformed rational literal '" + std::string(text) + "'");
  try {
    Scalar q{std::string(text)};
    if (q.get_den() == 0) throw ValueParseError("zero denominator");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ValueParseError("malformed rational literal '" + std::string(text) + "'");
  }
}

std::string to_string(const Scalar& x) { return x.get_str(); }

Scalar binomial(int n, int k) {
  if (k < 0 || k > n) return Scalar(0);
  mpz_class v;
  mpz_bin_uiui(v.get_mpz_t(), n, k);
  return Scalar(v);
}

}  // namespace rayleigh
