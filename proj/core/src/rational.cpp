#include "mgraph/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace mgraph {

namespace {

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_token(num)) {
    throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
  }
  mpz_class numerator{std::string(num)};
  if (slash == std::string_view::npos) {
    return Rat(numerator);
  }
  std::string_view den = text.substr(slash + 1);
  if (!is_integer_token(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
  }
  mpz_class denominator{std::string(den)};
  if (denominator == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  Rat r(numerator, denominator);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) {
  return r.get_str();
}

double to_double(const Rat& r) {
  return r.get_d();
}

Rat mod_positive(const Rat& t, const Rat& m) {
  if (m <= 0) {
    throw std::invalid_argument("mod_positive: modulus must be positive");
  }
  Rat q = t / m;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return t - Rat(fl) * m;
}

}  // namespace mgraph
