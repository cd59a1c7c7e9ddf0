#include "hookforest/rational.hpp"

#include <cctype>

namespace hookforest {

namespace {

bool looks_like_int(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Int int_from_string(std::string_view text) {
  if (!looks_like_int(text)) throw error("malformed integer: \"" + std::string(text) + "\"");
  return Int(std::string(text), 10);
}

Rat rat_from_string(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(int_from_string(text));
  Int num = int_from_string(text.substr(0, slash));
  Int den = int_from_string(text.substr(slash + 1));
  return make_rat(num, den);
}

Int int_pow(const Int& base, unsigned long exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Rat rat_pow(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  if (base == 0 && exp < 0) throw error("zero raised to a negative power");
  unsigned long mag = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  Int num = int_pow(base.get_num(), mag);
  Int den = int_pow(base.get_den(), mag);
  return exp > 0 ? make_rat(num, den) : make_rat(den, num);
}

}  // namespace hookforest
