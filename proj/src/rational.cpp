#include "invsub/rational.hpp"

#include <cctype>

namespace invsub {

std::string to_string(const Rational& q) { return q.get_str(10); }

namespace {

bool parse_integer(std::string_view text, Integer& out) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) return false;
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) return false;
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

bool parse_rational(std::string_view text, Rational& out) {
  const auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) return false;
  } else {
    const auto den_text = text.substr(slash + 1);
    if (den_text.empty() || den_text[0] == '-' || den_text[0] == '+') return false;
    if (!parse_integer(text.substr(0, slash), num) || !parse_integer(den_text, den)) return false;
    if (den == 0) return false;
  }
  out = Rational(num, den);
  out.canonicalize();
  return true;
}

bool is_zero(const RatVector& v) {
  for (const auto& x : v) {
    if (!is_zero(x)) return false;
  }
  return true;
}

RatVector primitive_integer(const RatVector& v) {
  Integer lcm_den = 1;
  for (const auto& x : v) {
    if (!is_zero(x)) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<Integer> ints;
  ints.reserve(v.size());
  Integer content = 0;
  for (const auto& x : v) {
    Integer z = x.get_num() * (lcm_den / x.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    ints.push_back(std::move(z));
  }
  if (content == 0) return v;
  RatVector out;
  out.reserve(v.size());
  for (auto& z : ints) out.emplace_back(Integer(z / content));
  return out;
}

}  // namespace invsub
