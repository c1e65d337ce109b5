#include "wildcat/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace wildcat {

std::string to_string(const Rational& value) { return value.get_str(); }

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num));
  mpz_class d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace wildcat
