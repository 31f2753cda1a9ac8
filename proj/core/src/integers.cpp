#include "wedgecrys/integers.hpp"

#include <cctype>
#include <string>

#include "wedgecrys/error.hpp"

namespace wedgecrys {

namespace detail {

mpz_class parse_integer(std::string_view text) {
  std::size_t begin = 0;
  while (begin < text.size() && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  std::size_t end = text.size();
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  const std::string_view body = text.substr(begin, end - begin);
  std::size_t digits = (!body.empty() && (body[0] == '-' || body[0] == '+')) ? 1 : 0;
  if (digits == body.size()) throw ParseError("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t i = digits; i < body.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(body[i])))
      throw ParseError("expected an integer, got '" + std::string(text) + "'");
  std::string s(body[0] == '+' ? body.substr(1) : body);
  return mpz_class(s, 10);
}

}  // namespace detail

IntegerRing::Element IntegerRing::parse(std::string_view text) const {
  return detail::parse_integer(text);
}

IntegerRing::Element IntegerRing::random(std::mt19937_64& gen) const {
  std::uniform_int_distribution<long> dist(-9, 9);
  return dist(gen);
}

Rationals::Element Rationals::parse(std::string_view text) const {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return mpq_class(detail::parse_integer(text));
  const mpz_class num = detail::parse_integer(text.substr(0, slash));
  const mpz_class den = detail::parse_integer(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

Rationals::Element Rationals::random(std::mt19937_64& gen) const {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  mpq_class q(num(gen), den(gen));
  q.canonicalize();
  return q;
}

}  // namespace wedgecrys
