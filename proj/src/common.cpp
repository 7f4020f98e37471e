#include "mayer/common.hpp"

#include <string>

namespace mayer {

std::string to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    const Integer den(text.substr(slash + 1));
    if (den == 0) throw ValidationError("zero denominator in '" + text + "'");
    return Rational(Integer(text.substr(0, slash)), den);
  } catch (const std::runtime_error&) {
    throw ValidationError("not a rational number: '" + text + "'");
  }
}

Integer factorial(int k) {
  if (k < 0) throw ValidationError("factorial of a negative number");
  Integer r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

Integer ipow(const Integer& base, int exponent) {
  Integer r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::map<std::string, std::string> parse_fields(const std::string& line) {
  std::map<std::string, std::string> fields;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    auto end = line.find(';', pos);
    if (end == std::string::npos) end = line.size();
    const std::string item = trim(line.substr(pos, end - pos));
    pos = end + 1;
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ValidationError("field without '=' in record: '" + item + "'");
    const std::string key = trim(item.substr(0, eq));
    if (!fields.emplace(key, trim(item.substr(eq + 1))).second)
      throw ValidationError("duplicate field '" + key + "'");
  }
  return fields;
}

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used == 0 || used != text.size())
    throw ValidationError("not an integer: '" + text + "'");
  return value;
}

}  // namespace mayer
