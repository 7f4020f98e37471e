#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mayer {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Malformed input: bad edge, broken invariant, unparsable record.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request is well-formed but exceeds a documented desk-scale limit.
class BudgetError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// `num/den`, or just `num` when the denominator is one.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

Integer factorial(int k);
Integer ipow(const Integer& base, int exponent);

/// Splits a `key=value; key=value` record. Keys must be unique.
std::map<std::string, std::string> parse_fields(const std::string& line);
int parse_int(const std::string& text);

}  // namespace mayer
