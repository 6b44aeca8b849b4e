#pragma once

#include <gpramsey/progression.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gpramsey {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

auto binomial(int n, int k) -> BigInt;

/// (sum v)! / prod v_j!, exact.
auto multinomial_count(const FrequencyVector & v) -> BigInt;

auto pow(const Rational & base, int exponent) -> Rational;
auto pow(const BigInt & base, int exponent) -> BigInt;

auto to_double(const Rational & q) -> double;

/// floor(sqrt(q)) for q >= 0, exact.
auto floor_sqrt(const Rational & q) -> BigInt;

/// "p/q", or "p" when the denominator is 1.
auto to_string(const Rational & q) -> std::string;
auto to_string(const BigInt & z) -> std::string;

} // namespace gpramsey
