#include <gpramsey/error.hpp>
#include <gpramsey/exact.hpp>

#include <boost/multiprecision/integer.hpp>

namespace gpramsey {

auto binomial(int n, int k) -> BigInt
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (int i = 1; i <= k; ++i)
        result = result * (n - k + i) / i;
    return result;
}

auto multinomial_count(const FrequencyVector & v) -> BigInt
{
    BigInt result = 1;
    int running = 0;
    for (int c : v.counts) {
        if (c < 0)
            throw InvalidInput("frequency vector entries must be non-negative");
        running += c;
        result *= binomial(running, c);
    }
    return result;
}

auto pow(const Rational & base, int exponent) -> Rational
{
    if (exponent < 0)
        return pow(Rational(1) / base, -exponent);
    Rational result = 1, b = base;
    for (unsigned e = static_cast<unsigned>(exponent); e; e >>= 1) {
        if (e & 1u)
            result *= b;
        b *= b;
    }
    return result;
}

auto pow(const BigInt & base, int exponent) -> BigInt
{
    if (exponent < 0)
        throw InvalidInput("negative integer exponent");
    return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

auto to_double(const Rational & q) -> double
{
    return q.convert_to<double>();
}

auto floor_sqrt(const Rational & q) -> BigInt
{
    if (q < 0)
        throw InvalidInput("floor_sqrt of a negative number");
    BigInt floor_q = boost::multiprecision::numerator(q) / boost::multiprecision::denominator(q);
    return boost::multiprecision::sqrt(floor_q);
}

auto to_string(const Rational & q) -> std::string
{
    auto den = boost::multiprecision::denominator(q);
    if (den == 1)
        return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

auto to_string(const BigInt & z) -> std::string
{
    return z.str();
}

} // namespace gpramsey
