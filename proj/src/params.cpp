#include "frobkern/params.hpp"

#include <limits>

namespace frobkern {

CountValue parse_decimal(const std::string& text)
{
    if (text.empty()) throw InvalidInput("empty decimal string");
    for (char c : text) {
        if (c < '0' || c > '9') throw InvalidInput("not a nonnegative decimal: '" + text + "'");
    }
    return CountValue(text);
}

bool is_prime(std::int64_t p)
{
    if (p < 2) return false;
    for (std::int64_t q = 2; q <= p / q; ++q) {
        if (p % q == 0) return false;
    }
    return true;
}

void CountParams::validate() const
{
    if (!is_prime(p)) throw InvalidInput("p must be prime, got " + std::to_string(p));
    if (r < 1) throw InvalidInput("r must be >= 1, got " + std::to_string(r));
    if (m < 0) throw InvalidInput("m must be >= 0, got " + std::to_string(m));
    if (n < 0) throw InvalidInput("n must be >= 0, got " + std::to_string(n));
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw TooLarge("64-bit overflow in table index");
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw TooLarge("64-bit overflow in table index");
    return out;
}

std::int64_t checked_pow(std::int64_t p, std::int64_t e)
{
    std::int64_t out = 1;
    for (std::int64_t i = 0; i < e; ++i) out = checked_mul(out, p);
    return out;
}

CountValue big_pow(std::int64_t p, std::int64_t e)
{
    CountValue out = 1;
    for (std::int64_t i = 0; i < e; ++i) out *= p;
    return out;
}

} // namespace frobkern
