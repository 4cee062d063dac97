#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace frobkern {

/// Exact nonnegative multiplicity. Never narrowed to a machine word.
using CountValue = boost::multiprecision::cpp_int;

inline std::string to_decimal(const CountValue& v) { return v.str(); }
CountValue parse_decimal(const std::string& text);

/// Raised for malformed inputs: nonprime p, r < 1, negative weights, wrong
/// branch (p = 2 vs p odd).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an input is well-formed but its lookup tables would not be
/// addressable with 64-bit indices.
class TooLarge : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

bool is_prime(std::int64_t p);

/// (p, r, m, n): characteristic, Frobenius kernel index, highest weight
/// m*omega and output weight n*omega.
struct CountParams {
    std::int64_t p = 3;
    std::int64_t r = 1;
    std::int64_t m = 0;
    std::int64_t n = 0;

    void validate() const;
    friend bool operator==(const CountParams&, const CountParams&) = default;
};

/// p^e, throwing TooLarge instead of wrapping.
std::int64_t checked_pow(std::int64_t p, std::int64_t e);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

CountValue big_pow(std::int64_t p, std::int64_t e);

} // namespace frobkern
