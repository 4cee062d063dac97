#pragma once

// Brute-force enumeration of the defining equations. Nested bounded loops
// over the box a_i <= (n p^r - m) / (2 p^i) (p odd) or (2^r n - m) / 2^i
// (p = 2), b_j in {0,1}, with an exact equality test per candidate. No other
// pruning. Ground truth for everything in counting.hpp.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "frobkern/params.hpp"

namespace frobkern {

/// One lattice point. `b` is empty for p = 2; `a0` is set only for the
/// quantum equation.
struct SolutionTuple {
    std::vector<std::int64_t> a;
    std::vector<std::int64_t> b;
    std::optional<std::int64_t> a0;

    /// 2 sum(a) + sum(b) for p odd, sum(a) for p = 2. a0 does not count.
    std::int64_t degree(std::int64_t p) const;

    friend bool operator==(const SolutionTuple&, const SolutionTuple&) = default;
    friend auto operator<=>(const SolutionTuple&, const SolutionTuple&) = default;
};

/// Left side equals right side of the doubled classical (or p = 2) equation.
bool satisfies_classical(const SolutionTuple& s, const CountParams& params);
/// Same for the doubled quantum equation with weight n.
bool satisfies_quantum(const SolutionTuple& s, std::int64_t p, std::int64_t r, std::int64_t n);

/// Raised when the search box exceeds the force threshold.
class OracleRefused : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t kOracleForceThreshold = 10'000'000;

struct OracleOptions {
    bool force = false;    // ignore kOracleForceThreshold
    bool parallel = false; // OpenMP over the outermost variable
};

/// Number of candidates the enumeration would test (0 when the box is empty).
CountValue classical_box_size(const CountParams& params);
CountValue quantum_box_size(std::int64_t p, std::int64_t r, std::int64_t n);

/// Every solution, once, in lexicographic order of (a_1..a_r, b_1..b_r).
/// Always serial.
std::vector<SolutionTuple> enumerate_solutions(const CountParams& params, OracleOptions opts = {});
/// Quantum solutions in lexicographic order of (a_0, a_1..a_r, b_1..b_r).
std::vector<SolutionTuple> enumerate_quantum(std::int64_t p, std::int64_t r, std::int64_t n,
                                             OracleOptions opts = {});

/// Streaming counts: no tuples are materialized.
CountValue brute_count(const CountParams& params, OracleOptions opts = {});
CountValue brute_quantum(std::int64_t p, std::int64_t r, std::int64_t n, OracleOptions opts = {});
CountValue brute_graded(const CountParams& params, std::int64_t degree, OracleOptions opts = {});

/// Solutions bucketed by degree in one pass; trailing zeros trimmed.
std::vector<CountValue> brute_degree_histogram(const CountParams& params, OracleOptions opts = {});

} // namespace frobkern
