#pragma once

// The reduced ring H^*(B_r,k)_red is spanned by monomials x_1^a_1 ... x_r^a_r with
//     a_1 + a_2 p + ... + a_r p^{r-1} = 0 (mod p^{r-1}),
// and is free over R = k[x_1^{p^{r-1}}, x_2^{p^{r-2}}, ..., x_r] on the finite
// set of exponent sequences (a_1..a_{r-1}) with 0 <= a_i < p^{r-i} obeying the
// same congruence. Each x_i has degree 2 (p odd) or 1 (p = 2).

#include <cstdint>
#include <vector>

#include "json.hpp"

#include "frobkern/params.hpp"

namespace frobkern {

using Exponents = std::vector<std::int64_t>;

struct ReducedBasis {
    std::int64_t p = 3;
    std::int64_t r = 1;
    std::vector<Exponents> elements; // sorted lexicographically
    std::int64_t generator_degree = 2;

    /// JSON array of integer arrays.
    nlohmann::json to_json() const;
    static std::vector<Exponents> elements_from_json(const nlohmann::json& j);
};

inline std::int64_t generator_degree(std::int64_t p) { return p == 2 ? 1 : 2; }

/// Whether a full exponent sequence (a_1..a_r) satisfies the defining congruence.
bool in_reduced_ring(std::int64_t p, const Exponents& a);

ReducedBasis basis(std::int64_t p, std::int64_t r);

/// Coefficient d: number of exponent sequences (a_1..a_r) in the ring with
/// generator_degree * sum(a) = d, for d = 0..d_max.
std::vector<CountValue> hilbert_coeffs(std::int64_t p, std::int64_t r, std::int64_t d_max);

/// Expansion of (sum_{b in basis} t^{g|b|}) / prod_{i=1..r} (1 - t^{g p^{r-i}})
/// to degree d_max, by power-series division.
std::vector<CountValue> hilbert_from_basis(const ReducedBasis& basis, std::int64_t d_max);

/// Truncated quotient num / den, den[0] must be 1.
std::vector<CountValue> series_divide(const std::vector<CountValue>& num,
                                      const std::vector<CountValue>& den, std::size_t terms);

} // namespace frobkern
