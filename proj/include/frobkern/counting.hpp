#pragma once

#include <cstdint>
#include <vector>

#include "frobkern/digit_counter.hpp"
#include "frobkern/params.hpp"

namespace frobkern {

/// Number of (a_1..a_r, b_1..b_r) in N^r x {0,1}^r with
///
///   m + 2 b_1 + 2p (a_1 + b_2) + ... + 2p^{r-1} (a_{r-1} + b_r) + 2p^r a_r = n p^r.
///
/// This is the multiplicity of n*omega in H^*(B_r, m*omega), and of H^0(n*omega)
/// in H^*(G_r, H^0(m*omega)). Requires p odd.
CountValue n_classical(const CountParams& params, MemoCache* cache = nullptr);

/// Number of (a_1..a_r) in N^r with m + 2 a_1 + 4 a_2 + ... + 2^r a_r = 2^r n.
/// Requires p = 2.
CountValue n_classical_p2(const CountParams& params, MemoCache* cache = nullptr);

/// n_classical or n_classical_p2, by p.
CountValue multiplicity(const CountParams& params, MemoCache* cache = nullptr);

/// Number of (a_0..a_r, b_1..b_r) in N^{r+1} x {0,1}^r with
///
///   2(a_0 + b_1) + 2p (a_1 + b_2) + ... + 2p^r a_r = n p^r,
///
/// the multiplicity of n*alpha in the cohomology of the quantum B_r. p odd.
CountValue n_quantum(std::int64_t p, std::int64_t r, std::int64_t n, MemoCache* cache = nullptr);

/// Solutions of the defining equation for `params`, bucketed by cohomological
/// degree 2*sum(a) + sum(b) (p odd) or sum(a) (p = 2). Entry d is the count
/// at degree d; the vector is empty when there are no solutions.
DegreeSeries degree_distribution(const CountParams& params);

/// One bucket of degree_distribution.
CountValue graded_count(const CountParams& params, std::int64_t degree);

/// The digit equations whose counts sum to n_classical, one per choice of
/// (b_1..b_r), after writing m' in base p and moving its high digits to the
/// right-hand side. Empty when a short-circuit applies.
std::vector<DigitEquation> classical_digit_equations(const CountParams& params);

/// Half-weights (m', n') with m' + b_1 + ... + a_r p^r = n' p^r equivalent
/// to the doubled equation. Requires m = n (mod 2).
struct HalvedWeights {
    std::int64_t m_half;
    std::int64_t n_half;
};
HalvedWeights halve_weights(const CountParams& params);

/// Sum over (b_1..b_r) of the digit equations built from an explicit
/// (m', n'), without parity or bound checks. Used to audit alternative
/// substitutions for odd m, n.
CountValue count_from_halved(std::int64_t p, std::int64_t r, HalvedWeights halved);

/// (m', n') as printed for the odd/odd branch: ((m+1)/2, (n+p^r)/2).
HalvedWeights printed_odd_substitution(const CountParams& params);

} // namespace frobkern
