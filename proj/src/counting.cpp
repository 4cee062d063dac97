#include "frobkern/counting.hpp"

#include <bit>

namespace frobkern {

namespace {

void require_odd(const CountParams& params, const char* what)
{
    params.validate();
    if (params.p == 2) throw InvalidInput(std::string(what) + " requires p odd; use the p = 2 variant");
}

bool parity_vanishes(const CountParams& params) { return (params.m - params.n) % 2 != 0; }

// m > n p^r, evaluated exactly.
bool bound_vanishes(const CountParams& params)
{
    return CountValue(params.m) > CountValue(params.n) * big_pow(params.p, params.r);
}

std::vector<std::int64_t> base_p_digits(std::int64_t value, std::int64_t p, std::size_t count)
{
    std::vector<std::int64_t> digits(count, 0);
    for (std::size_t i = 0; i < count && value > 0; ++i) {
        digits[i] = value % p;
        value /= p;
    }
    return digits;
}

struct BranchEquation {
    DigitEquation eq;
    std::int64_t b_weight; // b_1 + ... + b_r
};

// One digit equation per b in {0,1}^r for
//   m' + b_1 + sum_{i<r} (a_i + b_{i+1}) p^i + a_r p^r = n' p^r.
std::vector<BranchEquation> equations_from_halved(std::int64_t p, std::int64_t r,
                                                  HalvedWeights h)
{
    std::vector<BranchEquation> out;
    if (h.m_half < 0 || h.n_half < 0) return out;
    const auto rr = static_cast<std::size_t>(r);
    // d_0 .. d_r, then everything from p^{r+1} up moves to the right.
    const auto digits = base_p_digits(h.m_half, p, rr + 1);
    std::int64_t high = h.m_half;
    for (std::int64_t i = 0; i <= r && high > 0; ++i) high /= p;
    const std::int64_t target = h.n_half - (high > 0 ? checked_mul(high, p) : 0);
    if (target < 0) return out;

    const std::uint64_t choices = std::uint64_t{1} << rr;
    out.reserve(choices);
    for (std::uint64_t mask = 0; mask < choices; ++mask) {
        auto bit = [&](std::size_t j) -> std::int64_t { return (mask >> (j - 1)) & 1U; }; // b_j
        DigitEquation eq;
        eq.p = p;
        eq.constant = digits[0] + bit(1);
        eq.offsets.resize(rr);
        for (std::size_t i = 1; i <= rr; ++i) {
            eq.offsets[i - 1] = digits[i] + (i < rr ? bit(i + 1) : 0);
        }
        eq.target_multiplier = target;
        out.push_back({std::move(eq), static_cast<std::int64_t>(std::popcount(mask))});
    }
    return out;
}

} // namespace

HalvedWeights halve_weights(const CountParams& params)
{
    if (parity_vanishes(params)) throw InvalidInput("halve_weights: m and n differ in parity");
    if (params.m % 2 == 0) return {params.m / 2, params.n / 2};
    // m + p^r and n + 1 are even; n' p^r - m' = (n p^r - m) / 2.
    const std::int64_t pr = checked_pow(params.p, params.r);
    return {checked_add(params.m, pr) / 2, checked_add(params.n, 1) / 2};
}

HalvedWeights printed_odd_substitution(const CountParams& params)
{
    const std::int64_t pr = checked_pow(params.p, params.r);
    return {checked_add(params.m, 1) / 2, checked_add(params.n, pr) / 2};
}

namespace {

std::vector<BranchEquation> classical_branches(const CountParams& params)
{
    require_odd(params, "n_classical");
    if (parity_vanishes(params) || bound_vanishes(params)) return {};
    return equations_from_halved(params.p, params.r, halve_weights(params));
}

} // namespace

std::vector<DigitEquation> classical_digit_equations(const CountParams& params)
{
    std::vector<DigitEquation> out;
    for (auto& branch : classical_branches(params)) out.push_back(std::move(branch.eq));
    return out;
}

CountValue count_from_halved(std::int64_t p, std::int64_t r, HalvedWeights halved)
{
    CountValue total = 0;
    MemoCache local;
    for (const auto& branch : equations_from_halved(p, r, halved)) total += local.count(branch.eq);
    return total;
}

CountValue n_classical(const CountParams& params, MemoCache* cache)
{
    MemoCache local;
    MemoCache& memo = cache ? *cache : local;
    CountValue total = 0;
    for (const auto& eq : classical_digit_equations(params)) total += memo.count(eq);
    return total;
}

CountValue n_classical_p2(const CountParams& params, MemoCache* cache)
{
    params.validate();
    if (params.p != 2) throw InvalidInput("n_classical_p2 requires p = 2");
    DigitEquation eq{2, std::vector<std::int64_t>(static_cast<std::size_t>(params.r), 0), params.m,
                     params.n, false};
    return count_digit_equation(eq, cache);
}

CountValue multiplicity(const CountParams& params, MemoCache* cache)
{
    return params.p == 2 ? n_classical_p2(params, cache) : n_classical(params, cache);
}

CountValue n_quantum(std::int64_t p, std::int64_t r, std::int64_t n, MemoCache* cache)
{
    const CountParams params{p, r, 0, n};
    require_odd(params, "n_quantum");
    if (n % 2 != 0) return 0;

    MemoCache local;
    MemoCache& memo = cache ? *cache : local;
    const auto rr = static_cast<std::size_t>(r);
    CountValue total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rr); ++mask) {
        auto bit = [&](std::size_t j) -> std::int64_t { return (mask >> (j - 1)) & 1U; };
        DigitEquation eq;
        eq.p = p;
        eq.constant = bit(1);
        eq.unit_variable = true;
        eq.offsets.resize(rr);
        for (std::size_t i = 1; i <= rr; ++i) eq.offsets[i - 1] = i < rr ? bit(i + 1) : 0;
        eq.target_multiplier = n / 2;
        total += memo.count(eq);
    }
    return total;
}

DegreeSeries degree_distribution(const CountParams& params)
{
    params.validate();
    DegreeSeries out;
    if (params.p == 2) {
        DigitEquation eq{2, std::vector<std::int64_t>(static_cast<std::size_t>(params.r), 0),
                         params.m, params.n, false};
        out = graded_digit_equation(eq, 1);
    } else {
        for (const auto& branch : classical_branches(params)) {
            auto series = graded_digit_equation(branch.eq, 2);
            if (series.empty()) continue;
            series.insert(series.begin(), static_cast<std::size_t>(branch.b_weight), CountValue(0));
            policy::Graded::accumulate(out, series);
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

CountValue graded_count(const CountParams& params, std::int64_t degree)
{
    if (degree < 0) throw InvalidInput("degree must be >= 0");
    const auto dist = degree_distribution(params);
    const auto d = static_cast<std::size_t>(degree);
    return d < dist.size() ? dist[d] : CountValue(0);
}

} // namespace frobkern
