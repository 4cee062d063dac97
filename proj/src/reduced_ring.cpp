#include "frobkern/reduced_ring.hpp"

#include <algorithm>
#include <numeric>

namespace frobkern {

namespace {

void validate(std::int64_t p, std::int64_t r)
{
    CountParams{p, r, 0, 0}.validate();
}

} // namespace

nlohmann::json ReducedBasis::to_json() const
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : elements) out.push_back(e);
    return out;
}

std::vector<Exponents> ReducedBasis::elements_from_json(const nlohmann::json& j)
{
    if (!j.is_array()) throw InvalidInput("basis JSON must be an array");
    std::vector<Exponents> out;
    for (const auto& e : j) out.push_back(e.get<Exponents>());
    return out;
}

bool in_reduced_ring(std::int64_t p, const Exponents& a)
{
    if (a.empty()) return true;
    const auto r = static_cast<std::int64_t>(a.size());
    const std::int64_t modulus = checked_pow(p, r - 1);
    std::int64_t residue = 0;
    std::int64_t place = 1;
    for (auto e : a) {
        residue = (residue + (e % modulus) * place) % modulus;
        place = (place * p) % std::max<std::int64_t>(modulus, 1);
    }
    return residue == 0;
}

ReducedBasis basis(std::int64_t p, std::int64_t r)
{
    validate(p, r);
    ReducedBasis out{p, r, {}, generator_degree(p)};
    const auto len = static_cast<std::size_t>(r - 1);
    if (len == 0) {
        out.elements.push_back({});
        return out;
    }
    const std::int64_t modulus = checked_pow(p, r - 1);
    Exponents limits(len);
    for (std::size_t i = 0; i < len; ++i) limits[i] = checked_pow(p, r - 1 - static_cast<std::int64_t>(i));

    // Odometer over the box, last coordinate fastest, so output is lexicographic.
    Exponents a(len, 0);
    while (true) {
        std::int64_t residue = 0;
        std::int64_t place = 1;
        for (std::size_t i = 0; i < len; ++i) {
            residue = (residue + a[i] * place) % modulus;
            place *= p;
        }
        if (residue == 0) out.elements.push_back(a);
        std::size_t i = len;
        while (i > 0) {
            --i;
            if (++a[i] < limits[i]) break;
            a[i] = 0;
            if (i == 0) return out;
        }
    }
}

std::vector<CountValue> hilbert_coeffs(std::int64_t p, std::int64_t r, std::int64_t d_max)
{
    validate(p, r);
    if (d_max < 0) throw InvalidInput("d_max must be >= 0");
    const std::int64_t g = generator_degree(p);
    const auto total_max = static_cast<std::size_t>(d_max / g);
    const std::int64_t modulus = checked_pow(p, r - 1);
    const auto mod = static_cast<std::size_t>(modulus);

    // ways[s][res]: exponent sequences so far with sum s and residue res.
    std::vector<std::vector<CountValue>> ways(total_max + 1, std::vector<CountValue>(mod, 0));
    ways[0][0] = 1;
    std::int64_t place = 1;
    for (std::int64_t i = 0; i < r; ++i) {
        const std::int64_t step = place % modulus;
        // Unbounded exponent of x_{i+1}: ways[s][res] += ways[s-1][res - step].
        for (std::size_t s = 1; s <= total_max; ++s) {
            for (std::size_t res = 0; res < mod; ++res) {
                const auto prev = static_cast<std::size_t>(
                    (static_cast<std::int64_t>(res) - step % modulus + modulus) % modulus);
                ways[s][res] += ways[s - 1][prev];
            }
        }
        place = checked_mul(place, p);
    }

    std::vector<CountValue> out(static_cast<std::size_t>(d_max) + 1, 0);
    for (std::size_t s = 0; s <= total_max; ++s) out[s * static_cast<std::size_t>(g)] = ways[s][0];
    return out;
}

std::vector<CountValue> series_divide(const std::vector<CountValue>& num,
                                      const std::vector<CountValue>& den, std::size_t terms)
{
    if (den.empty() || den[0] != 1) throw InvalidInput("series_divide: denominator must start with 1");
    std::vector<CountValue> q(terms, 0);
    for (std::size_t d = 0; d < terms; ++d) {
        CountValue acc = d < num.size() ? num[d] : CountValue(0);
        for (std::size_t k = 1; k < den.size() && k <= d; ++k) acc -= den[k] * q[d - k];
        q[d] = acc;
    }
    return q;
}

std::vector<CountValue> hilbert_from_basis(const ReducedBasis& basis, std::int64_t d_max)
{
    if (d_max < 0) throw InvalidInput("d_max must be >= 0");
    const std::int64_t g = basis.generator_degree;
    const auto terms = static_cast<std::size_t>(d_max) + 1;

    std::vector<CountValue> num(terms, 0);
    for (const auto& b : basis.elements) {
        const std::int64_t deg = g * std::accumulate(b.begin(), b.end(), std::int64_t{0});
        if (deg <= d_max) num[static_cast<std::size_t>(deg)] += 1;
    }

    std::vector<CountValue> den{1};
    for (std::int64_t i = 1; i <= basis.r; ++i) {
        const std::int64_t deg = g * checked_pow(basis.p, basis.r - i);
        if (deg > d_max) continue; // 1 - t^deg is 1 below the cut
        std::vector<CountValue> next(den.size() + static_cast<std::size_t>(deg), 0);
        for (std::size_t k = 0; k < den.size(); ++k) {
            next[k] += den[k];
            next[k + static_cast<std::size_t>(deg)] -= den[k];
        }
        den = std::move(next);
    }
    return series_divide(num, den, terms);
}

} // namespace frobkern
