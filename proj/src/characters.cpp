#include "frobkern/characters.hpp"

#include <stdexcept>

#include "frobkern/counting.hpp"

namespace frobkern {

void CharacterPoly::add_term(std::int64_t weight, const CountValue& count)
{
    if (count < 0) throw InvalidInput("character coefficients must be >= 0");
    if (count == 0) return;
    coeffs_[weight] += count;
}

CountValue CharacterPoly::coefficient(std::int64_t weight) const
{
    auto it = coeffs_.find(weight);
    return it == coeffs_.end() ? CountValue(0) : it->second;
}

CountValue CharacterPoly::mass() const
{
    CountValue total = 0;
    for (const auto& [w, c] : coeffs_) total += c;
    return total;
}

bool CharacterPoly::symmetric() const
{
    for (const auto& [w, c] : coeffs_) {
        if (coefficient(-w) != c) return false;
    }
    return true;
}

void CharacterPoly::require_same_truncation(const CharacterPoly& other) const
{
    if (trunc_ != other.trunc_) {
        throw InvalidInput("cannot combine characters truncated at different bounds");
    }
}

CharacterPoly& CharacterPoly::operator+=(const CharacterPoly& other)
{
    require_same_truncation(other);
    for (const auto& [w, c] : other.coeffs_) coeffs_[w] += c;
    return *this;
}

CharacterPoly& CharacterPoly::operator-=(const CharacterPoly& other)
{
    require_same_truncation(other);
    for (const auto& [w, c] : other.coeffs_) {
        if (coefficient(w) < c) throw InvalidInput("character difference has a negative coefficient");
    }
    for (const auto& [w, c] : other.coeffs_) {
        auto it = coeffs_.find(w);
        it->second -= c;
        if (it->second == 0) coeffs_.erase(it);
    }
    return *this;
}

CharacterPoly CharacterPoly::scaled(const CountValue& factor) const
{
    if (factor < 0) throw InvalidInput("character scale factor must be >= 0");
    CharacterPoly out(trunc_);
    if (factor == 0) return out;
    for (const auto& [w, c] : coeffs_) out.coeffs_.emplace(w, c * factor);
    return out;
}

nlohmann::ordered_json CharacterPoly::to_json() const
{
    nlohmann::ordered_json j;
    j["unit"] = "omega";
    j["trunc"] = trunc_ ? nlohmann::ordered_json(*trunc_) : nlohmann::ordered_json(nullptr);
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
    for (const auto& [w, c] : coeffs_) coeffs[std::to_string(w)] = c.str();
    j["coeffs"] = std::move(coeffs);
    return j;
}

CharacterPoly CharacterPoly::from_json(const nlohmann::ordered_json& j)
{
    if (!j.is_object() || j.value("unit", "") != "omega") {
        throw InvalidInput("character JSON must be an object with unit \"omega\"");
    }
    CharacterPoly out;
    const auto& t = j.at("trunc");
    if (!t.is_null()) out.trunc_ = t.get<std::int64_t>();
    for (const auto& [key, value] : j.at("coeffs").items()) {
        std::size_t used = 0;
        const std::int64_t w = std::stoll(key, &used);
        if (used != key.size()) throw InvalidInput("bad weight key '" + key + "'");
        const auto c = parse_decimal(value.get<std::string>());
        if (c == 0) throw InvalidInput("zero coefficients are not stored");
        out.coeffs_[w] = c;
    }
    return out;
}

CharacterPoly CharacterPoly::parse(const std::string& text)
{
    return from_json(nlohmann::ordered_json::parse(text));
}

const CharacterPoly& GradedCharacter::at(std::int64_t degree) const
{
    static const CharacterPoly kZero;
    if (degree < 0 || degree > max_degree_) {
        throw std::out_of_range("degree " + std::to_string(degree) + " beyond truncation bound " +
                                std::to_string(max_degree_));
    }
    auto it = by_degree_.find(degree);
    return it == by_degree_.end() ? kZero : it->second;
}

CharacterPoly& GradedCharacter::at(std::int64_t degree)
{
    if (degree < 0 || degree > max_degree_) {
        throw std::out_of_range("degree " + std::to_string(degree) + " beyond truncation bound " +
                                std::to_string(max_degree_));
    }
    return by_degree_[degree];
}

CharacterPoly GradedCharacter::total() const
{
    CharacterPoly out;
    for (const auto& [d, ch] : by_degree_) out += ch;
    return out;
}

nlohmann::ordered_json GradedCharacter::to_json() const
{
    nlohmann::ordered_json j;
    j["unit"] = "omega";
    j["dmax"] = max_degree_;
    nlohmann::ordered_json degrees = nlohmann::ordered_json::object();
    for (const auto& [d, ch] : by_degree_) {
        if (!ch.empty()) degrees[std::to_string(d)] = ch.to_json();
    }
    j["degrees"] = std::move(degrees);
    return j;
}

GradedCharacter GradedCharacter::from_json(const nlohmann::ordered_json& j)
{
    if (!j.is_object() || j.value("unit", "") != "omega") {
        throw InvalidInput("graded character JSON must be an object with unit \"omega\"");
    }
    GradedCharacter out(j.at("dmax").get<std::int64_t>());
    for (const auto& [key, value] : j.at("degrees").items()) {
        out.at(std::stoll(key)) = CharacterPoly::from_json(value);
    }
    return out;
}

bool operator==(const GradedCharacter& a, const GradedCharacter& b)
{
    if (a.max_degree_ != b.max_degree_) return false;
    for (std::int64_t d = 0; d <= a.max_degree_; ++d) {
        const auto& x = a.at(d);
        const auto& y = b.at(d);
        if (x.empty() && y.empty()) continue;
        if (!(x == y)) return false;
    }
    return true;
}

CharacterPoly weyl_char_sl2(std::int64_t n)
{
    if (n < 0) throw InvalidInput("weyl_char_sl2: n must be >= 0");
    CharacterPoly out;
    for (std::int64_t w = -n; w <= n; w += 2) out.add_term(w, 1);
    return out;
}

CharacterPoly char_Br(std::int64_t p, std::int64_t r, std::int64_t m, std::int64_t n_max,
                      MemoCache* cache)
{
    if (n_max < 0) throw InvalidInput("n_max must be >= 0");
    CountParams{p, r, m, 0}.validate();
    MemoCache local;
    MemoCache& memo = cache ? *cache : local;
    CharacterPoly out(n_max);
    for (std::int64_t n = 0; n <= n_max; ++n) out.add_term(n, multiplicity({p, r, m, n}, &memo));
    return out;
}

CharacterPoly char_Gr(std::int64_t p, std::int64_t r, std::int64_t m, std::int64_t n_max,
                      MemoCache* cache)
{
    if (n_max < 0) throw InvalidInput("n_max must be >= 0");
    CountParams{p, r, m, 0}.validate();
    MemoCache local;
    MemoCache& memo = cache ? *cache : local;
    CharacterPoly out;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const auto mult = multiplicity({p, r, m, n}, &memo);
        if (mult != 0) out += weyl_char_sl2(n).scaled(mult);
    }
    out.set_truncation(n_max);
    return out;
}

GradedCharacter graded_char_Br(std::int64_t p, std::int64_t r, std::int64_t m, std::int64_t d_max)
{
    if (d_max < 0) throw InvalidInput("d_max must be >= 0");
    CountParams{p, r, m, 0}.validate();
    // n p^r <= m + p^r * degree, and n p^r >= m.
    const std::int64_t pr = checked_pow(p, r);
    const std::int64_t n_lo = (m + pr - 1) / pr;
    const std::int64_t n_hi = checked_add(m / pr, d_max);
    GradedCharacter out(d_max);
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        const auto dist = degree_distribution({p, r, m, n});
        const auto top = std::min<std::size_t>(dist.size(), static_cast<std::size_t>(d_max) + 1);
        for (std::size_t d = 0; d < top; ++d) out.at(static_cast<std::int64_t>(d)).add_term(n, dist[d]);
    }
    return out;
}

std::vector<CountValue> poincare_Ur(std::int64_t p, std::int64_t r, std::int64_t d_max)
{
    CountParams{p, r, 0, 0}.validate();
    if (d_max < 0) throw InvalidInput("d_max must be >= 0");
    const auto len = static_cast<std::size_t>(d_max) + 1;
    std::vector<CountValue> series(len, 0);
    series[0] = 1;
    // Per index: a polynomial generator (degree 2, or 1 when p = 2), and for
    // p odd an exterior generator of degree 1.
    const std::size_t poly_degree = p == 2 ? 1 : 2;
    for (std::int64_t i = 0; i < r; ++i) {
        for (std::size_t d = poly_degree; d < len; ++d) series[d] += series[d - poly_degree];
        if (p != 2) {
            for (std::size_t d = len - 1; d >= 1; --d) series[d] += series[d - 1];
        }
    }
    return series;
}

CharacterPoly char_quantum_Br(std::int64_t p, std::int64_t r, std::int64_t n_max, MemoCache* cache)
{
    if (n_max < 0) throw InvalidInput("n_max must be >= 0");
    MemoCache local;
    MemoCache& memo = cache ? *cache : local;
    CharacterPoly out(checked_mul(2, n_max));
    for (std::int64_t n = 0; n <= n_max; ++n) out.add_term(2 * n, n_quantum(p, r, n, &memo));
    return out;
}

CharacterPoly char_quantum_Gr(std::int64_t p, std::int64_t r, std::int64_t n_max, MemoCache* cache)
{
    if (n_max < 0) throw InvalidInput("n_max must be >= 0");
    MemoCache local;
    MemoCache& memo = cache ? *cache : local;
    CharacterPoly out;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const auto mult = n_quantum(p, r, n, &memo);
        if (mult != 0) out += weyl_char_sl2(2 * n).scaled(mult);
    }
    out.set_truncation(checked_mul(2, n_max));
    return out;
}

} // namespace frobkern
