#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "frobkern/digit_counter.hpp"
#include "frobkern/params.hpp"

namespace frobkern {

/// Finitely supported sum of c_w e(w omega), c_w > 0. Weights are integers in
/// units of omega (alpha = 2 omega). A truncated series records the largest
/// index it summed; exact characters have no bound.
class CharacterPoly {
public:
    CharacterPoly() = default;
    explicit CharacterPoly(std::optional<std::int64_t> truncation) : trunc_(truncation) {}

    void add_term(std::int64_t weight, const CountValue& count);
    CountValue coefficient(std::int64_t weight) const;

    const std::map<std::int64_t, CountValue>& terms() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }
    /// Sum of all coefficients (dimension of the module).
    CountValue mass() const;
    bool symmetric() const;

    std::optional<std::int64_t> truncation() const { return trunc_; }
    void set_truncation(std::optional<std::int64_t> t) { trunc_ = t; }

    /// Both operands must carry the same truncation bound.
    CharacterPoly& operator+=(const CharacterPoly& other);
    /// Throws if any coefficient would turn negative.
    CharacterPoly& operator-=(const CharacterPoly& other);
    CharacterPoly scaled(const CountValue& factor) const;

    friend CharacterPoly operator+(CharacterPoly a, const CharacterPoly& b) { return a += b; }
    friend CharacterPoly operator-(CharacterPoly a, const CharacterPoly& b) { return a -= b; }
    friend bool operator==(const CharacterPoly&, const CharacterPoly&) = default;

    /// {"unit":"omega","trunc":N|null,"coeffs":{"<w>":"<count>",...}}, weights ascending.
    nlohmann::ordered_json to_json() const;
    std::string dump() const { return to_json().dump(); }
    static CharacterPoly from_json(const nlohmann::ordered_json& j);
    static CharacterPoly parse(const std::string& text);

private:
    void require_same_truncation(const CharacterPoly& other) const;

    std::map<std::int64_t, CountValue> coeffs_;
    std::optional<std::int64_t> trunc_;
};

/// Degree -> character, complete in every degree up to `max_degree`.
class GradedCharacter {
public:
    explicit GradedCharacter(std::int64_t max_degree) : max_degree_(max_degree) {}

    std::int64_t max_degree() const { return max_degree_; }
    /// Throws std::out_of_range beyond max_degree.
    const CharacterPoly& at(std::int64_t degree) const;
    CharacterPoly& at(std::int64_t degree);
    /// Sum over all stored degrees; carries no truncation bound of its own.
    CharacterPoly total() const;

    nlohmann::ordered_json to_json() const;
    static GradedCharacter from_json(const nlohmann::ordered_json& j);

    /// Degrees holding an empty polynomial compare equal to absent ones.
    friend bool operator==(const GradedCharacter& a, const GradedCharacter& b);

private:
    std::int64_t max_degree_;
    std::map<std::int64_t, CharacterPoly> by_degree_;
};

/// ch H^0(n omega) = e(n) + e(n-2) + ... + e(-n).
CharacterPoly weyl_char_sl2(std::int64_t n);

/// sum_{n <= n_max} N_r(p,m,n) e(n omega). Weights are untwisted.
CharacterPoly char_Br(std::int64_t p, std::int64_t r, std::int64_t m, std::int64_t n_max,
                      MemoCache* cache = nullptr);

/// sum_{n <= n_max} N_r(p,m,n) ch H^0(n omega). A truncated series: terms with
/// n > n_max would add to every weight of the same parity up to n, so no
/// coefficient is final.
CharacterPoly char_Gr(std::int64_t p, std::int64_t r, std::int64_t m, std::int64_t n_max,
                      MemoCache* cache = nullptr);

/// Degree d -> sum_n graded_count((p,r,m,n), d) e(n omega), for d <= d_max.
GradedCharacter graded_char_Br(std::int64_t p, std::int64_t r, std::int64_t m, std::int64_t d_max);

/// dim H^d(U_r, k) for d = 0..d_max.
std::vector<CountValue> poincare_Ur(std::int64_t p, std::int64_t r, std::int64_t d_max);

/// sum_{n <= n_max} N'_r(p,n) e(n alpha); stored in omega units, so the
/// truncation bound is 2 n_max.
CharacterPoly char_quantum_Br(std::int64_t p, std::int64_t r, std::int64_t n_max,
                              MemoCache* cache = nullptr);
CharacterPoly char_quantum_Gr(std::int64_t p, std::int64_t r, std::int64_t n_max,
                              MemoCache* cache = nullptr);

} // namespace frobkern
