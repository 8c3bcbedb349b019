#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace weave {

// Integer Laurent polynomial in m variables. Terms are kept sorted by
// exponent vector (lexicographic, ascending) with nonzero coefficients, so
// structural equality is mathematical equality.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(int nvars) : m_(nvars) {}

    static LaurentPoly constant(int nvars, std::int64_t c);
    static LaurentPoly variable(int nvars, int i);
    static LaurentPoly monomial(int nvars, const std::vector<int>& exps, std::int64_t c = 1);

    int nvars() const { return m_; }
    std::size_t size() const { return coefs_.size(); }
    bool is_zero() const { return coefs_.empty(); }
    const std::int32_t* exps(std::size_t t) const { return exps_.data() + t * m_; }
    std::int64_t coef(std::size_t t) const { return coefs_[t]; }

    // Adds a term without normalizing; call normalize() afterwards.
    void push_term(const std::int32_t* e, std::int64_t c);
    void normalize();

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly pow(unsigned e) const;
    bool operator==(const LaurentPoly& o) const {
        return m_ == o.m_ && coefs_ == o.coefs_ && exps_ == o.exps_;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Exact quotient, or nullopt when d does not divide *this.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;

    // Smallest exponent of variable i over all terms (0 for the zero poly).
    int min_exponent(int i) const;

    // Canonical compact form "c:e1,...,em;..."; used for ClusterKey.
    std::string serialize() const;
    static LaurentPoly deserialize(int nvars, const std::string& s);
    // Human readable, e.g. "x1^-1 + x1^-1*x2".
    std::string pretty() const;

    // Evaluation modulo 2^61-1; point entries must be nonzero.
    std::uint64_t eval_mod(const std::vector<std::uint64_t>& point) const;

private:
    int m_ = 0;
    std::vector<std::int32_t> exps_;
    std::vector<std::int64_t> coefs_;
};

// Arithmetic in Z / (2^61 - 1), used for fingerprints and certificates.
namespace modp {
constexpr std::uint64_t P = (std::uint64_t{1} << 61) - 1;
std::uint64_t add(std::uint64_t a, std::uint64_t b);
std::uint64_t mul(std::uint64_t a, std::uint64_t b);
std::uint64_t pow(std::uint64_t a, std::uint64_t e);
std::uint64_t inv(std::uint64_t a);
}  // namespace modp

}  // namespace weave
