#pragma once

// Exact arithmetic in the group ring Λ = Z[x, x^-1] of the infinite cyclic
// group, together with the tools the rest of the library leans on:
//
//   * the involution ι(x) = x^-1 and the augmentation ε (sum of coefficients),
//   * the augmentation ideal I = ker ε = (1-x)Λ and its powers,
//   * the symmetric element z = (1-x)(1-x^-1) = 2 - x - x^-1, and
//   * the symmetric subring Z[z] (class ZPoly) with the rewrite of a
//     symmetric element of I^{2k} as z^k·p(z).
//
// Coefficients are GMP integers. Every value is kept in canonical form (no
// stored zero coefficient), so structural equality is ring equality.

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace lmap {

using Integer = mpz_class;
using Exponent = long;

class ZPoly;

class LaurentPoly {
public:
    using Terms = std::map<Exponent, Integer>;

    LaurentPoly() = default;
    LaurentPoly(std::initializer_list<std::pair<const Exponent, Integer>> terms);
    explicit LaurentPoly(Terms terms);

    static LaurentPoly constant(const Integer& c);
    static LaurentPoly monomial(const Integer& c, Exponent e);
    static LaurentPoly x(Exponent e = 1) { return monomial(1, e); }
    static LaurentPoly one() { return constant(1); }
    static LaurentPoly one_minus_x();
    static LaurentPoly z();

    const Terms& terms() const noexcept { return terms_; }
    Integer coeff(Exponent e) const;
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    // Require a nonzero polynomial.
    Exponent min_exponent() const;
    Exponent max_exponent() const;

    // True iff the polynomial is ±x^k, i.e. a unit of Λ.
    bool is_unit() const;
    bool is_symmetric() const;

    LaurentPoly shifted(Exponent by) const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const Integer& c);

    // Adds c·x^e in place.
    void add_term(Exponent e, const Integer& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
    friend LaurentPoly operator*(const Integer& c, LaurentPoly a) { return a *= c; }
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Terms ascending in exponent, e.g. "-x^-1 + 2 - x".
    std::string to_string() const;

private:
    void normalize();

    Terms terms_;
};

// ι: x ↦ x^-1.
LaurentPoly involute(const LaurentPoly& a);

// ε: Λ → Z, sum of coefficients.
Integer augment(const LaurentPoly& a);

// q with (1-x)·q = a, or nullopt when ε(a) ≠ 0.
std::optional<LaurentPoly> try_div_one_minus_x(const LaurentPoly& a);
// Throwing variant; NotDivisible when ε(a) ≠ 0.
LaurentPoly exact_div_one_minus_x(const LaurentPoly& a);

// q with z·q = a, or nullopt.
std::optional<LaurentPoly> try_div_z(const LaurentPoly& a);

// General exact quotient a / b in Λ, or nullopt when b does not divide a.
// Throws NotDivisible for b = 0.
std::optional<LaurentPoly> try_exact_div(const LaurentPoly& a, const LaurentPoly& b);

constexpr std::size_t kDefaultOrderCap = 64;

// Largest k with a ∈ I^k. nullopt stands for "infinite" and is returned only
// for a = 0. Orders are capped at `cap`.
std::optional<std::size_t> i_adic_order(const LaurentPoly& a, std::size_t cap = kDefaultOrderCap);

// c_0..c_{depth-1} with a ≡ Σ c_j (1-x)^j mod I^depth.
std::vector<Integer> i_adic_expand(const LaurentPoly& a, std::size_t depth);

// P_k = 1 + x + ... + x^{k-1} for k ≥ 0 (P_0 = 0).
LaurentPoly geometric_sum(long k);

// Element of the symmetric subring Z[z] ⊂ Λ, stored by its z-coefficients.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<Integer> coeffs);
    ZPoly(std::initializer_list<Integer> coeffs) : ZPoly(std::vector<Integer>(coeffs)) {}

    static ZPoly z_power(std::size_t k, const Integer& c = 1);

    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    Integer coeff(std::size_t j) const;
    bool is_zero() const noexcept { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    LaurentPoly embed() const;

    ZPoly& operator+=(const ZPoly& rhs);
    ZPoly& operator-=(const ZPoly& rhs);
    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const Integer& c, const ZPoly& a);
    ZPoly operator-() const;

    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

    // e.g. "4z - z^2".
    std::string to_string() const;

private:
    void trim();

    std::vector<Integer> coeffs_;
};

// z^n as a Laurent polynomial.
LaurentPoly z_power_laurent(std::size_t n);

// The p ∈ Z[z] with a = z^k·p(z). Exists iff a = ι(a) and a ∈ I^{2k}.
std::optional<ZPoly> try_z_decompose(const LaurentPoly& a, std::size_t k);
// Throwing variant; NotInCone when the decomposition does not exist.
ZPoly z_decompose(const LaurentPoly& a, std::size_t k);

// 2 - x^k - x^-k as an element of Z[z] (= z·P_k·ι(P_k) for k ≥ 0). Its
// z-degree is |k| and its leading z-coefficient is (-1)^{|k|+1}.
ZPoly kirk_generator(long k);

}  // namespace lmap
