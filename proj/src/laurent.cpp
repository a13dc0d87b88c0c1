#include "lmap/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lmap/errors.hpp"

namespace lmap {

namespace {

// Appends one signed term to a rendering in progress.
void render_term(std::ostringstream& out, bool first, const Integer& c, long e, char var) {
    const bool negative = sgn(c) < 0;
    Integer mag = abs(c);
    if (first) {
        if (negative) out << '-';
    } else {
        out << (negative ? " - " : " + ");
    }
    if (e == 0) {
        out << mag.get_str();
        return;
    }
    if (mag != 1) out << mag.get_str();
    out << var;
    if (e != 1) out << '^' << e;
}

}  // namespace

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const Exponent, Integer>> terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly::LaurentPoly(Terms terms) : terms_(std::move(terms)) { normalize(); }

LaurentPoly LaurentPoly::constant(const Integer& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const Integer& c, Exponent e) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(e, c);
    return p;
}

LaurentPoly LaurentPoly::one_minus_x() { return {{0, 1}, {1, -1}}; }

LaurentPoly LaurentPoly::z() { return {{-1, -1}, {0, 2}, {1, -1}}; }

Integer LaurentPoly::coeff(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

Exponent LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw std::logic_error("min_exponent of the zero polynomial");
    return terms_.begin()->first;
}

Exponent LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw std::logic_error("max_exponent of the zero polynomial");
    return terms_.rbegin()->first;
}

bool LaurentPoly::is_unit() const {
    return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

bool LaurentPoly::is_symmetric() const { return *this == involute(*this); }

LaurentPoly LaurentPoly::shifted(Exponent by) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + by, c);
    return out;
}

void LaurentPoly::add_term(Exponent e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const Exponent lo = a.min_exponent() + b.min_exponent();
    const auto width = static_cast<std::size_t>(a.max_exponent() + b.max_exponent() - lo + 1);
    // Dense accumulation is cheaper than map insertion for the short spans
    // that occur here; fall back to sparse for very wide supports.
    if (width <= 4 * (a.term_count() * b.term_count()) + 64) {
        std::vector<Integer> acc(width);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                mpz_addmul(acc[static_cast<std::size_t>(ea + eb - lo)].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        LaurentPoly out;
        for (std::size_t i = 0; i < width; ++i)
            if (acc[i] != 0) out.terms_.emplace_hint(out.terms_.end(), lo + static_cast<Exponent>(i), std::move(acc[i]));
        return out;
    }
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

void LaurentPoly::normalize() {
    std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        render_term(out, first, c, e, 'x');
        first = false;
    }
    return out.str();
}

LaurentPoly involute(const LaurentPoly& a) {
    LaurentPoly::Terms t;
    for (const auto& [e, c] : a.terms()) t.emplace(-e, c);
    return LaurentPoly(std::move(t));
}

Integer augment(const LaurentPoly& a) {
    Integer s = 0;
    for (const auto& [e, c] : a.terms()) s += c;
    return s;
}

std::optional<LaurentPoly> try_div_one_minus_x(const LaurentPoly& a) {
    if (a.is_zero()) return LaurentPoly{};
    // Write a = x^lo·A(x). Then A = (1-x)·Q with Q_j the prefix sums of A's
    // coefficients, and divisibility is exactly A(1) = 0.
    LaurentPoly::Terms q;
    Integer prefix = 0;
    auto it = a.terms().begin();
    const Exponent lo = it->first, hi = a.max_exponent();
    for (Exponent e = lo; e < hi; ++e) {
        if (it != a.terms().end() && it->first == e) {
            prefix += it->second;
            ++it;
        }
        if (prefix != 0) q.emplace_hint(q.end(), e, prefix);
    }
    prefix += a.terms().rbegin()->second;
    if (prefix != 0) return std::nullopt;
    return LaurentPoly(std::move(q));
}

LaurentPoly exact_div_one_minus_x(const LaurentPoly& a) {
    auto q = try_div_one_minus_x(a);
    if (!q) throw NotDivisible("not divisible by (1 - x): augmentation of " + a.to_string() + " is nonzero");
    return *std::move(q);
}

std::optional<LaurentPoly> try_div_z(const LaurentPoly& a) {
    // z = -x^-1 (1-x)^2.
    auto q = try_div_one_minus_x(a);
    if (!q) return std::nullopt;
    q = try_div_one_minus_x(*q);
    if (!q) return std::nullopt;
    return -q->shifted(1);
}

std::optional<LaurentPoly> try_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw NotDivisible("division by the zero polynomial");
    if (a.is_zero()) return LaurentPoly{};
    const Exponent shift = a.min_exponent() - b.min_exponent();
    // Both normalised to polynomials with nonzero constant term; any Laurent
    // quotient is then an honest polynomial, found by long division from the top.
    LaurentPoly rem = a.shifted(-a.min_exponent());
    const LaurentPoly den = b.shifted(-b.min_exponent());
    const Exponent den_deg = den.max_exponent();
    const Integer& den_lead = den.terms().rbegin()->second;
    LaurentPoly quot;
    while (!rem.is_zero()) {
        const Exponent deg = rem.max_exponent();
        if (deg < den_deg) return std::nullopt;
        const Integer& lead = rem.terms().rbegin()->second;
        if (!mpz_divisible_p(lead.get_mpz_t(), den_lead.get_mpz_t())) return std::nullopt;
        Integer t = lead / den_lead;
        const Exponent te = deg - den_deg;
        quot.add_term(te, t);
        for (const auto& [e, c] : den.terms()) rem.add_term(e + te, -t * c);
    }
    return quot.shifted(shift);
}

std::optional<std::size_t> i_adic_order(const LaurentPoly& a, std::size_t cap) {
    if (a.is_zero()) return std::nullopt;
    std::size_t k = 0;
    LaurentPoly cur = a;
    while (k < cap) {
        auto q = try_div_one_minus_x(cur);
        if (!q) break;
        cur = *std::move(q);
        ++k;
    }
    return k;
}

std::vector<Integer> i_adic_expand(const LaurentPoly& a, std::size_t depth) {
    if (depth == 0) throw std::invalid_argument("i_adic_expand: depth must be positive");
    std::vector<Integer> out;
    out.reserve(depth);
    LaurentPoly cur = a;
    for (std::size_t j = 0; j < depth; ++j) {
        Integer c = augment(cur);
        out.push_back(c);
        if (j + 1 == depth) break;
        cur -= LaurentPoly::constant(c);
        cur = exact_div_one_minus_x(cur);
    }
    return out;
}

LaurentPoly geometric_sum(long k) {
    if (k < 0) throw std::invalid_argument("geometric_sum: k must be nonnegative");
    LaurentPoly::Terms t;
    for (long e = 0; e < k; ++e) t.emplace_hint(t.end(), e, 1);
    return LaurentPoly(std::move(t));
}

ZPoly::ZPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::z_power(std::size_t k, const Integer& c) {
    std::vector<Integer> v(k + 1);
    v[k] = c;
    return ZPoly(std::move(v));
}

Integer ZPoly::coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Integer(0); }

void ZPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

LaurentPoly ZPoly::embed() const {
    // Horner in z.
    LaurentPoly out;
    const LaurentPoly z = LaurentPoly::z();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        out *= z;
        out.add_term(0, *it);
    }
    return out;
}

ZPoly& ZPoly::operator+=(const ZPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    return ZPoly(std::move(v));
}

ZPoly operator*(const Integer& c, const ZPoly& a) {
    std::vector<Integer> v = a.coeffs_;
    for (auto& x : v) x *= c;
    return ZPoly(std::move(v));
}

ZPoly ZPoly::operator-() const { return Integer(-1) * *this; }

std::string ZPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        render_term(out, first, coeffs_[j], static_cast<long>(j), 'z');
        first = false;
    }
    return out.str();
}

LaurentPoly z_power_laurent(std::size_t n) {
    LaurentPoly out = LaurentPoly::one();
    const LaurentPoly z = LaurentPoly::z();
    for (std::size_t i = 0; i < n; ++i) out *= z;
    return out;
}

std::optional<ZPoly> try_z_decompose(const LaurentPoly& a, std::size_t k) {
    if (!a.is_symmetric()) return std::nullopt;
    LaurentPoly cur = a;
    for (std::size_t i = 0; i < k; ++i) {
        // (1 - x^-1)·q = cur  ⟺  (1 - x)·q = -x·cur.
        auto q = try_div_one_minus_x(cur);
        if (!q) return std::nullopt;
        q = try_div_one_minus_x(-q->shifted(1));
        if (!q) return std::nullopt;
        cur = *std::move(q);
    }
    if (cur.is_zero()) return ZPoly{};
    // cur is symmetric; peel off the top degree with multiples of z^n, whose
    // extreme coefficients are (-1)^n.
    const auto top = static_cast<std::size_t>(cur.max_exponent());
    std::vector<LaurentPoly> powers;
    powers.reserve(top + 1);
    powers.push_back(LaurentPoly::one());
    for (std::size_t n = 1; n <= top; ++n) powers.push_back(powers.back() * LaurentPoly::z());
    std::vector<Integer> p(top + 1);
    while (!cur.is_zero()) {
        const Exponent n = cur.max_exponent();
        Integer c = cur.terms().rbegin()->second;
        if (n % 2 == 1) c = -c;
        p[static_cast<std::size_t>(n)] = c;
        cur -= c * powers[static_cast<std::size_t>(n)];
    }
    return ZPoly(std::move(p));
}

ZPoly z_decompose(const LaurentPoly& a, std::size_t k) {
    auto p = try_z_decompose(a, k);
    if (!p) {
        if (!a.is_symmetric())
            throw NotInCone(a.to_string() + " is not invariant under x -> x^-1");
        throw NotInCone(a.to_string() + " is not in I^" + std::to_string(2 * k));
    }
    return *std::move(p);
}

ZPoly kirk_generator(long k) {
    LaurentPoly c = LaurentPoly::constant(2);
    c.add_term(k, -1);
    c.add_term(-k, -1);
    return z_decompose(c, 0);
}

}  // namespace lmap
