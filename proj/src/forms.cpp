#include "lmap/forms.hpp"

#include <string>
#include <utility>

#include "lmap/errors.hpp"

namespace lmap {

namespace {

void require_dim(std::size_t got, std::size_t want, const char* what) {
    if (got != want)
        throw DimensionMismatch(std::string(what) + ": expected dimension " + std::to_string(want) + ", got " +
                                std::to_string(got));
}

LaurentVector involute_all(std::span<const LaurentPoly> v) {
    LaurentVector out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back(involute(p));
    return out;
}

}  // namespace

LaurentMatrix LaurentMatrix::from_rows(const std::vector<LaurentVector>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    LaurentMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        require_dim(rows[i].size(), c, "LaurentMatrix::from_rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

LaurentMatrix LaurentMatrix::identity(std::size_t n) {
    LaurentMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly::one();
    return m;
}

LaurentVector LaurentMatrix::column(std::size_t j) const {
    LaurentVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

LaurentVector LaurentMatrix::row(std::size_t i) const {
    return LaurentVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                         data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

LaurentMatrix LaurentMatrix::transpose() const {
    LaurentMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

LaurentMatrix LaurentMatrix::involute() const {
    LaurentMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = lmap::involute(data_[k]);
    return out;
}

LaurentMatrix LaurentMatrix::scaled(const LaurentPoly& c) const {
    LaurentMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = c * data_[k];
    return out;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    require_dim(b.rows_, a.cols_, "matrix product");
    LaurentMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const LaurentPoly& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
        }
    return out;
}

LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b) {
    require_dim(b.rows_, a.rows_, "matrix sum");
    require_dim(b.cols_, a.cols_, "matrix sum");
    LaurentMatrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
    return out;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
    require_dim(b.rows_, a.rows_, "matrix difference");
    require_dim(b.cols_, a.cols_, "matrix difference");
    LaurentMatrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
    return out;
}

LaurentVector LaurentMatrix::apply(std::span<const LaurentPoly> v) const {
    require_dim(v.size(), cols_, "matrix application");
    LaurentVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!v[j].is_zero() && !(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
}

LaurentPoly determinant(const LaurentMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return LaurentPoly::one();
    LaurentMatrix a = m;
    LaurentPoly prev = LaurentPoly::one();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a(p, k).is_zero()) ++p;
            if (p == n) return {};
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPoly num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                auto q = try_exact_div(num, prev);
                if (!q) throw InternalVerificationFailure("Bareiss step produced an inexact division");
                a(i, j) = *std::move(q);
            }
            a(i, k) = LaurentPoly{};
        }
        prev = a(k, k);
    }
    LaurentPoly d = a(n - 1, n - 1);
    return negate ? -d : d;
}

bool is_hermitian(const LaurentMatrix& m) {
    if (!m.is_square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (m(i, j) != involute(m(j, i))) return false;
    return true;
}

HermitianForm::HermitianForm(LaurentMatrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_square()) throw DimensionMismatch("Gram matrix must be square");
    if (!is_hermitian(gram_)) throw NotApplicable("Gram matrix is not hermitian");
}

IsometryMatrix::IsometryMatrix(LaurentMatrix mat) : mat_(std::move(mat)) {
    if (!mat_.is_square()) throw DimensionMismatch("isometry matrix must be square");
}

LaurentPoly evaluate(const HermitianForm& form, std::span<const LaurentPoly> u, std::span<const LaurentPoly> v) {
    require_dim(u.size(), form.dim(), "evaluate (first argument)");
    require_dim(v.size(), form.dim(), "evaluate (second argument)");
    const LaurentMatrix& g = form.gram();
    LaurentPoly out;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j].is_zero()) continue;
        LaurentPoly col;
        for (std::size_t i = 0; i < u.size(); ++i)
            if (!u[i].is_zero() && !g(i, j).is_zero()) col += u[i] * g(i, j);
        if (!col.is_zero()) out += col * involute(v[j]);
    }
    return out;
}

HermitianForm divide_form_by_z(const HermitianForm& form) {
    const std::size_t d = form.dim();
    LaurentMatrix out(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto q = try_div_z(form.gram()(i, j));
            if (!q)
                throw NotDivisible("Gram entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                   form.gram()(i, j).to_string() + " is not divisible by z");
            out(i, j) = *std::move(q);
        }
    return HermitianForm(std::move(out));
}

bool is_unimodular(const HermitianForm& form) { return determinant(form.gram()).is_unit(); }

bool verify_isometry(const HermitianForm& form, const IsometryMatrix& phi) {
    require_dim(phi.dim(), form.dim(), "verify_isometry");
    return phi.mat().transpose() * form.gram() * phi.mat().involute() == form.gram();
}

bool is_congruent_to_identity_mod_z(const IsometryMatrix& phi) {
    const std::size_t d = phi.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            LaurentPoly e = phi.mat()(i, j);
            if (i == j) e -= LaurentPoly::one();
            if (!try_div_z(e)) return false;
        }
    return true;
}

std::optional<LaurentPoly> split_symmetric(const LaurentPoly& s) {
    if (!s.is_symmetric()) return std::nullopt;
    if (auto q = try_div_z(s)) return LaurentPoly::one_minus_x() * *q;
    const Integer& s0 = s.coeff(0);
    if (!mpz_even_p(s0.get_mpz_t())) return std::nullopt;
    LaurentPoly c = LaurentPoly::constant(s0 / 2);
    for (const auto& [e, coeff] : s.terms())
        if (e > 0) c.add_term(e, coeff);
    return c;
}

IsometryMatrix transvection(const HermitianForm& form, std::span<const LaurentPoly> u,
                            std::span<const LaurentPoly> v) {
    require_dim(v.size(), form.dim(), "transvection");
    auto c = split_symmetric(evaluate(form, v, v));
    if (!c) throw NotApplicable("transvection: λ(v,v) admits no splitting c + ι(c)");
    return transvection(form, u, v, *c);
}

IsometryMatrix transvection(const HermitianForm& form, std::span<const LaurentPoly> u,
                            std::span<const LaurentPoly> v, const LaurentPoly& c) {
    const std::size_t d = form.dim();
    require_dim(u.size(), d, "transvection");
    require_dim(v.size(), d, "transvection");
    if (!evaluate(form, u, u).is_zero()) throw NotApplicable("transvection: u is not isotropic");
    if (!evaluate(form, u, v).is_zero()) throw NotApplicable("transvection: λ(u,v) ≠ 0");
    if (c + involute(c) != evaluate(form, v, v)) throw NotApplicable("transvection: c + ι(c) ≠ λ(v,v)");

    // λ(x, w) = Σ_j x_j·(G·ι(w))_j, so the map has matrix
    //   T = I + u·(Gῡ)ᵀ − v·(Gū)ᵀ − c·u·(Gū)ᵀ.
    const LaurentMatrix& g = form.gram();
    const LaurentVector gv = g.apply(involute_all(v));
    const LaurentVector gu = g.apply(involute_all(u));
    LaurentMatrix t = LaurentMatrix::identity(d);
    for (std::size_t i = 0; i < d; ++i) {
        const LaurentPoly cu = c * u[i];
        for (std::size_t j = 0; j < d; ++j) {
            if (!u[i].is_zero() && !gv[j].is_zero()) t(i, j) += u[i] * gv[j];
            if (!v[i].is_zero() && !gu[j].is_zero()) t(i, j) -= v[i] * gu[j];
            if (!cu.is_zero() && !gu[j].is_zero()) t(i, j) -= cu * gu[j];
        }
    }
    IsometryMatrix out(std::move(t));
    if (!verify_isometry(form, out)) throw NotApplicable("transvection: result failed isometry verification");
    return out;
}

}  // namespace lmap
