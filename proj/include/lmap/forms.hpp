#pragma once

// Matrices and hermitian forms over Λ.
//
// Sesquilinear convention, used everywhere in the library: a form with Gram
// matrix G pairs coordinate vectors as
//
//     λ(u, v) = Σ_ij u_i · G_ij · ι(v_j),
//
// linear in the first slot and conjugate-linear in the second, so that
// λ(α·S, α·S) = α·ι(α)·λ(S, S). A matrix Φ acts on column coordinate vectors,
// Φ(u) = Φ·u, and is an isometry iff Φᵀ·G·ι(Φ) = G.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lmap/laurent.hpp"

namespace lmap {

using LaurentVector = std::vector<LaurentPoly>;

class LaurentMatrix {
public:
    LaurentMatrix() = default;
    LaurentMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    // Throws DimensionMismatch on ragged input.
    static LaurentMatrix from_rows(const std::vector<LaurentVector>& rows);
    static LaurentMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    LaurentPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    LaurentVector column(std::size_t j) const;
    LaurentVector row(std::size_t i) const;

    LaurentMatrix transpose() const;
    LaurentMatrix involute() const;
    LaurentMatrix scaled(const LaurentPoly& c) const;

    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
    friend LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b);
    friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);
    friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) = default;

    LaurentVector apply(std::span<const LaurentPoly> v) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<LaurentPoly> data_;
};

// Determinant by fraction-free (Bareiss) elimination; every intermediate
// division is exact in Λ.
LaurentPoly determinant(const LaurentMatrix& m);

bool is_hermitian(const LaurentMatrix& m);

class HermitianForm {
public:
    HermitianForm() = default;
    // Throws DimensionMismatch if not square, NotApplicable if not hermitian.
    explicit HermitianForm(LaurentMatrix gram);

    const LaurentMatrix& gram() const noexcept { return gram_; }
    std::size_t dim() const noexcept { return gram_.rows(); }

    friend bool operator==(const HermitianForm&, const HermitianForm&) = default;

private:
    LaurentMatrix gram_;
};

// A square matrix meant to act isometrically. Nothing is assumed about it;
// verify_isometry is the only way to learn whether it preserves a form.
class IsometryMatrix {
public:
    IsometryMatrix() = default;
    explicit IsometryMatrix(LaurentMatrix mat);
    static IsometryMatrix identity(std::size_t n) { return IsometryMatrix(LaurentMatrix::identity(n)); }

    const LaurentMatrix& mat() const noexcept { return mat_; }
    std::size_t dim() const noexcept { return mat_.rows(); }

    LaurentVector apply(std::span<const LaurentPoly> v) const { return mat_.apply(v); }
    // (a ∘ b)(u) = a(b(u)).
    friend IsometryMatrix compose(const IsometryMatrix& a, const IsometryMatrix& b) {
        return IsometryMatrix(a.mat_ * b.mat_);
    }

    friend bool operator==(const IsometryMatrix&, const IsometryMatrix&) = default;

private:
    LaurentMatrix mat_;
};

LaurentPoly evaluate(const HermitianForm& form, std::span<const LaurentPoly> u, std::span<const LaurentPoly> v);

// Entry-wise exact division by z. NotDivisible if some entry is not in zΛ.
HermitianForm divide_form_by_z(const HermitianForm& form);

// Determinant is ±x^k.
bool is_unimodular(const HermitianForm& form);

bool verify_isometry(const HermitianForm& form, const IsometryMatrix& phi);

bool is_congruent_to_identity_mod_z(const IsometryMatrix& phi);

// The map x ↦ x + u·λ(x,v) − v·λ(x,u) − u·c·λ(x,u) for isotropic u with
// λ(u,v) = 0. It is an isometry exactly when c + ι(c) = λ(v,v). This overload
// picks c = (1−x)·λ(v,v)/z when z divides λ(v,v) (so the map is ≡ id mod z
// whenever v ∈ z·Λ^d), otherwise splits the symmetric value λ(v,v) in half.
// The result is always checked with verify_isometry; NotApplicable is thrown
// when a precondition or that check fails.
IsometryMatrix transvection(const HermitianForm& form, std::span<const LaurentPoly> u,
                            std::span<const LaurentPoly> v);
IsometryMatrix transvection(const HermitianForm& form, std::span<const LaurentPoly> u,
                            std::span<const LaurentPoly> v, const LaurentPoly& c);

// Some c with c + ι(c) = s for symmetric s, following the choice described
// above; nullopt when none exists (s not symmetric, or odd constant term
// without z | s).
std::optional<LaurentPoly> split_symmetric(const LaurentPoly& s);

}  // namespace lmap
