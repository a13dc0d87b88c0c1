#pragma once

// π₂ of a standard-position sphere complement: a free Λ-module of rank 2n,
// with either the Whitney/accessory basis
//     S_{W_1..W_n}, S_{A_1..A_n}                (BasisTag::WhitneyAccessory)
// or the positive/negative accessory basis
//     S_{A_1^+..A_n^+}, S_{A_1^-..A_n^-}        (BasisTag::AccessoryPM)
// related by S_{W_i} = S_{A_i^+} − S_{A_i^-} and S_{A_i} = S_{A_i^+}.
//
// In Whitney/accessory coordinates (a, b) the form is
//     λ((a,b), (a',b')) = z·Σ_i (a_i·ι(b'_i) + b_i·ι(a'_i) + b_i·ι(b'_i)),
// and in ± coordinates λ(α, α') = z·Σ_i (α⁺_i·ι(α'⁺_i) − α⁻_i·ι(α'⁻_i)).

#include <cstddef>
#include <vector>

#include "lmap/forms.hpp"
#include "lmap/laurent.hpp"

namespace lmap {

struct Presentation;

enum class BasisTag { WhitneyAccessory, AccessoryPM };

struct BasisKind {
    BasisTag tag = BasisTag::WhitneyAccessory;
    std::size_t n = 0;

    static BasisKind wa(std::size_t n) { return {BasisTag::WhitneyAccessory, n}; }
    static BasisKind pm(std::size_t n) { return {BasisTag::AccessoryPM, n}; }

    std::size_t rank() const noexcept { return 2 * n; }
    friend bool operator==(const BasisKind&, const BasisKind&) = default;
};

class SphereClass {
public:
    SphereClass() = default;
    // Throws DimensionMismatch unless coeffs.size() == 2·basis.n.
    SphereClass(BasisKind basis, LaurentVector coeffs);

    static SphereClass zero(BasisKind basis);
    // Basis vector k (0-based, in the ordering of `basis`).
    static SphereClass unit(BasisKind basis, std::size_t k, const LaurentPoly& coeff = LaurentPoly::one());

    // Named generators; i is 0-based.
    static SphereClass whitney(std::size_t n, std::size_t i) { return unit(BasisKind::wa(n), i); }
    static SphereClass accessory(std::size_t n, std::size_t i) { return unit(BasisKind::wa(n), n + i); }
    static SphereClass accessory_plus(std::size_t n, std::size_t i) { return unit(BasisKind::pm(n), i); }
    static SphereClass accessory_minus(std::size_t n, std::size_t i) { return unit(BasisKind::pm(n), n + i); }

    const BasisKind& basis() const noexcept { return basis_; }
    std::size_t n() const noexcept { return basis_.n; }
    const LaurentVector& coeffs() const noexcept { return coeffs_; }
    const LaurentPoly& operator[](std::size_t k) const { return coeffs_[k]; }

    // First and second halves of the coordinate vector: (a, b) in the
    // Whitney/accessory basis, (α⁺, α⁻) in the ± basis.
    const LaurentPoly& first(std::size_t i) const { return coeffs_[i]; }
    const LaurentPoly& second(std::size_t i) const { return coeffs_[basis_.n + i]; }

    bool is_zero() const;

    // Same class with `extra` new pairs appended (zero coordinates there).
    SphereClass extended(std::size_t extra) const;

    // Arithmetic requires equal bases (DimensionMismatch otherwise).
    SphereClass& operator+=(const SphereClass& rhs);
    SphereClass& operator-=(const SphereClass& rhs);
    friend SphereClass operator+(SphereClass a, const SphereClass& b) { return a += b; }
    friend SphereClass operator-(SphereClass a, const SphereClass& b) { return a -= b; }
    friend SphereClass operator*(const LaurentPoly& c, const SphereClass& s);

    friend bool operator==(const SphereClass&, const SphereClass&) = default;

private:
    BasisKind basis_;
    LaurentVector coeffs_;
};

HermitianForm metabolic_form(BasisKind basis);

// Throws DimensionMismatch when the pair counts differ.
SphereClass change_basis(const SphereClass& c, BasisKind target);

// Classes in different bases are compared in the Whitney/accessory basis.
// Linear in time in n.
LaurentPoly lambda(const SphereClass& a, const SphereClass& b);

// b_i, the S_{A_i}-coordinates in the Whitney/accessory basis. These are the
// relative intersections with the Whitney disks: λ(c, S_{W_i}) = z·b_i.
LaurentVector whitney_disk_pairing(const SphereClass& c);

struct UnlinkingConditions {
    bool condition_ii = false;
    bool condition_iii = false;
    friend bool operator==(const UnlinkingConditions&, const UnlinkingConditions&) = default;
};

UnlinkingConditions check_unlinking_conditions(const SphereClass& f2);
UnlinkingConditions check_unlinking_conditions(const Presentation& p);

// Pairwise λ-values of a disk collection: whitney_whitney(i,j) = λ(W_i,W_j)
// and whitney_accessory(i,j) = λ(W_i,A_j).
struct CollectionLedger {
    LaurentMatrix whitney_whitney;
    LaurentMatrix whitney_accessory;
};

bool check_metabolic_collection(const CollectionLedger& ledger);

}  // namespace lmap
