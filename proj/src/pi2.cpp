#include "lmap/pi2.hpp"

#include <string>
#include <utility>

#include "lmap/errors.hpp"
#include "lmap/presentation.hpp"

namespace lmap {

namespace {

void require_same_basis(const SphereClass& a, const SphereClass& b) {
    if (!(a.basis() == b.basis())) throw DimensionMismatch("sphere classes live over different bases");
}

}  // namespace

SphereClass::SphereClass(BasisKind basis, LaurentVector coeffs) : basis_(basis), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != basis_.rank())
        throw DimensionMismatch("sphere class over " + std::to_string(basis_.n) + " pairs needs " +
                                std::to_string(basis_.rank()) + " coefficients, got " +
                                std::to_string(coeffs_.size()));
}

SphereClass SphereClass::zero(BasisKind basis) { return SphereClass(basis, LaurentVector(basis.rank())); }

SphereClass SphereClass::unit(BasisKind basis, std::size_t k, const LaurentPoly& coeff) {
    if (k >= basis.rank()) throw DimensionMismatch("basis index " + std::to_string(k) + " out of range");
    SphereClass s = zero(basis);
    s.coeffs_[k] = coeff;
    return s;
}

bool SphereClass::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

SphereClass SphereClass::extended(std::size_t extra) const {
    const std::size_t n = basis_.n;
    LaurentVector out(2 * (n + extra));
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = coeffs_[i];
        out[n + extra + i] = coeffs_[n + i];
    }
    return SphereClass(BasisKind{basis_.tag, n + extra}, std::move(out));
}

SphereClass& SphereClass::operator+=(const SphereClass& rhs) {
    require_same_basis(*this, rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

SphereClass& SphereClass::operator-=(const SphereClass& rhs) {
    require_same_basis(*this, rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

SphereClass operator*(const LaurentPoly& c, const SphereClass& s) {
    SphereClass out = s;
    for (auto& v : out.coeffs_) v = c * v;
    return out;
}

HermitianForm metabolic_form(BasisKind basis) {
    const std::size_t n = basis.n;
    const LaurentPoly z = LaurentPoly::z();
    LaurentMatrix g(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (basis.tag == BasisTag::WhitneyAccessory) {
            g(i, n + i) = z;
            g(n + i, i) = z;
            g(n + i, n + i) = z;
        } else {
            g(i, i) = z;
            g(n + i, n + i) = -z;
        }
    }
    return HermitianForm(std::move(g));
}

SphereClass change_basis(const SphereClass& c, BasisKind target) {
    if (c.n() != target.n)
        throw DimensionMismatch("change_basis: " + std::to_string(c.n()) + " pairs vs " + std::to_string(target.n));
    if (c.basis().tag == target.tag) return c;
    const std::size_t n = c.n();
    LaurentVector out(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (target.tag == BasisTag::AccessoryPM) {
            // a·S_W + b·S_A = (a + b)·S_{A^+} − a·S_{A^-}.
            out[i] = c.first(i) + c.second(i);
            out[n + i] = -c.first(i);
        } else {
            // α⁺·S_{A^+} + α⁻·S_{A^-} = −α⁻·S_W + (α⁺ + α⁻)·S_A.
            out[i] = -c.second(i);
            out[n + i] = c.first(i) + c.second(i);
        }
    }
    return SphereClass(target, std::move(out));
}

LaurentPoly lambda(const SphereClass& a, const SphereClass& b) {
    if (a.n() != b.n()) throw DimensionMismatch("lambda: classes over different pair counts");
    const std::size_t n = a.n();
    LaurentPoly sum;
    if (a.basis().tag == BasisTag::AccessoryPM && b.basis().tag == BasisTag::AccessoryPM) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!a.first(i).is_zero() && !b.first(i).is_zero()) sum += a.first(i) * involute(b.first(i));
            if (!a.second(i).is_zero() && !b.second(i).is_zero()) sum -= a.second(i) * involute(b.second(i));
        }
        return LaurentPoly::z() * sum;
    }
    const SphereClass u = change_basis(a, BasisKind::wa(n));
    const SphereClass v = change_basis(b, BasisKind::wa(n));
    for (std::size_t i = 0; i < n; ++i) {
        // a·ι(b') + b·ι(a' + b').
        if (!u.first(i).is_zero() && !v.second(i).is_zero()) sum += u.first(i) * involute(v.second(i));
        if (!u.second(i).is_zero()) sum += u.second(i) * involute(v.first(i) + v.second(i));
    }
    return LaurentPoly::z() * sum;
}

LaurentVector whitney_disk_pairing(const SphereClass& c) {
    const SphereClass w = change_basis(c, BasisKind::wa(c.n()));
    return LaurentVector(w.coeffs().begin() + static_cast<std::ptrdiff_t>(c.n()), w.coeffs().end());
}

UnlinkingConditions check_unlinking_conditions(const SphereClass& f2) {
    UnlinkingConditions out;
    const LaurentVector b = whitney_disk_pairing(f2);
    bool all_zero = true;
    bool all_in_z = true;
    for (const auto& bi : b) {
        if (!bi.is_zero()) all_zero = false;
        if (!try_div_z(bi)) all_in_z = false;
    }
    out.condition_ii = all_zero;
    out.condition_iii = all_in_z && lambda(f2, f2).is_zero();
    if (out.condition_ii && !out.condition_iii)
        throw InternalVerificationFailure("condition (ii) holds but (iii) does not");
    return out;
}

UnlinkingConditions check_unlinking_conditions(const Presentation& p) { return check_unlinking_conditions(p.f2); }

bool check_metabolic_collection(const CollectionLedger& ledger) {
    for (const auto* m : {&ledger.whitney_whitney, &ledger.whitney_accessory})
        for (std::size_t i = 0; i < m->rows(); ++i)
            for (std::size_t j = 0; j < m->cols(); ++j)
                if (!(*m)(i, j).is_zero()) return false;
    return true;
}

}  // namespace lmap
