#include "lmap/realize.hpp"

#include <algorithm>
#include <map>

#include "lmap/errors.hpp"

namespace lmap {

namespace {

// Σ count·c(k) over a tally of augmentations.
ZPoly sum_generators(const std::map<Integer, Integer>& tally) {
    ZPoly out;
    for (const auto& [k, count] : tally) {
        if (count == 0 || k == 0) continue;
        if (!k.fits_slong_p()) throw NotApplicable("augmentation " + k.get_str() + " is too large");
        out += count * kirk_generator(k.get_si());
    }
    return out;
}

// Greedy top-down expansion of `target` in a basis whose degree-d element has
// leading coefficient ±1. Returns the integer coefficient per degree.
template <typename Basis>
std::vector<Integer> greedy_expand(ZPoly target, std::size_t lowest, Basis basis) {
    std::vector<Integer> count(target.is_zero() ? 0 : static_cast<std::size_t>(target.degree()) + 1);
    while (!target.is_zero()) {
        const auto d = static_cast<std::size_t>(target.degree());
        if (d < lowest) throw InternalVerificationFailure("greedy expansion reached an unreachable degree");
        const ZPoly g = basis(d);
        const Integer r = target.coeff(d) * g.coeff(d);  // lead(g) = ±1
        count[d] += r;
        target -= r * g;
    }
    return count;
}

}  // namespace

ZPoly sigma1_of(const Presentation& p) {
    const SphereClass pm = change_basis(p.f2, BasisKind::pm(p.f2.n()));
    std::map<Integer, Integer> tally;
    for (std::size_t i = 0; i < pm.n(); ++i) {
        tally[abs(augment(pm.first(i)))] += 1;
        tally[abs(augment(pm.second(i)))] -= 1;
    }
    return sum_generators(tally);
}

ZPoly sigma2_of(const Presentation& p) {
    // Realized presentations repeat the same α many times, so tally distinct
    // coefficients before multiplying.
    const SphereClass pm = change_basis(p.f2, BasisKind::pm(p.f2.n()));
    std::map<LaurentPoly::Terms, Integer> tally;
    for (std::size_t i = 0; i < pm.n(); ++i) {
        if (!pm.first(i).is_zero()) tally[pm.first(i).terms()] += 1;
        if (!pm.second(i).is_zero()) tally[pm.second(i).terms()] -= 1;
    }
    LaurentPoly norm;
    for (const auto& [terms, count] : tally) {
        if (count == 0) continue;
        const LaurentPoly a(terms);
        norm += count * (a * involute(a));
    }
    auto s = try_z_decompose(LaurentPoly::z() * norm, 0);
    if (!s) throw InternalVerificationFailure("self-intersection λ(f2,f2) is not symmetric");
    return *std::move(s);
}

KirkPair invariants_of(const Presentation& p) {
    try {
        return make_kirk(sigma1_of(p), sigma2_of(p));
    } catch (const InvalidPair& e) {
        throw InternalVerificationFailure(std::string("invariants violate the symmetry relation: ") + e.what());
    }
}

std::vector<PairRecord> realize_sigma1(const ZPoly& target) {
    if (target.coeff(0) != 0) throw NotInCone("σ₁ target " + target.to_string() + " is not in zZ[z]");
    const auto count = greedy_expand(target, 1, [](std::size_t d) { return kirk_generator(static_cast<long>(d)); });
    std::vector<PairRecord> out;
    for (std::size_t d = 1; d < count.size(); ++d) {
        const int sign = sgn(count[d]) < 0 ? -1 : 1;
        const Integer copies = abs(count[d]);
        for (Integer k = 0; k < copies; ++k) out.push_back({sign, static_cast<long>(d)});
    }
    std::stable_sort(out.begin(), out.end(), [](const PairRecord& a, const PairRecord& b) {
        return a.m != b.m ? a.m < b.m : a.sign > b.sign;
    });
    return out;
}

std::vector<SignedBeta> realize_sigma2_correction(const ZPoly& target) {
    if (target.coeff(0) != 0 || target.coeff(1) != 0)
        throw NotInCone("σ₂ correction " + target.to_string() + " is not in z²Z[z]");
    const ZPoly reduced(std::vector<Integer>(target.coeffs().begin() + std::min<std::ptrdiff_t>(2, target.degree() + 1),
                                             target.coeffs().end()));
    // β = 1 contributes z², β = 1 − x^d contributes c(d)·z².
    const auto count = greedy_expand(reduced, 0, [](std::size_t d) {
        return d == 0 ? ZPoly{1} : kirk_generator(static_cast<long>(d));
    });
    std::vector<SignedBeta> out;
    for (std::size_t d = 0; d < count.size(); ++d) {
        const int sign = sgn(count[d]) < 0 ? -1 : 1;
        const LaurentPoly beta = d == 0 ? LaurentPoly::one() : LaurentPoly::one() - LaurentPoly::x(static_cast<long>(d));
        const Integer copies = abs(count[d]);
        for (Integer k = 0; k < copies; ++k) out.push_back({sign, beta});
    }
    return out;
}

Presentation realize(const KirkPair& target) {
    const std::vector<PairRecord> base = realize_sigma1(target.sigma1());
    // Each base pair has σ₂-contribution sign·z·P_m·ι(P_m) = sign·c(m), so the
    // base already realizes σ₂ = σ₁.
    const std::vector<SignedBeta> fix = realize_sigma2_correction(target.sigma2() - target.sigma1());

    const std::size_t n = base.size() + fix.size();
    LaurentVector coeffs(2 * n);
    std::vector<PairRecord> pairs;
    pairs.reserve(n);
    for (std::size_t i = 0; i < base.size(); ++i) {
        coeffs[base[i].sign > 0 ? i : n + i] = geometric_sum(base[i].m);
        pairs.push_back(base[i]);
    }
    for (std::size_t j = 0; j < fix.size(); ++j) {
        const std::size_t i = base.size() + j;
        coeffs[fix[j].sign > 0 ? i : n + i] = LaurentPoly::one_minus_x() * fix[j].beta;
        pairs.push_back({fix[j].sign, 0});
    }
    Presentation p{std::move(pairs), SphereClass(BasisKind::pm(n), std::move(coeffs))};

    try {
        validate(p);
    } catch (const InvalidPresentation& e) {
        throw InternalVerificationFailure(std::string("realize produced an invalid presentation: ") + e.what());
    }
    if (invariants_of(p) != target) throw InternalVerificationFailure("realize failed to reproduce its target");
    return p;
}

}  // namespace lmap
