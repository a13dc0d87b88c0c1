#include "lmap/diskledger.hpp"

#include "lmap/errors.hpp"
#include "lmap/realize.hpp"

namespace lmap {

namespace {

bool is_accessory(DiskKind k) { return k == DiskKind::AccessoryPlus || k == DiskKind::AccessoryMinus; }

struct Expansion {
    Integer m, n, q;
};

Expansion expand3(const LaurentPoly& a) {
    const auto c = i_adic_expand(a, 3);
    return {c[0], c[1], -c[2]};
}

}  // namespace

Integer DiskRecord::primary() const { return augment(lambda_f2); }

Integer DiskRecord::secondary() const { return i_adic_expand(lambda_f2, 2)[1]; }

Multiplicities multiplicities(const LaurentPoly& lambda_f2) {
    const auto c = i_adic_expand(lambda_f2, 2);
    LaurentPoly residual = lambda_f2 - LaurentPoly::constant(c[0]) - c[1] * LaurentPoly::one_minus_x();
    const auto order = i_adic_order(residual);
    if (order && *order < 2) throw InternalVerificationFailure("multiplicity residual is not in I^2");
    return {c[0], c[1], std::move(residual)};
}

LaurentPoly whitney_move_effect(const LaurentPoly& u_lambda) {
    LaurentPoly out = LaurentPoly::one_minus_x() * u_lambda;
    const Multiplicities m = multiplicities(out);
    if (m.primary != 0 || m.secondary != augment(u_lambda))
        throw InternalVerificationFailure("Whitney move changed multiplicities unexpectedly");
    return out;
}

DiskRecord double_boundary_twist(const DiskRecord& w, const DiskRecord& a, const Integer& k) {
    if (w.kind != DiskKind::Whitney) throw KindMismatch("double_boundary_twist: first disk must be a Whitney disk");
    if (!is_accessory(a.kind)) throw KindMismatch("double_boundary_twist: second disk must be an accessory disk");
    DiskRecord out = w;
    out.lambda_f2 += k * (LaurentPoly::one_minus_x() * a.lambda_f2);
    if (out.primary() != w.primary() || out.secondary() != w.secondary() + k * a.primary())
        throw InternalVerificationFailure("boundary twist broke the multiplicity law");
    return out;
}

Integer join_accessory_twists(const DiskRecord& a_plus, const DiskRecord& a_minus) {
    if (a_plus.kind != DiskKind::AccessoryPlus || a_minus.kind != DiskKind::AccessoryMinus)
        throw KindMismatch("join_accessory_twists expects a positive and a negative accessory disk");
    return a_plus.twisting + a_minus.twisting;
}

Integer derive_accessory_twist(const DiskRecord& w, const DiskRecord& a) {
    if (w.kind != DiskKind::Whitney) throw KindMismatch("derive_accessory_twist: first disk must be a Whitney disk");
    if (!is_accessory(a.kind)) throw KindMismatch("derive_accessory_twist: second disk must be an accessory disk");
    return w.twisting + a.twisting;
}

Integer step8_z2_coefficient(const Presentation& p) {
    const SphereClass pm = change_basis(p.f2, BasisKind::pm(p.f2.n()));
    Integer total = 0;
    for (std::size_t i = 0; i < pm.n(); ++i) {
        const Expansion a = expand3(pm.first(i));
        const Expansion b = expand3(pm.second(i));
        total += a.n * a.n - b.n * b.n;
        total += a.m * a.n - b.m * b.n;
        total += 2 * (a.m * a.q - b.m * b.q);
    }
    if (total != sigma2_of(p).coeff(2))
        throw InternalVerificationFailure("z^2 formula disagrees with λ(f2,f2): " + total.get_str() + " vs " +
                                          sigma2_of(p).coeff(2).get_str());
    return total;
}

bool parity_claim(const Presentation& p) {
    if (!lambda(p.f2, p.f2).is_zero()) throw PreconditionViolated("parity claim needs λ(f2,f2) = 0");
    const SphereClass pm = change_basis(p.f2, BasisKind::pm(p.f2.n()));
    Integer sum = 0;
    for (std::size_t i = 0; i < pm.n(); ++i) {
        const Expansion a = expand3(pm.first(i));
        const Expansion b = expand3(pm.second(i));
        const std::string at = "pair " + std::to_string(i + 1) + ": ";
        if (a.m != b.m) throw PreconditionViolated(at + "primary multiplicities of A+ and A- differ");
        if (a.m != 0 && a.m != 1) throw PreconditionViolated(at + "primary multiplicity must be 0 or 1");
        const Integer d = a.n - b.n;
        if (a.m == 1 && d != 0) throw PreconditionViolated(at + "m = 1 requires equal secondary multiplicities");
        if (abs(d) > 1) throw PreconditionViolated(at + "secondary multiplicities differ by more than 1");
        sum += d;
    }
    const bool even = mpz_even_p(sum.get_mpz_t()) != 0;
    if (!even) throw InternalVerificationFailure("parity claim failed under its hypotheses");
    return even;
}

}  // namespace lmap
