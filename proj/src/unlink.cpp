#include "lmap/unlink.hpp"

#include <array>

#include "lmap/errors.hpp"
#include "lmap/realize.hpp"

namespace lmap {

namespace {

SphereClass as_wa(const SphereClass& c) { return change_basis(c, BasisKind::wa(c.n())); }

std::string check(const std::string& claim, bool ok) { return "CHECK " + claim + " : " + (ok ? "OK" : "FAIL"); }

std::string idx(std::size_t i) { return std::to_string(i + 1); }

// Candidates u = −S_{W_N} + S_{A_N} + γ·S_{A_P} + s·γ·S_{W_P} with γ a unit and
// s skew; every one is isotropic and orthogonal to S_{A_N}. The first (γ = 1,
// s = 0) always works; the rest are a deterministic fallback.
std::vector<LaurentVector> candidate_translations(std::size_t total, std::size_t big_n, std::size_t big_p) {
    const LaurentPoly skew = LaurentPoly::x(1) - LaurentPoly::x(-1);
    const std::array<LaurentPoly, 3> skews{LaurentPoly{}, skew, -skew};
    std::vector<LaurentVector> out;
    for (const LaurentPoly& s : skews)
        for (long k : {0L, 1L, -1L, 2L, -2L})
            for (int sg : {1, -1}) {
                const LaurentPoly gamma = LaurentPoly::monomial(sg, k);
                LaurentVector u(2 * total);
                u[big_n] = -LaurentPoly::one();
                u[total + big_n] = LaurentPoly::one();
                u[total + big_p] = gamma;
                u[big_p] = s * gamma;
                out.push_back(std::move(u));
            }
    return out;
}

}  // namespace

Presentation stabilize(const Presentation& p, bool link_once) {
    Presentation out;
    out.pairs = p.pairs;
    out.pairs.push_back({1, link_once ? 1L : 0L});
    out.f2 = p.f2.extended(1);
    if (link_once) {
        const std::size_t n = out.f2.n();
        out.f2 += change_basis(SphereClass::whitney(n, n - 1), out.f2.basis());
    }
    return out;
}

IsometryWitness construct_isometry(const Presentation& p) {
    validate(p);
    const UnlinkingConditions cond = check_unlinking_conditions(p);
    if (!cond.condition_iii)
        throw ConditionsNotMet("condition (iii) fails: need λ(f2,f2) = 0 and every Whitney pairing in zΛ");
    const std::size_t n = p.n();
    if (cond.condition_ii) {
        IsometryWitness w{IsometryMatrix::identity(2 * n), as_wa(p.f2), n, n, p, p};
        if (const std::string err = check_witness(w); !err.empty()) throw InternalVerificationFailure(err);
        return w;
    }

    // f₂ = g + z·e with g = Σ a_i S_{W_i} and e = Σ c_i S_{A_i}.
    const SphereClass f = as_wa(p.f2);
    LaurentVector g0(2 * n), e0(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        g0[i] = f.first(i);
        auto c = try_div_z(f.second(i));
        if (!c) throw InternalVerificationFailure("Whitney pairing not divisible by z after condition check");
        e0[n + i] = *std::move(c);
    }

    const Presentation stabilized = stabilize(stabilize(p, true), false);
    const std::size_t total = n + 2;
    const BasisKind wa = BasisKind::wa(total);
    const SphereClass g = SphereClass(BasisKind::wa(n), std::move(g0)).extended(2) + SphereClass::whitney(total, n);
    const SphereClass e = SphereClass(BasisKind::wa(n), std::move(e0)).extended(2);
    const HermitianForm form = metabolic_form(wa);

    // c = −λ(g, e)/z makes T(g) = g + z·e; isotropy of f₂ forces c + ι(c) = λ(e, e).
    auto c = try_div_z(lambda(g, e));
    if (!c) throw InternalVerificationFailure("λ(g, e) not divisible by z");
    const LaurentPoly cc = -*c;
    LaurentVector v = e.coeffs();
    for (auto& x : v) x = -x;

    for (const LaurentVector& u : candidate_translations(total, n, n + 1)) {
        IsometryMatrix phi;
        try {
            phi = transvection(form, u, v, cc);
        } catch (const NotApplicable&) {
            continue;
        }
        IsometryWitness w{std::move(phi), g, n, total, p, stabilized};
        if (check_witness(w).empty()) return w;
    }
    throw ConstructionFailed("no candidate transvection satisfied the witness invariants");
}

std::string check_witness(const IsometryWitness& w) {
    try {
        validate(w.original);
        validate(w.stabilized);
    } catch (const InvalidPresentation& e) {
        return std::string("presentation invalid: ") + e.what();
    }
    if (w.n_before != w.original.n()) return "n_before does not match the original presentation";
    if (w.n_after != w.stabilized.n()) return "n_after does not match the stabilized presentation";
    if (w.n_after == w.n_before) {
        if (!(w.stabilized == w.original)) return "stabilized presentation differs from the original";
    } else if (w.n_after == w.n_before + 2) {
        if (!(w.stabilized == stabilize(stabilize(w.original, true), false)))
            return "stabilized presentation is not the two finger-move stabilization of the original";
    } else {
        return "n_after must equal n_before or n_before + 2";
    }
    const BasisKind wa = BasisKind::wa(w.n_after);
    if (w.phi.dim() != wa.rank()) return "phi has the wrong dimension";
    if (!(w.g.basis() == wa)) return "g is not in the Whitney/accessory basis of the stabilized presentation";
    for (std::size_t i = 0; i < w.n_after; ++i)
        if (!w.g.second(i).is_zero()) return "g is not in the span of the Whitney spheres";
    if (!verify_isometry(metabolic_form(wa), w.phi)) return "isometry check failed: phi does not preserve λ";
    if (!is_congruent_to_identity_mod_z(w.phi)) return "phi is not congruent to the identity mod z";
    if (!(SphereClass(wa, w.phi.apply(w.g.coeffs())) == as_wa(w.stabilized.f2))) return "phi(g) != f2";
    return {};
}

UnlinkCertificate reduce(const Presentation& p, const IsometryWitness& w) {
    if (const std::string err = check_witness(w); !err.empty()) throw WitnessInvalid(err);
    if (!(w.original == p)) throw WitnessInvalid("witness was built for a different presentation");

    const std::size_t n = w.n_after;
    const BasisKind wa = BasisKind::wa(n);
    UnlinkCertificate cert;
    cert.witness = w;
    auto& out = cert.transcript;
    out.push_back(check("Φ preserves λ", true));
    out.push_back(check("Φ ≡ id mod z", true));
    out.push_back(check("Φ(g) = f2", true));

    std::vector<SphereClass> dual;
    for (std::size_t i = 0; i < n; ++i) {
        cert.v_classes.emplace_back(wa, w.phi.mat().column(i));
        dual.emplace_back(wa, w.phi.mat().column(n + i));
        cert.alphas.push_back(w.g.first(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
        const SphereClass diff = cert.v_classes[i] - SphereClass::whitney(n, i);
        bool divisible = true;
        for (const auto& x : diff.coeffs()) divisible = divisible && try_div_z(x).has_value();
        out.push_back(check("T" + idx(i) + " = (S_V" + idx(i) + " - S_W" + idx(i) + ")/z exact", divisible));
        if (!divisible) throw WitnessInvalid("T_" + idx(i) + " is not an exact quotient by z");
        for (std::size_t j = 0; j < n; ++j) {
            const bool iso = lambda(cert.v_classes[i], cert.v_classes[j]).is_zero();
            out.push_back(check("λ(S_V" + idx(i) + ",S_V" + idx(j) + ") = 0", iso));
            if (!iso) throw WitnessInvalid("V-classes are not isotropic");
            const LaurentPoly want = i == j ? LaurentPoly::z() : LaurentPoly{};
            const bool dual_ok = lambda(cert.v_classes[i], dual[j]) == want;
            out.push_back(check("λ(V" + idx(i) + ",V" + idx(j) + "†) = " + (i == j ? "1" : "0"), dual_ok));
            if (!dual_ok) throw WitnessInvalid("dual pairing λ(V_i, V_j†) ≠ δ_ij");
        }
    }

    SphereClass cur = as_wa(w.stabilized.f2);
    for (std::size_t i = 0; i < n; ++i) {
        if (cert.alphas[i].is_zero()) continue;
        ReductionStep step{cur, cert.alphas[i] * cert.v_classes[i], {}};
        step.after = step.before - step.term;
        cur = step.after;
        out.push_back("STEP Whitney move on V" + idx(i) + ", subtract (" + cert.alphas[i].to_string() + ")·S_V" +
                      idx(i));
        cert.trace.push_back(std::move(step));
    }
    out.push_back(check("reduced f2 = 0", cur.is_zero()));
    if (!cur.is_zero()) throw WitnessInvalid("reduction trace does not end at 0");
    return cert;
}

std::string check_certificate(const UnlinkCertificate& c) {
    UnlinkCertificate fresh;
    try {
        fresh = reduce(c.witness.original, c.witness);
    } catch (const WitnessInvalid& e) {
        return std::string("witness: ") + e.what();
    }
    if (c.v_classes != fresh.v_classes) return "v_classes differ from phi(S_W)";
    if (c.alphas != fresh.alphas) return "alphas differ from the Whitney coefficients of g";
    if (c.trace.size() != fresh.trace.size()) return "trace length differs from the replay";
    for (std::size_t k = 0; k < c.trace.size(); ++k)
        if (!(c.trace[k] == fresh.trace[k])) return "trace step " + std::to_string(k + 1) + " differs from the replay";
    return {};
}

Verdict classify(const Presentation& p) {
    validate(p);
    Verdict v;
    v.kirk = invariants_of(p);
    v.trivial = is_trivial(v.kirk);
    if (v.trivial && check_unlinking_conditions(p).condition_iii) v.certificate = reduce(p, construct_isometry(p));
    return v;
}

}  // namespace lmap
