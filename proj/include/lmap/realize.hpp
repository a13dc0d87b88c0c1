#pragma once

// Kirk invariants of a presentation, and explicit presentations realizing any
// valid Kirk pair.
//
// σ₁ is read off the augmentations of f₂'s accessory coefficients:
//     σ₁ = Σ_i [c(ε α_i^+) − c(ε α_i^-)],   c(k) = 2 − x^k − x^-k = z·P_k·ι(P_k),
// and σ₂ = λ(f₂, f₂) rewritten in Z[z].

#include <vector>

#include "lmap/kirk.hpp"
#include "lmap/presentation.hpp"

namespace lmap {

ZPoly sigma1_of(const Presentation& p);
ZPoly sigma2_of(const Presentation& p);

// (sigma1_of, sigma2_of) as a validated pair.
KirkPair invariants_of(const Presentation& p);

// Signed pairs whose σ₁-contributions sign·c(m) sum to `target`, sorted by m
// and then sign. NotInCone unless target ∈ zZ[z].
std::vector<PairRecord> realize_sigma1(const ZPoly& target);

struct SignedBeta {
    int sign = 1;
    LaurentPoly beta;
    friend bool operator==(const SignedBeta&, const SignedBeta&) = default;
};

// Entries with Σ sign·β·ι(β)·z² = target, each β being 1 or 1 − x^d.
// NotInCone unless target ∈ z²Z[z].
std::vector<SignedBeta> realize_sigma2_correction(const ZPoly& target);

// Presentation in the ± basis with invariants_of(result) = target. A pair
// {s, m} from realize_sigma1 carries α^s = P_m on its own accessory sphere; a
// correction {s, β} carries α^s = (1 − x)·β with m = 0.
Presentation realize(const KirkPair& target);

}  // namespace lmap
