#pragma once

// Algebraic unlinking: an isometry Φ of the metabolic form with Φ ≡ id mod z
// carrying a combination g of Whitney spheres to f₂, and the reduction of f₂
// through the spheres S_{V_i} = Φ(S_{W_i}).

#include <optional>
#include <string>
#include <vector>

#include "lmap/forms.hpp"
#include "lmap/kirk.hpp"
#include "lmap/presentation.hpp"

namespace lmap {

// Adds one pair. With link_once the new pair has m = 1 and f₂ gains S_{W_{n+1}};
// otherwise m = 0 and f₂ is unchanged. f₂ keeps its basis tag.
Presentation stabilize(const Presentation& p, bool link_once);

struct IsometryWitness {
    IsometryMatrix phi;           // acts on Whitney/accessory coordinates
    SphereClass g;                // in the Whitney span, Whitney/accessory basis
    std::size_t n_before = 0;
    std::size_t n_after = 0;
    Presentation original;
    Presentation stabilized;      // the presentation Φ and g refer to

    friend bool operator==(const IsometryWitness&, const IsometryWitness&) = default;
};

// Requires condition (iii); ConditionsNotMet otherwise. When condition (ii)
// already holds the witness is the identity with g = f₂ and no stabilization.
IsometryWitness construct_isometry(const Presentation& p);

// Empty string when `w` satisfies every witness invariant (isometry,
// Φ ≡ id mod z, Φ(g) = f₂, g in the Whitney span, stabilized obtained from
// original); otherwise a description of the first failure.
std::string check_witness(const IsometryWitness& w);

struct ReductionStep {
    SphereClass before;
    SphereClass term;
    SphereClass after;
    friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct UnlinkCertificate {
    IsometryWitness witness;
    std::vector<SphereClass> v_classes;
    std::vector<LaurentPoly> alphas;
    std::vector<ReductionStep> trace;
    std::vector<std::string> transcript;

    friend bool operator==(const UnlinkCertificate&, const UnlinkCertificate&) = default;
};

// WitnessInvalid when `w` fails a check or does not belong to `p`.
UnlinkCertificate reduce(const Presentation& p, const IsometryWitness& w);

// Empty string when the certificate's witness, V-classes, alphas and trace are
// all consistent; otherwise the first failed check.
std::string check_certificate(const UnlinkCertificate& c);

struct Verdict {
    bool trivial = false;
    KirkPair kirk;
    std::optional<UnlinkCertificate> certificate;
    friend bool operator==(const Verdict&, const Verdict&) = default;
};

Verdict classify(const Presentation& p);

}  // namespace lmap
