#pragma once

// Algebraic data of a standard-position link map: one record per
// self-intersection pair of f₁, plus the class of f₂ in π₂ of the complement.
//
// The record {sign, m} of pair i declares that f₂ has augmentation m on the
// accessory sphere of that sign: ε(α_i^+) = m when sign = +1, ε(α_i^-) = m
// when sign = −1, where f₂ = Σ α_i^+·S_{A_i^+} + α_i^-·S_{A_i^-}.

#include <vector>

#include "lmap/pi2.hpp"

namespace lmap {

struct PairRecord {
    int sign = 1;
    long m = 0;
    friend bool operator==(const PairRecord&, const PairRecord&) = default;
};

struct Presentation {
    std::vector<PairRecord> pairs;
    SphereClass f2;

    std::size_t n() const noexcept { return pairs.size(); }
    friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Throws InvalidPresentation naming the first violated invariant.
void validate(const Presentation& p);

// Empty presentation: no pairs, f₂ = 0.
Presentation empty_presentation();

}  // namespace lmap
