#pragma once

// Kirk invariants (σ₁, σ₂) ∈ zZ[z] ⊕ zZ[z] as coordinates on link-homotopy
// classes of link maps S² ⊔ S² → S⁴. A pair is realized exactly when both
// constant terms vanish and the z¹ coefficients agree.

#include <vector>

#include "lmap/laurent.hpp"

namespace lmap {

class KirkPair {
public:
    KirkPair() = default;

    const ZPoly& sigma1() const noexcept { return sigma1_; }
    const ZPoly& sigma2() const noexcept { return sigma2_; }

    friend KirkPair make_kirk(ZPoly sigma1, ZPoly sigma2);
    friend KirkPair add(const KirkPair& a, const KirkPair& b);
    friend KirkPair negate(const KirkPair& a);
    friend bool operator==(const KirkPair&, const KirkPair&) = default;

private:
    KirkPair(ZPoly s1, ZPoly s2) : sigma1_(std::move(s1)), sigma2_(std::move(s2)) {}

    ZPoly sigma1_;
    ZPoly sigma2_;
};

// Throws InvalidPair (reason NonzeroConstant or Symmetry).
KirkPair make_kirk(ZPoly sigma1, ZPoly sigma2);
KirkPair add(const KirkPair& a, const KirkPair& b);
KirkPair negate(const KirkPair& a);
bool is_trivial(const KirkPair& a);

// z¹-coefficient of σ₁ minus that of σ₂. The overload on raw polynomials does
// not require a valid pair.
Integer difference_map(const KirkPair& a);
Integer difference_map(const ZPoly& sigma1, const ZPoly& sigma2);

// β-vectors of a two-component link; beta[0] holds β¹.
struct JKInput {
    std::vector<Integer> beta1;
    std::vector<Integer> beta2;
    friend bool operator==(const JKInput&, const JKInput&) = default;
};

// σ_k = Σ_i β_k^i·z^i. InvalidPair when β¹ differs between components.
KirkPair jk_kirk(const JKInput& input);

}  // namespace lmap
