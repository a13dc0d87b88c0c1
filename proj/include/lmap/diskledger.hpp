#pragma once

// Bookkeeping for Whitney and accessory disks: multiplicities of λ(D, f₂),
// the effect of Whitney moves and boundary twists, and twisting sums.
//
// Expansions use λ ≡ m + n·(1−x) + c₂·(1−x)² mod I³. Since
// z = −x⁻¹·(1−x)² ≡ −(1−x)² mod I³, the z-coefficient q of an expansion
// m + n(1−x) + q·z is q = −c₂.

#include "lmap/laurent.hpp"
#include "lmap/presentation.hpp"

namespace lmap {

enum class DiskKind { Whitney, AccessoryPlus, AccessoryMinus };

struct DiskRecord {
    DiskKind kind = DiskKind::Whitney;
    LaurentPoly lambda_f2;
    Integer twisting = 0;

    Integer primary() const;
    Integer secondary() const;
    bool framed() const { return twisting == 0; }

    friend bool operator==(const DiskRecord&, const DiskRecord&) = default;
};

struct Multiplicities {
    Integer primary;
    Integer secondary;
    LaurentPoly residual;  // in I²
    friend bool operator==(const Multiplicities&, const Multiplicities&) = default;
};

Multiplicities multiplicities(const LaurentPoly& lambda_f2);

// λ(D', f₂) = (1−x)·λ(U, f₂) for the disk D' produced by a Whitney move.
LaurentPoly whitney_move_effect(const LaurentPoly& u_lambda);

// k boundary twists of the Whitney disk w around the accessory disk a.
// KindMismatch unless w is Whitney and a is an accessory disk.
DiskRecord double_boundary_twist(const DiskRecord& w, const DiskRecord& a, const Integer& k);

// ω(W) = ω(A⁺) + ω(A⁻).
Integer join_accessory_twists(const DiskRecord& a_plus, const DiskRecord& a_minus);

// ω of the other accessory disk: ω(W) + ω(a).
Integer derive_accessory_twist(const DiskRecord& w, const DiskRecord& a);

// Σ_i [(n_i⁺² − n_i⁻²) + (m_i⁺n_i⁺ − m_i⁻n_i⁻) + 2(m_i⁺q_i⁺ − m_i⁻q_i⁻)] from
// the expansions α_i^± ≡ m_i^± + n_i^±(1−x) + q_i^±·z mod I³. Checked against
// the z²-coefficient of λ(f₂, f₂); InternalVerificationFailure on mismatch.
Integer step8_z2_coefficient(const Presentation& p);

// Whether Σ_i (n_i⁺ − n_i⁻) is even. Requires λ(f₂, f₂) = 0, m_i⁺ = m_i⁻ ∈ {0, 1},
// n_i⁺ = n_i⁻ when m_i = 1 and n_i⁺ − n_i⁻ ∈ {0, ±1} when m_i = 0
// (PreconditionViolated otherwise); under these the answer is always true,
// which is asserted.
bool parity_claim(const Presentation& p);

}  // namespace lmap
