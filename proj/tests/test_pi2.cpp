#include <doctest.h>

#include "lmap/errors.hpp"
#include "lmap/pi2.hpp"
#include "lmap/presentation.hpp"
#include "oracles.hpp"

using namespace lmap;

namespace {

const LaurentPoly one = LaurentPoly::one();
const LaurentPoly x = LaurentPoly::x();
const LaurentPoly z = LaurentPoly::z();

SphereClass random_class(oracle::Gen& gen, BasisKind b) {
    LaurentVector c(b.rank());
    for (auto& e : c) e = gen.laurent(3, 5);
    return SphereClass(b, c);
}

// λ straight from the Gram matrix, for comparison with the structured sum.
LaurentPoly dense_lambda(const SphereClass& a, const SphereClass& b) {
    return evaluate(metabolic_form(a.basis()), a.coeffs(), b.coeffs());
}

}  // namespace

TEST_CASE("metabolic_form") {
    const LaurentMatrix wa = metabolic_form(BasisKind::wa(1)).gram();
    CHECK(wa == LaurentMatrix::from_rows({{LaurentPoly{}, z}, {z, z}}));
    const LaurentMatrix pm = metabolic_form(BasisKind::pm(1)).gram();
    CHECK(pm == LaurentMatrix::from_rows({{z, LaurentPoly{}}, {LaurentPoly{}, -z}}));
    CHECK(metabolic_form(BasisKind::wa(0)).dim() == 0);
}

TEST_CASE("change_basis") {
    const SphereClass w = change_basis(SphereClass::whitney(1, 0), BasisKind::pm(1));
    CHECK(w.coeffs() == LaurentVector{one, -one});
    CHECK(change_basis(SphereClass::zero(BasisKind::wa(2)), BasisKind::pm(2)).is_zero());
    CHECK(change_basis(SphereClass::accessory_plus(1, 0), BasisKind::wa(1)) == SphereClass::accessory(1, 0));
    CHECK_THROWS_AS(change_basis(SphereClass::whitney(1, 0), BasisKind::pm(2)), DimensionMismatch);

    const SphereClass sw = change_basis(SphereClass::whitney(1, 0), BasisKind::pm(1));
    CHECK(lambda(sw, sw).is_zero());
    CHECK(lambda(sw, SphereClass::accessory_plus(1, 0)) == z);
    CHECK(lambda(sw, SphereClass::accessory_minus(1, 0)) == z);
}

TEST_CASE("lambda") {
    CHECK(lambda(SphereClass::whitney(1, 0), SphereClass::accessory(1, 0)) == z);
    for (long k : {-3L, 0L, 2L}) {
        const SphereClass a = LaurentPoly::x(k) * SphereClass::accessory(1, 0);
        CHECK(lambda(a, a) == z);
    }
    CHECK(lambda(SphereClass::whitney(2, 0), SphereClass::whitney(2, 1)).is_zero());
    CHECK_THROWS_AS(lambda(SphereClass::whitney(2, 0), SphereClass::whitney(1, 0)), DimensionMismatch);
}

TEST_CASE("whitney_disk_pairing") {
    CHECK(whitney_disk_pairing(SphereClass::accessory(2, 1)) == LaurentVector{LaurentPoly{}, one});
    const SphereClass ws = (one + x) * SphereClass::whitney(2, 0) + LaurentPoly::x(-2) * SphereClass::whitney(2, 1);
    CHECK(whitney_disk_pairing(ws) == LaurentVector(2));
    CHECK(whitney_disk_pairing(z * SphereClass::accessory(2, 0)) == LaurentVector{z, LaurentPoly{}});
}

TEST_CASE("whitney_disk_pairing relates to λ with S_W") {
    oracle::Gen gen(8);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 4));
        const SphereClass c = random_class(gen, gen.coin() ? BasisKind::wa(n) : BasisKind::pm(n));
        const LaurentVector b = whitney_disk_pairing(c);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(lambda(c, SphereClass::whitney(n, i)) == z * b[i]);
            CHECK(lambda(SphereClass::whitney(n, i), c) == z * involute(b[i]));
        }
    }
}

TEST_CASE("check_unlinking_conditions") {
    const SphereClass ws = (one - x) * SphereClass::whitney(2, 0) + SphereClass::whitney(2, 1);
    CHECK(check_unlinking_conditions(ws) == UnlinkingConditions{true, true});
    const SphereClass f = -(one - x) * SphereClass::whitney(1, 0) + z * SphereClass::accessory(1, 0);
    CHECK(lambda(f, f).is_zero());
    CHECK(check_unlinking_conditions(f) == UnlinkingConditions{false, true});
    CHECK(check_unlinking_conditions(SphereClass::accessory(1, 0)) == UnlinkingConditions{false, false});
    // Pairing in zΛ but not isotropic.
    CHECK(check_unlinking_conditions(z * SphereClass::accessory(1, 0)) == UnlinkingConditions{false, false});
    const Presentation p{{{1, 0}}, f};
    CHECK(check_unlinking_conditions(p) == UnlinkingConditions{false, true});
}

TEST_CASE("check_metabolic_collection") {
    CollectionLedger standard{LaurentMatrix(3, 3), LaurentMatrix(3, 3)};
    CHECK(check_metabolic_collection(standard));
    CollectionLedger bad = standard;
    bad.whitney_accessory(0, 1) = one;
    CHECK_FALSE(check_metabolic_collection(bad));
    CHECK(check_metabolic_collection(CollectionLedger{}));
}

TEST_CASE("metabolic form divided by z is unimodular") {
    for (std::size_t n = 0; n <= 6; ++n) {
        CHECK(is_unimodular(divide_form_by_z(metabolic_form(BasisKind::wa(n)))));
        CHECK(is_unimodular(divide_form_by_z(metabolic_form(BasisKind::pm(n)))));
    }
}

TEST_CASE("change_basis is an isometry and round-trips") {
    oracle::Gen gen(9);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 5));
        const SphereClass a = random_class(gen, BasisKind::wa(n)), b = random_class(gen, BasisKind::wa(n));
        const SphereClass pa = change_basis(a, BasisKind::pm(n)), pb = change_basis(b, BasisKind::pm(n));
        CHECK(change_basis(pa, BasisKind::wa(n)) == a);
        CHECK(dense_lambda(a, b) == dense_lambda(pa, pb));
        CHECK(lambda(a, b) == dense_lambda(a, b));
        CHECK(lambda(pa, pb) == dense_lambda(pa, pb));
        CHECK(lambda(a, pb) == lambda(a, b));
        CHECK(lambda(b, a) == involute(lambda(a, b)));
    }
}

TEST_CASE("whitney_disk_pairing exactness") {
    oracle::Gen gen(10);
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t i = 0; i < n; ++i) {
            LaurentVector e(n);
            e[i] = one;
            CHECK(whitney_disk_pairing(SphereClass::accessory(n, i)) == e);
        }
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 4));
        SphereClass c = random_class(gen, BasisKind::wa(n));
        const LaurentVector b = whitney_disk_pairing(c);
        for (std::size_t i = 0; i < n; ++i) c -= b[i] * SphereClass::accessory(n, i);
        CHECK(whitney_disk_pairing(c) == LaurentVector(n));
        for (std::size_t i = 0; i < n; ++i) CHECK(c.second(i).is_zero());
    }
}
