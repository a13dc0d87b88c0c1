#include <doctest.h>

#include "generators.hpp"
#include "lmap/errors.hpp"
#include "lmap/realize.hpp"
#include "lmap/unlink.hpp"

using namespace lmap;

namespace {

const LaurentPoly one = LaurentPoly::one();
const LaurentPoly x = LaurentPoly::x();
const LaurentPoly z = LaurentPoly::z();

Presentation condition_iii_example() {
    return {{{1, 0}}, -(one - x) * SphereClass::whitney(1, 0) + z * SphereClass::accessory(1, 0)};
}

SphereClass in_wa(const SphereClass& c) { return change_basis(c, BasisKind::wa(c.n())); }

// Witness invariants recomputed from the Gram matrix alone.
void independently_verify(const Presentation& p, const IsometryWitness& w) {
    const std::size_t n = w.n_after;
    const LaurentMatrix gram = metabolic_form(BasisKind::wa(n)).gram();
    const LaurentMatrix& phi = w.phi.mat();
    REQUIRE(phi.rows() == 2 * n);
    CHECK(phi.transpose() * gram * phi.involute() == gram);
    for (std::size_t i = 0; i < 2 * n; ++i)
        for (std::size_t j = 0; j < 2 * n; ++j) {
            const LaurentPoly d = phi(i, j) - (i == j ? one : LaurentPoly{});
            // z | d iff the first two (1−x)-adic coefficients vanish.
            const auto t = oracle::taylor_at_one(d, 2);
            CHECK(t[0] == 0);
            CHECK(t[1] == 0);
        }
    for (std::size_t i = 0; i < n; ++i) CHECK(w.g.second(i).is_zero());
    CHECK(SphereClass(BasisKind::wa(n), w.phi.apply(w.g.coeffs())) == in_wa(w.stabilized.f2));
    CHECK(w.original == p);
}

}  // namespace

TEST_CASE("stabilize") {
    const Presentation e = stabilize(empty_presentation(), false);
    CHECK(e.n() == 1);
    CHECK(e.pairs[0] == PairRecord{1, 0});
    CHECK(e.f2.is_zero());

    const Presentation a{{{1, 1}}, SphereClass::accessory(1, 0)};
    const Presentation s = stabilize(a, true);
    CHECK(s.n() == 2);
    CHECK(s.pairs[1] == PairRecord{1, 1});
    CHECK(s.f2 == SphereClass::accessory(2, 0) + SphereClass::whitney(2, 1));
    CHECK_NOTHROW(validate(s));

    const Presentation c = condition_iii_example();
    CHECK(lambda(stabilize(c, true).f2, stabilize(c, true).f2) == lambda(c.f2, c.f2));
}

TEST_CASE("stabilize keeps the old block orthogonal") {
    oracle::Gen g(201);
    for (int t = 0; t < 40; ++t) {
        const Presentation p = gen::random_presentation(g, 3, 3, 3);
        const Presentation s = stabilize(p, false);
        CHECK(lambda(s.f2, s.f2) == lambda(p.f2, p.f2));
        CHECK(invariants_of(s) == invariants_of(p));
    }
}

TEST_CASE("construct_isometry examples") {
    const Presentation w{{{1, 2}, {-1, 1}},
                         (one + x) * SphereClass::whitney(2, 0) - LaurentPoly::x(-2) * SphereClass::whitney(2, 1)};
    const IsometryWitness id = construct_isometry(w);
    CHECK(id.phi == IsometryMatrix::identity(4));
    CHECK(id.g == w.f2);
    CHECK(id.n_before == id.n_after);
    CHECK(check_witness(id).empty());

    const Presentation c = condition_iii_example();
    const IsometryWitness cw = construct_isometry(c);
    CHECK(cw.n_before == 1);
    CHECK(cw.n_after == 3);
    CHECK(check_witness(cw).empty());
    independently_verify(c, cw);

    CHECK_THROWS_AS(construct_isometry(Presentation{{{1, 1}}, SphereClass::accessory(1, 0)}), ConditionsNotMet);
}

TEST_CASE("check_witness rejects tampering") {
    const IsometryWitness w = construct_isometry(condition_iii_example());
    IsometryWitness bad = w;
    bad.g = bad.g + SphereClass::whitney(bad.n_after, 0);
    CHECK_FALSE(check_witness(bad).empty());
    bad = w;
    LaurentMatrix m = bad.phi.mat();
    m(0, 0) += z;
    bad.phi = IsometryMatrix(m);
    CHECK_FALSE(check_witness(bad).empty());
    bad = w;
    bad.stabilized.pairs.back().m = 1;
    CHECK_FALSE(check_witness(bad).empty());
}

TEST_CASE("reduce examples") {
    const Presentation zero{{{1, 0}}, SphereClass::zero(BasisKind::wa(1))};
    const UnlinkCertificate c0 = reduce(zero, construct_isometry(zero));
    CHECK(c0.trace.empty());
    CHECK(check_certificate(c0).empty());

    const Presentation w{{{1, 1}}, SphereClass::whitney(1, 0)};
    const UnlinkCertificate c1 = reduce(w, construct_isometry(w));
    REQUIRE(c1.trace.size() == 1);
    CHECK(c1.alphas == std::vector<LaurentPoly>{one});
    CHECK(c1.trace[0].after.is_zero());

    const Presentation c = condition_iii_example();
    const UnlinkCertificate cc = reduce(c, construct_isometry(c));
    REQUIRE_FALSE(cc.trace.empty());
    CHECK(cc.trace.back().after.is_zero());
    CHECK(check_certificate(cc).empty());
    for (const auto& vi : cc.v_classes)
        for (const auto& vj : cc.v_classes) CHECK(lambda(vi, vj).is_zero());

    CHECK_THROWS_AS(reduce(w, construct_isometry(c)), WitnessInvalid);
}

TEST_CASE("classify examples") {
    const Verdict e = classify(empty_presentation());
    CHECK(e.trivial);
    CHECK(is_trivial(e.kirk));

    const Verdict fr = classify(Presentation{{{1, 1}}, SphereClass::accessory_plus(1, 0)});
    CHECK_FALSE(fr.trivial);
    CHECK(fr.kirk == make_kirk(ZPoly{0, 1}, ZPoly{0, 1}));
    CHECK_FALSE(fr.certificate);

    const Verdict c = classify(condition_iii_example());
    CHECK(c.trivial);
    REQUIRE(c.certificate);
    CHECK(check_certificate(*c.certificate).empty());
}

TEST_CASE("generated condition (iii) instances") {
    oracle::Gen g(202);
    for (int t = 0; t < 40; ++t) {
        const Presentation p = gen::condition_iii_presentation(g, 4);
        REQUIRE(check_unlinking_conditions(p).condition_iii);
        const IsometryWitness w = construct_isometry(p);
        CHECK(check_witness(w).empty());
        independently_verify(p, w);
        const UnlinkCertificate cert = reduce(p, w);
        CHECK(check_certificate(cert).empty());
        if (!cert.trace.empty()) CHECK(cert.trace.back().after.is_zero());
        const std::size_t n = w.n_after;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const SphereClass dual(BasisKind::wa(n), w.phi.apply(SphereClass::accessory(n, j).coeffs()));
                CHECK(lambda(cert.v_classes[i], dual) == (i == j ? z : LaurentPoly{}));
            }
    }
}

TEST_CASE("classify(realize(k)).kirk = k") {
    oracle::Gen g(203);
    for (int t = 0; t < 40; ++t) {
        std::vector<Integer> a = g.zcoeffs(4, 6), b = g.zcoeffs(4, 6);
        a[0] = b[0] = 0;
        b[1] = a[1];
        const KirkPair k = make_kirk(ZPoly(a), ZPoly(b));
        const Verdict v = classify(realize(k));
        CHECK(v.kirk == k);
        CHECK(v.trivial == is_trivial(k));
    }
}
