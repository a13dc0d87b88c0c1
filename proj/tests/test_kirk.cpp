#include <doctest.h>

#include "lmap/errors.hpp"
#include "lmap/kirk.hpp"
#include "oracles.hpp"

using namespace lmap;

namespace {

InvalidPair::Reason reason_of(const ZPoly& a, const ZPoly& b) {
    try {
        make_kirk(a, b);
    } catch (const InvalidPair& e) {
        return e.reason();
    }
    FAIL("expected InvalidPair");
    return InvalidPair::Reason::Symmetry;
}

KirkPair random_valid(oracle::Gen& gen, std::size_t degree, long bound) {
    std::vector<Integer> a = gen.zcoeffs(degree, bound), b = gen.zcoeffs(degree, bound);
    a[0] = b[0] = 0;
    if (degree >= 1) b[1] = a[1];
    return make_kirk(ZPoly(a), ZPoly(b));
}

}  // namespace

TEST_CASE("make_kirk") {
    CHECK_NOTHROW(make_kirk(ZPoly{0, 1}, ZPoly{0, 1}));
    CHECK(reason_of(ZPoly{0, 1}, ZPoly{0, 2}) == InvalidPair::Reason::Symmetry);
    CHECK(reason_of(ZPoly{1, 1}, ZPoly{0, 1}) == InvalidPair::Reason::NonzeroConstant);
    CHECK(is_trivial(make_kirk(ZPoly{}, ZPoly{})));
}

TEST_CASE("add and negate") {
    const KirkPair fr = make_kirk(ZPoly{0, 1}, ZPoly{0, 1});
    CHECK(add(fr, fr) == make_kirk(ZPoly{0, 2}, ZPoly{0, 2}));
    CHECK(add(fr, KirkPair{}) == fr);
    CHECK(add(make_kirk(ZPoly{0, 1, 1}, ZPoly{0, 1}), make_kirk(ZPoly{0, 1}, ZPoly{0, 1, 1})) ==
          make_kirk(ZPoly{0, 2, 1}, ZPoly{0, 2, 1}));
    CHECK(negate(fr) == make_kirk(ZPoly{0, -1}, ZPoly{0, -1}));
    CHECK(negate(KirkPair{}) == KirkPair{});
    CHECK(negate(negate(fr)) == fr);
    CHECK(is_trivial(add(fr, negate(fr))));
}

TEST_CASE("is_trivial") {
    CHECK(is_trivial(KirkPair{}));
    CHECK_FALSE(is_trivial(make_kirk(ZPoly{0, 1}, ZPoly{0, 1})));
    CHECK_FALSE(is_trivial(make_kirk(ZPoly{0, 0, 1}, ZPoly{0, 0, 1, 1})));
}

TEST_CASE("difference_map") {
    CHECK(difference_map(ZPoly{0, 1}, ZPoly{0, 2}) == -1);
    CHECK(difference_map(make_kirk(ZPoly{0, 5, 3}, ZPoly{0, 5})) == 0);
    CHECK(difference_map(ZPoly{0, 3, 0, 0, 0, 1}, ZPoly{0, 3}) == 0);
}

TEST_CASE("jk_kirk") {
    CHECK(jk_kirk({{1}, {1}}) == make_kirk(ZPoly{0, 1}, ZPoly{0, 1}));
    CHECK(is_trivial(jk_kirk({{}, {}})));
    CHECK(jk_kirk({{1, 2}, {1, 0}}) == make_kirk(ZPoly{0, 1, 2}, ZPoly{0, 1}));
    CHECK_THROWS_AS(jk_kirk({{1}, {2}}), InvalidPair);
    CHECK(is_trivial(jk_kirk({{0, 0, 0}, {0}})));
}

TEST_CASE("valid pairs form an abelian group") {
    oracle::Gen gen(12);
    for (int t = 0; t < 200; ++t) {
        const KirkPair a = random_valid(gen, 6, 20), b = random_valid(gen, 6, 20), c = random_valid(gen, 6, 20);
        CHECK(add(a, b) == add(b, a));
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
        CHECK(add(a, negate(a)) == KirkPair{});
        CHECK_NOTHROW(make_kirk(add(a, b).sigma1(), add(a, b).sigma2()));
    }
}

TEST_CASE("exactness: difference_map vanishes exactly on valid pairs") {
    oracle::Gen gen(13);
    for (int t = 0; t < 500; ++t) {
        std::vector<Integer> a = gen.zcoeffs(8, 3), b = gen.zcoeffs(8, 3);
        a[0] = b[0] = 0;
        const ZPoly s1(a), s2(b);
        bool valid = true;
        try {
            make_kirk(s1, s2);
        } catch (const InvalidPair&) {
            valid = false;
        }
        CHECK(valid == (difference_map(s1, s2) == 0));
    }
}
