#include <doctest.h>

#include "generators.hpp"
#include "lmap/errors.hpp"
#include "lmap/io.hpp"
#include "lmap/realize.hpp"

using namespace lmap;
using io::Json;

namespace {

const LaurentPoly one = LaurentPoly::one();
const LaurentPoly x = LaurentPoly::x();
const LaurentPoly z = LaurentPoly::z();

Presentation condition_iii_example() {
    return {{{1, 0}}, -(one - x) * SphereClass::whitney(1, 0) + z * SphereClass::accessory(1, 0)};
}

// Serialize, print, parse, read back.
template <class T, class Reader>
T round_trip(const T& value, const std::string& type, Reader read) {
    const std::string text = io::dump(io::document(type, io::to_json(value)));
    const Json doc = io::parse(text);
    CHECK(io::document_type(doc, type) == type);
    return read(doc);
}

}  // namespace

TEST_CASE("integer encoding") {
    CHECK(io::to_json(Integer(5)) == Json(5));
    const Integer limit("9007199254740992");  // 2^53
    CHECK(io::to_json(limit).is_number_integer());
    CHECK(io::to_json(limit + 1) == Json("9007199254740993"));
    CHECK(io::to_json(-(limit + 1)) == Json("-9007199254740993"));
    const Integer big("123456789012345678901234567890");
    CHECK(io::integer_from_json(io::to_json(big)) == big);
    CHECK(io::integer_from_json(Json("-42")) == -42);
    CHECK_THROWS_AS(io::integer_from_json(Json("4x2")), ParseError);
    CHECK_THROWS_AS(io::integer_from_json(Json(1.5)), ParseError);
}

TEST_CASE("LaurentPoly and ZPoly encoding") {
    const LaurentPoly p{{-2, 3}, {0, -1}, {5, 7}};
    CHECK(io::to_json(p) == Json::parse(R"({"coeffs": [[-2, 3], [0, -1], [5, 7]]})"));
    CHECK(round_trip(p, "LaurentPoly", io::laurent_from_json) == p);
    CHECK(round_trip(LaurentPoly{}, "LaurentPoly", io::laurent_from_json).is_zero());
    const ZPoly q{0, 4, -1};
    CHECK(io::to_json(q) == Json::parse(R"({"zcoeffs": [0, 4, -1]})"));
    CHECK(round_trip(q, "ZPoly", io::zpoly_from_json) == q);
}

TEST_CASE("round trips on random artifacts") {
    oracle::Gen g(401);
    for (int t = 0; t < 50; ++t) {
        LaurentPoly big = g.laurent(4, 9);
        big.add_term(9, Integer("1000000000000000000000") * g.integer(5));
        CHECK(round_trip(big, "LaurentPoly", io::laurent_from_json) == big);

        const Presentation p = gen::random_presentation(g, 4, 3, 4);
        CHECK(round_trip(p, "Presentation", io::presentation_from_json) == p);
        CHECK(round_trip(p.f2, "SphereClass", io::sphere_from_json) == p.f2);

        std::vector<Integer> a = g.zcoeffs(5, 1000), b = g.zcoeffs(5, 1000);
        a[0] = b[0] = 0;
        b[1] = a[1];
        const KirkPair k = make_kirk(ZPoly(a), ZPoly(b));
        CHECK(round_trip(k, "KirkPair", io::kirk_from_json) == k);

        const DiskRecord d{g.coin() ? DiskKind::Whitney : DiskKind::AccessoryMinus, g.laurent(3, 5),
                           Integer(g.uniform(-4, 4))};
        CHECK(round_trip(d, "DiskRecord", io::disk_from_json) == d);

        const JKInput jk{g.zcoeffs(3, 5), g.zcoeffs(3, 5)};
        const JKInput back = round_trip(jk, "JKInput", io::jk_from_json);
        CHECK(back.beta1 == jk.beta1);
        CHECK(back.beta2 == jk.beta2);
    }
}

TEST_CASE("witness and certificate round trips") {
    oracle::Gen g(402);
    for (int t = 0; t < 10; ++t) {
        const Presentation p = t == 0 ? condition_iii_example() : gen::condition_iii_presentation(g, 3);
        const IsometryWitness w = construct_isometry(p);
        CHECK(round_trip(w, "IsometryWitness", io::witness_from_json) == w);
        const UnlinkCertificate c = reduce(p, w);
        CHECK(round_trip(c, "UnlinkCertificate", io::certificate_from_json) == c);
    }
}

TEST_CASE("dump is byte-stable") {
    const Json a = io::document("Presentation", io::to_json(condition_iii_example()));
    const std::string s = io::dump(a);
    CHECK(s.back() == '\n');
    CHECK(io::dump(io::parse(s)) == s);
}

TEST_CASE("parse and schema errors") {
    CHECK_THROWS_AS(io::parse("{\"v\": 1,"), ParseError);
    CHECK_THROWS_AS(io::document_type(Json::array()), ParseError);
    CHECK_THROWS_AS(io::document_type(Json::parse(R"({"type": "ZPoly"})")), ParseError);
    CHECK_THROWS_AS(io::document_type(Json::parse(R"({"v": 2, "type": "ZPoly"})")), ParseError);
    CHECK_THROWS_AS(io::document_type(Json::parse(R"({"v": 1, "type": "ZPoly"})"), "KirkPair"), ParseError);
    CHECK_THROWS_AS(io::laurent_from_json(Json::parse(R"({"coeffs": [[1]]})")), ParseError);
    CHECK_THROWS_AS(io::sphere_from_json(Json::parse(R"({"basis": "XY", "n": 0, "coeffs": []})")), ParseError);
    CHECK_THROWS_AS(io::sphere_from_json(Json::parse(R"({"basis": "WA", "n": 1, "coeffs": []})")), ParseError);
    CHECK_THROWS_AS(io::matrix_from_json(Json::parse(R"([[{"coeffs": []}], []])")), ParseError);
    CHECK_THROWS_AS(io::disk_from_json(Json::parse(R"({"kind": "B", "lambda_f2": {"coeffs": []}, "twisting": 0})")),
                    ParseError);
    // Semantic checks belong to the library, not the reader.
    CHECK_THROWS_AS(io::kirk_from_json(Json::parse(R"({"sigma1": {"zcoeffs": [0, 1]}, "sigma2": {"zcoeffs": [0, 2]}})")),
                    InvalidPair);
}

TEST_CASE("derived documents") {
    const Presentation fr{{{1, 1}}, SphereClass::accessory_plus(1, 0)};
    const Json inv = io::invariants_document(fr);
    CHECK(io::kirk_from_json(inv.at("kirk")) == make_kirk(ZPoly{0, 1}, ZPoly{0, 1}));
    CHECK(inv.at("multiplicities").at(0).at("m_plus") == 1);
    CHECK(inv.at("multiplicities").at(0).at("n_plus") == 0);

    const Json e = io::expansion_document(z, 3, 1);
    CHECK(e.at("i_adic") == Json::parse("[0, 0, -1]"));
    CHECK(e.at("order") == 2);
    CHECK(io::zpoly_from_json(e.at("z_decomposition")) == ZPoly{1});
    CHECK(io::expansion_document(LaurentPoly{}, 2, 0).at("order") == "infinite");
    CHECK_THROWS_AS(io::expansion_document(x, 2, 0), NotInCone);
}

TEST_CASE("verify_document") {
    const Presentation c = condition_iii_example();
    const Verdict v = classify(c);
    const Json vdoc = io::document("Verdict", io::to_json(v, c));
    CHECK(io::verify_document(vdoc).ok());

    const Json cdoc = io::document("UnlinkCertificate", io::to_json(*v.certificate));
    CHECK(io::verify_document(cdoc).ok());
    Json tampered = cdoc;
    tampered["witness"]["phi"][0][0] = io::to_json(one + z);
    const io::VerifyReport r = io::verify_document(tampered);
    CHECK_FALSE(r.ok());
    CHECK(r.failure.find("isometry") != std::string::npos);

    Json kd = io::document("KirkPair", io::to_json(make_kirk(ZPoly{0, 1}, ZPoly{0, 1})));
    CHECK(io::verify_document(kd).ok());
    kd["sigma2"]["zcoeffs"][1] = 2;
    CHECK_FALSE(io::verify_document(kd).ok());

    CHECK_FALSE(io::verify_document(Json::parse(R"({"v": 1, "type": "Nope"})")).ok());
    CHECK_FALSE(io::verify_document(Json::parse(R"({"v": 1, "type": "Presentation"})")).ok());
}
