#include "lmap/io.hpp"

#include <cstdint>
#include <regex>

#include "lmap/errors.hpp"
#include "lmap/realize.hpp"

namespace lmap::io {

namespace {

const Integer kSafeLimit = Integer(1) << 53;  // largest magnitude written as a JSON number

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw ParseError(std::string("expected an object holding \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

const Json& array_field(const Json& j, const char* key) {
    const Json& a = field(j, key);
    if (!a.is_array()) throw ParseError(std::string("field \"") + key + "\" must be an array");
    return a;
}

long small_int(const Json& j, const char* what) {
    const Integer v = integer_from_json(j);
    if (!v.fits_slong_p()) throw ParseError(std::string(what) + " is out of range");
    return v.get_si();
}

std::size_t count_field(const Json& j, const char* key) {
    const long v = small_int(field(j, key), key);
    if (v < 0) throw ParseError(std::string("field \"") + key + "\" must be nonnegative");
    return static_cast<std::size_t>(v);
}

const char* basis_tag(BasisTag t) { return t == BasisTag::WhitneyAccessory ? "WA" : "PM"; }

const char* disk_tag(DiskKind k) {
    switch (k) {
        case DiskKind::Whitney: return "W";
        case DiskKind::AccessoryPlus: return "A+";
        case DiskKind::AccessoryMinus: return "A-";
    }
    return "?";
}

Json sphere_list(const std::vector<SphereClass>& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(to_json(s));
    return out;
}

Json step_json(const ReductionStep& s) {
    return {{"before", to_json(s.before)}, {"term", to_json(s.term)}, {"after", to_json(s.after)}};
}

// Regenerates a derived document from its embedded inputs and compares.
void require_regenerates(const Json& doc, const Json& fresh, VerifyReport& r, const std::string& what) {
    if (doc != fresh) {
        r.failure = what + " does not match a recomputation from its inputs";
        return;
    }
    r.passed.push_back(what + " recomputed");
}

}  // namespace

Json to_json(const Integer& c) {
    if (abs(c) <= kSafeLimit) return static_cast<std::int64_t>(c.get_si());
    return c.get_str();
}

Json to_json(const LaurentPoly& p) {
    Json coeffs = Json::array();
    for (const auto& [e, c] : p.terms()) coeffs.push_back(Json::array({e, to_json(c)}));
    return {{"coeffs", std::move(coeffs)}};
}

Json to_json(const ZPoly& p) {
    Json c = Json::array();
    for (const auto& x : p.coeffs()) c.push_back(to_json(x));
    return {{"zcoeffs", std::move(c)}};
}

Json to_json(const LaurentMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const SphereClass& c) {
    Json coeffs = Json::array();
    for (const auto& x : c.coeffs()) coeffs.push_back(to_json(x));
    return {{"basis", basis_tag(c.basis().tag)}, {"n", c.n()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const KirkPair& k) { return {{"sigma1", to_json(k.sigma1())}, {"sigma2", to_json(k.sigma2())}}; }

Json to_json(const JKInput& in) {
    Json b1 = Json::array(), b2 = Json::array();
    for (const auto& x : in.beta1) b1.push_back(to_json(x));
    for (const auto& x : in.beta2) b2.push_back(to_json(x));
    return {{"beta1", std::move(b1)}, {"beta2", std::move(b2)}};
}

Json to_json(const Presentation& p) {
    Json pairs = Json::array();
    for (const auto& r : p.pairs) pairs.push_back({{"sign", r.sign}, {"m", r.m}});
    return {{"pairs", std::move(pairs)}, {"f2", to_json(p.f2)}};
}

Json to_json(const DiskRecord& d) {
    return {{"kind", disk_tag(d.kind)}, {"lambda_f2", to_json(d.lambda_f2)}, {"twisting", to_json(d.twisting)}};
}

Json to_json(const IsometryWitness& w) {
    return {{"phi", to_json(w.phi.mat())},     {"g", to_json(w.g)},
            {"n_before", w.n_before},          {"n_after", w.n_after},
            {"original", to_json(w.original)}, {"stabilized", to_json(w.stabilized)}};
}

Json to_json(const UnlinkCertificate& c) {
    Json alphas = Json::array(), trace = Json::array();
    for (const auto& a : c.alphas) alphas.push_back(to_json(a));
    for (const auto& s : c.trace) trace.push_back(step_json(s));
    return {{"witness", to_json(c.witness)},
            {"v_classes", sphere_list(c.v_classes)},
            {"alphas", std::move(alphas)},
            {"trace", std::move(trace)},
            {"transcript", c.transcript}};
}

Json to_json(const Verdict& v, const Presentation& p) {
    return {{"trivial", v.trivial},
            {"kirk", to_json(v.kirk)},
            {"presentation", to_json(p)},
            {"certificate", v.certificate ? to_json(*v.certificate) : Json(nullptr)}};
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        static const std::regex digits("-?[0-9]+");
        const auto& s = j.get_ref<const std::string&>();
        if (!std::regex_match(s, digits)) throw ParseError("\"" + s + "\" is not a decimal integer");
        return Integer(s);
    }
    throw ParseError("expected an integer, got " + std::string(j.type_name()));
}

LaurentPoly laurent_from_json(const Json& j) {
    LaurentPoly p;
    for (const Json& t : array_field(j, "coeffs")) {
        if (!t.is_array() || t.size() != 2) throw ParseError("Laurent term must be an [exponent, coefficient] pair");
        p.add_term(small_int(t[0], "exponent"), integer_from_json(t[1]));
    }
    return p;
}

ZPoly zpoly_from_json(const Json& j) {
    std::vector<Integer> c;
    for (const Json& x : array_field(j, "zcoeffs")) c.push_back(integer_from_json(x));
    return ZPoly(std::move(c));
}

LaurentMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    std::vector<LaurentVector> rows;
    for (const Json& r : j) {
        if (!r.is_array()) throw ParseError("matrix row must be an array");
        LaurentVector row;
        for (const Json& e : r) row.push_back(laurent_from_json(e));
        rows.push_back(std::move(row));
    }
    try {
        return LaurentMatrix::from_rows(rows);
    } catch (const DimensionMismatch& e) {
        throw ParseError(std::string("ragged matrix: ") + e.what());
    }
}

SphereClass sphere_from_json(const Json& j) {
    const Json& tag = field(j, "basis");
    BasisKind basis;
    if (tag == "WA") basis.tag = BasisTag::WhitneyAccessory;
    else if (tag == "PM") basis.tag = BasisTag::AccessoryPM;
    else throw ParseError("basis must be \"WA\" or \"PM\"");
    basis.n = count_field(j, "n");
    LaurentVector coeffs;
    for (const Json& c : array_field(j, "coeffs")) coeffs.push_back(laurent_from_json(c));
    if (coeffs.size() != basis.rank())
        throw ParseError("sphere class over " + std::to_string(basis.n) + " pairs needs " +
                         std::to_string(basis.rank()) + " coefficients");
    return SphereClass(basis, std::move(coeffs));
}

KirkPair kirk_from_json(const Json& j) {
    return make_kirk(zpoly_from_json(field(j, "sigma1")), zpoly_from_json(field(j, "sigma2")));
}

JKInput jk_from_json(const Json& j) {
    JKInput in;
    for (const Json& x : array_field(j, "beta1")) in.beta1.push_back(integer_from_json(x));
    for (const Json& x : array_field(j, "beta2")) in.beta2.push_back(integer_from_json(x));
    return in;
}

Presentation presentation_from_json(const Json& j) {
    Presentation p;
    for (const Json& r : array_field(j, "pairs"))
        p.pairs.push_back({static_cast<int>(small_int(field(r, "sign"), "sign")), small_int(field(r, "m"), "m")});
    p.f2 = sphere_from_json(field(j, "f2"));
    return p;
}

DiskRecord disk_from_json(const Json& j) {
    DiskRecord d;
    const Json& kind = field(j, "kind");
    if (kind == "W") d.kind = DiskKind::Whitney;
    else if (kind == "A+") d.kind = DiskKind::AccessoryPlus;
    else if (kind == "A-") d.kind = DiskKind::AccessoryMinus;
    else throw ParseError("disk kind must be \"W\", \"A+\" or \"A-\"");
    d.lambda_f2 = laurent_from_json(field(j, "lambda_f2"));
    d.twisting = integer_from_json(field(j, "twisting"));
    return d;
}

IsometryWitness witness_from_json(const Json& j) {
    IsometryWitness w;
    LaurentMatrix m = matrix_from_json(field(j, "phi"));
    if (!m.is_square()) throw ParseError("phi must be square");
    w.phi = IsometryMatrix(std::move(m));
    w.g = sphere_from_json(field(j, "g"));
    w.n_before = count_field(j, "n_before");
    w.n_after = count_field(j, "n_after");
    w.original = presentation_from_json(field(j, "original"));
    w.stabilized = presentation_from_json(field(j, "stabilized"));
    return w;
}

UnlinkCertificate certificate_from_json(const Json& j) {
    UnlinkCertificate c;
    c.witness = witness_from_json(field(j, "witness"));
    for (const Json& s : array_field(j, "v_classes")) c.v_classes.push_back(sphere_from_json(s));
    for (const Json& a : array_field(j, "alphas")) c.alphas.push_back(laurent_from_json(a));
    for (const Json& s : array_field(j, "trace"))
        c.trace.push_back({sphere_from_json(field(s, "before")), sphere_from_json(field(s, "term")),
                           sphere_from_json(field(s, "after"))});
    for (const Json& line : array_field(j, "transcript")) {
        if (!line.is_string()) throw ParseError("transcript lines must be strings");
        c.transcript.push_back(line.get<std::string>());
    }
    return c;
}

Json document(const std::string& type, Json body) {
    body["v"] = kSchemaVersion;
    body["type"] = type;
    return body;
}

std::string document_type(const Json& doc, const std::string& expected) {
    if (!doc.is_object()) throw ParseError("document must be a JSON object");
    const Json& v = field(doc, "v");
    if (!v.is_number_integer() || v.get<long>() != kSchemaVersion) throw ParseError("unsupported schema version");
    const Json& t = field(doc, "type");
    if (!t.is_string()) throw ParseError("\"type\" must be a string");
    const std::string type = t.get<std::string>();
    if (!expected.empty() && type != expected)
        throw ParseError("expected a " + expected + " document, got " + type);
    return type;
}

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json invariants_document(const Presentation& p) {
    validate(p);
    const SphereClass pm = change_basis(p.f2, BasisKind::pm(p.n()));
    Json table = Json::array();
    for (std::size_t i = 0; i < p.n(); ++i) {
        const Multiplicities plus = multiplicities(pm.first(i));
        const Multiplicities minus = multiplicities(pm.second(i));
        table.push_back({{"pair", i + 1},
                         {"sign", p.pairs[i].sign},
                         {"m", p.pairs[i].m},
                         {"m_plus", to_json(plus.primary)},
                         {"n_plus", to_json(plus.secondary)},
                         {"m_minus", to_json(minus.primary)},
                         {"n_minus", to_json(minus.secondary)}});
    }
    return document("Invariants",
                    {{"kirk", to_json(invariants_of(p))}, {"multiplicities", table}, {"presentation", to_json(p)}});
}

Json expansion_document(const LaurentPoly& a, std::size_t depth, std::size_t zpower) {
    Json coeffs = Json::array();
    for (const auto& c : i_adic_expand(a, depth)) coeffs.push_back(to_json(c));
    const auto order = i_adic_order(a);
    return document("Expansion", {{"input", to_json(a)},
                                  {"depth", depth},
                                  {"i_adic", std::move(coeffs)},
                                  {"order", order ? Json(*order) : Json("infinite")},
                                  {"zpower", zpower},
                                  {"z_decomposition", to_json(z_decompose(a, zpower))}});
}

VerifyReport verify_document(const Json& doc) {
    VerifyReport r;
    try {
        r.type = document_type(doc);
        r.passed.push_back("schema version and type tag");
        const std::string& t = r.type;
        if (t == "LaurentPoly") {
            require_regenerates(doc, document(t, to_json(laurent_from_json(doc))), r, "canonical form");
        } else if (t == "ZPoly") {
            require_regenerates(doc, document(t, to_json(zpoly_from_json(doc))), r, "canonical form");
        } else if (t == "SphereClass") {
            require_regenerates(doc, document(t, to_json(sphere_from_json(doc))), r, "canonical form");
        } else if (t == "KirkPair") {
            const KirkPair k = kirk_from_json(doc);
            r.passed.push_back("constant terms vanish and z-coefficients agree");
            require_regenerates(doc, document(t, to_json(k)), r, "canonical form");
        } else if (t == "JKInput") {
            jk_kirk(jk_from_json(doc));
            r.passed.push_back("Sato-Levine entries agree");
        } else if (t == "Presentation") {
            validate(presentation_from_json(doc));
            r.passed.push_back("presentation invariants");
        } else if (t == "DiskRecord") {
            const DiskRecord d = disk_from_json(doc);
            multiplicities(d.lambda_f2);
            r.passed.push_back("multiplicity residual in I^2");
        } else if (t == "IsometryWitness") {
            const IsometryWitness w = witness_from_json(doc);
            if (const std::string err = check_witness(w); !err.empty()) {
                r.failure = err;
                return r;
            }
            r.passed.push_back("isometry, congruence mod z, phi(g) = f2");
        } else if (t == "UnlinkCertificate") {
            const UnlinkCertificate c = certificate_from_json(doc);
            if (const std::string err = check_certificate(c); !err.empty()) {
                r.failure = err;
                return r;
            }
            r.passed.push_back("witness and trace replay");
            require_regenerates(doc, document(t, to_json(reduce(c.witness.original, c.witness))), r,
                                "certificate transcript");
        } else if (t == "Verdict") {
            const Presentation p = presentation_from_json(field(doc, "presentation"));
            require_regenerates(doc, document(t, to_json(classify(p), p)), r, "verdict");
        } else if (t == "Invariants") {
            const Presentation p = presentation_from_json(field(doc, "presentation"));
            require_regenerates(doc, invariants_document(p), r, "invariants");
        } else if (t == "Expansion") {
            const LaurentPoly a = laurent_from_json(field(doc, "input"));
            require_regenerates(doc, expansion_document(a, count_field(doc, "depth"), count_field(doc, "zpower")), r,
                                "expansion");
        } else {
            r.failure = "unknown document type " + t;
        }
    } catch (const Error& e) {
        r.failure = e.what();
    } catch (const Json::exception& e) {
        r.failure = std::string("malformed document: ") + e.what();
    } catch (const std::invalid_argument& e) {
        r.failure = e.what();
    }
    return r;
}

}  // namespace lmap::io
