#include "lmap/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "lmap/errors.hpp"
#include "lmap/io.hpp"
#include "lmap/realize.hpp"

namespace lmap::cli {

namespace {

using io::Json;

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

std::string read_input(const std::string& path, Streams& s) {
    if (path == "-") return {std::istreambuf_iterator<char>(s.in), std::istreambuf_iterator<char>()};
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open " + path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text, Streams& s) {
    if (path == "-") {
        s.out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

Json load(const std::string& path, const std::string& type, Streams& s) {
    Json doc = io::parse(read_input(path, s));
    io::document_type(doc, type);
    return doc;
}

std::string join_lines(const std::vector<std::string>& lines) {
    std::string out;
    for (const auto& l : lines) out += l + "\n";
    return out;
}

std::string check_line(const std::string& claim, bool ok) { return "CHECK " + claim + " : " + (ok ? "OK" : "FAIL"); }

int cmd_invariants(const std::string& input, const std::string& output, Streams& s) {
    const Presentation p = io::presentation_from_json(load(input, "Presentation", s));
    write_output(output, io::dump(io::invariants_document(p)), s);
    return kOk;
}

int cmd_classify(const std::string& input, const std::string& output, const std::string& cert_path, Streams& s) {
    const Presentation p = io::presentation_from_json(load(input, "Presentation", s));
    const Verdict v = classify(p);
    write_output(output, io::dump(io::document("Verdict", io::to_json(v, p))), s);
    if (!cert_path.empty()) {
        if (v.certificate)
            write_output(cert_path, io::dump(io::document("UnlinkCertificate", io::to_json(*v.certificate))), s);
        else
            s.err << "no certificate: " << (v.trivial ? "condition (iii) does not hold" : "the link map is nontrivial")
                  << "\n";
    }
    return kOk;
}

int cmd_realize(const std::string& input, const std::string& output, const std::string& transcript, Streams& s) {
    const KirkPair target = io::kirk_from_json(load(input, "KirkPair", s));
    const Presentation p = realize(target);
    write_output(output, io::dump(io::document("Presentation", io::to_json(p))), s);

    const ZPoly s1 = sigma1_of(p), s2 = sigma2_of(p);
    std::vector<std::string> lines{
        "NOTE pair i carries alpha^sign = P_m (or (1-x)*beta for m = 0 corrections) and 0 on the other accessory sphere",
        check_line("presentation invariants", true),
        check_line("sigma1 = " + target.sigma1().to_string(), s1 == target.sigma1()),
        check_line("sigma2 = " + target.sigma2().to_string(), s2 == target.sigma2()),
        "pairs: " + std::to_string(p.n()),
    };
    const std::string text = join_lines(lines);
    if (transcript.empty()) s.err << text;
    else write_output(transcript, text, s);
    return kOk;
}

int cmd_verify(const std::string& input, const std::string& output, Streams& s) {
    Json doc;
    try {
        doc = io::parse(read_input(input, s));
    } catch (const ParseError& e) {
        s.err << "FAIL parse: " << e.what() << "\n";
        return kParseError;
    }
    const io::VerifyReport r = io::verify_document(doc);
    std::ostringstream text;
    for (const auto& p : r.passed) text << "PASS " << p << "\n";
    if (r.ok()) text << "OK " << r.type << "\n";
    else text << "FAIL " << (r.type.empty() ? "document" : r.type) << ": " << r.failure << "\n";
    write_output(output, text.str(), s);
    return r.ok() ? kOk : kVerificationFailure;
}

int cmd_isometry(const std::string& input, const std::string& output, Streams& s) {
    const Presentation p = io::presentation_from_json(load(input, "Presentation", s));
    const IsometryWitness w = construct_isometry(p);
    write_output(output, io::dump(io::document("IsometryWitness", io::to_json(w))), s);
    return kOk;
}

int cmd_expand(const std::string& input, const std::string& output, std::size_t depth, std::size_t zpower,
               Streams& s) {
    const LaurentPoly a = io::laurent_from_json(load(input, "LaurentPoly", s));
    if (depth == 0) throw ParseError("--depth must be positive");
    write_output(output, io::dump(io::expansion_document(a, depth, zpower)), s);
    return kOk;
}

int cmd_jk(const std::string& input, const std::string& output, Streams& s) {
    const KirkPair k = jk_kirk(io::jk_from_json(load(input, "JKInput", s)));
    write_output(output, io::dump(io::document("KirkPair", io::to_json(k))), s);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact algebra of link maps of 2-spheres in the 4-sphere", "lmap"};
    app.require_subcommand(1);

    std::string input = "-", output = "-", cert_path, transcript;
    std::size_t depth = 3, zpower = 0;
    auto add_io = [&](CLI::App* sub) {
        sub->add_option("input", input, "input JSON file, - for stdin")->required();
        sub->add_option("-o,--output", output, "output path, - for stdout");
    };

    auto* inv = app.add_subcommand("invariants", "Kirk invariants and multiplicities of a presentation");
    auto* cls = app.add_subcommand("classify", "decide triviality, optionally with an unlinking certificate");
    cls->add_option("--certificate", cert_path, "write the unlinking certificate here");
    auto* rea = app.add_subcommand("realize", "presentation realizing a Kirk pair");
    rea->add_option("--transcript", transcript, "verification transcript path (default: stderr)");
    auto* ver = app.add_subcommand("verify", "re-check every invariant of an artifact");
    auto* iso = app.add_subcommand("isometry", "metabolic isometry witness for a presentation");
    auto* exp = app.add_subcommand("expand", "I-adic expansion and z-decomposition of a Laurent polynomial");
    exp->add_option("--depth", depth, "number of I-adic coefficients")->check(CLI::PositiveNumber);
    exp->add_option("--zpower", zpower, "k in a = z^k p(z)");
    auto* jk = app.add_subcommand("jk", "Kirk pair of a JK construction from beta-invariants");
    for (auto* sub : {inv, cls, rea, ver, iso, exp, jk}) add_io(sub);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    Streams s{in, out, err};
    try {
        if (*inv) return cmd_invariants(input, output, s);
        if (*cls) return cmd_classify(input, output, cert_path, s);
        if (*rea) return cmd_realize(input, output, transcript, s);
        if (*ver) return cmd_verify(input, output, s);
        if (*iso) return cmd_isometry(input, output, s);
        if (*exp) return cmd_expand(input, output, depth, zpower, s);
        if (*jk) return cmd_jk(input, output, s);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const Json::exception& e) {
        err << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const InvalidPair& e) {
        err << "invalid Kirk pair: " << e.what() << "\n";
        return kInvalidPair;
    } catch (const NotInCone& e) {
        err << "not in the cone: " << e.what() << "\n";
        return kNotInCone;
    } catch (const InvalidPresentation& e) {
        err << "invalid input: " << e.what() << "\n";
        return kInputInvariant;
    } catch (const DimensionMismatch& e) {
        err << "invalid input: " << e.what() << "\n";
        return kInputInvariant;
    } catch (const ConditionsNotMet& e) {
        err << "invalid input: " << e.what() << "\n";
        return kInputInvariant;
    } catch (const Error& e) {
        err << "verification failure: " << e.what() << "\n";
        return kVerificationFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kVerificationFailure;
    }
    return kParseError;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace lmap::cli
