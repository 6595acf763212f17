#include <algorithm>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "agtrellis/curves.hpp"
#include "agtrellis/errors.hpp"
#include "agtrellis/report.hpp"

namespace {

using agtrellis::AgDescriptor;
using agtrellis::AnalysisOptions;
using agtrellis::Json;
using agtrellis::LinearCode;

std::vector<std::string> split(const std::string& s, char delim) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == delim) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::int64_t to_int(const std::string& tok) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("expected an integer, got \"" + tok + "\"");
    }
}

struct OrderSpec {
    enum class Mode { none, given, random, exhaustive };
    Mode mode = Mode::none;
    std::vector<std::int64_t> perm;  // 1-based, as typed
    std::uint64_t seed = 0;
};

OrderSpec parse_order(const std::string& text) {
    OrderSpec spec;
    if (text.empty()) return spec;
    if (text == "exhaustive") {
        spec.mode = OrderSpec::Mode::exhaustive;
        return spec;
    }
    if (text.rfind("random:", 0) == 0) {
        std::string seed = text.substr(7);
        try {
            std::size_t pos = 0;
            spec.seed = std::stoull(seed, &pos);
            if (pos != seed.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad seed in \"--order " + text + "\"");
        }
        spec.mode = OrderSpec::Mode::random;
        return spec;
    }
    for (const std::string& tok : split(text, ',')) spec.perm.push_back(to_int(tok));
    spec.mode = OrderSpec::Mode::given;
    return spec;
}

// Applies the requested ordering to the code and records it in meta; the
// exhaustive mode leaves the code alone, the analysis itself scans orderings.
LinearCode apply_order(LinearCode code, const OrderSpec& spec, Json& meta) {
    const std::size_t n = code.length();
    if (spec.mode == OrderSpec::Mode::given) {
        if (spec.perm.size() != n)
            throw std::invalid_argument("--order lists " + std::to_string(spec.perm.size()) +
                                        " positions, the code has " + std::to_string(n));
        std::vector<std::size_t> perm0(n);
        std::vector<bool> seen(n, false);
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t v = spec.perm[j];
            if (v < 1 || v > static_cast<std::int64_t>(n) || seen[static_cast<std::size_t>(v - 1)])
                throw std::invalid_argument("--order is not a permutation of 1.." +
                                            std::to_string(n));
            seen[static_cast<std::size_t>(v - 1)] = true;
            perm0[j] = static_cast<std::size_t>(v - 1);
        }
        Json ord = Json::object();
        ord["mode"] = "explicit";
        ord["perm"] = spec.perm;
        meta["ordering"] = std::move(ord);
        return agtrellis::permute(code, perm0);
    }
    if (spec.mode == OrderSpec::Mode::random) {
        std::vector<std::size_t> perm0(n);
        std::iota(perm0.begin(), perm0.end(), std::size_t{0});
        std::mt19937_64 rng(spec.seed);
        std::shuffle(perm0.begin(), perm0.end(), rng);
        Json ord = Json::object();
        ord["mode"] = "random";
        ord["seed"] = spec.seed;
        Json p = Json::array();
        for (std::size_t v : perm0) p.push_back(v + 1);
        ord["perm"] = std::move(p);
        meta["ordering"] = std::move(ord);
        return agtrellis::permute(code, perm0);
    }
    return code;
}

struct BuiltCode {
    LinearCode code;
    std::optional<AgDescriptor> descriptor;
};

BuiltCode build_designator(const std::string& spec) {
    std::size_t colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("designator needs the form kind:args, got \"" + spec + "\"");
    std::string kind = spec.substr(0, colon);
    std::vector<std::string> args = split(spec.substr(colon + 1), ',');

    if (kind == "rs") {
        if (args.size() != 3) throw std::invalid_argument("rs designator takes q,n,k");
        agtrellis::FieldPtr f = agtrellis::parse_field_token(args[0]);
        std::int64_t n = to_int(args[1]);
        std::int64_t k = to_int(args[2]);
        if (n < 1 || k < 1) throw std::invalid_argument("rs needs positive n and k");
        return {agtrellis::reed_solomon(f, static_cast<std::size_t>(n),
                                        static_cast<std::size_t>(k)),
                agtrellis::reed_solomon_descriptor(static_cast<std::size_t>(n),
                                                   static_cast<std::size_t>(k))};
    }
    if (kind == "hermitian") {
        if (args.size() != 2) throw std::invalid_argument("hermitian designator takes q0,m");
        std::int64_t q0 = to_int(args[0]);
        std::int64_t m = to_int(args[1]);
        if (q0 < 2) throw std::invalid_argument("hermitian needs q0 >= 2");
        return {agtrellis::hermitian_code(static_cast<std::uint32_t>(q0), m),
                agtrellis::hermitian_descriptor(static_cast<std::uint32_t>(q0), m)};
    }
    if (kind == "elliptic") {
        if (args.size() != 7)
            throw std::invalid_argument("elliptic designator takes q,a1,a2,a3,a4,a6,m");
        agtrellis::FieldPtr f = agtrellis::parse_field_token(args[0]);
        std::uint16_t a[5];
        for (int i = 0; i < 5; ++i) {
            std::int64_t v = to_int(args[static_cast<std::size_t>(1 + i)]);
            if (v < 0 || v >= static_cast<std::int64_t>(f->order()))
                throw std::invalid_argument("curve coefficient " + std::to_string(v) +
                                            " outside GF(" + f->label() + ")");
            a[i] = static_cast<std::uint16_t>(v);
        }
        std::int64_t m = to_int(args[6]);
        agtrellis::EllipticCurve e = agtrellis::EllipticCurve::create(f, a[0], a[1], a[2], a[3], a[4]);
        const auto& pts = e.affine_points();
        return {agtrellis::elliptic_one_point_code(e, m, pts),
                agtrellis::elliptic_descriptor(e, m, pts)};
    }
    throw std::invalid_argument("unknown designator kind \"" + kind + "\"");
}

int run_tables(const std::string& which, const std::vector<std::uint32_t>& gens,
               const std::string& format) {
    if (which == "hermitian" && !gens.empty())
        throw std::invalid_argument("--semigroup applies to the suzuki table only");
    Json doc = which == "hermitian" ? agtrellis::build_hermitian_table()
                                    : agtrellis::build_suzuki_table(gens);
    if (format == "json")
        std::cout << doc.dump(2) << "\n";
    else if (format == "csv")
        std::cout << agtrellis::render_tables_csv(doc);
    else
        std::cout << agtrellis::render_tables_text(doc);
    return 0;
}

int run_analysis(LinearCode code, const std::optional<AgDescriptor>& dsc, Json meta,
                 const std::string& order_text, AnalysisOptions opt, const std::string& format) {
    OrderSpec spec = parse_order(order_text);
    code = apply_order(std::move(code), spec, meta);
    opt.exhaustive = spec.mode == OrderSpec::Mode::exhaustive;
    agtrellis::AnalysisResult res = agtrellis::analyze_code(code, opt, dsc, meta);
    if (format == "json")
        std::cout << res.doc.dump(2) << "\n";
    else
        std::cout << agtrellis::render_analysis_text(res.doc, res.prop3_4_witness);
    return 0;
}

int run_decode(const std::string& file, const std::vector<std::int64_t>& received,
               const std::string& format) {
    LinearCode code = agtrellis::load_code_file(file);
    std::vector<std::uint16_t> rec;
    rec.reserve(received.size());
    for (std::int64_t v : received) {
        if (v < 0 || v >= static_cast<std::int64_t>(code.field()->order()))
            throw std::invalid_argument("received symbol " + std::to_string(v) + " outside GF(" +
                                        code.field()->label() + ")");
        rec.push_back(static_cast<std::uint16_t>(v));
    }
    Json meta = Json::object();
    meta["command"] = "decode";
    meta["source"] = file;
    Json doc = agtrellis::decode_report(code, rec, meta);
    if (format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << agtrellis::render_decode_text(doc);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal trellises and state complexity bounds for linear codes over GF(q)"};
    app.require_subcommand(1);

    auto* tables = app.add_subcommand(
        "tables", "compare computed bound tables against their published values");
    std::string tbl_curve;
    tables->add_option("--curve", tbl_curve, "table family: hermitian or suzuki")
        ->required()
        ->check(CLI::IsMember({"hermitian", "suzuki"}));
    std::vector<std::uint32_t> tbl_gens;
    tables->add_option("--semigroup", tbl_gens, "replacement semigroup generators (suzuki only)")
        ->delimiter(',');
    std::string tbl_format{"text"};
    tables->add_option("--format", tbl_format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* analyze =
        app.add_subcommand("analyze", "state profile and bounds of a code read from a file");
    std::string an_file;
    analyze->add_option("file", an_file, "code file: header \"q k n\", then k generator rows")
        ->required();
    std::string an_order;
    analyze->add_option(
        "--order", an_order,
        "coordinate ordering: comma permutation (1-based), random:SEED, or exhaustive");
    bool an_distance = false;
    analyze->add_flag("--distance", an_distance, "brute-force minimum distance");
    std::size_t an_ghw = 0;
    analyze->add_option("--ghw", an_ghw, "generalized Hamming weights d_1..d_R");
    bool an_bounds = false;
    analyze->add_flag("--bounds", an_bounds, "evaluate the state complexity bounds");
    bool an_trellis = false;
    analyze->add_flag("--trellis", an_trellis, "dump the minimal trellis (n <= 12)");
    std::string an_format{"text"};
    analyze->add_option("--format", an_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* curve =
        app.add_subcommand("curve", "build a named evaluation code and evaluate every bound");
    std::string cv_spec;
    curve->add_option("designator", cv_spec,
                      "rs:q,n,k | hermitian:q0,m | elliptic:q,a1,a2,a3,a4,a6,m")
        ->required();
    std::string cv_order;
    curve->add_option(
        "--order", cv_order,
        "coordinate ordering: comma permutation (1-based), random:SEED, or exhaustive");
    bool cv_distance = false;
    curve->add_flag("--distance", cv_distance, "brute-force minimum distance");
    std::size_t cv_ghw = 0;
    curve->add_option("--ghw", cv_ghw, "generalized Hamming weights d_1..d_R");
    bool cv_trellis = false;
    curve->add_flag("--trellis", cv_trellis, "dump the minimal trellis (n <= 12)");
    std::string cv_format{"text"};
    curve->add_option("--format", cv_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* decode =
        app.add_subcommand("decode", "Viterbi-decode a received word on the minimal trellis");
    std::string de_file;
    decode->add_option("file", de_file, "code file")->required();
    std::vector<std::int64_t> de_received;
    decode->add_option("--received", de_received, "received word, comma separated element codes")
        ->required()
        ->delimiter(',');
    std::string de_format{"text"};
    decode->add_option("--format", de_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 1;
    }

    try {
        if (tables->parsed()) return run_tables(tbl_curve, tbl_gens, tbl_format);
        if (analyze->parsed()) {
            LinearCode code = agtrellis::load_code_file(an_file);
            Json meta = Json::object();
            meta["command"] = "analyze";
            meta["source"] = an_file;
            AnalysisOptions opt;
            opt.distance = an_distance;
            opt.ghw = an_ghw;
            opt.bounds = an_bounds;
            opt.trellis_dump = an_trellis;
            return run_analysis(std::move(code), std::nullopt, std::move(meta), an_order, opt,
                                an_format);
        }
        if (curve->parsed()) {
            BuiltCode built = build_designator(cv_spec);
            Json meta = Json::object();
            meta["command"] = "curve";
            meta["curve"] = cv_spec;
            AnalysisOptions opt;
            opt.distance = cv_distance;
            opt.ghw = cv_ghw;
            opt.bounds = true;
            opt.trellis_dump = cv_trellis;
            return run_analysis(std::move(built.code), built.descriptor, std::move(meta),
                                cv_order, opt, cv_format);
        }
        if (decode->parsed()) return run_decode(de_file, de_received, de_format);
    } catch (const agtrellis::budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
