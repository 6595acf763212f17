#include "agtrellis/report.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "agtrellis/errors.hpp"
#include "agtrellis/semigroup.hpp"
#include "agtrellis/trellis.hpp"

namespace agtrellis {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool skippable(const std::string& line) {
    std::string t = trim(line);
    return t.empty() || t[0] == '#';
}

std::int64_t parse_int(const std::string& tok, std::size_t lineno) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": expected an integer, got \"" + tok + "\"");
    }
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream iss(line);
    std::vector<std::string> out;
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

// Columns a string occupies in a terminal: UTF-8 continuation bytes do not
// count. Every multibyte character emitted here is one column wide.
std::size_t display_width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++w;
    return w;
}

std::string pad_left(const std::string& s, std::size_t width) {
    std::size_t w = display_width(s);
    return (w < width ? std::string(width - w, ' ') : std::string()) + s;
}

std::string join_ints(const Json& arr, const char* sep = " ") {
    std::string out;
    for (const auto& v : arr) {
        if (!out.empty()) out += sep;
        out += std::to_string(v.get<std::int64_t>());
    }
    return out;
}

std::string angle_list(const Json& arr) { return "⟨" + join_ints(arr, ",") + "⟩"; }

Json cell(std::int64_t computed, std::int64_t paper) {
    Json c = Json::object();
    c["computed"] = computed;
    c["paper"] = paper;
    return c;
}

std::string cell_text(const Json& row, const std::string& col) {
    if (col == "m") return std::to_string(row.at("m").get<std::int64_t>());
    const Json& c = row.at(col);
    std::int64_t computed = c.at("computed").get<std::int64_t>();
    std::int64_t paper = c.at("paper").get<std::int64_t>();
    std::string s = std::to_string(computed);
    if (computed != paper) s += " ≠paper(" + std::to_string(paper) + ")";
    return s;
}

DistanceData gather_distance_data(const LinearCode& code) {
    DistanceData dd;
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();
    try {
        dd.d = static_cast<std::int64_t>(min_distance_bruteforce(code));
    } catch (const budget_error&) {
    }
    if (n <= 16)
        for (std::size_t r = 1; r <= k; ++r)
            dd.ghw.push_back(static_cast<std::int64_t>(ghw_bruteforce(code, r)));
    if (k < n) {
        LinearCode dual = code.dual();
        try {
            dd.d_dual = static_cast<std::int64_t>(min_distance_bruteforce(dual));
        } catch (const budget_error&) {
        }
        if (n <= 16)
            for (std::size_t r = 1; r <= dual.dimension(); ++r)
                dd.ghw_dual.push_back(static_cast<std::int64_t>(ghw_bruteforce(dual, r)));
    }
    return dd;
}

}  // namespace

FieldPtr parse_field_token(const std::string& token) {
    if (token.find('^') != std::string::npos) return Field::parse(token);
    std::uint64_t q = 0;
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(token, &pos);
        if (pos != token.size()) throw std::invalid_argument("");
        q = v;
    } catch (const std::exception&) {
        throw std::invalid_argument("not a field order: \"" + token + "\"");
    }
    if (q < 2 || q > Field::kMaxOrder)
        throw std::invalid_argument("field order " + token + " out of range [2, 2^16]");
    std::uint32_t p = 0;
    for (std::uint32_t c = 2; c * c <= q; ++c)
        if (q % c == 0) {
            p = c;
            break;
        }
    if (p == 0) return Field::create(static_cast<std::uint32_t>(q), 1);
    std::uint32_t m = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1)
        throw std::invalid_argument("field order " + token + " is not a prime power");
    return Field::create(p, m);
}

LinearCode read_code_file(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&](const char* what) -> std::string {
        while (std::getline(in, line)) {
            ++lineno;
            if (!skippable(line)) return line;
        }
        throw std::invalid_argument(std::string("unexpected end of input, missing ") + what);
    };

    std::string header = next_line("the \"q k n\" header");
    std::vector<std::string> head = tokens_of(header);
    if (head.size() != 3)
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": header must be \"q k n\"");
    FieldPtr field;
    try {
        field = parse_field_token(head[0]);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
    std::int64_t k = parse_int(head[1], lineno);
    std::int64_t n = parse_int(head[2], lineno);
    if (k < 1 || n < 1)
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": dimensions must be positive");
    if (k > n)
        throw std::invalid_argument("line " + std::to_string(lineno) + ": k = " +
                                    std::to_string(k) + " exceeds n = " + std::to_string(n));

    Matrix g(field, static_cast<std::size_t>(k), static_cast<std::size_t>(n));
    for (std::int64_t r = 0; r < k; ++r) {
        std::vector<std::string> toks = tokens_of(next_line("a generator row"));
        if (static_cast<std::int64_t>(toks.size()) != n)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected " +
                                        std::to_string(n) + " entries, got " +
                                        std::to_string(toks.size()));
        for (std::int64_t c = 0; c < n; ++c) {
            std::int64_t v = parse_int(toks[static_cast<std::size_t>(c)], lineno);
            if (v < 0 || v >= static_cast<std::int64_t>(field->order()))
                throw std::invalid_argument("line " + std::to_string(lineno) + ": entry " +
                                            std::to_string(v) + " outside GF(" + field->label() +
                                            ")");
            g.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c),
                  static_cast<std::uint16_t>(v));
        }
    }

    LinearCode code = LinearCode::from_matrix(g);
    if (static_cast<std::int64_t>(code.dimension()) != k)
        throw std::invalid_argument("generator rows have rank " +
                                    std::to_string(code.dimension()) + ", expected " +
                                    std::to_string(k));
    return code;
}

LinearCode load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    try {
        return read_code_file(in);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void write_code_file(std::ostream& out, const LinearCode& code) {
    out << code.field()->label() << " " << code.dimension() << " " << code.length() << "\n";
    const Matrix& g = code.generator();
    for (std::size_t r = 0; r < g.rows(); ++r) {
        for (std::size_t c = 0; c < g.cols(); ++c) out << (c ? " " : "") << g.at(r, c);
        out << "\n";
    }
}

Json bound_report_to_json(const BoundReport& report) {
    Json out = Json::object();
    for (const std::string& key : BoundReport::key_order()) {
        const BoundValue& v = report.at(key);
        if (v.value)
            out[key] = *v.value;
        else if (v.flag)
            out[key] = *v.flag;
        else
            out[key] = "not applicable (" + v.na_reason + ")";
    }
    return out;
}

std::string render_bounds_text(const Json& bounds, const std::string& indent) {
    std::ostringstream out;
    for (const auto& item : bounds.items()) {
        out << indent << item.key() << ": ";
        const Json& v = item.value();
        if (v.is_boolean())
            out << (v.get<bool>() ? "true" : "false");
        else if (v.is_string())
            out << v.get<std::string>();
        else
            out << v.get<std::int64_t>();
        out << "\n";
    }
    return out.str();
}

Json build_hermitian_table() {
    NumericalSemigroup h({5, 6});
    GonalitySequence gon = GonalitySequence::from_semigroup(h);
    const std::int64_t n = 125;
    const std::int64_t genus = h.genus();

    static const std::int64_t paper_wolf[] = {53, 54, 55, 56, 57, 58, 59, 60, 61, 62};
    static const std::int64_t paper_clifford[] = {52, 52, 52, 52, 52, 52, 52, 52, 52, 52};
    static const std::int64_t paper_p32[] = {52, 53, 54, 53, 54, 54, 53, 54, 53, 52};
    static const std::int64_t paper_p33[] = {52, 52, 53, 53, 53, 54, 53, 53, 53, 52};
    static const std::int64_t paper_p34[] = {51, 52, 53, 54, 55, 54, 53, 54, 55, 56};

    Json rows = Json::array();
    for (std::int64_t m = 62; m <= 71; ++m) {
        AgDescriptor dsc = AgDescriptor::one_point(n, m, h, gon);
        std::size_t i = static_cast<std::size_t>(m - 62);
        Json row = Json::object();
        row["m"] = m;
        row["wolf"] = cell(dsc.wolf(), paper_wolf[i]);
        row["clifford"] = cell(clifford_bound(n, genus), paper_clifford[i]);
        row["prop3_2"] = cell(prop3_2(dsc).value(), paper_p32[i]);
        row["prop3_3"] = cell(prop3_3(dsc.k, dsc.abundance, dsc.ell_2g_minus_d.value()),
                              paper_p33[i]);
        row["prop3_4"] = cell(prop3_4(dsc).value().bound, paper_p34[i]);
        rows.push_back(std::move(row));
    }

    Json doc = Json::object();
    doc["version"] = kVersion;
    doc["command"] = "tables";
    doc["table"] = "hermitian";
    doc["n"] = n;
    doc["genus"] = genus;
    doc["semigroup"] = h.generators();
    doc["m_range"] = Json::array({62, 71});
    doc["columns"] = Json::array({"wolf", "clifford", "prop3_2", "prop3_3", "prop3_4"});
    doc["rows"] = std::move(rows);
    return doc;
}

Json build_suzuki_table(const std::vector<std::uint32_t>& generators) {
    std::vector<std::uint32_t> gens = generators.empty()
                                          ? std::vector<std::uint32_t>{8, 10, 12, 13}
                                          : generators;
    NumericalSemigroup h(gens);
    if (h.genus() != 14)
        throw std::invalid_argument("the table needs a genus-14 semigroup; " + h.label() +
                                    " has genus " + std::to_string(h.genus()));
    const std::int64_t n = 64;
    const std::int64_t genus = 14;

    static const std::int64_t paper_p33[] = {17, 18, 19, 20, 20, 20, 20,
                                             20, 20, 20, 20, 20, 20, 20};

    Json rows = Json::array();
    for (std::int64_t m = 32; m <= 45; ++m) {
        AgDescriptor dsc = AgDescriptor::one_point(n, m, h, std::nullopt);
        std::size_t i = static_cast<std::size_t>(m - 32);
        Json row = Json::object();
        row["m"] = m;
        row["wolf"] = cell(dsc.wolf(), m - 13);
        row["clifford"] = cell(clifford_bound(n, genus), 18);
        row["prop3_3"] = cell(prop3_3(dsc.k, dsc.abundance, dsc.ell_2g_minus_d.value()),
                              paper_p33[i]);
        rows.push_back(std::move(row));
    }

    Json doc = Json::object();
    doc["version"] = kVersion;
    doc["command"] = "tables";
    doc["table"] = "suzuki";
    doc["n"] = n;
    doc["genus"] = genus;
    doc["semigroup"] = h.generators();
    doc["m_range"] = Json::array({32, 45});
    doc["columns"] = Json::array({"wolf", "clifford", "prop3_3"});
    doc["rows"] = std::move(rows);
    return doc;
}

std::string render_tables_text(const Json& doc) {
    std::vector<std::string> cols = {"m"};
    for (const auto& c : doc.at("columns")) cols.push_back(c.get<std::string>());
    const Json& rows = doc.at("rows");

    std::vector<std::size_t> width(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) width[i] = display_width(cols[i]);
    for (const auto& row : rows)
        for (std::size_t i = 0; i < cols.size(); ++i)
            width[i] = std::max(width[i], display_width(cell_text(row, cols[i])));

    std::ostringstream out;
    out << doc.at("table").get<std::string>() << " one-point codes: n = "
        << doc.at("n").get<std::int64_t>() << ", genus = " << doc.at("genus").get<std::int64_t>()
        << ", semigroup = " << angle_list(doc.at("semigroup")) << ", deg G = "
        << doc.at("m_range").at(0).get<std::int64_t>() << ".."
        << doc.at("m_range").at(1).get<std::int64_t>() << "\n";
    out << "cells hold computed bounds; disagreement with the published value is marked "
           "≠paper(v)\n\n";
    for (std::size_t i = 0; i < cols.size(); ++i)
        out << (i ? "  " : "") << pad_left(cols[i], width[i]);
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < cols.size(); ++i)
            out << (i ? "  " : "") << pad_left(cell_text(row, cols[i]), width[i]);
        out << "\n";
    }
    return out.str();
}

std::string render_tables_csv(const Json& doc) {
    std::vector<std::string> cols = {"m"};
    for (const auto& c : doc.at("columns")) cols.push_back(c.get<std::string>());
    std::ostringstream out;
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << "\n";
    for (const auto& row : doc.at("rows")) {
        for (std::size_t i = 0; i < cols.size(); ++i)
            out << (i ? "," : "") << cell_text(row, cols[i]);
        out << "\n";
    }
    return out.str();
}

AnalysisResult analyze_code(const LinearCode& code, const AnalysisOptions& opt,
                            const std::optional<AgDescriptor>& dsc, const Json& meta) {
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();

    Json doc = Json::object();
    doc["version"] = kVersion;
    for (const auto& item : meta.items()) doc[item.key()] = item.value();
    doc["field"] = "GF(" + code.field()->label() + ")";
    doc["n"] = n;
    doc["k"] = k;
    if (dsc) {
        Json cd = Json::object();
        cd["deg_G"] = dsc->deg_g;
        cd["genus"] = dsc->genus;
        cd["abundance"] = dsc->abundance;
        if (dsc->semigroup) cd["semigroup"] = dsc->semigroup->generators();
        doc["curve_data"] = cd;
    }

    StateProfile prof = state_profile(code);
    doc["profile"] = prof.s;
    doc["s_max"] = prof.max_state();
    doc["wolf"] = wolf(code);
    doc["singleton"] = singleton(code);

    AnalysisResult result;
    if (opt.exhaustive) {
        ExhaustiveOrderingResult best = min_state_complexity_exhaustive(code);
        Json ex = Json::object();
        ex["s"] = best.s;
        Json ord = Json::array();
        for (std::size_t p : best.ordering) ord.push_back(p + 1);
        ex["ordering"] = std::move(ord);
        ex["profile"] = state_profile(permute(code, best.ordering)).s;
        doc["exhaustive"] = std::move(ex);
    }
    if (opt.distance) doc["distance"] = min_distance_bruteforce(code);
    if (opt.ghw > 0) {
        Json g = Json::array();
        for (std::size_t r = 1; r <= opt.ghw; ++r) g.push_back(ghw_bruteforce(code, r));
        doc["ghw"] = std::move(g);
    }
    if (opt.bounds) {
        BoundReport rep = best_lower_bound(static_cast<std::int64_t>(n),
                                           static_cast<std::int64_t>(k), dsc,
                                           gather_distance_data(code));
        doc["bounds"] = bound_report_to_json(rep);
        result.prop3_4_witness = rep.prop3_4_witness;
    }
    if (opt.trellis_dump) doc["trellis"] = Trellis::build(code).dump();

    result.doc = std::move(doc);
    return result;
}

std::string render_analysis_text(const Json& doc, const std::optional<Prop34Result>& witness) {
    std::ostringstream out;
    out << doc.at("command").get<std::string>();
    if (doc.contains("source"))
        out << " " << doc.at("source").get<std::string>();
    else if (doc.contains("curve"))
        out << " " << doc.at("curve").get<std::string>();
    out << "\n";
    out << "field " << doc.at("field").get<std::string>() << ", n = "
        << doc.at("n").get<std::int64_t>() << ", k = " << doc.at("k").get<std::int64_t>() << "\n";

    if (doc.contains("curve_data")) {
        const Json& cd = doc.at("curve_data");
        out << "curve data: deg G = " << cd.at("deg_G").get<std::int64_t>() << ", genus = "
            << cd.at("genus").get<std::int64_t>() << ", abundance = "
            << cd.at("abundance").get<std::int64_t>();
        if (cd.contains("semigroup")) out << ", semigroup = " << angle_list(cd.at("semigroup"));
        out << "\n";
    }
    if (doc.contains("ordering")) {
        const Json& ord = doc.at("ordering");
        out << "ordering (" << ord.at("mode").get<std::string>();
        if (ord.contains("seed")) out << ", seed " << ord.at("seed").get<std::int64_t>();
        out << "): " << join_ints(ord.at("perm")) << "\n";
    }

    out << "profile: " << join_ints(doc.at("profile")) << "\n";
    out << "s_max = " << doc.at("s_max").get<std::int64_t>();
    if (doc.contains("exhaustive"))
        out << "\n";
    else
        out << " (for this coordinate ordering; the minimum over orderings may be smaller)\n";
    out << "wolf = " << doc.at("wolf").get<std::int64_t>() << ", singleton = "
        << doc.at("singleton").get<std::int64_t>() << "\n";

    if (doc.contains("exhaustive")) {
        const Json& ex = doc.at("exhaustive");
        out << "minimum over all orderings: s(C) = " << ex.at("s").get<std::int64_t>() << "\n";
        out << "  ordering: " << join_ints(ex.at("ordering")) << "\n";
        out << "  profile: " << join_ints(ex.at("profile")) << "\n";
    }
    if (doc.contains("distance"))
        out << "distance = " << doc.at("distance").get<std::int64_t>() << "\n";
    if (doc.contains("ghw")) out << "ghw: " << join_ints(doc.at("ghw")) << "\n";
    if (doc.contains("bounds")) {
        out << "bounds:\n" << render_bounds_text(doc.at("bounds"), "  ");
        if (witness)
            out << "  prop3_4 witness: i = " << witness->i << ", j = " << witness->j << "\n";
    }
    if (doc.contains("trellis")) out << "trellis:\n" << doc.at("trellis").get<std::string>();
    return out.str();
}

Json decode_report(const LinearCode& code, const std::vector<std::uint16_t>& received,
                   const Json& meta) {
    Trellis t = Trellis::build(code);
    DecodeResult res = viterbi_decode(t, received);

    Json doc = Json::object();
    doc["version"] = kVersion;
    for (const auto& item : meta.items()) doc[item.key()] = item.value();
    doc["field"] = "GF(" + code.field()->label() + ")";
    doc["n"] = code.length();
    doc["k"] = code.dimension();
    doc["received"] = received;
    doc["codeword"] = res.codeword;
    doc["distance"] = res.distance;
    return doc;
}

std::string render_decode_text(const Json& doc) {
    std::ostringstream out;
    out << doc.at("command").get<std::string>();
    if (doc.contains("source")) out << " " << doc.at("source").get<std::string>();
    out << "\n";
    out << "field " << doc.at("field").get<std::string>() << ", n = "
        << doc.at("n").get<std::int64_t>() << ", k = " << doc.at("k").get<std::int64_t>() << "\n";
    out << "received: " << join_ints(doc.at("received")) << "\n";
    out << "codeword: " << join_ints(doc.at("codeword")) << "\n";
    out << "distance = " << doc.at("distance").get<std::int64_t>() << "\n";
    return out.str();
}

}  // namespace agtrellis
