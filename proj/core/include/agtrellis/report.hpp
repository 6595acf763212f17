#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "agtrellis/bounds.hpp"
#include "agtrellis/code.hpp"

namespace agtrellis {

inline constexpr char kVersion[] = "0.1.0";

// Reports are assembled as JSON documents first; the text and csv renderers
// read only the document, so serialized output cannot drift from it.
using Json = nlohmann::ordered_json;

// Accepts "p", "p^m", or a plain prime power such as "25".
FieldPtr parse_field_token(const std::string& token);

// Code files: '#' comments and blank lines are skipped; the first data line
// is the header "q k n" with q a field token, followed by k generator rows
// of n element codes in [0, q). The rows must be linearly independent.
LinearCode read_code_file(std::istream& in);
LinearCode load_code_file(const std::string& path);
void write_code_file(std::ostream& out, const LinearCode& code);

// The sixteen bound entries in their fixed key order. Values are integers,
// a boolean for the window test, or "not applicable (<reason>)" strings.
Json bound_report_to_json(const BoundReport& report);
std::string render_bounds_text(const Json& bounds, const std::string& indent);

// Bound tables for the two benchmark one-point families, one row per deg G;
// every cell pairs the computed value with the published one.
Json build_hermitian_table();
Json build_suzuki_table(const std::vector<std::uint32_t>& generators);
std::string render_tables_text(const Json& doc);
std::string render_tables_csv(const Json& doc);

struct AnalysisOptions {
    bool distance = false;
    std::size_t ghw = 0;  // hierarchy prefix length to compute, 0 = skip
    bool bounds = false;
    bool exhaustive = false;
    bool trellis_dump = false;
};

struct AnalysisResult {
    Json doc;
    // Carried beside the document: the text renderer prints it, the JSON
    // bounds object stays at its fixed sixteen keys.
    std::optional<Prop34Result> prop3_4_witness;
};

// Runs the requested computations on the code as ordered and assembles the
// document; meta entries (command, source, ordering, ...) land up front.
AnalysisResult analyze_code(const LinearCode& code, const AnalysisOptions& opt,
                            const std::optional<AgDescriptor>& dsc = std::nullopt,
                            const Json& meta = Json::object());
std::string render_analysis_text(const Json& doc,
                                 const std::optional<Prop34Result>& witness = std::nullopt);

Json decode_report(const LinearCode& code, const std::vector<std::uint16_t>& received,
                   const Json& meta = Json::object());
std::string render_decode_text(const Json& doc);

}  // namespace agtrellis
