#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "agtrellis/code.hpp"

namespace agtrellis {

struct TrellisEdge {
    std::uint64_t from;
    std::uint64_t to;
    std::uint16_t label;
};

// Minimal trellis of a linear code. A vertex at level i is an assignment of
// coefficients to the minimal-span generator rows active at boundary i, so
// level i holds exactly q^{s_i} vertices; every vertex lies on a source-to-
// sink path and the path label sequences enumerate the code.
class Trellis {
public:
    // Budget: q^{s_T} <= 2^20 vertices per level, and q^{|R|} <= 2^22 edges
    // per level where R is the set of rows whose span covers the column.
    // Either overflow raises budget_error.
    static Trellis build(const LinearCode& code);

    const FieldPtr& field() const { return field_; }
    std::size_t depth() const { return edges_.size(); }
    const StateProfile& profile() const { return profile_; }
    std::uint64_t state_count(std::size_t level) const;

    // Edges from level i to level i+1, sorted by (from, to, label).
    const std::vector<TrellisEdge>& edges_from(std::size_t level) const;

    // Debug listing: "level i: count" per level, then "i from to label" per
    // edge with i the source level. Only for depth <= 12.
    std::string dump() const;

private:
    Trellis() = default;

    FieldPtr field_;
    StateProfile profile_;
    std::vector<std::uint64_t> counts_;            // counts_[i] = q^{s_i}
    std::vector<std::vector<TrellisEdge>> edges_;  // edges_[i]: level i -> i+1
};

struct DecodeResult {
    std::vector<std::uint16_t> codeword;
    std::size_t distance;
};

// Hard-decision Viterbi: nearest codeword in Hamming distance, ties broken
// by the lexicographically smallest codeword (element codes left to right).
DecodeResult viterbi_decode(const Trellis& t, const std::vector<std::uint16_t>& received);

// Label sequences of all source-to-sink paths; refuses (budget_error) when
// the path count exceeds max_paths.
std::vector<std::vector<std::uint16_t>> enumerate_path_labels(const Trellis& t, std::uint64_t max_paths);

}  // namespace agtrellis
