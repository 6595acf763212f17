#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "agtrellis/matrix.hpp"

namespace agtrellis {

// State-complexity profile s_0..s_n of a minimal trellis; s_i is the base-q
// logarithm of the vertex count at boundary i.
struct StateProfile {
    std::vector<int> s;

    int max_state() const;
    bool operator==(const StateProfile& other) const { return s == other.s; }
    bool operator!=(const StateProfile& other) const { return s != other.s; }
};

// A linear [n, k] code held as a full-rank generator matrix in RREF. The
// row space, not the user's row order, is the code, so the canonical RREF
// form is kept internally.
class LinearCode {
public:
    // Reduces the rows of m to a full-rank generator; throws
    // std::invalid_argument if m has rank zero.
    static LinearCode from_matrix(const Matrix& m);

    const Matrix& generator() const { return gen_; }
    const FieldPtr& field() const { return gen_.field(); }
    std::size_t length() const { return gen_.cols(); }
    std::size_t dimension() const { return gen_.rows(); }

    // Generator of the dual code (kernel of this one). Throws
    // std::invalid_argument for k = n, whose dual is the zero code.
    LinearCode dual() const;

    bool contains(const std::vector<std::uint16_t>& word) const;

    bool operator==(const LinearCode& other) const { return gen_ == other.gen_; }

private:
    explicit LinearCode(Matrix gen) : gen_(std::move(gen)) {}
    Matrix gen_;
};

std::size_t past_dim(const LinearCode& c, std::size_t i);
std::size_t future_dim(const LinearCode& c, std::size_t i);

// i-th past subcode: truncations to the first i coordinates of the codewords
// vanishing on positions i+1..n. Empty optional encodes the zero code.
std::optional<LinearCode> past_subcode(const LinearCode& c, std::size_t i);
std::optional<LinearCode> future_subcode(const LinearCode& c, std::size_t i);

// Definition-based profile: s_i = k - dim(P_i) - dim(F_i).
StateProfile state_profile(const LinearCode& c);

// Greedy span reduction: whenever two rows start or end at the same column,
// the higher-index row is shortened with the lower-index one. The result has
// pairwise distinct starts and pairwise distinct ends.
Matrix minimal_span_form(const Matrix& generator);

// Profile read off a minimal-span generator matrix; equal to state_profile.
StateProfile state_profile_msgm(const LinearCode& c);

// All q^k codewords. Refuses (budget_error) if q^k > max_words.
std::vector<std::vector<std::uint16_t>> enumerate_codewords(const LinearCode& c, std::uint64_t max_words);

// Minimum Hamming weight over nonzero codewords; refuses if q^k > 2^24.
std::size_t min_distance_bruteforce(const LinearCode& c);

// r-th generalized Hamming weight by support-subset enumeration; requires
// n <= 16 (budget) and 1 <= r <= k.
std::size_t ghw_bruteforce(const LinearCode& c, std::size_t r);

std::size_t singleton(const LinearCode& c);  // n - k + 1
std::size_t wolf(const LinearCode& c);       // min(k, n - k)
bool is_mds(const LinearCode& c);            // d == n - k + 1 (d by brute force)

// Column permutation: coordinate j of the result is coordinate perm[j] of c.
LinearCode permute(const LinearCode& c, const std::vector<std::size_t>& perm);

struct ExhaustiveOrderingResult {
    int s;                             // min over all n! coordinate orderings of s_T
    std::vector<std::size_t> ordering; // lexicographically first minimizer
};

// Exact trellis state complexity s(C) by scanning all orderings; requires
// n <= 8 (budget).
ExhaustiveOrderingResult min_state_complexity_exhaustive(const LinearCode& c);

}  // namespace agtrellis
