#include "agtrellis/code.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>

#include "agtrellis/errors.hpp"

namespace agtrellis {

namespace {

// q^k, saturating at limit + 1 so callers can compare against a budget.
std::uint64_t pow_saturating(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (out > limit / base) return limit + 1;
        out *= base;
    }
    return out;
}

std::ptrdiff_t first_nonzero(const Matrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (m.at(r, j) != 0) return static_cast<std::ptrdiff_t>(j);
    return -1;
}

std::ptrdiff_t last_nonzero(const Matrix& m, std::size_t r) {
    for (std::size_t j = m.cols(); j-- > 0;)
        if (m.at(r, j) != 0) return static_cast<std::ptrdiff_t>(j);
    return -1;
}

// row r2 -= scale * row r1
void subtract_scaled_row(Matrix& m, std::size_t r2, std::size_t r1, std::uint16_t scale) {
    const Field& f = *m.field();
    for (std::size_t j = 0; j < m.cols(); ++j)
        m.set(r2, j, f.sub(m.at(r2, j), f.mul(scale, m.at(r1, j))));
}

}  // namespace

int StateProfile::max_state() const {
    int best = 0;
    for (int v : s) best = std::max(best, v);
    return best;
}

LinearCode LinearCode::from_matrix(const Matrix& m) {
    RrefResult r = rref(m);
    if (r.pivots.empty()) throw std::invalid_argument("generator matrix has rank zero");
    std::vector<std::vector<std::uint16_t>> rows;
    rows.reserve(r.pivots.size());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) rows.push_back(r.matrix.row(i));
    return LinearCode(Matrix::from_rows(m.field(), rows));
}

LinearCode LinearCode::dual() const {
    if (dimension() == length())
        throw std::invalid_argument("dual of the full space is the zero code");
    return from_matrix(kernel_basis(gen_));
}

bool LinearCode::contains(const std::vector<std::uint16_t>& word) const {
    if (word.size() != length()) throw std::invalid_argument("word length mismatch");
    std::vector<std::vector<std::uint16_t>> rows;
    rows.reserve(dimension() + 1);
    for (std::size_t i = 0; i < dimension(); ++i) rows.push_back(gen_.row(i));
    rows.push_back(word);
    return rank(Matrix::from_rows(field(), rows)) == dimension();
}

std::size_t past_dim(const LinearCode& c, std::size_t i) {
    if (i > c.length()) throw std::invalid_argument("boundary out of range");
    std::vector<std::size_t> tail(c.length() - i);
    std::iota(tail.begin(), tail.end(), i);
    if (tail.empty()) return c.dimension();
    return c.dimension() - rank(c.generator().columns(tail));
}

std::size_t future_dim(const LinearCode& c, std::size_t i) {
    if (i > c.length()) throw std::invalid_argument("boundary out of range");
    std::vector<std::size_t> head(i);
    std::iota(head.begin(), head.end(), 0);
    if (head.empty()) return c.dimension();
    return c.dimension() - rank(c.generator().columns(head));
}

namespace {

// Basis, as message vectors, of the codewords vanishing on the columns listed
// in zero_on. Zero rows mean the zero subcode.
Matrix vanishing_messages(const LinearCode& c, const std::vector<std::size_t>& zero_on) {
    if (zero_on.empty()) return Matrix::identity(c.field(), c.dimension());
    return kernel_basis(c.generator().columns(zero_on).transpose());
}

std::optional<LinearCode> projected_subcode(const LinearCode& c,
                                            const std::vector<std::size_t>& zero_on,
                                            const std::vector<std::size_t>& keep) {
    Matrix msgs = vanishing_messages(c, zero_on);
    if (msgs.rows() == 0) return std::nullopt;
    Matrix words = msgs * c.generator();
    return LinearCode::from_matrix(words.columns(keep));
}

}  // namespace

std::optional<LinearCode> past_subcode(const LinearCode& c, std::size_t i) {
    if (i == 0 || i > c.length()) throw std::invalid_argument("boundary out of range");
    std::vector<std::size_t> tail(c.length() - i);
    std::iota(tail.begin(), tail.end(), i);
    std::vector<std::size_t> head(i);
    std::iota(head.begin(), head.end(), 0);
    return projected_subcode(c, tail, head);
}

std::optional<LinearCode> future_subcode(const LinearCode& c, std::size_t i) {
    if (i >= c.length()) throw std::invalid_argument("boundary out of range");
    std::vector<std::size_t> head(i);
    std::iota(head.begin(), head.end(), 0);
    std::vector<std::size_t> tail(c.length() - i);
    std::iota(tail.begin(), tail.end(), i);
    return projected_subcode(c, head, tail);
}

StateProfile state_profile(const LinearCode& c) {
    // s_i = k - dim P_i - dim F_i, computed in rank form: the two subcode
    // dimensions are rank defects of the column blocks on either side of i.
    const std::size_t n = c.length();
    const std::size_t k = c.dimension();
    std::vector<std::size_t> pre = prefix_column_ranks(c.generator());

    std::vector<std::size_t> rev(n);
    for (std::size_t j = 0; j < n; ++j) rev[j] = n - 1 - j;
    std::vector<std::size_t> suf = prefix_column_ranks(c.generator().columns(rev));

    StateProfile p;
    p.s.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        p.s[i] = static_cast<int>(pre[i] + suf[n - i]) - static_cast<int>(k);
    return p;
}

Matrix minimal_span_form(const Matrix& generator) {
    Matrix g = generator;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t r1 = 0; r1 < g.rows(); ++r1) {
            std::ptrdiff_t s1 = first_nonzero(g, r1);
            if (s1 < 0) throw std::invalid_argument("minimal span form needs independent rows");
            std::ptrdiff_t e1 = last_nonzero(g, r1);
            for (std::size_t r2 = r1 + 1; r2 < g.rows(); ++r2) {
                std::ptrdiff_t s2 = first_nonzero(g, r2);
                if (s2 < 0) throw std::invalid_argument("minimal span form needs independent rows");
                std::ptrdiff_t e2 = last_nonzero(g, r2);
                const Field& f = *g.field();
                // Always reduce the row whose span contains the other's, so
                // the subtraction stays inside it and the total span shrinks.
                std::size_t tgt, src, col;
                if (s1 == s2) {
                    tgt = e1 >= e2 ? r1 : r2;
                    src = e1 >= e2 ? r2 : r1;
                    col = static_cast<std::size_t>(s1);
                } else if (e1 == e2) {
                    tgt = s1 <= s2 ? r1 : r2;
                    src = s1 <= s2 ? r2 : r1;
                    col = static_cast<std::size_t>(e1);
                } else {
                    continue;
                }
                subtract_scaled_row(g, tgt, src, f.div(g.at(tgt, col), g.at(src, col)));
                changed = true;
                if (tgt == r1) {
                    s1 = first_nonzero(g, r1);
                    if (s1 < 0)
                        throw std::invalid_argument("minimal span form needs independent rows");
                    e1 = last_nonzero(g, r1);
                }
            }
        }
    }
    return g;
}

StateProfile state_profile_msgm(const LinearCode& c) {
    Matrix g = minimal_span_form(c.generator());
    const std::size_t n = c.length();
    StateProfile p;
    p.s.assign(n + 1, 0);
    for (std::size_t r = 0; r < g.rows(); ++r) {
        std::ptrdiff_t first = first_nonzero(g, r);
        std::ptrdiff_t last = last_nonzero(g, r);
        // Row is active at boundary i exactly when first < i <= last.
        for (std::ptrdiff_t i = first + 1; i <= last; ++i) ++p.s[static_cast<std::size_t>(i)];
    }
    return p;
}

std::vector<std::vector<std::uint16_t>> enumerate_codewords(const LinearCode& c, std::uint64_t max_words) {
    const std::uint64_t q = c.field()->order();
    std::uint64_t total = pow_saturating(q, c.dimension(), max_words);
    if (total > max_words)
        throw budget_error("codeword enumeration over " + std::to_string(c.field()->order()) +
                           "^" + std::to_string(c.dimension()) + " words exceeds budget of " +
                           std::to_string(max_words));
    const Field& f = *c.field();
    const std::size_t n = c.length();
    std::vector<std::vector<std::uint16_t>> words;
    words.reserve(static_cast<std::size_t>(total));
    words.emplace_back(n, 0);
    for (std::size_t r = 0; r < c.dimension(); ++r) {
        std::size_t base = words.size();
        for (std::uint32_t a = 1; a < q; ++a) {
            for (std::size_t w = 0; w < base; ++w) {
                std::vector<std::uint16_t> next(n);
                for (std::size_t j = 0; j < n; ++j)
                    next[j] = f.add(words[w][j], f.mul(static_cast<std::uint16_t>(a), c.generator().at(r, j)));
                words.push_back(std::move(next));
            }
        }
    }
    return words;
}

std::size_t min_distance_bruteforce(const LinearCode& c) {
    constexpr std::uint64_t kBudget = 1ull << 24;
    const std::uint64_t q = c.field()->order();
    if (pow_saturating(q, c.dimension(), kBudget) > kBudget)
        throw budget_error("minimum distance search over " + c.field()->label() + "^" +
                           std::to_string(c.dimension()) + " messages exceeds budget of 2^24");
    const Field& f = *c.field();
    const std::size_t n = c.length();
    const std::size_t k = c.dimension();
    std::size_t best = n + 1;
    std::vector<std::uint16_t> sum(n, 0);

    // Depth-first over message digits; depth r chooses the coefficient of row r.
    auto rec = [&](auto&& self, std::size_t r, bool nonzero) -> void {
        if (r == k) {
            if (!nonzero) return;
            std::size_t w = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (sum[j] != 0) ++w;
            best = std::min(best, w);
            return;
        }
        self(self, r + 1, nonzero);
        std::vector<std::uint16_t> saved = sum;
        for (std::uint32_t a = 1; a < q; ++a) {
            for (std::size_t j = 0; j < n; ++j)
                sum[j] = f.add(saved[j], f.mul(static_cast<std::uint16_t>(a), c.generator().at(r, j)));
            self(self, r + 1, true);
        }
        sum = saved;
    };
    rec(rec, 0, false);
    return best;
}

std::size_t ghw_bruteforce(const LinearCode& c, std::size_t r) {
    const std::size_t n = c.length();
    const std::size_t k = c.dimension();
    if (r < 1 || r > k) throw std::invalid_argument("generalized weight index out of range");
    if (n > 16)
        throw budget_error("generalized weight search over 2^" + std::to_string(n) +
                           " supports exceeds budget of 2^16");
    // d_r = min |S| with dim of the subcode supported on S at least r; that
    // dimension is k - rank of the columns outside S.
    for (std::size_t size = r; size <= n; ++size) {
        std::uint32_t mask = (1u << size) - 1;
        const std::uint32_t end = 1u << n;
        while (mask < end) {
            std::vector<std::size_t> outside;
            outside.reserve(n - size);
            for (std::size_t j = 0; j < n; ++j)
                if (!(mask & (1u << j))) outside.push_back(j);
            std::size_t dim = outside.empty() ? k : k - rank(c.generator().columns(outside));
            if (dim >= r) return size;
            // Gosper's hack: next subset of the same cardinality.
            std::uint32_t low = mask & (~mask + 1);
            std::uint32_t ripple = mask + low;
            mask = ripple | (((mask ^ ripple) >> 2) / low);
        }
    }
    throw std::logic_error("generalized weight search exhausted all supports");
}

std::size_t singleton(const LinearCode& c) { return c.length() - c.dimension() + 1; }

std::size_t wolf(const LinearCode& c) { return std::min(c.dimension(), c.length() - c.dimension()); }

bool is_mds(const LinearCode& c) { return min_distance_bruteforce(c) == singleton(c); }

LinearCode permute(const LinearCode& c, const std::vector<std::size_t>& perm) {
    const std::size_t n = c.length();
    if (perm.size() != n) throw std::invalid_argument("permutation length mismatch");
    std::vector<std::size_t> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t j = 0; j < n; ++j)
        if (sorted[j] != j) throw std::invalid_argument("not a permutation of 0..n-1");
    return LinearCode::from_matrix(c.generator().columns(perm));
}

ExhaustiveOrderingResult min_state_complexity_exhaustive(const LinearCode& c) {
    const std::size_t n = c.length();
    if (n > 8)
        throw budget_error("ordering search over " + std::to_string(n) +
                           "! permutations exceeds budget of 8!");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    ExhaustiveOrderingResult out{static_cast<int>(c.dimension()) + 1, {}};
    do {
        LinearCode permuted = LinearCode::from_matrix(c.generator().columns(perm));
        int s = state_profile_msgm(permuted).max_state();
        if (s < out.s) {
            out.s = s;
            out.ordering = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace agtrellis
