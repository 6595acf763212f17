#include "agtrellis/trellis.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "agtrellis/errors.hpp"

namespace agtrellis {

namespace {

struct RowSpan {
    std::size_t first;
    std::size_t last;
};

bool edge_less(const TrellisEdge& a, const TrellisEdge& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.to != b.to) return a.to < b.to;
    return a.label < b.label;
}

}  // namespace

Trellis Trellis::build(const LinearCode& code) {
    const FieldPtr& fp = code.field();
    const Field& f = *fp;
    const std::uint64_t q = f.order();
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();

    Matrix g = minimal_span_form(code.generator());
    std::vector<RowSpan> spans(k);
    for (std::size_t r = 0; r < k; ++r) {
        std::size_t first = n, last = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (g.at(r, j) != 0) {
                if (first == n) first = j;
                last = j;
            }
        spans[r] = {first, last};
    }

    Trellis t;
    t.field_ = fp;
    t.profile_.s.assign(n + 1, 0);
    for (const RowSpan& sp : spans)
        for (std::size_t i = sp.first + 1; i <= sp.last; ++i) ++t.profile_.s[i];

    constexpr std::uint64_t kStateBudget = 1ull << 20;
    t.counts_.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        std::uint64_t count = 1;
        for (int e = 0; e < t.profile_.s[i]; ++e) {
            if (count > kStateBudget / q)
                throw budget_error("trellis level " + std::to_string(i) + " needs " +
                                   std::to_string(q) + "^" + std::to_string(t.profile_.s[i]) +
                                   " vertices, over the 2^20 budget");
            count *= q;
        }
        t.counts_[i] = count;
    }

    t.edges_.resize(n);
    for (std::size_t c = 0; c < n; ++c) {
        // R: rows whose span covers column c; subsets active on either side.
        std::vector<std::size_t> involved;
        for (std::size_t r = 0; r < k; ++r)
            if (spans[r].first <= c && c <= spans[r].last) involved.push_back(r);

        std::uint64_t combos = 1;
        for (std::size_t j = 0; j < involved.size(); ++j) {
            if (combos > (1ull << 22) / q)
                throw budget_error("trellis column " + std::to_string(c) + " needs " +
                                   std::to_string(q) + "^" + std::to_string(involved.size()) +
                                   " edges, over the 2^22 budget");
            combos *= q;
        }

        // Positions (in enumeration order) of the rows active at each end.
        std::vector<std::size_t> from_pos, to_pos;
        for (std::size_t j = 0; j < involved.size(); ++j) {
            std::size_t r = involved[j];
            if (spans[r].first < c) from_pos.push_back(j);
            if (spans[r].last > c) to_pos.push_back(j);
        }

        std::vector<std::uint16_t> coeff(involved.size(), 0);
        std::vector<TrellisEdge>& out = t.edges_[c];
        out.reserve(combos);
        for (std::uint64_t idx = 0; idx < combos; ++idx) {
            std::uint64_t rest = idx;
            for (std::size_t j = 0; j < involved.size(); ++j) {
                coeff[j] = static_cast<std::uint16_t>(rest % q);
                rest /= q;
            }
            std::uint16_t label = 0;
            for (std::size_t j = 0; j < involved.size(); ++j)
                label = f.add(label, f.mul(coeff[j], g.at(involved[j], c)));
            std::uint64_t from = 0;
            for (std::size_t j = from_pos.size(); j-- > 0;) from = from * q + coeff[from_pos[j]];
            std::uint64_t to = 0;
            for (std::size_t j = to_pos.size(); j-- > 0;) to = to * q + coeff[to_pos[j]];
            out.push_back({from, to, label});
        }
        std::sort(out.begin(), out.end(), edge_less);
    }
    return t;
}

std::uint64_t Trellis::state_count(std::size_t level) const {
    if (level >= counts_.size()) throw std::invalid_argument("trellis level out of range");
    return counts_[level];
}

const std::vector<TrellisEdge>& Trellis::edges_from(std::size_t level) const {
    if (level >= edges_.size()) throw std::invalid_argument("trellis level out of range");
    return edges_[level];
}

std::string Trellis::dump() const {
    if (depth() > 12) throw std::invalid_argument("trellis dump limited to depth 12");
    std::ostringstream out;
    for (std::size_t i = 0; i < counts_.size(); ++i)
        out << "level " << i << ": " << counts_[i] << "\n";
    for (std::size_t i = 0; i < edges_.size(); ++i)
        for (const TrellisEdge& e : edges_[i])
            out << i << " " << e.from << " " << e.to << " " << e.label << "\n";
    return out.str();
}

DecodeResult viterbi_decode(const Trellis& t, const std::vector<std::uint16_t>& received) {
    const std::size_t n = t.depth();
    if (received.size() != n) throw std::invalid_argument("received word length mismatch");
    for (std::uint16_t v : received)
        if (v >= t.field()->order())
            throw std::invalid_argument("received symbol outside the field");

    constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(1, 0);
    std::vector<std::vector<std::uint16_t>> word(1);

    for (std::size_t lvl = 0; lvl < n; ++lvl) {
        std::size_t next_states = static_cast<std::size_t>(t.state_count(lvl + 1));
        std::vector<std::size_t> ndist(next_states, kInf);
        std::vector<std::vector<std::uint16_t>> nword(next_states);
        for (const TrellisEdge& e : t.edges_from(lvl)) {
            std::size_t cand = dist[static_cast<std::size_t>(e.from)] + (e.label != received[lvl] ? 1 : 0);
            std::size_t to = static_cast<std::size_t>(e.to);
            if (cand > ndist[to]) continue;
            std::vector<std::uint16_t> path = word[static_cast<std::size_t>(e.from)];
            path.push_back(e.label);
            if (cand < ndist[to] || std::lexicographical_compare(path.begin(), path.end(),
                                                                 nword[to].begin(), nword[to].end())) {
                ndist[to] = cand;
                nword[to] = std::move(path);
            }
        }
        dist = std::move(ndist);
        word = std::move(nword);
    }
    return {word[0], dist[0]};
}

std::vector<std::vector<std::uint16_t>> enumerate_path_labels(const Trellis& t, std::uint64_t max_paths) {
    const std::size_t n = t.depth();
    std::vector<std::vector<std::uint16_t>> partial(1);
    std::vector<std::uint64_t> state(1, 0);
    for (std::size_t lvl = 0; lvl < n; ++lvl) {
        std::vector<std::vector<std::uint16_t>> next_partial;
        std::vector<std::uint64_t> next_state;
        for (std::size_t p = 0; p < partial.size(); ++p) {
            for (const TrellisEdge& e : t.edges_from(lvl)) {
                if (e.from != state[p]) continue;
                if (next_partial.size() >= max_paths)
                    throw budget_error("path enumeration exceeds budget of " + std::to_string(max_paths));
                std::vector<std::uint16_t> ext = partial[p];
                ext.push_back(e.label);
                next_partial.push_back(std::move(ext));
                next_state.push_back(e.to);
            }
        }
        partial = std::move(next_partial);
        state = std::move(next_state);
    }
    return partial;
}

}  // namespace agtrellis
