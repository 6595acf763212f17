// Acceptance gate: one timed pass/fail line per criterion, nonzero exit on
// any failure. Each criterion throws std::runtime_error with a diagnostic on
// the first violated check; wall-clock limits are part of the pass condition.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "agtrellis/bounds.hpp"
#include "agtrellis/code.hpp"
#include "agtrellis/curves.hpp"
#include "agtrellis/gf.hpp"
#include "agtrellis/matrix.hpp"
#include "agtrellis/report.hpp"
#include "agtrellis/semigroup.hpp"
#include "agtrellis/trellis.hpp"
#include "support.hpp"

namespace {

using namespace agtrellis;

void require(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

std::uint64_t upow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

FieldPtr make_field(std::uint32_t q) {
    if (q == 4) return Field::create(2, 2);
    if (q == 8) return Field::create(2, 3);
    return Field::create(q, 1);
}

std::int64_t cell_computed(const Json& row, const char* col) {
    return row.at(col).at("computed").get<std::int64_t>();
}

std::int64_t cell_published(const Json& row, const char* col) {
    return row.at(col).at("paper").get<std::int64_t>();
}

int count_sub(const std::string& s, const std::string& sub) {
    int c = 0;
    for (std::size_t p = s.find(sub); p != std::string::npos; p = s.find(sub, p + sub.size())) ++c;
    return c;
}

// ---- criterion 1 -----------------------------------------------------------

void c1_hermitian_table() {
    Json t = build_hermitian_table();
    const Json& rows = t.at("rows");
    require(rows.size() == 10, "expected 10 rows");
    static const std::int64_t p32[] = {52, 53, 54, 53, 54, 54, 53, 54, 53, 52};
    static const std::int64_t p33[] = {52, 52, 53, 53, 53, 54, 53, 53, 53, 52};
    static const std::int64_t p34[] = {51, 52, 53, 54, 55, 54, 53, 54, 55, 56};
    for (std::size_t i = 0; i < 10; ++i) {
        const Json& row = rows[i];
        std::int64_t m = 62 + static_cast<std::int64_t>(i);
        require(row.at("m").get<std::int64_t>() == m, "row order");
        require(cell_computed(row, "wolf") == m - 9, "wolf cell");
        require(cell_computed(row, "clifford") == 52, "clifford cell");
        require(cell_computed(row, "prop3_2") == p32[i], "prop3_2 cell");
        require(cell_computed(row, "prop3_3") == p33[i], "prop3_3 cell");
        require(cell_computed(row, "prop3_4") == p34[i], "prop3_4 cell");
        for (const char* col : {"wolf", "clifford", "prop3_2", "prop3_3", "prop3_4"})
            require(cell_computed(row, col) == cell_published(row, col),
                    std::string("computed value disagrees with the published one in column ") + col);
    }
}

// ---- criterion 2 -----------------------------------------------------------

void c2_suzuki_table() {
    Json t = build_suzuki_table({8, 10, 12, 13});
    const Json& rows = t.at("rows");
    require(rows.size() == 14, "expected 14 rows");
    static const std::int64_t p33[] = {17, 18, 19, 20, 20, 20, 20, 20, 20, 20, 20, 19, 18, 17};
    for (std::size_t i = 0; i < 14; ++i) {
        const Json& row = rows[i];
        std::int64_t m = 32 + static_cast<std::int64_t>(i);
        require(row.at("m").get<std::int64_t>() == m, "row order");
        require(cell_computed(row, "wolf") == m - 13 && cell_published(row, "wolf") == m - 13,
                "wolf cell");
        require(cell_computed(row, "clifford") == 18 && cell_published(row, "clifford") == 18,
                "clifford cell");
        require(cell_computed(row, "prop3_3") == p33[i], "prop3_3 cell");
        require(cell_published(row, "prop3_3") == (i < 3 ? p33[i] : 20), "prop3_3 published");
        bool marker = cell_computed(row, "prop3_3") != cell_published(row, "prop3_3");
        require(marker == (m >= 43), "marker placement");
    }
    require(count_sub(render_tables_text(t), "≠paper") == 4, "default text marker count");

    // The alternative generators shrink the conductor (26 instead of 28), so
    // two cells move: m = 38 gains the row the swap exists to demonstrate and
    // m = 45 picks up one unit from the smaller ell(2G-D).
    Json alt = build_suzuki_table({8, 10, 13, 14});
    const Json& arows = alt.at("rows");
    for (std::size_t i = 0; i < 14; ++i) {
        std::int64_t m = 32 + static_cast<std::int64_t>(i);
        std::int64_t expect = (m == 38) ? 21 : (m == 45) ? 18 : p33[i];
        require(cell_computed(arows[i], "prop3_3") == expect, "alternative semigroup cell");
    }
    require(count_sub(render_tables_text(alt), "≠paper") == 5, "alt text marker count");
}

// ---- criterion 3 -----------------------------------------------------------

void c3_gonality_sequence() {
    GonalitySequence gon = gonality_from_plane_degree(6);
    const std::vector<std::int64_t> expect = {0, 5, 6, 10, 11, 12, 15, 16, 17, 18, 20};
    require(gon.prefix(11) == expect, "degree-6 prefix");
    const std::int64_t g = 10;
    require(expect[0] == 0, "gamma_1");
    for (std::size_t i = 1; i < expect.size(); ++i)
        require(expect[i] > expect[i - 1], "strict increase");
    for (std::size_t i = 1; i <= expect.size(); ++i)
        require(expect[i - 1] >= 2 * static_cast<std::int64_t>(i) - 2, "lower envelope");
    require(expect[g - 1] == 2 * g - 2 && expect[g] == 2 * g, "pinned tail values");
    gon.check();
    require(gon.value(12) == 21 && gon.value(20) == 29, "values past the head");

    std::vector<std::int64_t> bad = expect;
    bad[g - 1] = 2 * g - 1;
    bool rejected = false;
    try {
        GonalitySequence(10, bad).check();
    } catch (const std::logic_error&) {
        rejected = true;
    }
    require(rejected, "validator accepted gamma_g != 2g-2");
}

// ---- criteria 4 and 5 ------------------------------------------------------

template <typename Fn>
int for_each_corpus_code(Fn&& fn) {
    std::mt19937_64 rng(2026);
    int count = 0;
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        FieldPtr f = make_field(q);
        for (int t = 0; t < 110; ++t) {
            std::size_t n = 2 + rng() % 9;
            std::size_t kmax = std::min<std::size_t>(6, n - 1);
            LinearCode code = testsupport::random_code(f, n, kmax, rng);
            fn(q, code);
            ++count;
        }
    }
    return count;
}

void c4_oracle_agreement() {
    int count = for_each_corpus_code([](std::uint32_t q, const LinearCode& code) {
        StateProfile direct = state_profile(code);
        require(direct == state_profile_msgm(code), "span-form profile disagrees");
        Trellis tr = Trellis::build(code);
        require(tr.profile() == direct, "trellis profile disagrees");
        for (std::size_t i = 0; i <= code.length(); ++i)
            require(tr.state_count(i) == upow(q, direct.s[i]), "vertex count is not q^s_i");
        auto words = enumerate_codewords(code, 1u << 22);
        auto paths = enumerate_path_labels(tr, 1u << 22);
        std::sort(words.begin(), words.end());
        std::sort(paths.begin(), paths.end());
        require(words == paths, "path labels differ from the codewords");
    });
    require(count == 440, "corpus size");
}

void c5_profile_duality() {
    int count = for_each_corpus_code([](std::uint32_t, const LinearCode& code) {
        require(state_profile(code) == state_profile(code.dual()),
                "dual profile differs");
    });
    require(count == 440, "corpus size");
}

// ---- criteria 6 through 8 --------------------------------------------------

std::vector<std::pair<LinearCode, AgDescriptor>> g_bound_corpus;

void c6_mds_ordering_search() {
    g_bound_corpus.clear();
    int count = 0;
    for (std::uint32_t q : {5u, 7u, 8u}) {
        FieldPtr f = make_field(q);
        std::size_t nmax = std::min<std::size_t>(8, q - 1);
        for (std::size_t n = 4; n <= nmax; ++n) {
            for (std::size_t k = 2; k + 2 <= n; ++k) {
                LinearCode code = reed_solomon(f, n, k);
                ExhaustiveOrderingResult res = min_state_complexity_exhaustive(code);
                int w = static_cast<int>(std::min(k, n - k));
                require(res.s == w, "exhaustive minimum is not min(k, n-k)");
                require(state_profile(permute(code, res.ordering)).max_state() == res.s,
                        "returned ordering does not attain the minimum");
                g_bound_corpus.emplace_back(std::move(code), reed_solomon_descriptor(n, k));
                ++count;
            }
        }
    }
    require(count == 17, "reed-solomon corpus size");
}

int elliptic_case_smax(std::int64_t n, std::int64_t m, std::int64_t l1, std::int64_t l2) {
    if (n > 2 * m) {
        if (n == 2 * m + 1 && l1 + l2 == 2) return static_cast<int>(m) - 1;
        return static_cast<int>(m);
    }
    if (n == 2 * m) return (l1 + l2 == 0) ? static_cast<int>(m) : static_cast<int>(m) - 1;
    if (n == 2 * m - 1 && l1 + l2 == 2) return static_cast<int>(n - m) - 1;
    return static_cast<int>(n - m);
}

void c7_elliptic_cases() {
    FieldPtr f5 = Field::create(5, 1);
    FieldPtr f7 = Field::create(7, 1);
    FieldPtr f4 = Field::create(2, 2);
    std::vector<EllipticCurve> curves;
    curves.push_back(EllipticCurve::create(f5, 0, 0, 0, 1, 1));  // 9 points, 1 idempotent
    curves.push_back(EllipticCurve::create(f5, 0, 0, 0, 0, 1));  // 6 points, 2 idempotents
    curves.push_back(EllipticCurve::create(f7, 0, 0, 0, 0, 1));  // 12 points, 4 idempotents
    curves.push_back(EllipticCurve::create(f4, 0, 0, 1, 0, 0));  // 9 points, 1 idempotent

    std::mt19937_64 rng(31);
    for (const EllipticCurve& e : curves) {
        const auto& pts = e.affine_points();
        std::size_t n = pts.size();
        std::vector<std::size_t> order(n);
        for (std::int64_t m = 2; m + 2 <= static_cast<std::int64_t>(n); ++m) {
            for (int round = 0; round < 4; ++round) {
                for (std::size_t i = 0; i < n; ++i) order[i] = i;
                if (round > 0) std::shuffle(order.begin(), order.end(), rng);
                std::vector<EllipticPoint> opts(n, pts[0]);
                for (std::size_t i = 0; i < n; ++i) opts[i] = pts[order[i]];

                LinearCode code = elliptic_one_point_code(e, m, opts);
                StateProfile prof = state_profile(code);
                auto [l1, l2] = ell1_ell2(e, m, opts);
                require(prof.max_state() == elliptic_case_smax(n, m, l1, l2),
                        "max state breaks the degree case formula");
                for (std::size_t i = 0; i <= n; ++i) {
                    std::vector<EllipticPoint> head(opts.begin(), opts.begin() + i);
                    std::vector<EllipticPoint> tail(opts.begin() + i, opts.end());
                    std::int64_t want =
                        m - ell_one_point(e, m, head) - ell_one_point(e, m, tail);
                    require(prof.s[i] == static_cast<int>(want),
                            "profile breaks the boundary-dimension identity");
                }
                g_bound_corpus.emplace_back(std::move(code), elliptic_descriptor(e, m, opts));
            }
        }
    }

    // Ordering existence: target boundary sum reachable or provably not.
    struct Claim {
        std::size_t curve;
        std::int64_t m;
        int target;
        bool reachable;
    };
    const Claim claims[] = {
        {1, 2, 2, true},  {1, 3, 2, true},   // 2 idempotents, n = 2m +- 1
        {2, 5, 2, false}, {2, 6, 2, false},  // 4 idempotents, n = 2m +- 1
        {2, 3, 2, true},                     // 4 idempotents, n > 2m + 1
        {0, 4, 1, true},  {3, 4, 1, true},   // n = 2m
        {0, 3, 2, true},  {0, 6, 2, true},  {3, 6, 2, true},  // |n - 2m| >= 2
    };
    for (const Claim& cl : claims) {
        const EllipticCurve& e = curves[cl.curve];
        const auto& pts = e.affine_points();
        OrderingSearchResult res = ordering_search(e, cl.m, cl.target, pts);
        require(res.exhaustive, "search was expected to be exhaustive");
        require(res.ordering.has_value() == cl.reachable,
                "ordering existence answer is wrong");
        if (res.ordering) {
            std::vector<EllipticPoint> opts;
            for (std::size_t idx : *res.ordering) opts.push_back(pts[idx]);
            auto [l1, l2] = ell1_ell2(e, cl.m, opts);
            require(l1 + l2 >= cl.target, "found ordering misses the target");
        }
    }
}

void c8_state_floor() {
    require(!g_bound_corpus.empty(), "no codes collected");
    for (const auto& [code, dsc] : g_bound_corpus)
        require(state_profile(code).max_state() >= thm3_1(dsc),
                "profile dips below w - (g - a)");
    for (std::int64_t m = 62; m <= 71; ++m) {
        LinearCode code = hermitian_code(5, m);
        AgDescriptor dsc = hermitian_descriptor(5, m);
        int smax = state_profile(code).max_state();
        require(smax >= thm3_1(dsc), "hermitian profile dips below w - (g - a)");
        require(smax <= dsc.wolf(), "profile exceeds the wolf ceiling");
    }
}

// ---- criterion 9 -----------------------------------------------------------

void c9_distance_floors() {
    for (std::int64_t m = 2; m <= 9; ++m) {
        LinearCode code = hermitian_code(2, m);
        AgDescriptor dsc = hermitian_descriptor(2, m);
        require(code.length() == 8 && code.dimension() == static_cast<std::size_t>(dsc.k),
                "dimensions disagree with the descriptor");
        std::int64_t d = static_cast<std::int64_t>(min_distance_bruteforce(code));
        auto ig = improved_goppa_d(dsc);
        require(ig.has_value() && d >= *ig, "distance below the improved floor");
        require(d >= cor3_1_d(dsc), "distance below the speciality floor");
        if (m == 8) {
            require(dsc.abundance == 1, "abundance at m = 8");
            require(*ig == 2 && d >= 2, "abundant floor at m = 8");
        }
        for (std::size_t i = 1; i <= code.dimension(); ++i) {
            auto floor_i = ghw_lower(dsc, i);
            std::int64_t di = static_cast<std::int64_t>(ghw_bruteforce(code, i));
            require(floor_i.has_value() && di >= *floor_i,
                    "weight hierarchy below its floor");
        }
    }
}

// ---- criterion 10 ----------------------------------------------------------

void c10_viterbi() {
    std::mt19937_64 rng(4099);
    int pairs = 0;
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        FieldPtr f = make_field(q);
        std::uniform_int_distribution<std::uint32_t> sym(0, q - 1);
        for (int t = 0; t < 30; ++t) {
            std::size_t n = 3 + rng() % 6;
            std::size_t kmax = std::min<std::size_t>(4, n - 1);
            LinearCode code = testsupport::random_code(f, n, kmax, rng);
            Trellis tr = Trellis::build(code);
            std::vector<std::uint16_t> received(n);
            for (auto& v : received) v = static_cast<std::uint16_t>(sym(rng));

            DecodeResult got = viterbi_decode(tr, received);
            auto words = enumerate_codewords(code, 1u << 13);
            const std::vector<std::uint16_t>* best = nullptr;
            std::size_t best_d = n + 1;
            for (const auto& w : words) {
                std::size_t d = 0;
                for (std::size_t i = 0; i < n; ++i) d += (w[i] != received[i]);
                if (d < best_d || (d == best_d && w < *best)) {
                    best = &w;
                    best_d = d;
                }
            }
            require(got.codeword == *best && got.distance == best_d,
                    "viterbi result differs from the brute-force oracle");
            require(code.contains(got.codeword), "decoded word is not a codeword");
            ++pairs;
        }
    }
    require(pairs == 120, "pair count");
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* name;
        double limit_s;
        void (*fn)();
    };
    const Entry entries[] = {
        {1, "hermitian table cells match the published values", 1.0, c1_hermitian_table},
        {2, "suzuki table markers and semigroup swap", 1.0, c2_suzuki_table},
        {3, "plane-degree gonality sequence and its validator", 0.1, c3_gonality_sequence},
        {4, "profile, span form, and trellis agree on random codes", 30.0, c4_oracle_agreement},
        {5, "profiles of a code and its dual match at every position", 30.0, c5_profile_duality},
        {6, "exhaustive ordering search reaches min(k, n-k) on mds codes", 60.0, c6_mds_ordering_search},
        {7, "elliptic codes: case formula, orderings, boundary identity", 60.0, c7_elliptic_cases},
        {8, "max state complexity stays at or above w - (g - a)", 120.0, c8_state_floor},
        {9, "small hermitian family: distance and hierarchy floors", 30.0, c9_distance_floors},
        {10, "viterbi decoding equals brute-force nearest codeword", 30.0, c10_viterbi},
    };

    int failures = 0;
    for (const Entry& e : entries) {
        auto t0 = std::chrono::steady_clock::now();
        std::string error;
        try {
            e.fn();
        } catch (const std::exception& ex) {
            error = ex.what();
        } catch (...) {
            error = "unknown error";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = error.empty() && secs < e.limit_s;
        if (!ok) ++failures;
        std::printf("%s  %2d  %-60s  %7.3f s\n", ok ? "PASS" : "FAIL", e.id, e.name, secs);
        if (!error.empty())
            std::printf("          %s\n", error.c_str());
        else if (secs >= e.limit_s)
            std::printf("          exceeded the %.1f s budget\n", e.limit_s);
    }
    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
