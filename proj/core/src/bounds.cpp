#include "agtrellis/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace agtrellis {

namespace {

std::int64_t floor_div2(std::int64_t a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }
std::int64_t ceil_div2(std::int64_t a) { return floor_div2(a + 1); }

void require_increasing(const std::vector<std::int64_t>& v, const char* what) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] <= v[i - 1]) throw std::invalid_argument(std::string(what) + " must be strictly increasing");
}

}  // namespace

AgDescriptor AgDescriptor::one_point(std::int64_t n, std::int64_t deg_g, NumericalSemigroup h,
                                     std::optional<GonalitySequence> gon) {
    AgDescriptor d;
    d.n = n;
    d.deg_g = deg_g;
    d.genus = h.genus();
    d.abundance = h.nongaps_up_to(deg_g - n);
    d.k = h.nongaps_up_to(deg_g) - d.abundance;
    d.ell_2g_minus_d = h.nongaps_up_to(2 * deg_g - n);
    d.gonality = std::move(gon);
    d.semigroup = std::move(h);
    d.check();
    return d;
}

void AgDescriptor::check() const {
    if (n < 1) throw std::invalid_argument("descriptor needs n >= 1");
    if (k < 0) throw std::invalid_argument("descriptor needs k >= 0");
    if (abundance < 0 || abundance > genus)
        throw std::invalid_argument("abundance must satisfy 0 <= a <= g, got a = " +
                                    std::to_string(abundance) + ", g = " + std::to_string(genus));
    if (gonality && static_cast<std::int64_t>(gonality->genus()) != genus)
        throw std::invalid_argument("gonality sequence genus disagrees with descriptor genus");
}

std::int64_t AgDescriptor::wolf() const { return std::min(k, n - k); }

std::int64_t AgDescriptor::singleton() const { return n - k + 1; }

std::optional<std::int64_t> AgDescriptor::gamma(std::size_t i) const {
    if (gonality) return gonality->value(i);
    if (i == 1) return 0;  // gamma_1 = 0 for every curve
    return std::nullopt;
}

std::int64_t prop2_1(std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t d_dual) {
    if (d < 1 || d_dual < 1) throw std::invalid_argument("distances must be positive");
    std::int64_t t = std::max<std::int64_t>(0, n + 2 - 2 * std::max(d, d_dual));
    return clamp0(std::min(k, n - k) - t);
}

std::int64_t prop2_2(std::int64_t n, std::int64_t k, const std::vector<std::int64_t>& ghw,
                     std::int64_t d, const std::vector<std::int64_t>& ghw_dual,
                     std::int64_t d_dual) {
    require_increasing(ghw, "weight hierarchy");
    require_increasing(ghw_dual, "dual weight hierarchy");
    std::optional<std::int64_t> best_i;
    for (std::size_t t = 0; t < ghw.size(); ++t)
        if (ghw[t] >= n + 2 - d) {
            best_i = static_cast<std::int64_t>(t) + 1;
            break;
        }
    for (std::size_t t = 0; t < ghw_dual.size(); ++t)
        if (ghw_dual[t] >= n + 2 - d_dual) {
            std::int64_t i = static_cast<std::int64_t>(t) + 1;
            if (!best_i || i < *best_i) best_i = i;
            break;
        }
    if (!best_i) return 0;
    return clamp0(std::min(k, n - k) - *best_i + 1);
}

std::int64_t clifford_bound(std::int64_t n, std::int64_t genus) { return clamp0(n / 2 - genus); }

std::int64_t goppa_d(const AgDescriptor& dsc) { return dsc.n - dsc.deg_g; }

std::optional<std::int64_t> improved_goppa_d(const AgDescriptor& dsc) {
    auto g1 = dsc.gamma(static_cast<std::size_t>(dsc.abundance) + 1);
    if (!g1) return std::nullopt;
    return dsc.n - dsc.deg_g + *g1;
}

std::int64_t cor3_1_d(const AgDescriptor& dsc) {
    return (dsc.n - dsc.k + 1) - (dsc.genus - dsc.abundance);
}

std::optional<std::int64_t> ghw_lower(const AgDescriptor& dsc, std::size_t i) {
    if (i < 1) throw std::invalid_argument("weight index is 1-based");
    auto gai = dsc.gamma(static_cast<std::size_t>(dsc.abundance) + i);
    if (!gai) return std::nullopt;
    return dsc.n - dsc.deg_g + *gai;
}

std::optional<bool> prop3_1_attains_wolf(const AgDescriptor& dsc) {
    auto g1 = dsc.gamma(static_cast<std::size_t>(dsc.abundance) + 1);
    if (!g1) return std::nullopt;
    return dsc.deg_g < floor_div2(dsc.n) + *g1 ||
           dsc.deg_g > ceil_div2(dsc.n) + 2 * dsc.genus - 2 - *g1;
}

namespace {

// Smallest i >= 1 with gamma_{a+i} >= threshold; exists because the sequence
// is unbounded.
std::int64_t first_gamma_index(const AgDescriptor& dsc, std::int64_t threshold) {
    const std::int64_t a = dsc.abundance;
    // gamma_{g+1} = 2g already meets any threshold <= 2g; past the head the
    // values are g + j - 1, which settles larger thresholds.
    const std::int64_t cap = std::max({std::int64_t{1}, dsc.genus + 1 - a,
                                       threshold - dsc.genus - a + 1});
    for (std::int64_t i = 1; i <= cap; ++i) {
        auto v = dsc.gamma(static_cast<std::size_t>(a + i));
        if (!v) throw std::logic_error("gonality data vanished mid-scan");
        if (*v >= threshold) return i;
    }
    throw std::logic_error("gonality scan failed to reach its threshold");
}

}  // namespace

std::optional<std::int64_t> prop3_2(const AgDescriptor& dsc) {
    if (!dsc.gonality) return std::nullopt;
    auto g1 = dsc.gamma(static_cast<std::size_t>(dsc.abundance) + 1);
    const std::int64_t w = dsc.wolf();
    std::int64_t thr1 = 2 * dsc.deg_g - dsc.n - *g1 + 2;
    std::int64_t thr2 = dsc.n + 2 * (2 * dsc.genus - 2) - 2 * dsc.deg_g - *g1 + 2;
    std::int64_t b1 = w - first_gamma_index(dsc, thr1) + 1;
    std::int64_t b2 = w - first_gamma_index(dsc, thr2) + 1;
    return clamp0(std::max(b1, b2));
}

std::int64_t thm3_1(const AgDescriptor& dsc) {
    return clamp0(dsc.wolf() - (dsc.genus - dsc.abundance));
}

std::optional<std::int64_t> remark3_2(const AgDescriptor& dsc) {
    if (2 * dsc.abundance > dsc.genus) return std::nullopt;
    return clamp0(dsc.wolf() - (dsc.genus - 2 * dsc.abundance));
}

std::optional<bool> eq3_2_holds(const AgDescriptor& dsc) {
    auto g1 = dsc.gamma(static_cast<std::size_t>(dsc.abundance) + 1);
    if (!g1) return std::nullopt;
    return floor_div2(dsc.n) + *g1 <= dsc.deg_g &&
           dsc.deg_g <= ceil_div2(dsc.n) + 2 * dsc.genus - 2 - *g1;
}

std::optional<std::int64_t> cor3_2(const AgDescriptor& dsc) {
    auto in_window = eq3_2_holds(dsc);
    if (!in_window || !*in_window) return std::nullopt;
    auto g1 = dsc.gamma(static_cast<std::size_t>(dsc.abundance) + 1);
    std::int64_t alpha = dsc.deg_g + 1 - dsc.abundance - floor_div2(dsc.n + *g1);
    std::int64_t beta = 2 * dsc.genus - 1 - dsc.deg_g - dsc.abundance + ceil_div2(dsc.n - *g1);
    return clamp0(dsc.wolf() - std::min(alpha, beta));
}

std::optional<std::int64_t> cor3_3(const AgDescriptor& dsc) {
    auto in_window = eq3_2_holds(dsc);
    if (!in_window || !*in_window) return std::nullopt;
    auto g1 = dsc.gamma(static_cast<std::size_t>(dsc.abundance) + 1);
    return clamp0(floor_div2(dsc.n + *g1) - dsc.genus);
}

std::int64_t prop3_3(std::int64_t k, std::int64_t a, std::int64_t ell2gd) {
    if (ell2gd < 0) throw std::invalid_argument("ell(2G-D) must be >= 0");
    return clamp0(k + 2 * a - ell2gd - 1);
}

std::optional<Prop34Result> prop3_4(const AgDescriptor& dsc) {
    if (!dsc.gonality) return std::nullopt;
    const std::int64_t i = floor_div2(dsc.n);
    // Need deg G - gamma_j < min(i, n-i) = floor(n/2); smallest such j.
    const std::int64_t threshold = dsc.deg_g - i + 1;
    std::int64_t j = 1;
    const std::int64_t cap = std::max(dsc.genus + 1, threshold - dsc.genus + 1);
    for (; j <= cap; ++j)
        if (dsc.gonality->value(static_cast<std::size_t>(j)) >= threshold) break;
    if (j > cap) throw std::logic_error("gonality scan failed to reach its threshold");
    return Prop34Result{clamp0(dsc.k - 2 * (j - 1 - dsc.abundance)), i, j};
}

std::int64_t prop3_5_profile_value(std::int64_t n, std::int64_t i, std::int64_t ell_ai,
                                   std::int64_t a) {
    return n - i - 2 * (ell_ai - a);
}

std::int64_t cor3_4_profile(std::int64_t n, std::int64_t i, std::int64_t ell_a_half) {
    if (n % 2 != 0) throw std::invalid_argument("selfdual profile formula needs even n");
    if (i < 0 || i > n) throw std::invalid_argument("boundary out of range");
    if (i < n / 2) return i;
    if (i == n / 2) return n / 2 - 2 * ell_a_half;
    return n - i;
}

const std::vector<std::string>& BoundReport::key_order() {
    static const std::vector<std::string> order = {
        "wolf",   "singleton", "goppa",      "improved_goppa", "cor3_1", "prop2_1",
        "prop2_2", "prop3_1",  "prop3_2",    "thm3_1",         "remark3_2", "cor3_2",
        "cor3_3",  "prop3_3",  "prop3_4",    "best"};
    return order;
}

const BoundValue& BoundReport::at(const std::string& key) const {
    auto it = entries.find(key);
    if (it == entries.end()) throw std::invalid_argument("no bound entry named " + key);
    return it->second;
}

BoundReport best_lower_bound(std::int64_t n, std::int64_t k,
                             const std::optional<AgDescriptor>& dsc, const DistanceData& extras) {
    if (dsc) {
        dsc->check();
        if (dsc->n != n || dsc->k != k)
            throw std::invalid_argument("descriptor (n, k) disagrees with the code");
    }
    BoundReport r;
    auto val = [](std::int64_t v) { return BoundValue{v, std::nullopt, {}}; };
    auto na = [](const char* why) { return BoundValue{std::nullopt, std::nullopt, why}; };

    const std::int64_t w = std::min(k, n - k);
    r.entries["wolf"] = val(w);
    r.entries["singleton"] = val(n - k + 1);

    if (extras.d && extras.d_dual)
        r.entries["prop2_1"] = val(prop2_1(n, k, *extras.d, *extras.d_dual));
    else
        r.entries["prop2_1"] = na("no distance data");

    const bool side_c = extras.d && !extras.ghw.empty();
    const bool side_dual = extras.d_dual && !extras.ghw_dual.empty();
    if (side_c || side_dual)
        r.entries["prop2_2"] = val(prop2_2(n, k, side_c ? extras.ghw : std::vector<std::int64_t>{},
                                           side_c ? *extras.d : 1,
                                           side_dual ? extras.ghw_dual : std::vector<std::int64_t>{},
                                           side_dual ? *extras.d_dual : 1));
    else
        r.entries["prop2_2"] = na("no weight hierarchy data");

    if (!dsc) {
        for (const char* key : {"goppa", "improved_goppa", "cor3_1", "prop3_1", "prop3_2",
                                "thm3_1", "remark3_2", "cor3_2", "cor3_3", "prop3_3", "prop3_4"})
            r.entries[key] = na("no curve data");
    } else {
        r.entries["goppa"] = val(goppa_d(*dsc));
        if (auto v = improved_goppa_d(*dsc))
            r.entries["improved_goppa"] = val(*v);
        else
            r.entries["improved_goppa"] = na("no gonality data");
        r.entries["cor3_1"] = val(cor3_1_d(*dsc));

        if (auto f = prop3_1_attains_wolf(*dsc))
            r.entries["prop3_1"] = BoundValue{std::nullopt, *f, {}};
        else
            r.entries["prop3_1"] = na("no gonality data");

        if (auto v = prop3_2(*dsc))
            r.entries["prop3_2"] = val(*v);
        else
            r.entries["prop3_2"] = na("no gonality data");

        r.entries["thm3_1"] = val(thm3_1(*dsc));

        if (auto v = remark3_2(*dsc))
            r.entries["remark3_2"] = val(*v);
        else
            r.entries["remark3_2"] = na("a > g/2");

        auto in_window = eq3_2_holds(*dsc);
        if (!in_window) {
            r.entries["cor3_2"] = na("no gonality data");
            r.entries["cor3_3"] = na("no gonality data");
        } else if (!*in_window) {
            r.entries["cor3_2"] = na("deg G outside the middle window");
            r.entries["cor3_3"] = na("deg G outside the middle window");
        } else {
            r.entries["cor3_2"] = val(*cor3_2(*dsc));
            r.entries["cor3_3"] = val(*cor3_3(*dsc));
        }

        if (dsc->ell_2g_minus_d)
            r.entries["prop3_3"] = val(prop3_3(dsc->k, dsc->abundance, *dsc->ell_2g_minus_d));
        else
            r.entries["prop3_3"] = na("no ell(2G-D) data");

        if (auto v = prop3_4(*dsc)) {
            r.entries["prop3_4"] = val(v->bound);
            r.prop3_4_witness = *v;
        } else {
            r.entries["prop3_4"] = na("no gonality data");
        }
    }

    std::int64_t best = 0;
    for (const char* key : {"prop2_1", "prop2_2", "prop3_2", "thm3_1", "remark3_2", "cor3_2",
                            "cor3_3", "prop3_3", "prop3_4"}) {
        const BoundValue& b = r.entries[key];
        if (b.value) best = std::max(best, *b.value);
    }
    const BoundValue& window = r.entries["prop3_1"];
    if (window.flag && *window.flag) best = w;
    r.best = best;
    r.entries["best"] = val(best);
    return r;
}

}  // namespace agtrellis
