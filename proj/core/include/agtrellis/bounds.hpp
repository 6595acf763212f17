#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "agtrellis/semigroup.hpp"

namespace agtrellis {

// Everything the bound formulas need to know about an evaluation code
// C(D,G): length n, deg G, genus g, abundance a = ℓ(G−D), dimension k, and
// optional semigroup/gonality data for the one-point refinements.
struct AgDescriptor {
    std::int64_t n = 0;
    std::int64_t deg_g = 0;
    std::int64_t genus = 0;
    std::int64_t abundance = 0;
    std::int64_t k = 0;
    std::optional<GonalitySequence> gonality;
    std::optional<NumericalSemigroup> semigroup;
    std::optional<std::int64_t> ell_2g_minus_d;  // ℓ(2G−D)

    // One-point case D ~ nQ: abundance = #nongaps up to deg_g−n, dimension
    // k = #nongaps up to deg_g minus the abundance, ℓ(2G−D) by counting.
    static AgDescriptor one_point(std::int64_t n, std::int64_t deg_g, NumericalSemigroup h,
                                  std::optional<GonalitySequence> gon);

    void check() const;  // throws std::invalid_argument unless 0 <= a <= g, k >= 0, 1 <= n

    std::int64_t wolf() const;       // min(k, n-k)
    std::int64_t singleton() const;  // n-k+1

    // gamma_{a+i} offset by the abundance; gamma_1 = 0 is known even without
    // explicit gonality data, everything else needs it.
    std::optional<std::int64_t> gamma(std::size_t i) const;
};

inline std::int64_t clamp0(std::int64_t v) { return v < 0 ? 0 : v; }

// Lower bound on s(C) from the two minimum distances:
// t = max(0, n+2-2*max(d, d_dual)), bound = max(0, w - t).
std::int64_t prop2_1(std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t d_dual);

// Lower bound on s(C) from weight hierarchies: the smallest i with
// ghw[i] >= n+2-d or ghw_dual[i] >= n+2-d_dual gives w-i+1; 0 when no
// supplied prefix entry qualifies. Empty vectors skip their condition.
std::int64_t prop2_2(std::int64_t n, std::int64_t k, const std::vector<std::int64_t>& ghw,
                     std::int64_t d, const std::vector<std::int64_t>& ghw_dual,
                     std::int64_t d_dual);

// Clifford-theorem floor for a genus-g AG code: max(0, floor(n/2) - g).
std::int64_t clifford_bound(std::int64_t n, std::int64_t genus);

// Minimum distance bounds; raw values, negatives mean a vacuous bound.
std::int64_t goppa_d(const AgDescriptor& dsc);                             // n - deg G
std::optional<std::int64_t> improved_goppa_d(const AgDescriptor& dsc);     // n - deg G + gamma_{a+1}
std::int64_t cor3_1_d(const AgDescriptor& dsc);                            // (n-k+1) - (g-a)
std::optional<std::int64_t> ghw_lower(const AgDescriptor& dsc, std::size_t i);  // d_i >= n - deg G + gamma_{a+i}

// True when deg G sits outside the middle window, forcing s(C) = w.
std::optional<bool> prop3_1_attains_wolf(const AgDescriptor& dsc);

// Gonality-threshold bound: per condition the smallest i with gamma_{a+i}
// over the threshold yields w-i+1; the larger of the two wins, clamped at 0.
std::optional<std::int64_t> prop3_2(const AgDescriptor& dsc);

std::int64_t thm3_1(const AgDescriptor& dsc);                  // max(0, w - (g-a))
std::optional<std::int64_t> remark3_2(const AgDescriptor& dsc);  // w - (g-2a); needs 2a <= g

// Window floor(n/2)+gamma_{a+1} <= deg G <= ceil(n/2)+2g-2-gamma_{a+1};
// cor3_2 and cor3_3 apply only inside it.
std::optional<bool> eq3_2_holds(const AgDescriptor& dsc);
std::optional<std::int64_t> cor3_2(const AgDescriptor& dsc);
std::optional<std::int64_t> cor3_3(const AgDescriptor& dsc);   // floor((n+gamma_{a+1})/2) - g

std::int64_t prop3_3(std::int64_t k, std::int64_t a, std::int64_t ell2gd);

struct Prop34Result {
    std::int64_t bound;
    std::int64_t i;  // boundary maximizing min(i, n-i)
    std::int64_t j;  // smallest index with deg G - gamma_j < min(i, n-i)
};
std::optional<Prop34Result> prop3_4(const AgDescriptor& dsc);

// Per-position profile of a selfdual one-point code: s_i = n-i-2(ℓ(A_i)-a).
std::int64_t prop3_5_profile_value(std::int64_t n, std::int64_t i, std::int64_t ell_ai,
                                   std::int64_t a);

// Selfdual elliptic profile: i before the midpoint, n/2 - 2ℓ(A_{n/2}) at it,
// n-i past it. Throws std::invalid_argument for odd n.
std::int64_t cor3_4_profile(std::int64_t n, std::int64_t i, std::int64_t ell_a_half);

// Brute-force side data feeding the distance-based bounds.
struct DistanceData {
    std::optional<std::int64_t> d;
    std::optional<std::int64_t> d_dual;
    std::vector<std::int64_t> ghw;       // ghw[t] = d_{t+1}(C)
    std::vector<std::int64_t> ghw_dual;  // ghw_dual[t] = d_{t+1}(dual)
};

// One evaluated bound: an integer value, a boolean flag (window test), or an
// inapplicability reason; exactly one of the three is set.
struct BoundValue {
    std::optional<std::int64_t> value;
    std::optional<bool> flag;
    std::string na_reason;
};

struct BoundReport {
    // Serialization key order; "best" last.
    static const std::vector<std::string>& key_order();

    std::map<std::string, BoundValue> entries;
    std::int64_t best = 0;
    std::optional<Prop34Result> prop3_4_witness;

    const BoundValue& at(const std::string& key) const;
};

// Evaluates every bound that its inputs allow; entries lacking data carry a
// reason instead of a value. best = max over the applicable lower bounds on
// s(C), promoted to wolf when the window test proves wolf is attained.
BoundReport best_lower_bound(std::int64_t n, std::int64_t k,
                             const std::optional<AgDescriptor>& dsc,
                             const DistanceData& extras = {});

}  // namespace agtrellis
