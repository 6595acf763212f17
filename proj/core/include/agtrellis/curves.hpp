#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "agtrellis/bounds.hpp"
#include "agtrellis/code.hpp"
#include "agtrellis/gf.hpp"

namespace agtrellis {

// Evaluation code of 1, x, ..., x^{k-1} at the n smallest nonzero element
// codes. MDS; needs n <= q-1 under that point rule.
LinearCode reed_solomon(const FieldPtr& field, std::size_t n, std::size_t k);

// Genus-0 one-point view of the same code: deg G = k-1, semigroup ⟨1⟩.
AgDescriptor reed_solomon_descriptor(std::size_t n, std::size_t k);

// One-point code on y^{q0} + y = x^{q0+1} over GF(q0^2). Evaluation points
// are the q0^3 affine curve points ordered lexicographically by (x code,
// y code); the basis is the monomials x^a y^b with b < q0 and pole order
// a*q0 + b*(q0+1) <= m, sorted by pole order. m >= n is accepted only for
// q0 = 2, where the abundance cases stay brute-forceable.
LinearCode hermitian_code(std::uint32_t q0, std::int64_t m);
AgDescriptor hermitian_descriptor(std::uint32_t q0, std::int64_t m);

struct EllipticPoint {
    bool infinity = true;
    std::uint16_t x = 0;
    std::uint16_t y = 0;

    static EllipticPoint at_infinity() { return {}; }
    static EllipticPoint affine(std::uint16_t px, std::uint16_t py) { return {false, px, py}; }

    bool operator==(const EllipticPoint& o) const {
        return infinity == o.infinity && (infinity || (x == o.x && y == o.y));
    }
    bool operator!=(const EllipticPoint& o) const { return !(*this == o); }
};

// General Weierstrass curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
// with the chord-tangent group law written so it is valid in every
// characteristic, including 2 and 3.
class EllipticCurve {
public:
    // Throws std::invalid_argument when the discriminant vanishes and
    // budget_error when q is too large for exhaustive point enumeration.
    static EllipticCurve create(FieldPtr field, std::uint16_t a1, std::uint16_t a2,
                                std::uint16_t a3, std::uint16_t a4, std::uint16_t a6);

    const FieldPtr& field() const { return field_; }
    std::uint16_t a1() const { return a1_; }
    std::uint16_t a2() const { return a2_; }
    std::uint16_t a3() const { return a3_; }
    std::uint16_t a4() const { return a4_; }
    std::uint16_t a6() const { return a6_; }

    bool on_curve(const EllipticPoint& p) const;
    EllipticPoint negate(const EllipticPoint& p) const;
    EllipticPoint add(const EllipticPoint& p, const EllipticPoint& q) const;
    EllipticPoint sum(const std::vector<EllipticPoint>& pts) const;

    // Affine rational points, lexicographic by (x code, y code).
    const std::vector<EllipticPoint>& affine_points() const { return affine_; }
    std::size_t group_order() const { return affine_.size() + 1; }

private:
    EllipticCurve() = default;

    FieldPtr field_;
    std::uint16_t a1_ = 0, a2_ = 0, a3_ = 0, a4_ = 0, a6_ = 0;
    std::vector<EllipticPoint> affine_;
};

// Number of points with P + P = O, the neutral element included.
std::size_t idempotent_count(const EllipticCurve& e);

// ℓ(cO - P_1 - ... - P_t) for listed affine points (repeats allowed): 0 when
// the degree c-t is negative, c-t when positive, and at degree zero 1
// exactly if the group sum of the points is O.
std::int64_t ell_one_point(const EllipticCurve& e, std::int64_t c,
                           const std::vector<EllipticPoint>& pts);

// Code of L(mO) evaluated at pts, which must be a permutation of all affine
// points; 2 <= m <= n-2. Basis ordered by pole order at O (x: 2, y: 3).
LinearCode elliptic_one_point_code(const EllipticCurve& e, std::int64_t m,
                                   const std::vector<EllipticPoint>& pts);
AgDescriptor elliptic_descriptor(const EllipticCurve& e, std::int64_t m,
                                 const std::vector<EllipticPoint>& pts);

// (ℓ1, ℓ2) = (ℓ(mO - last m points), ℓ(mO - first m points)); both 0 or 1.
std::pair<std::int64_t, std::int64_t> ell1_ell2(const EllipticCurve& e, std::int64_t m,
                                                const std::vector<EllipticPoint>& pts);

struct OrderingSearchResult {
    // Exhaustive runs decide the question: an empty ordering then proves no
    // ordering reaches the target. Randomized runs only report a find.
    bool exhaustive = false;
    std::optional<std::vector<std::size_t>> ordering;  // indices into pts
};

// Searches for an ordering of pts with ℓ1(m) + ℓ2(m) >= target. Exhaustive
// for n <= 12 by scanning first-m / last-m index subsets (only their group
// sums matter); seeded random shuffles otherwise.
OrderingSearchResult ordering_search(const EllipticCurve& e, std::int64_t m, int target,
                                     const std::vector<EllipticPoint>& pts,
                                     std::uint64_t seed = 1, std::size_t tries = 2000);

// Bounded search for an ordering whose code equals its own dual; identity
// first, then seeded shuffles. Empty result is not a nonexistence proof.
std::optional<std::vector<std::size_t>> search_selfdual_ordering(const EllipticCurve& e,
                                                                 std::int64_t m,
                                                                 std::uint64_t seed = 1,
                                                                 std::size_t tries = 200);

}  // namespace agtrellis
