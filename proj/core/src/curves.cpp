#include "agtrellis/curves.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "agtrellis/errors.hpp"

namespace agtrellis {

LinearCode reed_solomon(const FieldPtr& field, std::size_t n, std::size_t k) {
    const std::uint32_t q = field->order();
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    if (n > q - 1)
        throw std::invalid_argument("evaluation uses the nonzero element codes 1..n, so n <= q-1");
    Matrix g(field, k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g.set(i, j, field->pow(static_cast<std::uint16_t>(j + 1), i));
    return LinearCode::from_matrix(g);
}

AgDescriptor reed_solomon_descriptor(std::size_t n, std::size_t k) {
    NumericalSemigroup naturals({1});
    return AgDescriptor::one_point(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k) - 1,
                                   naturals, GonalitySequence::from_semigroup(naturals));
}

namespace {

// q0 = p^e for a prime p, or throws.
std::pair<std::uint32_t, std::uint32_t> prime_power_split(std::uint32_t q0) {
    if (q0 < 2) throw std::invalid_argument("q0 must be at least 2");
    std::uint32_t p = q0;
    for (std::uint32_t c = 2; c * c <= q0; ++c)
        if (q0 % c == 0) {
            p = c;
            break;
        }
    std::uint32_t e = 0, rest = q0;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) throw std::invalid_argument(std::to_string(q0) + " is not a prime power");
    return {p, e};
}

}  // namespace

LinearCode hermitian_code(std::uint32_t q0, std::int64_t m) {
    auto [p, e] = prime_power_split(q0);
    const std::int64_t n = static_cast<std::int64_t>(q0) * q0 * q0;
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    if (m >= n && q0 != 2)
        throw std::invalid_argument("m >= n is supported only for q0 = 2");
    FieldPtr f = Field::create(p, 2 * e);

    // Affine points of y^{q0} + y = x^{q0+1}, lex by (x code, y code).
    std::vector<std::pair<std::uint16_t, std::uint16_t>> pts;
    for (std::uint32_t x = 0; x < f->order(); ++x)
        for (std::uint32_t y = 0; y < f->order(); ++y) {
            std::uint16_t lhs = f->add(f->pow(static_cast<std::uint16_t>(y), q0),
                                       static_cast<std::uint16_t>(y));
            std::uint16_t rhs = f->pow(static_cast<std::uint16_t>(x), q0 + 1);
            if (lhs == rhs) pts.emplace_back(x, y);
        }
    if (static_cast<std::int64_t>(pts.size()) != n)
        throw std::logic_error("affine point count " + std::to_string(pts.size()) +
                               " differs from q0^3");

    // Monomials x^a y^b with b < q0, pole order a*q0 + b*(q0+1) <= m.
    std::vector<std::pair<std::int64_t, std::pair<std::uint32_t, std::uint32_t>>> monomials;
    for (std::uint32_t b = 0; b < q0; ++b)
        for (std::uint32_t a = 0;; ++a) {
            std::int64_t pole = static_cast<std::int64_t>(a) * q0 +
                                static_cast<std::int64_t>(b) * (q0 + 1);
            if (pole > m) break;
            monomials.push_back({pole, {a, b}});
        }
    std::sort(monomials.begin(), monomials.end());
    if (monomials.empty()) throw std::invalid_argument("no basis functions with pole order <= m");

    Matrix g(f, monomials.size(), static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < monomials.size(); ++r) {
        auto [a, b] = monomials[r].second;
        for (std::size_t j = 0; j < pts.size(); ++j)
            g.set(r, j, f->mul(f->pow(pts[j].first, a), f->pow(pts[j].second, b)));
    }
    return LinearCode::from_matrix(g);
}

AgDescriptor hermitian_descriptor(std::uint32_t q0, std::int64_t m) {
    const std::int64_t n = static_cast<std::int64_t>(q0) * q0 * q0;
    return AgDescriptor::one_point(n, m, NumericalSemigroup({q0, q0 + 1}),
                                   gonality_from_plane_degree(q0 + 1));
}

EllipticCurve EllipticCurve::create(FieldPtr field, std::uint16_t a1, std::uint16_t a2,
                                    std::uint16_t a3, std::uint16_t a4, std::uint16_t a6) {
    const Field& f = *field;
    const std::uint32_t q = f.order();
    if (q > 4096)
        throw budget_error("elliptic point enumeration scans q^2 = " + std::to_string(q) + "^2 pairs, over budget");
    for (std::uint16_t c : {a1, a2, a3, a4, a6})
        if (c >= q) throw std::invalid_argument("coefficient outside the field");

    // Small integer constants live in the prime subfield.
    auto ic = [&](std::int64_t c) {
        std::int64_t p = f.characteristic();
        return static_cast<std::uint16_t>(((c % p) + p) % p);
    };
    auto mul = [&](std::uint16_t a, std::uint16_t b) { return f.mul(a, b); };
    auto add = [&](std::uint16_t a, std::uint16_t b) { return f.add(a, b); };
    auto sub = [&](std::uint16_t a, std::uint16_t b) { return f.sub(a, b); };

    std::uint16_t b2 = add(mul(a1, a1), mul(ic(4), a2));
    std::uint16_t b4 = add(mul(ic(2), a4), mul(a1, a3));
    std::uint16_t b6 = add(mul(a3, a3), mul(ic(4), a6));
    std::uint16_t b8 = sub(add(add(mul(mul(a1, a1), a6), mul(mul(ic(4), a2), a6)),
                               mul(a2, mul(a3, a3))),
                           add(mul(a1, mul(a3, a4)), mul(a4, a4)));
    std::uint16_t disc = sub(mul(mul(ic(9), b2), mul(b4, b6)),
                             add(add(mul(mul(b2, b2), b8), mul(ic(8), mul(b4, mul(b4, b4)))),
                                 mul(ic(27), mul(b6, b6))));
    if (disc == 0) throw std::invalid_argument("singular curve (zero discriminant)");

    EllipticCurve e;
    e.field_ = std::move(field);
    e.a1_ = a1;
    e.a2_ = a2;
    e.a3_ = a3;
    e.a4_ = a4;
    e.a6_ = a6;
    for (std::uint32_t x = 0; x < q; ++x)
        for (std::uint32_t y = 0; y < q; ++y) {
            EllipticPoint p = EllipticPoint::affine(static_cast<std::uint16_t>(x),
                                                    static_cast<std::uint16_t>(y));
            if (e.on_curve(p)) e.affine_.push_back(p);
        }
    return e;
}

bool EllipticCurve::on_curve(const EllipticPoint& p) const {
    if (p.infinity) return true;
    const Field& f = *field_;
    std::uint16_t lhs = f.add(f.mul(p.y, p.y), f.add(f.mul(a1_, f.mul(p.x, p.y)), f.mul(a3_, p.y)));
    std::uint16_t x2 = f.mul(p.x, p.x);
    std::uint16_t rhs = f.add(f.mul(x2, p.x), f.add(f.mul(a2_, x2), f.add(f.mul(a4_, p.x), a6_)));
    return lhs == rhs;
}

EllipticPoint EllipticCurve::negate(const EllipticPoint& p) const {
    if (p.infinity) return p;
    const Field& f = *field_;
    std::uint16_t ny = f.neg(f.add(p.y, f.add(f.mul(a1_, p.x), a3_)));
    return EllipticPoint::affine(p.x, ny);
}

EllipticPoint EllipticCurve::add(const EllipticPoint& p, const EllipticPoint& q) const {
    if (p.infinity) return q;
    if (q.infinity) return p;
    if (q == negate(p)) return EllipticPoint::at_infinity();

    const Field& f = *field_;
    std::uint16_t lambda;
    if (p.x != q.x) {
        lambda = f.div(f.sub(q.y, p.y), f.sub(q.x, p.x));
    } else {
        // p == q here; the tangent slope denominator 2y + a1 x + a3 is
        // nonzero because 2-torsion was handled above.
        std::uint16_t two = static_cast<std::uint16_t>(2 % f.characteristic());
        std::uint16_t three = static_cast<std::uint16_t>(3 % f.characteristic());
        std::uint16_t x2 = f.mul(p.x, p.x);
        std::uint16_t num = f.sub(f.add(f.add(f.mul(three, x2), f.mul(f.mul(two, a2_), p.x)), a4_),
                                  f.mul(a1_, p.y));
        std::uint16_t den = f.add(f.mul(two, p.y), f.add(f.mul(a1_, p.x), a3_));
        lambda = f.div(num, den);
    }
    std::uint16_t x3 = f.sub(f.sub(f.sub(f.add(f.mul(lambda, lambda), f.mul(a1_, lambda)), a2_), p.x), q.x);
    std::uint16_t y3 = f.sub(f.sub(f.mul(lambda, f.sub(p.x, x3)), p.y), f.add(f.mul(a1_, x3), a3_));
    return EllipticPoint::affine(x3, y3);
}

EllipticPoint EllipticCurve::sum(const std::vector<EllipticPoint>& pts) const {
    EllipticPoint acc = EllipticPoint::at_infinity();
    for (const EllipticPoint& p : pts) acc = add(acc, p);
    return acc;
}

std::size_t idempotent_count(const EllipticCurve& e) {
    std::size_t count = 1;  // the neutral element
    for (const EllipticPoint& p : e.affine_points())
        if (e.add(p, p).infinity) ++count;
    return count;
}

std::int64_t ell_one_point(const EllipticCurve& e, std::int64_t c,
                           const std::vector<EllipticPoint>& pts) {
    for (const EllipticPoint& p : pts)
        if (p.infinity || !e.on_curve(p))
            throw std::invalid_argument("subtracted points must be affine curve points");
    std::int64_t t = c - static_cast<std::int64_t>(pts.size());
    if (t < 0) return 0;
    if (t >= 1) return t;
    return e.sum(pts).infinity ? 1 : 0;
}

namespace {

void require_all_affine_points(const EllipticCurve& e, const std::vector<EllipticPoint>& pts) {
    if (pts.size() != e.affine_points().size())
        throw std::invalid_argument("need all " + std::to_string(e.affine_points().size()) +
                                    " affine points, got " + std::to_string(pts.size()));
    std::vector<EllipticPoint> sorted = pts;
    auto key = [](const EllipticPoint& p) { return (static_cast<std::uint32_t>(p.x) << 16) | p.y; };
    std::sort(sorted.begin(), sorted.end(),
              [&](const EllipticPoint& a, const EllipticPoint& b) { return key(a) < key(b); });
    if (!std::equal(sorted.begin(), sorted.end(), e.affine_points().begin()))
        throw std::invalid_argument("point list is not a permutation of the affine points");
}

}  // namespace

LinearCode elliptic_one_point_code(const EllipticCurve& e, std::int64_t m,
                                   const std::vector<EllipticPoint>& pts) {
    require_all_affine_points(e, pts);
    const std::int64_t n = static_cast<std::int64_t>(pts.size());
    if (m < 2 || m > n - 2) throw std::invalid_argument("need 2 <= m <= n-2");

    // Monomials x^i y^j, j <= 1, pole order 2i+3j <= m, sorted by pole order.
    std::vector<std::pair<std::int64_t, std::pair<std::uint32_t, std::uint32_t>>> monomials;
    for (std::uint32_t j = 0; j <= 1; ++j)
        for (std::uint32_t i = 0;; ++i) {
            std::int64_t pole = 2ll * i + 3ll * j;
            if (pole > m) break;
            monomials.push_back({pole, {i, j}});
        }
    std::sort(monomials.begin(), monomials.end());

    const Field& f = *e.field();
    Matrix g(e.field(), monomials.size(), static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < monomials.size(); ++r) {
        auto [i, j] = monomials[r].second;
        for (std::size_t col = 0; col < pts.size(); ++col)
            g.set(r, col, f.mul(f.pow(pts[col].x, i), f.pow(pts[col].y, j)));
    }
    LinearCode code = LinearCode::from_matrix(g);
    if (static_cast<std::int64_t>(code.dimension()) != m)
        throw std::logic_error("one-point elliptic code dimension " +
                               std::to_string(code.dimension()) + " is not m");
    return code;
}

AgDescriptor elliptic_descriptor(const EllipticCurve& e, std::int64_t m,
                                 const std::vector<EllipticPoint>& pts) {
    require_all_affine_points(e, pts);
    const std::int64_t n = static_cast<std::int64_t>(pts.size());
    if (m < 2 || m > n - 2) throw std::invalid_argument("need 2 <= m <= n-2");
    NumericalSemigroup h({2, 3});
    AgDescriptor d;
    d.n = n;
    d.deg_g = m;
    d.genus = 1;
    d.abundance = 0;  // deg(G-D) = m-n < 0
    d.k = m;
    d.gonality = GonalitySequence::from_semigroup(h);
    d.semigroup = std::move(h);
    // D need not be ~ nO (the group sum of the points can be nonzero), so
    // ℓ(2G-D) comes from the group law, not from semigroup counting.
    d.ell_2g_minus_d = ell_one_point(e, 2 * m, pts);
    d.check();
    return d;
}

std::pair<std::int64_t, std::int64_t> ell1_ell2(const EllipticCurve& e, std::int64_t m,
                                                const std::vector<EllipticPoint>& pts) {
    const std::int64_t n = static_cast<std::int64_t>(pts.size());
    if (m < 1 || m > n) throw std::invalid_argument("need 1 <= m <= n");
    std::vector<EllipticPoint> tail(pts.end() - m, pts.end());
    std::vector<EllipticPoint> head(pts.begin(), pts.begin() + m);
    return {ell_one_point(e, m, tail), ell_one_point(e, m, head)};
}

namespace {

std::vector<std::size_t> bits_of(std::uint32_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) out.push_back(i);
    return out;
}

// Ordering with prefix_mask as its first m indices and suffix_mask as its
// last m; the overlap sits exactly in the shared middle positions.
std::vector<std::size_t> assemble_ordering(std::size_t n, std::uint32_t prefix_mask,
                                           std::uint32_t suffix_mask) {
    std::vector<std::size_t> out;
    out.reserve(n);
    for (std::size_t i : bits_of(prefix_mask & ~suffix_mask)) out.push_back(i);
    for (std::size_t i : bits_of(prefix_mask & suffix_mask)) out.push_back(i);
    std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1);
    for (std::size_t i : bits_of(full & ~(prefix_mask | suffix_mask))) out.push_back(i);
    for (std::size_t i : bits_of(suffix_mask & ~prefix_mask)) out.push_back(i);
    return out;
}

}  // namespace

OrderingSearchResult ordering_search(const EllipticCurve& e, std::int64_t m, int target,
                                     const std::vector<EllipticPoint>& pts, std::uint64_t seed,
                                     std::size_t tries) {
    const std::size_t n = pts.size();
    if (m < 1 || static_cast<std::size_t>(m) > n) throw std::invalid_argument("need 1 <= m <= n");

    std::vector<std::size_t> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    if (target <= 0) return {true, identity};

    if (n <= 12) {
        // Only the group sums of the first-m and last-m index sets matter.
        const std::uint32_t full = (1u << n) - 1;
        std::vector<bool> zero_sum(full + 1);
        std::vector<EllipticPoint> acc(full + 1, EllipticPoint::at_infinity());
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            std::uint32_t low = mask & (~mask + 1);
            acc[mask] = e.add(acc[mask & (mask - 1)], pts[static_cast<std::size_t>(std::countr_zero(low))]);
            zero_sum[mask] = acc[mask].infinity;
        }
        std::vector<std::uint32_t> m_masks;
        for (std::uint32_t mask = 0; mask <= full; ++mask)
            if (std::popcount(mask) == m) m_masks.push_back(mask);

        const std::int64_t overlap = std::max<std::int64_t>(0, 2 * m - static_cast<std::int64_t>(n));
        for (std::uint32_t a : m_masks)
            for (std::uint32_t s : m_masks) {
                if (std::popcount(a & s) != overlap) continue;
                int score = (zero_sum[a] ? 1 : 0) + (zero_sum[s] ? 1 : 0);
                if (score >= target) return {true, assemble_ordering(n, a, s)};
            }
        return {true, std::nullopt};
    }

    std::mt19937_64 rng(seed);
    std::vector<std::size_t> perm = identity;
    for (std::size_t attempt = 0; attempt < tries; ++attempt) {
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<EllipticPoint> arranged;
        arranged.reserve(n);
        for (std::size_t i : perm) arranged.push_back(pts[i]);
        auto [l1, l2] = ell1_ell2(e, m, arranged);
        if (l1 + l2 >= target) return {false, perm};
    }
    return {false, std::nullopt};
}

std::optional<std::vector<std::size_t>> search_selfdual_ordering(const EllipticCurve& e,
                                                                 std::int64_t m,
                                                                 std::uint64_t seed,
                                                                 std::size_t tries) {
    const std::size_t n = e.affine_points().size();
    if (2 * static_cast<std::size_t>(m) != n) return std::nullopt;

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(seed);
    for (std::size_t attempt = 0; attempt <= tries; ++attempt) {
        if (attempt > 0) std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<EllipticPoint> arranged;
        arranged.reserve(n);
        for (std::size_t i : perm) arranged.push_back(e.affine_points()[i]);
        LinearCode c = elliptic_one_point_code(e, m, arranged);
        if (c.dimension() * 2 != n) return std::nullopt;
        if (row_space_equal(c.generator(), c.dual().generator())) return perm;
    }
    return std::nullopt;
}

}  // namespace agtrellis
