#include "agtrellis/gf.hpp"

#include <algorithm>
#include <stdexcept>

namespace agtrellis {
namespace {

// Dense polynomial over GF(p), little-endian coefficients, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

Poly poly_from_index(std::uint64_t t, std::uint32_t p, std::uint32_t deg) {
    // Monic polynomial of the given degree whose lower coefficients are the
    // base-p digits of t (c_0 least significant).
    Poly c(deg + 1, 0);
    for (std::uint32_t j = 0; j < deg; ++j) {
        c[j] = static_cast<std::uint32_t>(t % p);
        t /= p;
    }
    c[deg] = 1;
    return c;
}

// Remainder of a by b, b monic.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint32_t lead = a.back();
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t j = 0; j <= db; ++j)
                a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - (b[j] * 1ull * lead) % p) % p);
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

bool poly_is_zero(const Poly& a) { return a.empty(); }

bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t j = 0; j < d; ++j) count *= p;
        for (std::uint64_t t = 0; t < count; ++t) {
            const Poly div = poly_from_index(t, p, d);
            if (poly_is_zero(poly_rem(f, div, p))) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldPtr Field::create(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
    if (m < 1) throw std::invalid_argument("field degree must be >= 1");

    std::uint64_t q = 1;
    for (std::uint32_t j = 0; j < m; ++j) {
        q *= p;
        if (q > kMaxOrder) throw std::invalid_argument("field order exceeds 2^16");
    }

    auto field = std::shared_ptr<Field>(new Field());
    field->p_ = p;
    field->m_ = m;
    field->q_ = static_cast<std::uint32_t>(q);

    // Smallest irreducible monic modulus of degree m, by base-p index of the
    // non-leading coefficients.
    std::uint64_t modulus_index = 0;
    for (;; ++modulus_index) {
        const Poly f = poly_from_index(modulus_index, p, m);
        if (is_irreducible(f, p)) break;
    }
    field->modulus_.resize(m + 1);
    {
        const Poly f = poly_from_index(modulus_index, p, m);
        for (std::uint32_t j = 0; j <= m; ++j) field->modulus_[j] = static_cast<std::uint16_t>(f[j]);
    }

    field->neg_.resize(q);
    for (std::uint32_t a = 0; a < q; ++a) {
        std::uint32_t code = 0, pw = 1, rest = a;
        for (std::uint32_t j = 0; j < m; ++j) {
            const std::uint32_t digit = rest % p;
            rest /= p;
            code += ((p - digit) % p) * pw;
            pw *= p;
        }
        field->neg_[a] = static_cast<std::uint16_t>(code);
    }

    // Table-free product of element codes, used only while bootstrapping the
    // log/antilog tables.
    const auto raw_mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
        std::vector<std::uint32_t> da(m), db(m);
        for (std::uint32_t j = 0; j < m; ++j) { da[j] = a % p; a /= p; db[j] = b % p; b /= p; }
        std::vector<std::uint32_t> prod(2 * m - 1, 0);
        for (std::uint32_t i = 0; i < m; ++i)
            for (std::uint32_t j = 0; j < m; ++j)
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        for (std::size_t i = prod.size(); i-- > m;) {
            const std::uint32_t c = prod[i];
            if (c == 0) continue;
            prod[i] = 0;
            for (std::uint32_t j = 0; j < m; ++j)
                prod[i - m + j] = (prod[i - m + j] + (p - field->modulus_[j] % p) * c) % p;
        }
        std::uint32_t code = 0, pw = 1;
        for (std::uint32_t j = 0; j < m; ++j) { code += prod[j] * pw; pw *= p; }
        return code;
    };

    // Smallest element code whose multiplicative order is q-1; the power run
    // that certifies it doubles as the antilog table.
    const std::uint32_t qm1 = field->q_ - 1;
    std::vector<std::uint16_t> powers;
    for (std::uint32_t g = 1; g < q; ++g) {
        powers.clear();
        std::uint32_t x = 1;
        do {
            powers.push_back(static_cast<std::uint16_t>(x));
            x = raw_mul(x, g);
        } while (x != 1 && powers.size() <= qm1);
        if (powers.size() == qm1) {
            field->primitive_ = static_cast<std::uint16_t>(g);
            break;
        }
    }
    if (powers.size() != qm1) throw std::logic_error("no generator found (internal error)");

    field->exp_.resize(2 * qm1);
    field->log_.assign(q, 0);
    for (std::uint32_t i = 0; i < qm1; ++i) {
        field->exp_[i] = powers[i];
        field->exp_[i + qm1] = powers[i];
        field->log_[powers[i]] = static_cast<std::uint16_t>(i);
    }
    return field;
}

FieldPtr Field::parse(const std::string& label) {
    const auto caret = label.find('^');
    try {
        if (caret == std::string::npos) {
            return create(static_cast<std::uint32_t>(std::stoul(label)), 1);
        }
        const auto p = std::stoul(label.substr(0, caret));
        const auto m = std::stoul(label.substr(caret + 1));
        return create(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m));
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed field label '" + label + "' (expected p or p^m)");
    }
}

std::string Field::label() const {
    return m_ == 1 ? std::to_string(p_) : std::to_string(p_) + "^" + std::to_string(m_);
}

bool Field::operator==(const Field& other) const {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
}

std::uint16_t Field::add(std::uint16_t a, std::uint16_t b) const {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) {
        const std::uint32_t s = a + static_cast<std::uint32_t>(b);
        return static_cast<std::uint16_t>(s >= q_ ? s - q_ : s);
    }
    std::uint32_t code = 0, pw = 1, ra = a, rb = b;
    for (std::uint32_t j = 0; j < m_; ++j) {
        std::uint32_t s = ra % p_ + rb % p_;
        if (s >= p_) s -= p_;
        code += s * pw;
        pw *= p_;
        ra /= p_;
        rb /= p_;
    }
    return static_cast<std::uint16_t>(code);
}

std::uint16_t Field::sub(std::uint16_t a, std::uint16_t b) const { return add(a, neg_[b]); }

std::uint16_t Field::mul(std::uint16_t a, std::uint16_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + static_cast<std::uint32_t>(log_[b])];
}

std::uint16_t Field::inv(std::uint16_t a) const {
    if (a == 0) throw std::domain_error("division by zero in GF(" + std::to_string(q_) + ")");
    return exp_[q_ - 1 - log_[a]];
}

std::uint16_t Field::div(std::uint16_t a, std::uint16_t b) const {
    if (b == 0) throw std::domain_error("division by zero in GF(" + std::to_string(q_) + ")");
    if (a == 0) return 0;
    return exp_[log_[a] + (q_ - 1) - log_[b]];
}

std::uint16_t Field::pow(std::uint16_t a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t r = (static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[r];
}

FieldElement Field::element(std::uint16_t code) const {
    return FieldElement(shared_from_this(), code);
}

FieldElement::FieldElement(FieldPtr field, std::uint16_t code) : field_(std::move(field)), code_(code) {
    if (!field_) throw std::invalid_argument("null field");
    if (code_ >= field_->order())
        throw std::invalid_argument("element code " + std::to_string(code_) + " out of range for GF(" +
                                    std::to_string(field_->order()) + ")");
}

const Field& FieldElement::common_field(const FieldElement& a, const FieldElement& b) {
    if (!a.field_ || !b.field_) throw std::invalid_argument("uninitialized field element");
    if (a.field_ != b.field_ && *a.field_ != *b.field_)
        throw std::invalid_argument("mixed-field operands: GF(" + std::to_string(a.field_->order()) + ") vs GF(" +
                                    std::to_string(b.field_->order()) + ")");
    return *a.field_;
}

FieldElement FieldElement::operator-() const { return FieldElement(field_, field_->neg(code_)); }
FieldElement FieldElement::inverse() const { return FieldElement(field_, field_->inv(code_)); }
FieldElement FieldElement::pow(std::uint64_t e) const { return FieldElement(field_, field_->pow(code_, e)); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return FieldElement(a.field_, FieldElement::common_field(a, b).add(a.code_, b.code_));
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return FieldElement(a.field_, FieldElement::common_field(a, b).sub(a.code_, b.code_));
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return FieldElement(a.field_, FieldElement::common_field(a, b).mul(a.code_, b.code_));
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return FieldElement(a.field_, FieldElement::common_field(a, b).div(a.code_, b.code_));
}
bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.field_ != b.field_ && (!a.field_ || !b.field_ || *a.field_ != *b.field_)) return false;
    return a.code_ == b.code_;
}
bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

}  // namespace agtrellis
