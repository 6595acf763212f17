#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace agtrellis {

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

// Exact arithmetic in GF(p^m) for p prime and p^m <= 2^16.
//
// Elements are integer codes in [0, q): the code sum(c_j * p^j) stands for
// the residue class of the polynomial sum(c_j * x^j) modulo the field's
// irreducible modulus. The modulus is the monic irreducible polynomial of
// degree m over GF(p) whose coefficient tuple (c_{m-1},...,c_1,c_0) is
// smallest when read as a base-p integer, so encoded elements are portable
// across implementations. Multiplication runs on log/antilog tables keyed
// to the smallest generator of the multiplicative group.
//
// Fields are immutable after creation; all operations are pure.
class Field : public std::enable_shared_from_this<Field> {
public:
    static constexpr std::uint32_t kMaxOrder = 1u << 16;

    // Throws std::invalid_argument for non-prime p and for p^m > 2^16.
    static FieldPtr create(std::uint32_t p, std::uint32_t m);

    // Accepts "p" and "p^m" labels, e.g. "5" or "5^2".
    static FieldPtr parse(const std::string& label);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return m_; }
    std::uint32_t order() const { return q_; }

    // Modulus coefficients c_0..c_m with c_m = 1.
    const std::vector<std::uint16_t>& modulus() const { return modulus_; }
    std::uint16_t primitive_element() const { return primitive_; }

    // "p" for prime fields, "p^m" otherwise.
    std::string label() const;

    // Two Field objects describe the same field iff (p, m, modulus) agree.
    bool operator==(const Field& other) const;
    bool operator!=(const Field& other) const { return !(*this == other); }

    // Arithmetic on raw element codes; operands must be < order().
    std::uint16_t add(std::uint16_t a, std::uint16_t b) const;
    std::uint16_t sub(std::uint16_t a, std::uint16_t b) const;
    std::uint16_t neg(std::uint16_t a) const { return neg_[a]; }
    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const;
    std::uint16_t inv(std::uint16_t a) const;  // throws std::domain_error on 0
    std::uint16_t div(std::uint16_t a, std::uint16_t b) const;
    std::uint16_t pow(std::uint16_t a, std::uint64_t e) const;

    FieldElement element(std::uint16_t code) const;

private:
    Field() = default;

    std::uint32_t p_ = 0;
    std::uint32_t m_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint16_t> modulus_;
    std::uint16_t primitive_ = 0;
    std::vector<std::uint16_t> exp_;  // exp_[i] = g^i for i in [0, 2(q-1))
    std::vector<std::uint16_t> log_;  // log_[exp_[i]] = i mod (q-1); log_[0] unused
    std::vector<std::uint16_t> neg_;
};

// An element code bound to its field. Operations on elements of different
// fields throw std::invalid_argument.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr field, std::uint16_t code);

    std::uint16_t code() const { return code_; }
    const FieldPtr& field() const { return field_; }
    bool is_zero() const { return code_ == 0; }

    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b);

private:
    static const Field& common_field(const FieldElement& a, const FieldElement& b);

    FieldPtr field_;
    std::uint16_t code_ = 0;
};

bool is_prime(std::uint32_t n);

}  // namespace agtrellis
