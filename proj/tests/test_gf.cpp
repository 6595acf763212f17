#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"

#include "agtrellis/gf.hpp"

using agtrellis::Field;
using agtrellis::FieldElement;
using agtrellis::FieldPtr;

namespace {

// Multiplication redone from the definition: expand base-p digit vectors,
// multiply as polynomials, reduce with the field's own modulus.
std::uint16_t poly_mul(const Field& f, std::uint16_t a, std::uint16_t b) {
    const std::uint32_t p = f.characteristic();
    const std::uint32_t m = f.degree();
    std::vector<std::uint32_t> da(m), db(m);
    std::uint32_t ra = a, rb = b;
    for (std::uint32_t i = 0; i < m; ++i) {
        da[i] = ra % p;
        ra /= p;
        db[i] = rb % p;
        rb /= p;
    }
    std::vector<std::uint32_t> prod(2 * m, 0);
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    const std::vector<std::uint16_t>& mod = f.modulus();
    for (std::uint32_t d = 2 * m - 1; d >= m; --d) {
        std::uint32_t c = prod[d];
        if (c == 0) continue;
        for (std::uint32_t j = 0; j < m; ++j)
            prod[d - m + j] = (prod[d - m + j] + c * (p - mod[j] % p)) % p;
        prod[d] = 0;
    }
    std::uint32_t out = 0;
    for (std::uint32_t i = m; i-- > 0;) out = out * p + prod[i];
    return static_cast<std::uint16_t>(out);
}

std::uint16_t digit_add(const Field& f, std::uint16_t a, std::uint16_t b) {
    const std::uint32_t p = f.characteristic();
    std::uint32_t out = 0, place = 1, ra = a, rb = b;
    for (std::uint32_t i = 0; i < f.degree(); ++i) {
        out += ((ra + rb) % p) * place;
        ra /= p;
        rb /= p;
        place *= p;
    }
    return static_cast<std::uint16_t>(out);
}

}  // namespace

TEST_CASE("prime field matches integer arithmetic mod p") {
    FieldPtr f = Field::create(7, 1);
    for (std::uint16_t a = 0; a < 7; ++a)
        for (std::uint16_t b = 0; b < 7; ++b) {
            CHECK(f->add(a, b) == (a + b) % 7);
            CHECK(f->mul(a, b) == (a * b) % 7);
            CHECK(f->sub(a, b) == (a + 7 - b) % 7);
        }
    for (std::uint16_t a = 1; a < 7; ++a) CHECK(f->mul(a, f->inv(a)) == 1);
    CHECK(f->pow(3, 6) == 1);
    CHECK(f->pow(0, 0) == 1);
}

TEST_CASE("extension field arithmetic agrees with direct polynomial arithmetic") {
    const std::vector<std::pair<std::uint32_t, std::uint32_t>> cases = {
        {2, 2}, {2, 3}, {2, 4}, {3, 2}, {5, 2}};
    for (auto [p, m] : cases) {
        FieldPtr f = Field::create(p, m);
        for (std::uint32_t a = 0; a < f->order(); ++a)
            for (std::uint32_t b = 0; b < f->order(); ++b) {
                auto ua = static_cast<std::uint16_t>(a);
                auto ub = static_cast<std::uint16_t>(b);
                CHECK(f->mul(ua, ub) == poly_mul(*f, ua, ub));
                CHECK(f->add(ua, ub) == digit_add(*f, ua, ub));
            }
    }
}

TEST_CASE("field axioms hold in GF(8)") {
    FieldPtr f = Field::create(2, 3);
    for (std::uint16_t a = 0; a < 8; ++a)
        for (std::uint16_t b = 0; b < 8; ++b) {
            CHECK(f->mul(a, b) == f->mul(b, a));
            CHECK(f->add(a, b) == f->add(b, a));
            for (std::uint16_t c = 0; c < 8; ++c) {
                CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            }
        }
}

TEST_CASE("inverses and division") {
    const std::vector<std::pair<std::uint32_t, std::uint32_t>> cases = {{2, 4}, {3, 2}, {13, 1}};
    for (auto [p, m] : cases) {
        FieldPtr f = Field::create(p, m);
        for (std::uint32_t a = 1; a < f->order(); ++a) {
            auto ua = static_cast<std::uint16_t>(a);
            CHECK(f->mul(ua, f->inv(ua)) == 1);
            CHECK(f->div(ua, ua) == 1);
        }
        CHECK(f->neg(0) == 0);
        for (std::uint32_t a = 0; a < f->order(); ++a)
            CHECK(f->add(static_cast<std::uint16_t>(a), f->neg(static_cast<std::uint16_t>(a))) ==
                  0);
        CHECK_THROWS_AS(f->inv(0), std::domain_error);
        CHECK_THROWS_AS(f->div(1, 0), std::domain_error);
    }
}

TEST_CASE("moduli are the smallest irreducible polynomials") {
    CHECK(Field::create(2, 2)->modulus() == std::vector<std::uint16_t>{1, 1, 1});
    CHECK(Field::create(2, 3)->modulus() == std::vector<std::uint16_t>{1, 1, 0, 1});
    CHECK(Field::create(2, 4)->modulus() == std::vector<std::uint16_t>{1, 1, 0, 0, 1});
    CHECK(Field::create(3, 2)->modulus() == std::vector<std::uint16_t>{1, 0, 1});
    CHECK(Field::create(5, 2)->modulus() == std::vector<std::uint16_t>{2, 0, 1});
}

TEST_CASE("primitive element generates the multiplicative group") {
    const std::vector<std::pair<std::uint32_t, std::uint32_t>> cases = {
        {2, 2}, {2, 4}, {3, 2}, {5, 2}, {7, 1}};
    for (auto [p, m] : cases) {
        FieldPtr f = Field::create(p, m);
        std::uint16_t g = f->primitive_element();
        std::uint16_t x = g;
        std::uint32_t order = 1;
        while (x != 1) {
            x = f->mul(x, g);
            ++order;
            REQUIRE(order <= f->order());
        }
        CHECK(order == f->order() - 1);
    }
    CHECK(Field::create(7, 1)->primitive_element() == 3);
    CHECK(Field::create(5, 1)->primitive_element() == 2);
    CHECK(Field::create(2, 2)->primitive_element() == 2);
}

TEST_CASE("creation is deterministic") {
    FieldPtr a = Field::create(3, 2);
    FieldPtr b = Field::create(3, 2);
    CHECK(*a == *b);
    CHECK(a->modulus() == b->modulus());
    CHECK(a->primitive_element() == b->primitive_element());
}

TEST_CASE("creation limits and parsing") {
    CHECK(Field::create(2, 16)->order() == 65536);
    CHECK_THROWS_AS(Field::create(2, 17), std::invalid_argument);
    CHECK_THROWS_AS(Field::create(6, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::create(4, 1), std::invalid_argument);
    CHECK(Field::parse("7")->order() == 7);
    CHECK(Field::parse("5^2")->order() == 25);
    CHECK(Field::parse("2^2")->label() == "2^2");
    CHECK_THROWS_AS(Field::parse("4"), std::invalid_argument);
    CHECK_THROWS_AS(Field::parse("x"), std::invalid_argument);
}

TEST_CASE("bound elements carry their field") {
    FieldPtr f = Field::create(5, 1);
    FieldPtr g = Field::create(7, 1);
    FieldElement a = f->element(2);
    FieldElement b = f->element(4);
    CHECK((a * b).code() == 3);
    CHECK((a + b).code() == 1);
    CHECK((-a).code() == 3);
    CHECK(a.inverse().code() == 3);
    CHECK_THROWS_AS(a + g->element(1), std::invalid_argument);
}

TEST_CASE("primality helper") {
    CHECK(agtrellis::is_prime(2));
    CHECK(agtrellis::is_prime(65521));
    CHECK_FALSE(agtrellis::is_prime(1));
    CHECK_FALSE(agtrellis::is_prime(0));
    CHECK_FALSE(agtrellis::is_prime(65535));
}
