#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "agtrellis/code.hpp"

namespace testsupport {

inline agtrellis::Matrix random_matrix(const agtrellis::FieldPtr& f, std::size_t rows,
                                       std::size_t cols, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, f->order() - 1);
    agtrellis::Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, static_cast<std::uint16_t>(dist(rng)));
    return m;
}

// Random [n, <=kmax] code; retries the rare all-zero draw.
inline agtrellis::LinearCode random_code(const agtrellis::FieldPtr& f, std::size_t n,
                                         std::size_t kmax, std::mt19937_64& rng) {
    for (;;) {
        std::size_t k = 1 + rng() % kmax;
        try {
            return agtrellis::LinearCode::from_matrix(random_matrix(f, k, n, rng));
        } catch (const std::invalid_argument&) {
        }
    }
}

}  // namespace testsupport
