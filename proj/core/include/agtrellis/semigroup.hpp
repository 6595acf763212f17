#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace agtrellis {

// Numerical semigroup: the additive closure of a generator set with gcd 1.
// Gap data is sieved once at construction; queries are table lookups plus
// the eventual arithmetic progression above the conductor.
class NumericalSemigroup {
public:
    // Throws std::invalid_argument on empty/zero generators or gcd != 1.
    explicit NumericalSemigroup(std::vector<std::uint32_t> generators);

    const std::vector<std::uint32_t>& generators() const { return generators_; }
    const std::vector<std::uint32_t>& gaps() const { return gaps_; }
    std::uint32_t genus() const { return static_cast<std::uint32_t>(gaps_.size()); }
    std::uint32_t conductor() const { return conductor_; }

    bool contains(std::int64_t x) const;

    // #{h in H : 0 <= h <= m}; 0 when m < 0.
    std::int64_t nongaps_up_to(std::int64_t m) const;

    // i-th smallest element, 1-based: element_at(1) = 0.
    std::int64_t element_at(std::size_t i) const;

    std::string label() const;  // "⟨a,b,...⟩"

private:
    std::vector<std::uint32_t> generators_;
    std::vector<std::uint32_t> gaps_;
    std::uint32_t conductor_ = 0;
    std::vector<bool> member_;  // membership for 0..conductor
};

// gamma_1, gamma_2, ... with an explicit head gamma_1..gamma_{g+1} and the
// tail rule gamma_i = g+i-1 beyond it.
class GonalitySequence {
public:
    GonalitySequence(std::uint32_t genus, std::vector<std::int64_t> head);

    // head = first g+1 elements of the semigroup; check() must pass.
    static GonalitySequence from_semigroup(const NumericalSemigroup& h);

    std::uint32_t genus() const { return genus_; }
    std::int64_t value(std::size_t i) const;  // gamma_i, i >= 1
    std::vector<std::int64_t> prefix(std::size_t count) const;

    // Structural requirements: head length g+1; gamma_1 = 0; strictly
    // increasing; gamma_i >= 2i-2; gamma_g = 2g-2; gamma_{g+1} = 2g.
    // Throws std::logic_error naming the first violated property.
    void check() const;

private:
    std::uint32_t genus_;
    std::vector<std::int64_t> head_;
};

// Gonality sequence of a smooth plane curve of degree r >= 3: the sorted
// elements of ⟨r-1, r⟩, genus (r-1)(r-2)/2. check() runs before returning.
GonalitySequence gonality_from_plane_degree(std::uint32_t r);

}  // namespace agtrellis
