#include "agtrellis/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace agtrellis {

NumericalSemigroup::NumericalSemigroup(std::vector<std::uint32_t> generators) {
    if (generators.empty()) throw std::invalid_argument("semigroup needs at least one generator");
    for (std::uint32_t g : generators)
        if (g == 0) throw std::invalid_argument("semigroup generators must be positive");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    std::uint32_t d = 0;
    for (std::uint32_t g : generators) d = std::gcd(d, g);
    if (d != 1) throw std::invalid_argument("semigroup generators must have gcd 1, got gcd " + std::to_string(d));
    generators_ = std::move(generators);

    // Sieve until a full run of min-generator consecutive members appears;
    // past that point every integer is a member.
    const std::uint32_t step = generators_.front();
    std::size_t limit = 2 * static_cast<std::size_t>(generators_.back()) + 2 * step + 2;
    std::vector<bool> member;
    std::size_t run_start = 0;
    for (;;) {
        member.assign(limit + 1, false);
        member[0] = true;
        for (std::size_t x = 1; x <= limit; ++x)
            for (std::uint32_t g : generators_)
                if (x >= g && member[x - g]) {
                    member[x] = true;
                    break;
                }
        std::size_t run = 0;
        bool found = false;
        for (std::size_t x = 0; x <= limit; ++x) {
            run = member[x] ? run + 1 : 0;
            if (run == step) {
                run_start = x + 1 - step;
                found = true;
                break;
            }
        }
        if (found) break;
        limit *= 2;
    }
    std::size_t first_all_member = run_start;  // every x >= run_start is a member
    conductor_ = 0;
    for (std::size_t x = 0; x < first_all_member; ++x)
        if (!member[x]) {
            gaps_.push_back(static_cast<std::uint32_t>(x));
            conductor_ = static_cast<std::uint32_t>(x) + 1;
        }
    member_.assign(member.begin(), member.begin() + conductor_ + 1);
}

bool NumericalSemigroup::contains(std::int64_t x) const {
    if (x < 0) return false;
    if (x >= static_cast<std::int64_t>(conductor_)) return true;
    return member_[static_cast<std::size_t>(x)];
}

std::int64_t NumericalSemigroup::nongaps_up_to(std::int64_t m) const {
    if (m < 0) return 0;
    if (m >= static_cast<std::int64_t>(conductor_)) return m + 1 - genus();
    std::int64_t count = 0;
    for (std::int64_t x = 0; x <= m; ++x)
        if (member_[static_cast<std::size_t>(x)]) ++count;
    return count;
}

std::int64_t NumericalSemigroup::element_at(std::size_t i) const {
    if (i == 0) throw std::invalid_argument("element index is 1-based");
    const std::size_t below = conductor_ - genus();  // members in [0, conductor)
    if (i > below) return static_cast<std::int64_t>(genus()) + static_cast<std::int64_t>(i) - 1;
    std::size_t seen = 0;
    for (std::uint32_t x = 0; x < conductor_; ++x)
        if (member_[x] && ++seen == i) return x;
    throw std::logic_error("semigroup element scan fell through");
}

std::string NumericalSemigroup::label() const {
    std::ostringstream out;
    out << "⟨";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (i) out << ",";
        out << generators_[i];
    }
    out << "⟩";
    return out.str();
}

GonalitySequence::GonalitySequence(std::uint32_t genus, std::vector<std::int64_t> head)
    : genus_(genus), head_(std::move(head)) {}

GonalitySequence GonalitySequence::from_semigroup(const NumericalSemigroup& h) {
    std::vector<std::int64_t> head;
    head.reserve(h.genus() + 1);
    for (std::size_t i = 1; i <= h.genus() + 1; ++i) head.push_back(h.element_at(i));
    GonalitySequence gs(h.genus(), std::move(head));
    gs.check();
    return gs;
}

std::int64_t GonalitySequence::value(std::size_t i) const {
    if (i == 0) throw std::invalid_argument("gonality index is 1-based");
    if (i <= head_.size()) return head_[i - 1];
    return static_cast<std::int64_t>(genus_) + static_cast<std::int64_t>(i) - 1;
}

std::vector<std::int64_t> GonalitySequence::prefix(std::size_t count) const {
    std::vector<std::int64_t> out;
    out.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) out.push_back(value(i));
    return out;
}

void GonalitySequence::check() const {
    const std::int64_t g = genus_;
    if (head_.size() != static_cast<std::size_t>(g) + 1)
        throw std::logic_error("gonality head must list the first g+1 values");
    if (head_[0] != 0) throw std::logic_error("gonality sequence must start at 0");
    for (std::size_t i = 1; i < head_.size(); ++i)
        if (head_[i] <= head_[i - 1])
            throw std::logic_error("gonality sequence must be strictly increasing");
    for (std::size_t i = 1; i <= head_.size(); ++i)
        if (head_[i - 1] < 2 * static_cast<std::int64_t>(i) - 2)
            throw std::logic_error("gonality value " + std::to_string(i) + " is below 2i-2");
    if (g >= 1 && head_[static_cast<std::size_t>(g) - 1] != 2 * g - 2)
        throw std::logic_error("gonality value at index g must be 2g-2");
    if (head_.back() != 2 * g)
        throw std::logic_error("gonality value at index g+1 must be 2g");
}

GonalitySequence gonality_from_plane_degree(std::uint32_t r) {
    if (r < 3) throw std::invalid_argument("plane degree must be at least 3");
    NumericalSemigroup h({r - 1, r});
    const std::uint32_t expected_genus = (r - 1) * (r - 2) / 2;
    if (h.genus() != expected_genus)
        throw std::logic_error("plane-curve semigroup genus mismatch: sieve says " +
                               std::to_string(h.genus()) + ", formula says " +
                               std::to_string(expected_genus));
    return GonalitySequence::from_semigroup(h);
}

}  // namespace agtrellis
