#pragma once

#include <stdexcept>
#include <string>

namespace agtrellis {

// Thrown when an exact enumeration would exceed its hard budget. Callers must
// treat this as a refusal, never as an approximate answer.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace agtrellis
