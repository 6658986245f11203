#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gasper {

// x = 0 or x = -ny: the shifted identity xI + yJ has no inverse.
struct SingularShiftedIdentity : std::domain_error {
    explicit SingularShiftedIdentity(const std::string& what)
        : std::domain_error("SingularShiftedIdentity: " + what) {}
};

// alpha^2 > n*beta: no matrix has these entry statistics.
struct InfeasiblePair : std::domain_error {
    explicit InfeasiblePair(const std::string& what)
        : std::domain_error("InfeasiblePair: " + what) {}
};

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what)
        : std::invalid_argument("DimensionMismatch: " + what) {}
};

struct NotSignMatrix : std::invalid_argument {
    explicit NotSignMatrix(const std::string& what)
        : std::invalid_argument("NotSignMatrix: " + what) {}
};

struct NonpositiveStep : std::invalid_argument {
    explicit NonpositiveStep(const std::string& what)
        : std::invalid_argument("NonpositiveStep: " + what) {}
};

struct SearchSpaceTooLarge : std::runtime_error {
    double space_size;
    SearchSpaceTooLarge(const std::string& what, double size)
        : std::runtime_error("SearchSpaceTooLarge: " + what),
          space_size(size) {}
};

struct DivergentSpec : std::runtime_error {
    explicit DivergentSpec(const std::string& what)
        : std::runtime_error("DivergentSpec: " + what) {}
};

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what)
        : std::invalid_argument("ParseError: " + what) {}
};

}  // namespace gasper
