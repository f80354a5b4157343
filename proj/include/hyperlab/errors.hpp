#ifndef HYPERLAB_ERRORS_HPP
#define HYPERLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyperlab {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Tensor argument is not symmetric positive definite.
struct NotPositiveDefinite : Error {
    explicit NotPositiveDefinite(const std::string& msg) : Error(msg) {}
};

// det F <= 0.
struct NonPositiveDeterminant : Error {
    explicit NonPositiveDeterminant(const std::string& msg) : Error(msg) {}
};

struct NonPositiveStretch : Error {
    explicit NonPositiveStretch(const std::string& msg) : Error(msg) {}
};

// Invalid model parameters (violates the constructor's admissible range).
struct BadParams : Error {
    explicit BadParams(const std::string& msg) : Error(msg) {}
};

// Evaluation requested outside the model's admissible domain.
struct OutOfDomain : Error {
    explicit OutOfDomain(const std::string& msg) : Error(msg) {}
};

// Root finding: no sign change found on the scan interval.
struct NoBracket : Error {
    explicit NoBracket(const std::string& msg) : Error(msg) {}
};

// Root finding: iteration limit exhausted.
struct NonConvergence : Error {
    explicit NonConvergence(const std::string& msg) : Error(msg) {}
};

} // namespace hyperlab

#endif
