#pragma once

#include <stdexcept>
#include <string>

namespace torusrep {

/// Malformed or inconsistent input data.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain.
struct PreconditionError : std::logic_error {
    using std::logic_error::logic_error;
};

/// A structural consequence that the theory guarantees did not hold.
/// Carries the short name of the violated statement.
class LemmaViolation : public std::runtime_error {
public:
    LemmaViolation(std::string lemma, const std::string& detail)
        : std::runtime_error(lemma + ": " + detail), lemma_(std::move(lemma)) {}

    [[nodiscard]] const std::string& lemma() const noexcept { return lemma_; }

private:
    std::string lemma_;
};

}  // namespace torusrep
