#ifndef STANLEY_ERRORS_HPP
#define STANLEY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stanley {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed caller input: unsorted or negative seed values, unparsable
/// numbers, a seed that is not 3-free.
class input_error : public error {
public:
    using error::error;
};

/// Structurally valid input that violates an operation's precondition or
/// domain (e.g. k below the certified threshold, a target below 1).
class precondition_error : public error {
public:
    using error::error;
};

/// Precondition failure that more generated terms would fix. Carries the
/// term count the operation needs.
class needs_more_terms_error : public precondition_error {
public:
    needs_more_terms_error(const std::string& msg, std::size_t required)
        : precondition_error(msg + " (requires " + std::to_string(required) + " terms)"),
          required_(required) {}
    std::size_t required_terms() const noexcept { return required_; }

private:
    std::size_t required_;
};

/// A configured resource cap was hit: sieve memory, search depth, step
/// level, seed size, or an integer outside the supported value range.
class resource_error : public error {
public:
    using error::error;
};

/// Sieve memory cap hit mid-generation; records how many terms were
/// completed before stopping.
class generation_cap_error : public resource_error {
public:
    generation_cap_error(const std::string& msg, std::size_t completed)
        : resource_error(msg + " (completed " + std::to_string(completed) + " terms)"),
          completed_(completed) {}
    std::size_t completed_terms() const noexcept { return completed_; }

private:
    std::size_t completed_;
};

/// An internal invariant failed. Indicates a bug or a false certificate,
/// never a user mistake.
class inconsistency_error : public error {
public:
    using error::error;
};

} // namespace stanley

#endif
