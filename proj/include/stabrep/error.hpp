#pragma once

#include <stdexcept>
#include <string>

namespace stabrep {

// Precondition violations on domain inputs (bad weights, inadmissible ranks,
// mismatched families). The CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

class RankTooSmall : public DomainError {
public:
    RankTooSmall(int requested, int minimal)
        : DomainError("rank " + std::to_string(requested) +
                      " is too small; minimal admissible rank is " + std::to_string(minimal)),
          minimal_rank_(minimal) {}

    int minimal_rank() const noexcept { return minimal_rank_; }

private:
    int minimal_rank_;
};

class FamilyMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

class NotACharacter : public DomainError {
public:
    using DomainError::DomainError;
};

class BoundExceeded : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace stabrep
