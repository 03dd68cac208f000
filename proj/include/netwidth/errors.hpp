#ifndef NETWIDTH_ERRORS_HPP
#define NETWIDTH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace netwidth {

/// Violated mathematical precondition or invalid argument (CLI exit code 1).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem or network failure (CLI exit code 2).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// A training run produced a non-finite parameter; carries the epoch index.
class TrainingDiverged : public DomainError {
public:
    TrainingDiverged(int epoch, const std::string& what)
        : DomainError(what), epoch_(epoch) {}
    int epoch() const { return epoch_; }

private:
    int epoch_;
};

} // namespace netwidth

#endif
