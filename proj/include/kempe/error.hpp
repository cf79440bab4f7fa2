#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kempe {

/// Malformed or out-of-contract input (bad vertex id, improper colouring, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured search or enumeration cap was exceeded. The answer is unknown,
/// which is never the same thing as "false".
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, std::uint64_t reached)
        : std::runtime_error(what), reached_(reached) {}

    std::uint64_t reached() const noexcept { return reached_; }

private:
    std::uint64_t reached_;
};

/// A not-a-Kempe-class certificate failed validation.
class CertificateRejected : public std::runtime_error {
public:
    CertificateRejected(const std::string& condition)
        : std::runtime_error("certificate rejected: " + condition), condition_(condition) {}

    const std::string& condition() const noexcept { return condition_; }

private:
    std::string condition_;
};

} // namespace kempe
