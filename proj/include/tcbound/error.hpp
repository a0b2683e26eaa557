#pragma once

#include <stdexcept>
#include <string>

namespace tcb {

// Base of every error raised by the core. The C API maps each subclass to a
// distinct status code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad argument or malformed data (non-prime modulus, k > n, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// A configured size/memory cap was exceeded, or exact arithmetic overflowed.
class ResourceError : public Error {
public:
    using Error::Error;
};

// Input outside what an operation supports.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

// Descriptor or algebra JSON does not match the schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

// Two fired rules contradict each other (lower > upper) or a declared TC value
// falls outside the certified interval.
class InconsistencyError : public Error {
public:
    InconsistencyError(const std::string& what, std::string lower_rule, std::string upper_rule)
        : Error(what), lower_rule_(std::move(lower_rule)), upper_rule_(std::move(upper_rule))
    {
    }

    const std::string& lower_rule() const noexcept { return lower_rule_; }
    const std::string& upper_rule() const noexcept { return upper_rule_; }

private:
    std::string lower_rule_;
    std::string upper_rule_;
};

} // namespace tcb
