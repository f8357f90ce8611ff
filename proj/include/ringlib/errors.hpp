#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rings {

// Every library error carries a stable category name; the CLI maps
// categories to exit codes.
class RingError : public std::runtime_error {
public:
    RingError(std::string category, const std::string& what)
        : std::runtime_error(what), category_(std::move(category)) {}
    const std::string& category() const { return category_; }

private:
    std::string category_;
};

struct CapExceeded : RingError {
    explicit CapExceeded(const std::string& what) : RingError("CapExceeded", what) {}
};

struct InfiniteRing : RingError {
    explicit InfiniteRing(const std::string& what) : RingError("InfiniteRing", what) {}
};

struct DescriptorMismatch : RingError {
    explicit DescriptorMismatch(const std::string& what)
        : RingError("DescriptorMismatch", what) {}
};

struct NotNilpotent : RingError {
    explicit NotNilpotent(const std::string& what) : RingError("NotNilpotent", what) {}
};

struct ReducibleModulus : RingError {
    explicit ReducibleModulus(const std::string& what)
        : RingError("ReducibleModulus", what) {}
};

struct PreconditionFailed : RingError {
    explicit PreconditionFailed(const std::string& what)
        : RingError("PreconditionFailed", what) {}
};

struct UnverifiedChain : RingError {
    explicit UnverifiedChain(const std::string& what)
        : RingError("UnverifiedChain", what) {}
};

struct ParseError : RingError {
    ParseError(std::size_t position, const std::string& expected, const std::string& what)
        : RingError("ParseError", what), position(position), expected(expected) {}
    std::size_t position;
    std::string expected;
};

}  // namespace rings
