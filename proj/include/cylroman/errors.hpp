#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cylroman {

/// Instance too large for the requested computation (memory guard, oracle
/// size limits).
class CapacityError : public std::runtime_error {
public:
    CapacityError(const std::string& what, std::uint64_t required_bytes = 0)
        : std::runtime_error(what), required_bytes_(required_bytes) {}
    std::uint64_t required_bytes() const { return required_bytes_; }

private:
    std::uint64_t required_bytes_;
};

/// Malformed matrix file. offset is the byte position where parsing failed.
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& what, std::uint64_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::uint64_t offset() const { return offset_; }

private:
    std::uint64_t offset_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cylroman
