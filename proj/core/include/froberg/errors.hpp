#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace froberg {

// Raised when a requested object would exceed a configured size cap.
// Carries the offending dimensions so front ends can report them.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, std::uint64_t rows, std::uint64_t cols)
        : std::runtime_error(what), rows_(rows), cols_(cols) {}

    std::uint64_t rows() const noexcept { return rows_; }
    std::uint64_t cols() const noexcept { return cols_; }

private:
    std::uint64_t rows_;
    std::uint64_t cols_;
};

}  // namespace froberg
