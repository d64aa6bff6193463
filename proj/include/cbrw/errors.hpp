/*
 * Copyright 2026 The cbrw authors
 */
// SPDX-License-Identifier: Apache-2.0

#ifndef CBRW_ERRORS_HPP
#define CBRW_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cbrw {

// Caller passed arguments that violate an operation's preconditions
// (mismatched dimensions, out-of-range indices, invalid parameters).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A persisted file does not decode under its declared format. byte_offset()
// is the position at (or up to) which the input was still valid.
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& what, std::size_t byte_offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const noexcept { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

// Filesystem-level failure: unreadable path, unwritable path, short write.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cbrw

#endif
