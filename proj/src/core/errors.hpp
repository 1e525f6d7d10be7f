#pragma once

#include <stdexcept>
#include <string>

namespace zimav {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input (words, patterns, PBM, checkpoints).
class parse_error : public error {
public:
    using error::error;
};

// A configured cap was exceeded (Zimin index, digit cap, enumeration budget).
class size_error : public error {
public:
    using error::error;
};

// Operation applied to a value outside its domain (e.g. complement of a
// non-binary word).
class domain_error : public error {
public:
    using error::error;
};

class io_error : public error {
public:
    using error::error;
};

// Checkpoint file unreadable or inconsistent; never silently ignored.
class checkpoint_error : public error {
public:
    using error::error;
};

// Caller violated an operation precondition (e.g. bad tree partition).
class precondition_error : public error {
public:
    using error::error;
};

} // namespace zimav
