// errors.hpp: exception types shared by the qrm library

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qrm {

// A requested photon number or state support does not fit the truncated space.
class TruncationError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Two operands live on different truncated spaces.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An operator that must be Hermitian is not, or an expectation value came
// back with an imaginary residue above the allowed roundoff.
class NumericConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// JC g-family doublet with zero Rabi frequency (n = 0 at exact resonance).
class DegenerateBranch : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The dressed state requested reduces to the zero vector (e.g. the minus
// AJC eigenstate at n = 0).
class NullState : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Invalid experiment configuration; carries the offending field name.
class ConfigError : public std::invalid_argument {
public:
    ConfigError(std::string field, const std::string& what)
        : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// File output failure; carries the path.
class IoError : public std::runtime_error {
public:
    IoError(std::string path, const std::string& what)
        : std::runtime_error(path + ": " + what), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

} // namespace qrm
