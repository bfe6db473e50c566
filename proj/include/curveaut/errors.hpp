#pragma once

#include <stdexcept>
#include <string>

namespace curveaut {

/// Bad arguments to a constructor or operation (violated precondition,
/// inconsistent presentation parameters, inadmissible characteristic, ...).
struct parameter_error : std::invalid_argument {
    explicit parameter_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Malformed or inconsistent input data (catalog files, character tables).
struct data_error : std::runtime_error {
    explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A configured cap was exceeded. The message always names the cap.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An internal consistency check failed (non-integral character sum,
/// non-exact division by |Aut G|, ...). Signals a bug or bad ingested data.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace curveaut
