#pragma once

#include <stdexcept>
#include <string>

namespace latorbit {

/// Input violates a mathematical precondition (singular matrix, rank-deficient
/// basis, vector inside the row span, ...).
struct degenerate_input_error : std::runtime_error {
    explicit degenerate_input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured safety cap was exceeded (enumeration radius, sample budget).
struct resource_limit_error : std::runtime_error {
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative numeric routine failed to converge.
struct numeric_failure_error : std::runtime_error {
    explicit numeric_failure_error(const std::string& what) : std::runtime_error(what) {}
};

/// Series parameters outside the convergence region.
struct divergent_series_error : std::runtime_error {
    explicit divergent_series_error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed configuration or unusable argument combination.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace latorbit
