#pragma once

#include "rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace melzak {

/// A denominator x_i + k (or x_i C(x_i+n, n)) vanished.
class PoleError : public std::domain_error {
    NaturalIndex k_;
    std::optional<NaturalIndex> knot_;

    static std::string describe(NaturalIndex k, std::optional<NaturalIndex> knot, const std::string& what) {
        std::string msg = "pole at k=" + std::to_string(k);
        if (knot) msg += ", knot index " + std::to_string(*knot);
        if (!what.empty()) msg += ": " + what;
        return msg;
    }

public:
    PoleError(NaturalIndex k, std::optional<NaturalIndex> knot = std::nullopt, const std::string& what = {})
        : std::domain_error(describe(k, knot, what)), k_(k), knot_(knot) {}

    NaturalIndex k() const { return k_; }
    std::optional<NaturalIndex> knot() const { return knot_; }
};

class DuplicateKnotError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A binary64 intermediate left the finite range.
class OverflowToInfinity : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

}  // namespace melzak
