#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace aslearn {

// Malformed input shapes (wrong vector length, inconsistent matrix sizes).
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Pivot magnitudes below the breakdown threshold, or iteration runaway.
struct NumericalBreakdown : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vertex enumeration guard exceeded.
struct TooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Active-set extraction requested on a non-optimal solution.
struct NotOptimal : std::logic_error {
    using std::logic_error::logic_error;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line = 0, int column = 0)
        : std::runtime_error(line > 0 ? msg + " (line " + std::to_string(line) +
                                            (column > 0 ? ", column " + std::to_string(column) : "") + ")"
                                      : msg),
          line(line),
          column(column) {}
    int line;
    int column;
};

struct UnsupportedFeature : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DisconnectedNetwork : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularSusceptance : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnbalancedInjection : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The instantiated problem has an empty feasible set; carries the sample index.
struct SampleInfeasible : std::runtime_error {
    explicit SampleInfeasible(std::uint64_t index)
        : std::runtime_error("sample " + std::to_string(index) + " yields an infeasible instance"),
          sample_index(index) {}
    std::uint64_t sample_index;
};

struct InvalidConfig : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InsufficientSamples : std::logic_error {
    using std::logic_error::logic_error;
};

struct SnapshotMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidMasses : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnknownKey : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EmptyCollection : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace aslearn
