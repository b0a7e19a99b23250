#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polycfl {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or contradictory input: bad grammar text, unknown letters,
/// violated operation preconditions. CLI exit code 2.
struct InputError : Error {
    using Error::Error;
};

struct GrammarParseError : InputError {
    int line = 0;
    GrammarParseError(int line_, const std::string& what_)
        : InputError("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct ValidationError : InputError {
    using InputError::InputError;
};

struct UnknownLetterError : InputError {
    using InputError::InputError;
};

struct PreconditionError : InputError {
    using InputError::InputError;
};

struct MarkingError : InputError {
    using InputError::InputError;
};

struct NonMemberWordError : InputError {
    using InputError::InputError;
};

/// Raised by decomposition extraction when every d-branch node is bad.
/// Can only happen when the effective constant underruns the theoretical one.
struct NoNonbadNodeError : InputError {
    using InputError::InputError;
};

struct BadBaseError : InputError {
    using InputError::InputError;
};

struct ZeroDenominatorError : InputError {
    using InputError::InputError;
};

struct NonDivisibleError : InputError {
    using InputError::InputError;
};

struct PolynomialParseError : InputError {
    using InputError::InputError;
};

/// A configured cap was exceeded (enumeration frontier, slice size). CLI exit code 3.
struct ResourceLimitError : Error {
    using Error::Error;
};

/// FNV-1a 64-bit hash, used as a cheap integrity tag on serialized grammars.
inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string to_hex(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

/// Parses a position spec like "0-32,40" into a sorted, deduplicated list.
inline std::vector<int> parse_position_spec(std::string_view spec) {
    std::vector<int> out;
    size_t i = 0;
    auto read_int = [&]() -> int {
        size_t start = i;
        while (i < spec.size() && spec[i] >= '0' && spec[i] <= '9') ++i;
        if (i == start) throw InputError("bad position spec: integer expected in '" + std::string(spec) + "'");
        return std::stoi(std::string(spec.substr(start, i - start)));
    };
    while (i < spec.size()) {
        int lo = read_int();
        int hi = lo;
        if (i < spec.size() && spec[i] == '-') {
            ++i;
            hi = read_int();
        }
        if (hi < lo) throw InputError("bad position spec: descending range");
        for (int p = lo; p <= hi; ++p) out.push_back(p);
        if (i < spec.size()) {
            if (spec[i] != ',') throw InputError("bad position spec: ',' expected");
            ++i;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace polycfl
