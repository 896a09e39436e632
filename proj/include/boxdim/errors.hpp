#pragma once

#include <stdexcept>
#include <algorithm>
#include <string>

namespace boxdim {

/// Input violates a documented precondition (bad parameters, malformed objects).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exact oracle was asked to run beyond its configured size guard.
class OracleLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A construction produced an object that failed its own post-condition check.
/// Never expected for valid inputs; raised instead of returning a bad certificate.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Document parse/validation failure; `path()` locates the first offending field.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string path, const std::string& message)
        : std::runtime_error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

/// Size guards for the exponential oracles. Every field is a vertex/element count.
struct OracleLimits {
    int chromatic = 16;
    int linear_extensions = 9;
    int dimension = 9;
    int boxicity = 7;
    int supergraphs = 7;
    int recognition = 20;
    int max_cliques = 24;

    /// The CLI `--limit` flag: the exponential guards become `n`; chromatic and
    /// recognition guards are only ever raised by it.
    static OracleLimits uniform(int n) {
        OracleLimits l;
        l.chromatic = std::max(l.chromatic, n);
        l.linear_extensions = n;
        l.dimension = n;
        l.boxicity = n;
        l.supergraphs = n;
        l.recognition = std::max(l.recognition, n);
        return l;
    }
};

}  // namespace boxdim
