#pragma once

#include <stdexcept>
#include <string>

namespace risklab {

// Bad inputs: malformed configuration, invalid model parameters, an engine
// asked to handle a model outside its contract. CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// An engine or operation that cannot serve the requested model/claim pair.
class UnsupportedError : public ConfigError {
public:
    explicit UnsupportedError(const std::string& what) : ConfigError(what) {}
};

// Runtime domain violations: out-of-range arguments, quantities outside
// no-arbitrage bounds, divisions below the volatility floor. CLI exit code 3.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failures: non-convergence, non-finite intermediate values.
// CLI exit code 3.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace risklab
