#pragma once

#include <stdexcept>
#include <string>

namespace holosim {

// Base class for every failure this library reports deliberately.
// The CLI maps the concrete type to the "error.type" field of its JSON output,
// so the taxonomy below is part of the tool's external contract.
class error : public std::runtime_error {
public:
    error(std::string type, const std::string& what)
        : std::runtime_error(what), type_(std::move(type)) {}
    const std::string& type() const { return type_; }

private:
    std::string type_;
};

// A parameter combination the library does not implement (as opposed to one
// that is invalid): e.g. a tensor family that provably does not exist.
class unsupported_error : public error {
public:
    explicit unsupported_error(const std::string& what) : error("unsupported", what) {}
};

// Dense work that would exceed the configured size cap.
class size_limit_error : public error {
public:
    explicit size_limit_error(const std::string& what) : error("size_limit", what) {}
};

// Inputs violating a documented precondition (domain errors, bad leg ids, ...).
class invalid_argument_error : public error {
public:
    explicit invalid_argument_error(const std::string& what) : error("invalid_argument", what) {}
};

// Config files that do not parse or lack required keys.
class config_error : public error {
public:
    explicit config_error(const std::string& what) : error("config", what) {}
};

// Simulator/target dimensions that cannot belong to the claimed encoding.
class structural_mismatch_error : public error {
public:
    explicit structural_mismatch_error(const std::string& what)
        : error("structural_mismatch", what) {}
};

// A spectral cutoff sitting inside a near-degenerate cluster; results would
// depend on floating-point noise, so we refuse.
class ill_conditioned_error : public error {
public:
    explicit ill_conditioned_error(const std::string& what) : error("ill_conditioned", what) {}
};

// A bounded search that exhausted its range without meeting the target.
class not_found_error : public error {
public:
    explicit not_found_error(const std::string& what) : error("not_found", what) {}
};

}  // namespace holosim
