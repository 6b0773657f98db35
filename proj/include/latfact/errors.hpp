#pragma once

#include <stdexcept>
#include <string>

namespace latfact {

// Violated precondition or failed input validation. The CLI maps this to exit code 2.
class ContractError : public std::runtime_error {
public:
    explicit ContractError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid input that lies outside the supported fragment.
class UnsupportedConfiguration : public ContractError {
public:
    explicit UnsupportedConfiguration(const std::string& msg) : ContractError(msg) {}
};

// A configured search or size cap was exceeded. The CLI maps this to exit code 3.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace latfact
