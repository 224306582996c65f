#pragma once

#include <stdexcept>
#include <string>

namespace holant {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Input could not be parsed (files, CLI scalars).
struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

// A constructed object failed its own verification contract.
struct verify_error : error {
    explicit verify_error(const std::string& what) : error(what) {}
};

// Input is outside the scope of the theorem backing an operation.
struct scope_error : error {
    explicit scope_error(const std::string& what) : error(what) {}
};

}  // namespace holant
