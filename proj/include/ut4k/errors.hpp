#pragma once

#include <stdexcept>
#include <string>

namespace ut4k {

// Input text that does not match the documented grammar.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed input outside the domain of the requested computation
// (rational theta, reducible polynomial, mismatched fields, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ut4k
