#pragma once

#include <stdexcept>
#include <string>

namespace gridlocus
{
    /// Bad caller-supplied parameter (even p, non-divisor d, unknown regime, ...).
    class InvalidParameter : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// Input outside an operation's domain: inverting zero, wrong distance, non-2-regular graph.
    class DomainError : public std::domain_error
    {
        public:
            using std::domain_error::domain_error;
    };

    /// A configured size cap would be exceeded.
    class CapacityError : public std::length_error
    {
        public:
            using std::length_error::length_error;
    };

    /// Malformed graph6 / JSON input.
    class ParseError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };
}
