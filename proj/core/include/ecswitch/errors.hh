#ifndef ECSWITCH_ERRORS_HH
#define ECSWITCH_ERRORS_HH

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ecswitch
{
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// Two objects that must share a colour count (permutation degree,
    /// graph m, group degree) do not.
    class DegreeMismatch : public Error
    {
        public:
            using Error::Error;
    };

    class InvalidArgument : public Error
    {
        public:
            using Error::Error;
    };

    /// Malformed text input. line() is 1-based; 0 means "not tied to a line".
    class ParseError : public Error
    {
        private:
            std::size_t _line;

        public:
            ParseError(std::size_t line, const std::string & message);

            auto line() const -> std::size_t { return _line; }
    };

    /// A search exhausted its configured budget before reaching a verdict.
    class CapExceeded : public Error
    {
        public:
            using Error::Error;
    };

    /// The group has no property-T witness for the requested recolouring.
    class NoWitness : public Error
    {
        public:
            using Error::Error;
    };

    /// The group lacks property T_j; failing_colour() is an i with no T_{i,j} witness.
    class NoPropertyT : public Error
    {
        private:
            int _failing_colour;

        public:
            NoPropertyT(int failing_colour, const std::string & message) :
                Error(message),
                _failing_colour(failing_colour)
            {
            }

            auto failing_colour() const -> int { return _failing_colour; }
    };
}

#endif
