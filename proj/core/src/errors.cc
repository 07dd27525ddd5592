#include <ecswitch/errors.hh>

using namespace ecswitch;

ParseError::ParseError(std::size_t line, const std::string & message) :
    Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
    _line(line)
{
}
