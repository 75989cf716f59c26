#include <cliquepoly/errors.hh>

namespace cliquepoly
{
    InputError::InputError(const std::string & message, int line) :
        std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        _line(line)
    {
    }

    DomainError::DomainError(const std::string & message) :
        std::invalid_argument(message)
    {
    }
}
