#pragma once

#include <stdexcept>
#include <string>

namespace cliquepoly
{
    /// Malformed external input (edge lists, weight files). Carries the 1-based line when known.
    class InputError : public std::runtime_error
    {
    private:
        int _line;

    public:
        explicit InputError(const std::string & message, int line = 0);

        auto line() const noexcept -> int { return _line; }
    };

    /// A call whose arguments violate the operation's preconditions (levels out of range,
    /// negative weights, adjacent shift pairs and so on).
    class DomainError : public std::invalid_argument
    {
    public:
        explicit DomainError(const std::string & message);
    };
}
