#pragma once

#include <stdexcept>

namespace symreal
{

/// Malformed or semantically invalid input document.
class FormatError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace symreal
