#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sso
{

enum class ErrorCode
{
    InvalidEvent,
    InvalidState,
    UncontrollableCut,
    EmptyInitial,
    EmptyEstimate,
    AlphabetMismatch,
    OracleUnsound,
    TooLarge,
    ParseError,
    UnknownReference,
    DuplicateDeclaration,
    EmptyModel,
    IoError,
    InternalInvariant,
};

const char* to_string( ErrorCode code ) noexcept;

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error
{
    ErrorCode _code;

public:
    Error( ErrorCode code, const std::string& what )
            : std::runtime_error( what ), _code{ code }
    {
    }

    [[nodiscard]] ErrorCode code() const noexcept { return _code; }
};

/// Syntax error in a model document; line and column are 1-based.
class ParseError : public Error
{
    std::size_t _line;
    std::size_t _column;

public:
    ParseError( std::size_t line, std::size_t column, const std::string& what )
            : Error( ErrorCode::ParseError, what ), _line{ line }, _column{ column }
    {
    }

    [[nodiscard]] std::size_t line() const noexcept { return _line; }
    [[nodiscard]] std::size_t column() const noexcept { return _column; }
};

/// A model refers to a state or event that was never declared.
class UnknownReference : public Error
{
    std::string _name;
    std::string _pointer;

public:
    UnknownReference( std::string name, std::string pointer )
            : Error( ErrorCode::UnknownReference,
                     "unknown reference '" + name + "' at " + pointer ),
              _name{ std::move( name ) }, _pointer{ std::move( pointer ) }
    {
    }

    [[nodiscard]] const std::string& name() const noexcept { return _name; }
    // JSON pointer of the offending field, e.g. "/transitions/3/event".
    [[nodiscard]] const std::string& pointer() const noexcept { return _pointer; }
};

} // namespace sso
