#pragma once

// JSON model documents:
//
//   {
//     "version": 1,
//     "states": [ { "id": "0", "initial": true }, { "id": "5", "secret": true } ],
//     "events": [ { "name": "a" }, { "name": "u", "observable": false, "controllable": false } ],
//     "transitions": [ { "from": "0", "event": "a", "to": "5" } ]
//   }
//
// Flags default to secret=false, initial=false, observable=true,
// controllable=true. State ids may be strings or integers.

#include "sso/nfa.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace sso
{

/// Throws ParseError for malformed text or shape (line and column are 0 when
/// the text parses but a field has the wrong type), UnknownReference for
/// undeclared states or events, DuplicateDeclaration and EmptyModel.
Nfa parse_model( std::string_view text );

/// Canonical document for `nfa`; parse_model(serialize_model(g)) == g.
std::string serialize_model( const Nfa& nfa );

/// File wrappers; I/O failures raise IoError.
Nfa read_model_file( const std::filesystem::path& path );
void write_model_file( const Nfa& nfa, const std::filesystem::path& path );

} // namespace sso
