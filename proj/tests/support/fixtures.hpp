#pragma once

#include "sso/model_io.hpp"
#include "sso/nfa.hpp"

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

namespace sso::testing
{

inline Nfa load_model( const std::string& name )
{
    return read_model_file( std::string{ SSO_MODELS_DIR } + "/" + name + ".json" );
}

inline std::string model_path( const std::string& name )
{
    return std::string{ SSO_MODELS_DIR } + "/" + name + ".json";
}

/// Parses "4 -b-> 5" style transitions.
inline TransitionRef ref( const std::string& text )
{
    std::istringstream in( text );
    std::string source, arrow, target;
    in >> source >> arrow >> target;
    return { source, arrow.substr( 1, arrow.size() - 3 ), target };
}

inline std::vector<TransitionRef> refs( std::initializer_list<const char*> texts )
{
    std::vector<TransitionRef> out;
    for ( const auto* t : texts )
        out.push_back( ref( t ) );
    std::sort( out.begin(), out.end() );
    return out;
}

/// Same automaton with the controllable flag of every event set by `controllable`.
template <typename Pred>
Nfa with_controllable( const Nfa& nfa, Pred controllable )
{
    std::vector<Event> events( nfa.alphabet().events().begin(), nfa.alphabet().events().end() );
    for ( auto& e : events )
        e.controllable = controllable( e.name );
    NfaParts parts;
    parts.alphabet = Alphabet{ events };
    parts.states.assign( nfa.state_names().begin(), nfa.state_names().end() );
    parts.transitions.assign( nfa.transitions().begin(), nfa.transitions().end() );
    for ( StateIndex x = 0; x < nfa.num_states(); ++x )
    {
        parts.initial.push_back( nfa.is_initial( x ) );
        parts.secret.push_back( nfa.is_secret( x ) );
    }
    return Nfa{ std::move( parts ) };
}

inline std::vector<std::string> sorted_names( std::vector<std::string> names )
{
    std::sort( names.begin(), names.end() );
    return names;
}

} // namespace sso::testing
