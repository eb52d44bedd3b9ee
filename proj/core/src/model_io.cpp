#include "sso/model_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <unordered_map>

namespace sso
{

namespace
{

using json = nlohmann::json;

std::pair<std::size_t, std::size_t> position_of( std::string_view text, std::size_t byte )
{
    std::size_t line = 1;
    std::size_t column = 1;
    for ( std::size_t i = 0; i < byte && i < text.size(); ++i )
    {
        if ( text[ i ] == '\n' )
        {
            ++line;
            column = 1;
        }
        else
        {
            ++column;
        }
    }
    return { line, column };
}

[[noreturn]] void shape_error( const std::string& pointer, const std::string& what )
{
    throw ParseError( 0, 0, pointer + ": " + what );
}

const json& member( const json& object, const char* key, const std::string& pointer )
{
    if ( !object.is_object() )
        shape_error( pointer, "expected an object" );
    auto it = object.find( key );
    if ( it == object.end() )
        shape_error( pointer, std::string{ "missing field \"" } + key + "\"" );
    return *it;
}

const json& array_member( const json& object, const char* key, const std::string& pointer )
{
    const auto& value = member( object, key, pointer );
    if ( !value.is_array() )
        shape_error( pointer + "/" + key, "expected an array" );
    return value;
}

bool flag( const json& object, const char* key, bool fallback, const std::string& pointer )
{
    auto it = object.find( key );
    if ( it == object.end() )
        return fallback;
    if ( !it->is_boolean() )
        shape_error( pointer + "/" + key, "expected a boolean" );
    return it->get<bool>();
}

std::string identifier( const json& value, const std::string& pointer )
{
    if ( value.is_string() )
        return value.get<std::string>();
    if ( value.is_number_integer() )
        return std::to_string( value.get<long long>() );
    if ( value.is_number_unsigned() )
        return std::to_string( value.get<unsigned long long>() );
    shape_error( pointer, "expected a string or integer identifier" );
}

} // namespace

Nfa parse_model( std::string_view text )
{
    json doc;
    try
    {
        doc = json::parse( text.begin(), text.end() );
    }
    catch ( const json::parse_error& e )
    {
        // byte is 1-based and points just past the offending character
        const auto [ line, column ] = position_of( text, e.byte > 0 ? e.byte - 1 : 0 );
        throw ParseError( line, column, "line " + std::to_string( line ) + ", column " + std::to_string( column )
                                            + ": " + e.what() );
    }

    const auto& version = member( doc, "version", "" );
    if ( !version.is_number_integer() || version.get<long long>() != 1 )
        shape_error( "/version", "unsupported version (expected 1)" );

    const auto& states = array_member( doc, "states", "" );
    const auto& events = array_member( doc, "events", "" );
    const auto& transitions = array_member( doc, "transitions", "" );
    if ( states.empty() )
        throw Error( ErrorCode::EmptyModel, "model declares no states" );

    NfaParts parts;
    std::unordered_map<std::string, StateIndex> state_index;
    for ( std::size_t i = 0; i < states.size(); ++i )
    {
        const std::string pointer = "/states/" + std::to_string( i );
        auto id = identifier( member( states[ i ], "id", pointer ), pointer + "/id" );
        if ( !state_index.emplace( id, static_cast<StateIndex>( i ) ).second )
            throw Error( ErrorCode::DuplicateDeclaration, "state '" + id + "' declared twice at " + pointer );
        parts.initial.push_back( flag( states[ i ], "initial", false, pointer ) );
        parts.secret.push_back( flag( states[ i ], "secret", false, pointer ) );
        parts.states.push_back( std::move( id ) );
    }

    std::vector<Event> declared;
    for ( std::size_t i = 0; i < events.size(); ++i )
    {
        const std::string pointer = "/events/" + std::to_string( i );
        const auto& name = member( events[ i ], "name", pointer );
        if ( !name.is_string() )
            shape_error( pointer + "/name", "expected a string" );
        declared.push_back( { name.get<std::string>(), flag( events[ i ], "observable", true, pointer ),
                              flag( events[ i ], "controllable", true, pointer ) } );
    }
    parts.alphabet = Alphabet{ std::move( declared ) };

    for ( std::size_t i = 0; i < transitions.size(); ++i )
    {
        const std::string pointer = "/transitions/" + std::to_string( i );
        const auto& t = transitions[ i ];
        auto from = identifier( member( t, "from", pointer ), pointer + "/from" );
        auto to = identifier( member( t, "to", pointer ), pointer + "/to" );
        const auto& ev = member( t, "event", pointer );
        if ( !ev.is_string() )
            shape_error( pointer + "/event", "expected a string" );
        const auto src = state_index.find( from );
        if ( src == state_index.end() )
            throw UnknownReference( from, pointer + "/from" );
        const auto dst = state_index.find( to );
        if ( dst == state_index.end() )
            throw UnknownReference( to, pointer + "/to" );
        const auto event = parts.alphabet.find( ev.get<std::string>() );
        if ( !event )
            throw UnknownReference( ev.get<std::string>(), pointer + "/event" );
        parts.transitions.push_back( { src->second, *event, dst->second } );
    }
    return Nfa{ std::move( parts ) };
}

std::string serialize_model( const Nfa& nfa )
{
    json doc;
    doc[ "version" ] = 1;
    doc[ "states" ] = json::array();
    for ( StateIndex x = 0; x < nfa.num_states(); ++x )
    {
        json s{ { "id", nfa.state_name( x ) } };
        if ( nfa.is_initial( x ) )
            s[ "initial" ] = true;
        if ( nfa.is_secret( x ) )
            s[ "secret" ] = true;
        doc[ "states" ].push_back( std::move( s ) );
    }
    doc[ "events" ] = json::array();
    for ( const auto& e : nfa.alphabet().events() )
        doc[ "events" ].push_back( { { "name", e.name }, { "observable", e.observable }, { "controllable", e.controllable } } );
    doc[ "transitions" ] = json::array();
    for ( const auto& t : nfa.transitions() )
    {
        const auto ref = nfa.ref( t );
        doc[ "transitions" ].push_back( { { "from", ref.source }, { "event", ref.event }, { "to", ref.target } } );
    }
    return doc.dump( 2 ) + "\n";
}

Nfa read_model_file( const std::filesystem::path& path )
{
    std::ifstream in( path, std::ios::binary );
    if ( !in )
        throw Error( ErrorCode::IoError, "cannot open '" + path.string() + "'" );
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if ( in.bad() )
        throw Error( ErrorCode::IoError, "cannot read '" + path.string() + "'" );
    return parse_model( buffer.str() );
}

void write_model_file( const Nfa& nfa, const std::filesystem::path& path )
{
    std::ofstream out( path, std::ios::binary );
    if ( !out )
        throw Error( ErrorCode::IoError, "cannot open '" + path.string() + "' for writing" );
    out << serialize_model( nfa );
    out.flush();
    if ( !out )
        throw Error( ErrorCode::IoError, "cannot write '" + path.string() + "'" );
}

} // namespace sso
