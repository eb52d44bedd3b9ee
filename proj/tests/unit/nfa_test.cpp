#include "fixtures.hpp"
#include "sso/nfa.hpp"
#include "sso/notion.hpp"

#include <doctest.h>

using namespace sso;
using sso::testing::load_model;
using sso::testing::ref;

namespace
{

Nfa chain()
{
    return NfaBuilder{}
        .event( "a" )
        .event( "u", false, false )
        .state( "0", true )
        .state( "1", false, true )
        .state( "2" )
        .state( "9" )
        .transition( "0", "u", "1" )
        .transition( "1", "a", "2" )
        .transition( "9", "a", "0" )
        .build();
}

} // namespace

TEST_CASE( "natural order compares embedded numbers by value" )
{
    CHECK( natural_less( "2", "10" ) );
    CHECK_FALSE( natural_less( "10", "2" ) );
    CHECK( natural_less( "x2", "x10" ) );
    CHECK( natural_less( "a", "b" ) );
    CHECK_FALSE( natural_less( "7", "7" ) );
}

TEST_CASE( "builder records flags, names and transitions" )
{
    const Nfa g = chain();
    CHECK( g.num_states() == 4 );
    CHECK( g.alphabet().size() == 2 );
    CHECK( g.transitions().size() == 3 );
    CHECK( g.is_initial( g.state_index( "0" ) ) );
    CHECK( g.is_secret( g.state_index( "1" ) ) );
    CHECK_FALSE( g.alphabet().observable( g.alphabet().index_of( "u" ) ) );
    CHECK_FALSE( g.alphabet().controllable( g.alphabet().index_of( "u" ) ) );
    CHECK( g.set_name( g.states_of( { "2", "0", "1" } ) ) == "{0,1,2}" );
    CHECK( g.names_of( g.states_of( { "9", "2" } ) ) == std::vector<std::string>{ "2", "9" } );
    CHECK_FALSE( g.find_state( "42" ) );
}

TEST_CASE( "builder rejects dangling and duplicate declarations" )
{
    auto code = []( const NfaBuilder& b ) {
        try
        {
            (void)b.build();
        }
        catch ( const Error& e )
        {
            return e.code();
        }
        return ErrorCode::InternalInvariant;
    };
    CHECK( code( NfaBuilder{}.event( "a" ).state( "0" ).transition( "0", "b", "0" ) ) == ErrorCode::InvalidEvent );
    CHECK( code( NfaBuilder{}.event( "a" ).state( "0" ).transition( "0", "a", "1" ) ) == ErrorCode::InvalidState );
    CHECK( code( NfaBuilder{}.event( "a" ).state( "0" ).state( "0" ) ) == ErrorCode::DuplicateDeclaration );
    CHECK( code( NfaBuilder{}.event( "a" ).event( "a" ).state( "0" ) ) == ErrorCode::DuplicateDeclaration );
}

TEST_CASE( "duplicate transitions collapse" )
{
    const Nfa g = NfaBuilder{}.event( "a" ).state( "0", true ).transition( "0", "a", "0" ).transition( "0", "a", "0" ).build();
    CHECK( g.transitions().size() == 1 );
}

TEST_CASE( "transition references print and order naturally" )
{
    CHECK( ref( "4 -b-> 5" ).to_string() == "4 -b-> 5" );
    CHECK( ref( "3 -a-> 5" ) < ref( "10 -a-> 5" ) );
    CHECK( ref( "4 -a-> 5" ) < ref( "4 -a-> 7" ) );
    const Nfa g = load_model( "k_step_leak" );
    const auto t = g.find_transition( ref( "4 -b-> 5" ) );
    REQUIRE( t );
    CHECK( g.ref( *t ) == ref( "4 -b-> 5" ) );
    CHECK_FALSE( g.find_transition( ref( "4 -a-> 5" ) ) );
}

TEST_CASE( "runs are checked step by step" )
{
    const Nfa g = chain();
    const Run run{ "0", { { "u", "1" }, { "a", "2" } } };
    CHECK( run.to_string() == "0 -u-> 1 -a-> 2" );
    CHECK( run.states() == std::vector<std::string>{ "0", "1", "2" } );
    CHECK( run.events() == std::vector<std::string>{ "u", "a" } );
    CHECK( is_run_of( g, run ) );
    CHECK_FALSE( is_run_of( g, Run{ "0", { { "a", "1" } } } ) );
    CHECK_FALSE( is_run_of( g, Run{ "x", {} } ) );
    CHECK( is_run_of( g, Run{ "2", {} } ) );
}

TEST_CASE( "natural projection erases unobservable events" )
{
    const Nfa g = chain();
    const std::vector<std::string> word{ "u", "a", "u", "a" };
    CHECK( natural_projection( word, g.alphabet() ) == std::vector<std::string>{ "a", "a" } );
    CHECK( natural_projection( std::vector<std::string>{}, g.alphabet() ).empty() );
    CHECK_THROWS_AS( natural_projection( std::vector<std::string>{ "z" }, g.alphabet() ), Error );
}

TEST_CASE( "unobservable reach closes under unobservable moves only" )
{
    const Nfa g = load_model( "k_step_leak" );
    CHECK( g.set_name( unobservable_reach( g, g.states_of( { "0" } ) ) ) == "{0,6}" );
    CHECK( g.set_name( unobservable_reach( g, g.states_of( { "1", "3" } ) ) ) == "{1,2,3,4}" );
    CHECK( unobservable_reach( g, {} ).empty() );
    CHECK_THROWS_AS( unobservable_reach( g, StateSet{ 99 } ), Error );
}

TEST_CASE( "accessible part drops unreachable states" )
{
    const Nfa a = accessible_part( chain() );
    CHECK( a.num_states() == 3 );
    CHECK_FALSE( a.find_state( "9" ) );
    CHECK( a.transitions().size() == 2 );
    CHECK( accessible_part( a ) == a );
}

TEST_CASE( "induced subautomaton restarts from a new initial set" )
{
    const Nfa g = chain();
    std::vector<bool> keep( g.num_states(), true );
    keep[ g.state_index( "0" ) ] = false;
    const Nfa sub = induced_subautomaton( g, keep, g.states_of( { "1" } ) );
    CHECK( sub.num_states() == 2 );
    CHECK( sub.is_initial( sub.state_index( "1" ) ) );
    CHECK( sub.is_secret( sub.state_index( "1" ) ) );
    CHECK_THROWS_AS( induced_subautomaton( g, { true }, {} ), Error );
}

TEST_CASE( "disabling transitions keeps the accessible remainder" )
{
    const Nfa g = load_model( "k_step_leak" );
    const std::vector<TransitionRef> cut{ ref( "4 -b-> 5" ), ref( "7 -b-> 8" ) };
    const Nfa sub = disable_transitions( g, cut );
    CHECK_FALSE( sub.find_state( "5" ) );
    CHECK_FALSE( sub.find_state( "8" ) );
    CHECK( sub.transitions().size() == 7 );
    CHECK( disable_transitions( g, std::vector<TransitionRef>{} ) == g );

    try
    {
        (void)disable_transitions( g, std::vector<TransitionRef>{ ref( "5 -c-> 5" ) } );
        FAIL( "expected UncontrollableCut" );
    }
    catch ( const Error& e )
    {
        CHECK( e.code() == ErrorCode::UncontrollableCut );
    }
    try
    {
        (void)disable_transitions( g, std::vector<TransitionRef>{ ref( "0 -b-> 1" ) } );
        FAIL( "expected InvalidState" );
    }
    catch ( const Error& e )
    {
        CHECK( e.code() == ErrorCode::InvalidState );
    }
}

TEST_CASE( "notion names round trip" )
{
    for ( auto n : { Notion::KSso, Notion::Cso, Notion::Scso, Notion::Siso, Notion::InfSso } )
        CHECK( parse_notion( to_string( n ) ) == n );
    CHECK( std::string{ to_string( Notion::InfSso ) } == "inf-sso" );
    CHECK_FALSE( parse_notion( "opaque" ) );
}

TEST_CASE( "error codes have names" )
{
    CHECK( std::string{ to_string( ErrorCode::UncontrollableCut ) } == "UncontrollableCut" );
}
