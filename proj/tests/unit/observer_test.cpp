#include "fixtures.hpp"
#include "sso/observer.hpp"

#include <doctest.h>

using namespace sso;
using sso::testing::load_model;

namespace
{

std::string move_name( const Observer& obs, const std::string& from, const std::string& event )
{
    for ( EstimateIndex i = 0; i < obs.size(); ++i )
    {
        if ( obs.name( i ) != from )
            continue;
        const auto next = obs.successor( i, obs.source().alphabet().index_of( event ) );
        return next ? obs.name( *next ) : "-";
    }
    return "?";
}

} // namespace

TEST_CASE( "observer of the k-step leak model" )
{
    const Nfa g = load_model( "k_step_leak" );
    const Observer obs = subset_construction( g );
    REQUIRE( obs.size() == 6 );
    CHECK( obs.name( 0 ) == "{0,6}" );
    CHECK( obs.initials() == std::vector<EstimateIndex>{ 0 } );
    CHECK( obs.is_initial( 0 ) );
    CHECK_FALSE( obs.is_initial( 1 ) );

    CHECK( move_name( obs, "{0,6}", "a" ) == "{1,2,3,4,7}" );
    CHECK( move_name( obs, "{0,6}", "b" ) == "-" );
    CHECK( move_name( obs, "{1,2,3,4,7}", "b" ) == "{2,5,8}" );
    CHECK( move_name( obs, "{2,5,8}", "b" ) == "{2,8}" );
    CHECK( move_name( obs, "{2,5,8}", "c" ) == "{5,8}" );
    CHECK( move_name( obs, "{2,8}", "c" ) == "{8}" );
    CHECK( move_name( obs, "{5,8}", "b" ) == "{8}" );
    CHECK( move_name( obs, "{5,8}", "c" ) == "{5,8}" );
    CHECK( move_name( obs, "{8}", "b" ) == "{8}" );
    CHECK( obs.num_moves() == 10 );
}

TEST_CASE( "observer moves are sorted by event and never use unobservable events" )
{
    const Nfa g = load_model( "unenforceable" );
    const Observer obs = subset_construction( g );
    for ( EstimateIndex q = 0; q < obs.size(); ++q )
    {
        const auto& moves = obs.moves( q );
        for ( std::size_t i = 0; i < moves.size(); ++i )
        {
            CHECK( g.alphabet().observable( moves[ i ].event ) );
            if ( i > 0 )
                CHECK( moves[ i - 1 ].event < moves[ i ].event );
        }
        CHECK( unobservable_reach( g, obs.estimate( q ) ) == obs.estimate( q ) );
    }
}

TEST_CASE( "estimate classes" )
{
    const Nfa g = load_model( "secret_initial" );
    const Observer obs = subset_construction( g );
    CHECK( obs.size() == 5 );
    const auto classes = classify_estimates( obs, g.secret_states() );
    std::vector<std::string> hybrid, nonsecret;
    for ( EstimateIndex q = 0; q < obs.size(); ++q )
    {
        if ( classes[ q ] == EstimateClass::Hybrid )
            hybrid.push_back( obs.name( q ) );
        if ( classes[ q ] == EstimateClass::NonSecret )
            nonsecret.push_back( obs.name( q ) );
    }
    CHECK( hybrid == std::vector<std::string>{ "{0,1,2}", "{5,6,7}", "{8,9}" } );
    CHECK( nonsecret == std::vector<std::string>{ "{3,4,6}", "{8}" } );

    const StateSet secret{ 1, 2 };
    CHECK( classify_estimate( { 1 }, secret ) == EstimateClass::Secret );
    CHECK( classify_estimate( { 1, 2 }, secret ) == EstimateClass::Secret );
    CHECK( classify_estimate( { 0, 3 }, secret ) == EstimateClass::NonSecret );
    CHECK( classify_estimate( { 0, 1 }, secret ) == EstimateClass::Hybrid );
    CHECK( std::string{ to_string( EstimateClass::Hybrid ) } == "Hybrid" );
}

TEST_CASE( "subset construction needs an initial state" )
{
    const Nfa g = NfaBuilder{}.event( "a" ).state( "0" ).build();
    try
    {
        (void)subset_construction( g );
        FAIL( "expected EmptyInitial" );
    }
    catch ( const Error& e )
    {
        CHECK( e.code() == ErrorCode::EmptyInitial );
    }
}

TEST_CASE( "multi-initial observer explores every seed" )
{
    const Nfa g = load_model( "k_step_leak" );
    const Observer obs = multi_initial_observer( g, { g.states_of( { "8" } ), g.states_of( { "2" } ), g.states_of( { "8" } ) } );
    CHECK( obs.initials().size() == 2 );
    CHECK( obs.size() == 2 );
    CHECK( obs.find( g.states_of( { "2" } ) ) );
    CHECK_FALSE( obs.find( g.states_of( { "2", "8" } ) ) );

    auto code = [ & ]( const std::vector<StateSet>& seeds ) {
        try
        {
            (void)multi_initial_observer( g, seeds );
        }
        catch ( const Error& e )
        {
            return e.code();
        }
        return ErrorCode::InternalInvariant;
    };
    CHECK( code( { StateSet{} } ) == ErrorCode::EmptyEstimate );
    CHECK( code( { StateSet{ 42 } } ) == ErrorCode::InvalidState );
    CHECK( multi_initial_observer( g, {} ).empty() );
}

TEST_CASE( "observer with no observable events has a single estimate" )
{
    const Nfa g = NfaBuilder{}
                      .event( "u", false )
                      .state( "0", true )
                      .state( "1", false, true )
                      .transition( "0", "u", "1" )
                      .build();
    const Observer obs = subset_construction( g );
    CHECK( obs.size() == 1 );
    CHECK( obs.name( 0 ) == "{0,1}" );
    CHECK( obs.num_moves() == 0 );
}
