#include "fixtures.hpp"
#include "sso/enforcement.hpp"
#include "sso/verification.hpp"

#include <doctest.h>

using namespace sso;
using sso::testing::load_model;
using sso::testing::refs;

namespace
{

std::vector<std::string> frontier_names( const CcAutomaton& cc, const std::vector<CcTransition>& ts )
{
    std::vector<std::string> out;
    for ( const auto& t : ts )
        out.push_back( cc.state_name( t.source ) + " " + cc.event_label( t.event ) + " " + cc.state_name( t.target ) );
    std::sort( out.begin(), out.end() );
    return out;
}

} // namespace

TEST_CASE( "2-step enforcement on the k-step leak model" )
{
    const Nfa g = load_model( "k_step_leak" );
    const auto out = enforce_k_sso( g, 2 );
    REQUIRE( out.enforced() );
    CHECK( out.solution().disabled == refs( { "4 -b-> 5", "7 -b-> 8" } ) );
    CHECK( out.solution().rounds >= 1 );
    const Nfa& sub = out.solution().subsystem;
    CHECK( verify_k_sso( sub, 2 ).opaque );
    CHECK( verify_k_sso( sub, 383 ).opaque );
    CHECK_FALSE( sub.find_transition( sso::testing::ref( "7 -b-> 8" ) ) );
    CHECK( sub.find_transition( sso::testing::ref( "0 -a-> 1" ) ) );
}

TEST_CASE( "already opaque systems need no disabling" )
{
    const Nfa g = load_model( "k_step_leak" );
    for ( std::uint64_t k : { 0, 1 } )
    {
        const auto out = enforce_k_sso( g, k );
        REQUIRE( out.enforced() );
        CHECK( out.solution().disabled.empty() );
        CHECK( out.solution().rounds == 0 );
        CHECK( out.solution().subsystem == g );
    }
    const auto cso = enforce( g, Notion::Cso );
    REQUIRE( cso.enforced() );
    CHECK( cso.solution().disabled.empty() );
}

TEST_CASE( "uncontrollable leaks make enforcement impossible" )
{
    const Nfa g = load_model( "unenforceable" );
    const auto out = enforce_k_sso( g, 2 );
    REQUIRE_FALSE( out.enforced() );
    const auto& no = out.impossible();
    CHECK( no.run.to_string() == "0 -a-> 14 -c-> 15 -a-> 16" );
    CHECK( is_run_of( g, no.run ) );
    for ( const auto& e : no.run.events() )
        CHECK_FALSE( g.alphabet().controllable( g.alphabet().index_of( e ) ) );
    REQUIRE( no.predecessor );
    CHECK( no.predecessor->states.back().rfind( "(16,", 0 ) == 0 );
    CHECK( no.leak.states.back().find( "∅" ) != std::string::npos );
}

TEST_CASE( "state-based enforcement on the secret-initial model" )
{
    const Nfa g = load_model( "secret_initial" );

    const auto scso = enforce_scso( g );
    REQUIRE( scso.enforced() );
    CHECK( scso.solution().disabled == refs( { "4 -a-> 7", "3 -a-> 5", "4 -a-> 5" } ) );
    CHECK( verify_scso( scso.solution().subsystem ).opaque );

    const auto siso = enforce_siso( g );
    REQUIRE( siso.enforced() );
    CHECK( siso.solution().disabled == refs( { "3 -u-> 6", "5 -v-> 6" } ) );
    CHECK( verify_siso( siso.solution().subsystem ).opaque );

    const auto inf = enforce_inf_sso( g );
    REQUIRE( inf.enforced() );
    CHECK( inf.solution().disabled == refs( { "3 -u-> 6", "5 -v-> 6", "4 -a-> 7", "3 -a-> 5", "4 -a-> 5" } ) );
    CHECK( verify_inf_sso( inf.solution().subsystem ).opaque );
    CHECK( inf.solution().rounds >= 2 );
}

TEST_CASE( "state-based enforcement without controllable events" )
{
    const Nfa g = sso::testing::with_controllable( load_model( "secret_initial" ), []( const std::string& ) { return false; } );
    for ( auto n : { Notion::Scso, Notion::Siso, Notion::InfSso } )
    {
        const auto out = enforce( g, n );
        REQUIRE_FALSE( out.enforced() );
        CHECK( is_run_of( g, out.impossible().run ) );
        CHECK_FALSE( out.impossible().predecessor );
    }
    CHECK( enforce_siso( g ).impossible().run.start == "1" );
}

TEST_CASE( "last controllable frontier respects the observation budget" )
{
    const CcAutomaton cc = cc_hat( load_model( "k_step_leak" ) );
    std::vector<bool> bad( cc.num_states(), false );
    bad[ *cc.find( "(8,∅)" ) ] = true;

    CHECK( last_controllable_frontier( cc, bad, 1 ).empty() );
    CHECK( frontier_names( cc, last_controllable_frontier( cc, bad, 2 ) )
           == std::vector<std::string>{ "(7,{1,2,3,4}) (b,b) (8,{2})" } );
    const std::vector<std::string> both{ "(7,{1,2,3,4}) (b,b) (8,{2})", "(8,{2}) (b,b) (8,{2})" };
    CHECK( frontier_names( cc, last_controllable_frontier( cc, bad, 3 ) ) == both );
    CHECK( frontier_names( cc, last_controllable_frontier( cc, bad, std::nullopt ) ) == both );
}

TEST_CASE( "frontier ignores transitions leaving bad states" )
{
    const CcAutomaton cc = cc_hat( load_model( "k_step_leak" ) );
    std::vector<bool> bad( cc.num_states(), false );
    bad[ *cc.find( "(8,{2})" ) ] = true;
    bad[ *cc.find( "(8,∅)" ) ] = true;
    CHECK( frontier_names( cc, last_controllable_frontier( cc, bad, std::nullopt ) )
           == std::vector<std::string>{ "(7,{1,2,3,4}) (b,b) (8,{2})" } );
}

TEST_CASE( "frontier from explicit sources" )
{
    const CcAutomaton cc = cc_hat( load_model( "k_step_leak" ) );
    std::vector<bool> bad( cc.num_states(), false );
    bad[ *cc.find( "(8,∅)" ) ] = true;
    CHECK( last_controllable_frontier( cc, bad, std::nullopt, { *cc.find( "(5,{8})" ) } ).empty() );
    CHECK( frontier_names( cc, last_controllable_frontier( cc, bad, 0, { *cc.find( "(8,{2})" ) } ) ).empty() );
    CHECK( frontier_names( cc, last_controllable_frontier( cc, bad, 2, { *cc.find( "(8,{2})" ) } ) )
           == std::vector<std::string>{ "(8,{2}) (b,b) (8,{2})" } );
}

TEST_CASE( "enforced subsystems contain only allowed cuts" )
{
    const Nfa g = load_model( "secret_initial" );
    for ( auto n : { Notion::Scso, Notion::Siso, Notion::InfSso } )
    {
        const auto out = enforce( g, n );
        REQUIRE( out.enforced() );
        for ( const auto& t : out.solution().disabled )
        {
            const auto found = g.find_transition( t );
            REQUIRE( found );
            CHECK( g.alphabet().controllable( found->event ) );
        }
        CHECK( disable_transitions( g, out.solution().disabled ) == out.solution().subsystem );
    }
}
