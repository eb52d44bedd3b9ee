#include "fixtures.hpp"
#include "sso/oracle.hpp"
#include "sso/verification.hpp"

#include <doctest.h>

using namespace sso;
using sso::testing::load_model;

namespace
{

void check_witness( const Nfa& g, const Verdict& v )
{
    REQUIRE_FALSE( v.opaque );
    REQUIRE( v.witness );
    const auto& w = *v.witness;
    CHECK( is_run_of( g, w.run ) );
    CHECK( g.is_initial( g.state_index( w.run.start ) ) );
    REQUIRE( w.secret_position < w.run.states().size() );
    CHECK( g.is_secret( g.state_index( w.run.states()[ w.secret_position ] ) ) );
    CHECK_FALSE( w.trace.empty() );
    CHECK( w.trace.labels.size() + 1 == w.trace.states.size() );
    CHECK( oracle_is_leaking_run( g, v.notion, v.k, w.run, w.secret_position, run_cap( g, 8 ) ) );
}

Nfa without_secrets()
{
    return NfaBuilder{}.event( "a" ).state( "0", true ).state( "1" ).transition( "0", "a", "1" ).transition( "1", "a", "0" ).build();
}

} // namespace

TEST_CASE( "K-step verdicts of the k-step leak model" )
{
    const Nfa g = load_model( "k_step_leak" );
    CHECK( effective_k_bound( g ) == 383 );
    CHECK( verify_k_sso( g, 0 ).opaque );
    CHECK( verify_k_sso( g, 1 ).opaque );
    for ( std::uint64_t k : { 2, 3, 383, 384, 1000000 } )
    {
        const Verdict v = verify_k_sso( g, k );
        CHECK( v.notion == Notion::KSso );
        CHECK( v.k == k );
        check_witness( g, v );
    }
    CHECK( verify_k_sso( g, unreachable ).opaque == false );
}

TEST_CASE( "the 2-step witness exposes state 7 two observations before the estimate empties" )
{
    const Nfa g = load_model( "k_step_leak" );
    const Verdict v = verify_k_sso( g, 2 );
    REQUIRE( v.witness );
    const auto& w = *v.witness;
    CHECK( w.run.states()[ w.secret_position ] == "7" );
    CHECK( w.trace.states.front() == "(7,{1,2,3,4})" );
    CHECK( w.trace.states.back() == "(8,∅)" );
    CHECK( w.trace.to_string() == "(7,{1,2,3,4}) -(b,b)-> (8,{2}) -(c,c)-> (8,∅)" );
}

TEST_CASE( "observational distances in Cc(Ĝ,G̃_obs)" )
{
    const CcAutomaton cc = cc_hat( load_model( "k_step_leak" ) );
    const auto dist = observational_distances( cc, cc.initials() );
    CHECK( dist[ *cc.find( "(7,{1,2,3,4})" ) ] == 0 );
    CHECK( dist[ *cc.find( "(5,{8})" ) ] == 0 );
    CHECK( dist[ *cc.find( "(8,{2})" ) ] == 1 );
    CHECK( dist[ *cc.find( "(8,∅)" ) ] == 2 );

    const auto from_eight = observational_distances( cc, { *cc.find( "(8,∅)" ) } );
    CHECK( from_eight[ *cc.find( "(7,{1,2,3,4})" ) ] == unreachable );

    const auto within = observational_reach_within( cc, 1 );
    CHECK( within[ *cc.find( "(8,{2})" ) ] == 1 );
    CHECK_FALSE( within[ *cc.find( "(8,∅)" ) ] );
}

TEST_CASE( "unobservable moves do not count towards the distance" )
{
    const CcAutomaton cc = cc_full_observer( load_model( "k_step_leak" ) );
    const auto dist = observational_distances( cc, cc.initials() );
    CHECK( dist[ *cc.find( "(6,{0,6})" ) ] == 0 );
    CHECK( dist[ *cc.find( "(7,{1,2,3,4,7})" ) ] == 1 );
    CHECK( dist[ *cc.find( "(2,{1,2,3,4,7})" ) ] == 1 );
}

TEST_CASE( "a secret hidden behind an unobservable move" )
{
    const Nfa g = load_model( "unobservable_secret" );
    for ( std::uint64_t k : { 0, 1, 5, 1000 } )
        CHECK( verify_k_sso( g, k ).opaque );
    CHECK( verify_cso( g ).opaque );
    CHECK( verify_scso( g ).opaque );
    CHECK( verify_siso( g ).opaque );
    const Verdict inf = verify_inf_sso( g );
    check_witness( g, inf );
    CHECK( inf.witness->run.states()[ inf.witness->secret_position ] == "1" );
}

TEST_CASE( "state-based notions of the secret-initial model" )
{
    const Nfa g = load_model( "secret_initial" );
    check_witness( g, verify_scso( g ) );
    check_witness( g, verify_siso( g ) );
    check_witness( g, verify_inf_sso( g ) );
    CHECK( verify_siso( g ).witness->run.start == "1" );
}

TEST_CASE( "automata without secret states are opaque for every notion" )
{
    const Nfa g = without_secrets();
    CHECK( effective_k_bound( g ) == 0 );
    for ( auto n : { Notion::KSso, Notion::Cso, Notion::Scso, Notion::Siso, Notion::InfSso } )
    {
        const Verdict v = verify( g, n, 4 );
        CHECK( v.opaque );
        CHECK( v.notion == n );
        CHECK_FALSE( v.witness );
    }
}

TEST_CASE( "a secret initial state with no nonsecret alternative leaks immediately" )
{
    const Nfa g = NfaBuilder{}.event( "a" ).state( "0", true, true ).state( "1" ).transition( "0", "a", "1" ).build();
    for ( auto n : { Notion::KSso, Notion::Cso, Notion::Scso, Notion::Siso, Notion::InfSso } )
        check_witness( g, verify( g, n, 0 ) );
    CHECK( verify_cso( g ).witness->secret_position == 0 );
}

TEST_CASE( "dispatch agrees with the named verifiers" )
{
    const Nfa g = load_model( "secret_initial" );
    CHECK( verify( g, Notion::Cso ).opaque == verify_cso( g ).opaque );
    CHECK( verify( g, Notion::KSso, 3 ).opaque == verify_k_sso( g, 3 ).opaque );
    CHECK( verify( g, Notion::Scso ).opaque == verify_scso( g ).opaque );
    CHECK( verify( g, Notion::Siso ).opaque == verify_siso( g ).opaque );
    CHECK( verify( g, Notion::InfSso ).opaque == verify_inf_sso( g ).opaque );
}

TEST_CASE( "effective bound saturates" )
{
    NfaBuilder b;
    b.event( "a" );
    b.state( "s", true, true );
    std::string previous = "s";
    for ( int i = 0; i < 70; ++i )
    {
        const std::string name = "n" + std::to_string( i );
        b.state( name ).transition( previous, "a", name );
        previous = name;
    }
    CHECK( effective_k_bound( b.build() ) == unreachable );
}

TEST_CASE( "inaccessible parts are ignored" )
{
    const Nfa g = NfaBuilder{}
                      .event( "a" )
                      .state( "0", true )
                      .state( "1" )
                      .state( "9", false, true )
                      .transition( "0", "a", "1" )
                      .transition( "9", "a", "1" )
                      .build();
    for ( auto n : { Notion::KSso, Notion::Cso, Notion::Scso, Notion::Siso, Notion::InfSso } )
        CHECK( verify( g, n, 2 ).opaque );
}
