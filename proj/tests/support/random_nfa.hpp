#pragma once

// Random small automata for property tests. Unobservable transitions only go
// from a lower to a higher state index, so no cycle is purely unobservable and
// the brute-force oracle stays exact.

#include "sso/nfa.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace sso::testing
{

struct RandomNfaOptions
{
    std::size_t max_states = 6;
    std::size_t max_events = 4;
    std::size_t max_transitions = 10;
    double observable_probability = 0.7;
    double controllable_probability = 0.6;
    double secret_probability = 0.3;
};

inline Nfa random_nfa( std::mt19937_64& rng, const RandomNfaOptions& opt = {} )
{
    auto pick = [ & ]( std::size_t lo, std::size_t hi ) {
        return std::uniform_int_distribution<std::size_t>( lo, hi )( rng );
    };
    auto coin = [ & ]( double p ) { return std::bernoulli_distribution( p )( rng ); };

    const std::size_t n = pick( 2, opt.max_states );
    const std::size_t m = pick( 1, opt.max_events );
    const std::string names = "abcdefgh";

    NfaBuilder b;
    std::vector<bool> observable( m );
    for ( std::size_t e = 0; e < m; ++e )
    {
        observable[ e ] = e == 0 || coin( opt.observable_probability );
        b.event( std::string( 1, names[ e ] ), observable[ e ], coin( opt.controllable_probability ) );
    }
    const std::size_t initial = pick( 0, n - 1 );
    for ( std::size_t x = 0; x < n; ++x )
        b.state( std::to_string( x ), x == initial || coin( 0.15 ), coin( opt.secret_probability ) );

    const std::size_t count = pick( n - 1, opt.max_transitions );
    for ( std::size_t i = 0; i < count; ++i )
    {
        const std::size_t e = pick( 0, m - 1 );
        std::size_t from = pick( 0, n - 1 );
        std::size_t to = pick( 0, n - 1 );
        if ( !observable[ e ] )
        {
            if ( from == to )
                continue;
            if ( from > to )
                std::swap( from, to );
        }
        b.transition( std::to_string( from ), std::string( 1, names[ e ] ), std::to_string( to ) );
    }
    return b.build();
}

} // namespace sso::testing
