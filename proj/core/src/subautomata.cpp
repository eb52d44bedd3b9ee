#include "sso/subautomata.hpp"

#include <algorithm>
#include <set>

namespace sso
{

namespace
{

std::vector<bool> nonsecret_mask( const Nfa& nfa )
{
    std::vector<bool> keep( nfa.num_states(), true );
    for ( auto s : nfa.secret_states() )
        keep[ s ] = false;
    return keep;
}

StateSet without_secret( const Nfa& nfa, const StateSet& set )
{
    StateSet out;
    for ( auto x : set )
    {
        if ( !nfa.is_secret( x ) )
            out.push_back( x );
    }
    return out;
}

} // namespace

Nfa initial_secret_subautomaton( const Nfa& nfa )
{
    const Nfa reachable = accessible_part( nfa );
    return induced_subautomaton( reachable, std::vector<bool>( reachable.num_states(), true ),
                                 reachable.secret_states() );
}

NonsecretPart nonsecret_subautomaton( const Nfa& nfa, const Observer& obs )
{
    const auto classes = classify_estimates( obs, nfa.secret_states() );
    std::set<StateSet> parts;
    StateSet initial;
    for ( EstimateIndex q = 0; q < obs.size(); ++q )
    {
        if ( classes[ q ] != EstimateClass::Hybrid )
            continue;
        auto part = without_secret( nfa, obs.estimate( q ) );
        initial.insert( initial.end(), part.begin(), part.end() );
        parts.insert( std::move( part ) );
    }
    std::sort( initial.begin(), initial.end() );
    initial.erase( std::unique( initial.begin(), initial.end() ), initial.end() );

    NonsecretPart out;
    out.automaton = induced_subautomaton( nfa, nonsecret_mask( nfa ), initial );
    for ( const auto& part : parts )
    {
        StateSet seed;
        for ( auto x : part )
        {
            if ( auto s = out.automaton.find_state( nfa.state_name( x ) ) )
                seed.push_back( *s );
        }
        if ( seed.empty() )
            continue;
        std::sort( seed.begin(), seed.end() );
        if ( unobservable_reach( out.automaton, seed ) != seed )
            throw Error( ErrorCode::InternalInvariant,
                         "seed " + out.automaton.set_name( seed ) + " is not closed under unobservable reach" );
        out.seeds.push_back( std::move( seed ) );
    }
    return out;
}

Nfa dss_subautomaton( const Nfa& nfa )
{
    StateSet initial = without_secret( nfa, nfa.initial_states() );
    return induced_subautomaton( nfa, nonsecret_mask( nfa ), initial );
}

} // namespace sso
