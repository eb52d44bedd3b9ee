#include "sso/observer.hpp"

#include <algorithm>
#include <deque>

namespace sso
{

const char* to_string( EstimateClass c ) noexcept
{
    switch ( c )
    {
    case EstimateClass::Secret: return "Secret";
    case EstimateClass::NonSecret: return "NonSecret";
    case EstimateClass::Hybrid: return "Hybrid";
    }
    return "Unknown";
}

std::optional<EstimateIndex> Observer::find( const StateSet& estimate ) const
{
    if ( auto it = _index.find( estimate ); it != _index.end() )
        return it->second;
    return std::nullopt;
}

bool Observer::is_initial( EstimateIndex q ) const
{
    return std::binary_search( _initials.begin(), _initials.end(), q );
}

std::optional<EstimateIndex> Observer::successor( EstimateIndex q, EventIndex event ) const
{
    const auto& m = moves( q );
    auto it = std::lower_bound( m.begin(), m.end(), event,
                                []( const Move& mv, EventIndex e ) { return mv.event < e; } );
    if ( it != m.end() && it->event == event )
        return it->target;
    return std::nullopt;
}

std::size_t Observer::num_moves() const noexcept
{
    std::size_t n = 0;
    for ( const auto& m : _moves )
        n += m.size();
    return n;
}

Observer build_observer( const Nfa& nfa, const std::vector<StateSet>& seeds )
{
    Observer obs;
    obs._source = nfa;
    const auto& alphabet = nfa.alphabet();
    const std::size_t n = nfa.num_states();

    std::deque<EstimateIndex> queue;
    auto intern = [ & ]( StateSet set ) {
        if ( auto it = obs._index.find( set ); it != obs._index.end() )
            return it->second;
        const auto id = static_cast<EstimateIndex>( obs._estimates.size() );
        obs._index.emplace( set, id );
        obs._estimates.push_back( std::move( set ) );
        obs._moves.emplace_back();
        queue.push_back( id );
        return id;
    };

    for ( const auto& seed : seeds )
    {
        if ( seed.empty() )
            throw Error( ErrorCode::EmptyEstimate, "observer seed is empty" );
        StateSet s = seed;
        std::sort( s.begin(), s.end() );
        s.erase( std::unique( s.begin(), s.end() ), s.end() );
        if ( s.back() >= n )
            throw Error( ErrorCode::InvalidState, "observer seed refers to an unknown state" );
        obs._initials.push_back( intern( std::move( s ) ) );
    }
    std::sort( obs._initials.begin(), obs._initials.end() );
    obs._initials.erase( std::unique( obs._initials.begin(), obs._initials.end() ), obs._initials.end() );

    std::vector<StateSet> step( alphabet.size() );
    while ( !queue.empty() )
    {
        const auto q = queue.front();
        queue.pop_front();
        for ( auto& s : step )
            s.clear();
        for ( auto x : obs._estimates[ q ] )
        {
            for ( const auto& e : nfa.successors( x ) )
            {
                if ( alphabet.observable( e.event ) )
                    step[ e.event ].push_back( e.state );
            }
        }
        for ( EventIndex ev = 0; ev < alphabet.size(); ++ev )
        {
            if ( step[ ev ].empty() )
                continue;
            std::sort( step[ ev ].begin(), step[ ev ].end() );
            step[ ev ].erase( std::unique( step[ ev ].begin(), step[ ev ].end() ), step[ ev ].end() );
            const auto target = intern( unobservable_reach( nfa, step[ ev ] ) );
            obs._moves[ q ].push_back( { ev, target } );
        }
    }
    return obs;
}

Observer subset_construction( const Nfa& nfa )
{
    if ( nfa.initial_states().empty() )
        throw Error( ErrorCode::EmptyInitial, "automaton has no initial state" );
    return build_observer( nfa, { unobservable_reach( nfa, nfa.initial_states() ) } );
}

Observer multi_initial_observer( const Nfa& nfa, const std::vector<StateSet>& seeds )
{
    return build_observer( nfa, seeds );
}

EstimateClass classify_estimate( const StateSet& estimate, const StateSet& secret )
{
    std::size_t inside = 0;
    for ( auto x : estimate )
    {
        if ( std::binary_search( secret.begin(), secret.end(), x ) )
            ++inside;
    }
    if ( inside == estimate.size() )
        return EstimateClass::Secret;
    if ( inside == 0 )
        return EstimateClass::NonSecret;
    return EstimateClass::Hybrid;
}

std::vector<EstimateClass> classify_estimates( const Observer& obs, const StateSet& secret )
{
    StateSet sorted = secret;
    std::sort( sorted.begin(), sorted.end() );
    std::vector<EstimateClass> out;
    out.reserve( obs.size() );
    for ( const auto& q : obs.estimates() )
        out.push_back( classify_estimate( q, sorted ) );
    return out;
}

} // namespace sso
