#include "sso/verification.hpp"

#include "cc_paths.hpp"
#include "sso/observer.hpp"
#include "sso/subautomata.hpp"

#include <algorithm>
#include <deque>

namespace sso
{

std::string PathTrace::to_string() const
{
    std::string out;
    for ( std::size_t i = 0; i < states.size(); ++i )
    {
        if ( i )
            out += " -" + labels[ i - 1 ] + "-> ";
        out += states[ i ];
    }
    return out;
}

std::vector<std::uint64_t> observational_distances( const CcAutomaton& cc, const std::vector<CcIndex>& sources )
{
    std::vector<std::uint64_t> dist( cc.num_states(), unreachable );
    std::deque<CcIndex> queue;
    for ( auto s : sources )
    {
        dist[ s ] = 0;
        queue.push_back( s );
    }
    while ( !queue.empty() )
    {
        const auto s = queue.front();
        queue.pop_front();
        for ( const auto& e : cc.successors( s ) )
        {
            const std::uint64_t w = cc.observable( e.event ) ? 1 : 0;
            if ( dist[ s ] + w < dist[ e.state ] )
            {
                dist[ e.state ] = dist[ s ] + w;
                if ( w == 0 )
                    queue.push_front( e.state );
                else
                    queue.push_back( e.state );
            }
        }
    }
    return dist;
}

std::vector<std::optional<std::uint64_t>> observational_reach_within( const CcAutomaton& cc, std::uint64_t budget )
{
    const auto dist = observational_distances( cc, cc.initials() );
    std::vector<std::optional<std::uint64_t>> out( dist.size() );
    for ( std::size_t s = 0; s < dist.size(); ++s )
    {
        if ( dist[ s ] <= budget )
            out[ s ] = dist[ s ];
    }
    return out;
}

std::uint64_t effective_k_bound( const Nfa& nfa )
{
    const std::uint64_t hat = initial_secret_subautomaton( nfa ).num_states();
    if ( hat == 0 )
        return 0;
    const std::uint64_t nonsecret = nfa.num_states() - nfa.secret_states().size();
    if ( nonsecret >= 64 )
        return unreachable;
    const std::uint64_t power = std::uint64_t{ 1 } << nonsecret;
    if ( hat > unreachable / power )
        return unreachable;
    return hat * power - 1;
}

namespace
{

struct ObserverPath
{
    std::vector<EventIndex> word;
    std::vector<EstimateIndex> estimates; // estimates.size() == word.size() + 1
};

// Shortest observer path from the initial estimate to one satisfying `accept`.
template <typename Accept>
std::optional<ObserverPath> observer_path( const Observer& obs, Accept accept )
{
    std::vector<std::optional<std::pair<EstimateIndex, EventIndex>>> via( obs.size() );
    std::vector<bool> seen( obs.size(), false );
    std::deque<EstimateIndex> queue;
    for ( auto q : obs.initials() )
    {
        seen[ q ] = true;
        queue.push_back( q );
    }
    while ( !queue.empty() )
    {
        const auto q = queue.front();
        queue.pop_front();
        if ( accept( q ) )
        {
            ObserverPath path;
            EstimateIndex at = q;
            path.estimates.push_back( at );
            while ( via[ at ] )
            {
                path.word.push_back( via[ at ]->second );
                at = via[ at ]->first;
                path.estimates.push_back( at );
            }
            std::reverse( path.word.begin(), path.word.end() );
            std::reverse( path.estimates.begin(), path.estimates.end() );
            return path;
        }
        for ( const auto& m : obs.moves( q ) )
        {
            if ( !seen[ m.target ] )
            {
                seen[ m.target ] = true;
                via[ m.target ] = { q, m.event };
                queue.push_back( m.target );
            }
        }
    }
    return std::nullopt;
}

// Fewest-transition run from an initial state that reads `word` through the
// projection and ends in `end`.
Run run_with_projection( const Nfa& nfa, const std::vector<EventIndex>& word, StateIndex end )
{
    const std::size_t width = word.size() + 1;
    const auto key = [ & ]( StateIndex x, std::size_t pos ) { return x * width + pos; };
    std::vector<std::optional<std::size_t>> via( nfa.num_states() * width );
    std::vector<EventIndex> via_event( nfa.num_states() * width );
    std::vector<bool> seen( nfa.num_states() * width, false );
    std::deque<std::size_t> queue;
    for ( auto x : nfa.initial_states() )
    {
        seen[ key( x, 0 ) ] = true;
        queue.push_back( key( x, 0 ) );
    }
    const auto goal = key( end, word.size() );
    while ( !queue.empty() && !seen[ goal ] )
    {
        const auto k = queue.front();
        queue.pop_front();
        const auto x = static_cast<StateIndex>( k / width );
        const auto pos = k % width;
        for ( const auto& e : nfa.successors( x ) )
        {
            std::size_t next_pos = pos;
            if ( nfa.alphabet().observable( e.event ) )
            {
                if ( pos == word.size() || word[ pos ] != e.event )
                    continue;
                ++next_pos;
            }
            const auto nk = key( e.state, next_pos );
            if ( !seen[ nk ] )
            {
                seen[ nk ] = true;
                via[ nk ] = k;
                via_event[ nk ] = e.event;
                queue.push_back( nk );
            }
        }
    }
    if ( !seen[ goal ] )
        throw Error( ErrorCode::InternalInvariant, "no run matches the observer path" );

    Run run;
    std::size_t at = goal;
    while ( via[ at ] )
    {
        run.steps.push_back( { nfa.alphabet()[ via_event[ at ] ].name,
                               nfa.state_name( static_cast<StateIndex>( at / width ) ) } );
        at = *via[ at ];
    }
    run.start = nfa.state_name( static_cast<StateIndex>( at / width ) );
    std::reverse( run.steps.begin(), run.steps.end() );
    return run;
}

PathTrace observer_trace( const Observer& obs, const ObserverPath& path )
{
    PathTrace trace;
    for ( std::size_t i = 0; i < path.estimates.size(); ++i )
    {
        if ( i )
            trace.labels.push_back( obs.source().alphabet()[ path.word[ i - 1 ] ].name );
        trace.states.push_back( obs.name( path.estimates[ i ] ) );
    }
    return trace;
}

Verdict opaque_verdict( Notion notion, std::uint64_t k = 0 )
{
    return Verdict{ true, notion, k, std::nullopt };
}

Verdict check_cso( const Nfa& work, Notion notion, std::uint64_t k )
{
    if ( work.initial_states().empty() )
        return opaque_verdict( notion, k );
    const Observer obs = subset_construction( work );
    const auto path = observer_path( obs, [ & ]( EstimateIndex q ) {
        return classify_estimate( obs.estimate( q ), work.secret_states() ) == EstimateClass::Secret;
    } );
    if ( !path )
        return opaque_verdict( notion, k );
    Witness w;
    w.run = run_with_projection( work, path->word, obs.estimate( path->estimates.back() ).front() );
    w.secret_position = w.run.steps.size();
    w.trace = observer_trace( obs, *path );
    return Verdict{ false, notion, k, std::move( w ) };
}

// States of the form (·,∅), optionally restricted to a secret left component.
std::vector<bool> empty_states( const CcAutomaton& cc, bool secret_left_only )
{
    std::vector<bool> out( cc.num_states(), false );
    for ( CcIndex s = 0; s < cc.num_states(); ++s )
    {
        out[ s ] = cc.empty_right( s ) && ( !secret_left_only || cc.left().is_secret( cc.state( s ).left ) );
    }
    return out;
}

// Prefix of a K-SSO witness: a run of `work` to `secret` whose observation
// leads Obs(G) to an estimate q with q ∩ X_NS equal to `nonsecret` (by name).
Run secret_prefix( const Nfa& work, const Observer& obs, const std::string& secret,
                   const std::vector<std::string>& nonsecret )
{
    const auto x = work.state_index( secret );
    const auto path = observer_path( obs, [ & ]( EstimateIndex q ) {
        const auto& est = obs.estimate( q );
        if ( !std::binary_search( est.begin(), est.end(), x ) )
            return false;
        std::vector<std::string> rest;
        for ( auto y : est )
        {
            if ( !work.is_secret( y ) )
                rest.push_back( work.state_name( y ) );
        }
        return rest == nonsecret;
    } );
    if ( !path )
        throw Error( ErrorCode::InternalInvariant, "no observer estimate produces composition initial state" );
    return run_with_projection( work, path->word, x );
}

Verdict dss_verdict( const Nfa& nfa, Notion notion )
{
    const Nfa work = accessible_part( nfa );
    const CcAutomaton cc = cc_dss( work );
    const auto sources = notion == Notion::Siso ? cc.secret_initials() : cc.initials();
    const auto bad = empty_states( cc, notion == Notion::Scso );
    const auto path = detail::shortest_path( cc, sources, bad );
    if ( !path )
        return opaque_verdict( notion );

    Witness w;
    w.run = detail::left_run( cc, *path );
    w.trace = detail::trace_of( cc, *path );
    switch ( notion )
    {
    case Notion::Scso: w.secret_position = w.run.steps.size(); break;
    case Notion::Siso: w.secret_position = 0; break;
    default:
    {
        const auto states = w.run.states();
        auto it = std::find_if( states.begin(), states.end(),
                                [ & ]( const std::string& s ) { return work.is_secret( work.state_index( s ) ); } );
        w.secret_position = it == states.end() ? 0 : static_cast<std::size_t>( it - states.begin() );
    }
    }
    return Verdict{ false, notion, 0, std::move( w ) };
}

} // namespace

Verdict verify_cso( const Nfa& nfa )
{
    return check_cso( accessible_part( nfa ), Notion::Cso, 0 );
}

Verdict verify_k_sso( const Nfa& nfa, std::uint64_t k )
{
    const Nfa work = accessible_part( nfa );
    if ( auto pre = check_cso( work, Notion::KSso, k ); !pre.opaque )
        return pre;

    const CcAutomaton cc = cc_hat( work );
    const std::uint64_t budget = std::min( k, effective_k_bound( work ) );
    const auto dist = observational_distances( cc, cc.initials() );
    auto bad = empty_states( cc, false );
    for ( CcIndex s = 0; s < cc.num_states(); ++s )
        bad[ s ] = bad[ s ] && dist[ s ] <= budget;
    const auto path = detail::shortest_path( cc, cc.initials(), bad );
    if ( !path )
        return opaque_verdict( Notion::KSso, k );

    const auto& start = cc.state( path->start );
    std::vector<std::string> nonsecret;
    if ( start.right )
        nonsecret = cc.right().source().names_of( cc.right().estimate( *start.right ) );
    const Observer obs = subset_construction( work );
    Run prefix = secret_prefix( work, obs, cc.left().state_name( start.left ), nonsecret );

    Witness w;
    w.secret_position = prefix.steps.size();
    w.run = detail::concat( std::move( prefix ), detail::left_run( cc, *path ) );
    w.trace = detail::trace_of( cc, *path );
    return Verdict{ false, Notion::KSso, k, std::move( w ) };
}

Verdict verify_scso( const Nfa& nfa ) { return dss_verdict( nfa, Notion::Scso ); }
Verdict verify_siso( const Nfa& nfa ) { return dss_verdict( nfa, Notion::Siso ); }
Verdict verify_inf_sso( const Nfa& nfa ) { return dss_verdict( nfa, Notion::InfSso ); }

Verdict verify( const Nfa& nfa, Notion notion, std::uint64_t k )
{
    switch ( notion )
    {
    case Notion::KSso: return verify_k_sso( nfa, k );
    case Notion::Cso: return verify_cso( nfa );
    case Notion::Scso: return verify_scso( nfa );
    case Notion::Siso: return verify_siso( nfa );
    case Notion::InfSso: return verify_inf_sso( nfa );
    }
    throw Error( ErrorCode::InternalInvariant, "unknown notion" );
}

} // namespace sso
