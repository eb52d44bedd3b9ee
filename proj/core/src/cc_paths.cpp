#include "cc_paths.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <tuple>

namespace sso::detail
{

std::optional<CcPath> shortest_path( const CcAutomaton& cc, const std::vector<CcIndex>& sources,
                                     const std::vector<bool>& target, const TransitionFilter& allow )
{
    using Cost = std::pair<std::uint64_t, std::uint64_t>;
    using Entry = std::tuple<std::uint64_t, std::uint64_t, CcIndex>;
    const std::size_t n = cc.num_states();
    const Cost infinite{ unreachable, unreachable };
    std::vector<Cost> best( n, infinite );
    std::vector<std::optional<CcTransition>> via( n );
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    for ( auto s : sources )
    {
        if ( best[ s ] != Cost{ 0, 0 } )
        {
            best[ s ] = { 0, 0 };
            queue.emplace( 0, 0, s );
        }
    }
    std::optional<CcIndex> found;
    while ( !queue.empty() )
    {
        const auto [ obs, len, s ] = queue.top();
        queue.pop();
        if ( Cost{ obs, len } != best[ s ] )
            continue;
        if ( target[ s ] )
        {
            found = s;
            break;
        }
        for ( const auto& e : cc.successors( s ) )
        {
            const CcTransition t{ s, e.event, e.state };
            if ( allow && !allow( t ) )
                continue;
            const Cost next{ obs + ( cc.observable( e.event ) ? 1 : 0 ), len + 1 };
            if ( next < best[ e.state ] )
            {
                best[ e.state ] = next;
                via[ e.state ] = t;
                queue.emplace( next.first, next.second, e.state );
            }
        }
    }
    if ( !found )
        return std::nullopt;

    CcPath path;
    CcIndex at = *found;
    while ( via[ at ] )
    {
        path.steps.push_back( *via[ at ] );
        at = via[ at ]->source;
    }
    path.start = at;
    std::reverse( path.steps.begin(), path.steps.end() );
    return path;
}

std::vector<std::uint64_t> backward_distances( const CcAutomaton& cc, const std::vector<bool>& target,
                                               const TransitionFilter& allow )
{
    std::vector<std::uint64_t> dist( cc.num_states(), unreachable );
    std::deque<CcIndex> queue;
    for ( CcIndex s = 0; s < cc.num_states(); ++s )
    {
        if ( target[ s ] )
        {
            dist[ s ] = 0;
            queue.push_back( s );
        }
    }
    while ( !queue.empty() )
    {
        const auto s = queue.front();
        queue.pop_front();
        for ( const auto& e : cc.predecessors( s ) )
        {
            if ( allow && !allow( CcTransition{ e.state, e.event, s } ) )
                continue;
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

PathTrace trace_of( const CcAutomaton& cc, const CcPath& path )
{
    PathTrace trace;
    trace.states.push_back( cc.state_name( path.start ) );
    for ( const auto& t : path.steps )
    {
        trace.labels.push_back( cc.event_label( t.event ) );
        trace.states.push_back( cc.state_name( t.target ) );
    }
    return trace;
}

Run left_run( const CcAutomaton& cc, const CcPath& path )
{
    Run run;
    run.start = cc.left().state_name( cc.state( path.start ).left );
    for ( const auto& t : path.steps )
        run.steps.push_back( { cc.left().alphabet()[ t.event ].name, cc.left().state_name( cc.state( t.target ).left ) } );
    return run;
}

Run concat( Run head, const Run& tail )
{
    head.steps.insert( head.steps.end(), tail.steps.begin(), tail.steps.end() );
    return head;
}

} // namespace sso::detail
