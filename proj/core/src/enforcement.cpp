#include "sso/enforcement.hpp"

#include "cc_paths.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace sso
{

namespace
{

std::vector<bool> forward_reach( const CcAutomaton& cc, const std::vector<CcIndex>& sources )
{
    std::vector<bool> seen( cc.num_states(), false );
    std::deque<CcIndex> queue;
    for ( auto s : sources )
    {
        if ( !seen[ s ] )
        {
            seen[ s ] = true;
            queue.push_back( s );
        }
    }
    while ( !queue.empty() )
    {
        const auto s = queue.front();
        queue.pop_front();
        for ( const auto& e : cc.successors( s ) )
        {
            if ( !seen[ e.state ] )
            {
                seen[ e.state ] = true;
                queue.push_back( e.state );
            }
        }
    }
    return seen;
}

detail::TransitionFilter uncontrollable_only( const CcAutomaton& cc )
{
    return [ &cc ]( const CcTransition& t ) { return !cc.controllable( t.event ); };
}

// Observational distances from `sources` along paths that do not pass through
// a state flagged in `blocked` (such states are reached but not left).
std::vector<std::uint64_t> distances_avoiding( const CcAutomaton& cc, const std::vector<CcIndex>& sources,
                                               const std::vector<bool>& blocked )
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
        if ( blocked[ s ] )
            continue;
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

bool any( const std::vector<bool>& flags )
{
    return std::find( flags.begin(), flags.end(), true ) != flags.end();
}

std::size_t controllable_count( const Nfa& nfa )
{
    return static_cast<std::size_t>( std::count_if( nfa.transitions().begin(), nfa.transitions().end(), [ & ]( const Transition& t ) {
        return nfa.alphabet().controllable( t.event );
    } ) );
}

// Accumulates E_c and the current subsystem across rounds.
class Cutter
{
    Nfa _input;
    Nfa _current;
    std::set<TransitionRef> _disabled;
    std::size_t _rounds = 0;
    std::size_t _max_rounds;

public:
    explicit Cutter( const Nfa& input )
            : _input{ input }, _current{ accessible_part( input ) }, _max_rounds{ controllable_count( input ) + 1 }
    {
    }

    [[nodiscard]] const Nfa& current() const noexcept { return _current; }
    [[nodiscard]] std::size_t rounds() const noexcept { return _rounds; }

    void cut( const CcAutomaton& cc, const std::vector<CcTransition>& frontier )
    {
        std::set<TransitionRef> round;
        for ( const auto& t : frontier )
            round.insert( cc.left_ref( t ) );
        cut( round );
    }

    void cut( const std::set<TransitionRef>& round )
    {
        if ( round.empty() || ++_rounds > _max_rounds )
            throw Error( ErrorCode::InternalInvariant, "enforcement made no progress" );
        const std::vector<TransitionRef> refs( round.begin(), round.end() );
        _current = disable_transitions( _current, refs );
        _disabled.insert( round.begin(), round.end() );
    }

    [[nodiscard]] EnforcementOutcome done() const
    {
        std::vector<TransitionRef> refs( _disabled.begin(), _disabled.end() );
        Nfa subsystem = disable_transitions( _input, refs );
        return { Enforced{ std::move( refs ), std::move( subsystem ), _rounds } };
    }
};

EnforcementOutcome enforce_dss( const Nfa& nfa, Notion notion )
{
    Cutter cutter{ nfa };
    for ( ;; )
    {
        const CcAutomaton cc = cc_dss( cutter.current() );
        const auto sources = notion == Notion::Siso ? cc.secret_initials() : cc.initials();
        const auto reach = forward_reach( cc, sources );
        std::vector<bool> bad( cc.num_states(), false );
        for ( CcIndex s = 0; s < cc.num_states(); ++s )
        {
            bad[ s ] = reach[ s ] && cc.empty_right( s )
                       && ( notion != Notion::Scso || cc.left().is_secret( cc.state( s ).left ) );
        }
        if ( !any( bad ) )
            return cutter.done();

        if ( auto path = detail::shortest_path( cc, sources, bad, uncontrollable_only( cc ) ) )
        {
            return { Impossible{ detail::left_run( cc, *path ), detail::trace_of( cc, *path ), std::nullopt,
                                 cutter.rounds() } };
        }
        cutter.cut( cc, last_controllable_frontier( cc, bad, std::nullopt, sources ) );
    }
}

} // namespace

std::vector<CcTransition> last_controllable_frontier( const CcAutomaton& cc, const std::vector<bool>& bad,
                                                      std::optional<std::uint64_t> budget,
                                                      const std::vector<CcIndex>& sources )
{
    // An offending run ends at the first bad state it meets, so nothing is
    // explored beyond bad states.
    const auto from = distances_avoiding( cc, sources, bad );
    const auto to_bad = detail::backward_distances( cc, bad, uncontrollable_only( cc ) );
    std::vector<CcTransition> out;
    for ( const auto& t : cc.transitions() )
    {
        if ( !cc.controllable( t.event ) || bad[ t.source ] || from[ t.source ] == unreachable
             || to_bad[ t.target ] == unreachable )
            continue;
        const std::uint64_t cost = from[ t.source ] + ( cc.observable( t.event ) ? 1 : 0 ) + to_bad[ t.target ];
        if ( !budget || cost <= *budget )
            out.push_back( t );
    }
    return out;
}

std::vector<CcTransition> last_controllable_frontier( const CcAutomaton& cc, const std::vector<bool>& bad,
                                                      std::optional<std::uint64_t> budget )
{
    return last_controllable_frontier( cc, bad, budget, cc.initials() );
}

EnforcementOutcome enforce_k_sso( const Nfa& nfa, std::uint64_t k )
{
    Cutter cutter{ nfa };
    for ( ;; )
    {
        const Nfa& current = cutter.current();
        const CcAutomaton hat = cc_hat( current );
        const std::uint64_t budget = std::min( k, effective_k_bound( current ) );
        const auto from = observational_distances( hat, hat.initials() );
        std::vector<bool> bad( hat.num_states(), false );
        for ( CcIndex s = 0; s < hat.num_states(); ++s )
            bad[ s ] = hat.empty_right( s ) && from[ s ] <= budget;
        if ( !any( bad ) )
            return cutter.done();

        std::set<TransitionRef> round;
        for ( const auto& t : last_controllable_frontier( hat, bad, budget ) )
            round.insert( hat.left_ref( t ) );

        // Initial states of Cc(Ĝ,G̃_obs) that leak through uncontrollable moves
        // alone must be avoided one step earlier, in Cc(G,Obs(G)).
        const auto to_bad = detail::backward_distances( hat, bad, uncontrollable_only( hat ) );
        std::vector<CcIndex> leaking;
        for ( auto i : hat.initials() )
        {
            if ( to_bad[ i ] <= budget )
                leaking.push_back( i );
        }
        if ( !leaking.empty() )
        {
            const CcAutomaton obs = cc_full_observer( current );
            std::vector<bool> marked( obs.num_states(), false );
            std::vector<CcIndex> origin( obs.num_states(), 0 );
            for ( CcIndex s = 0; s < obs.num_states(); ++s )
            {
                const auto& st = obs.state( s );
                std::vector<std::string> rest;
                for ( auto y : obs.right().estimate( *st.right ) )
                {
                    if ( !current.is_secret( y ) )
                        rest.push_back( current.state_name( y ) );
                }
                for ( auto i : leaking )
                {
                    const auto& init = hat.state( i );
                    if ( hat.left().state_name( init.left ) != current.state_name( st.left ) )
                        continue;
                    const auto expected = init.right ? hat.right().source().names_of( hat.right().estimate( *init.right ) )
                                                     : std::vector<std::string>{};
                    if ( expected == rest )
                    {
                        marked[ s ] = true;
                        origin[ s ] = i;
                        break;
                    }
                }
            }
            if ( auto pre = detail::shortest_path( obs, obs.initials(), marked, uncontrollable_only( obs ) ) )
            {
                const CcIndex i = origin[ pre->steps.empty() ? pre->start : pre->steps.back().target ];
                auto leak = detail::shortest_path( hat, { i }, bad, uncontrollable_only( hat ) );
                if ( !leak )
                    throw Error( ErrorCode::InternalInvariant, "leaking initial state lost its leak path" );
                return { Impossible{ detail::concat( detail::left_run( obs, *pre ), detail::left_run( hat, *leak ) ),
                                     detail::trace_of( hat, *leak ), detail::trace_of( obs, *pre ),
                                     cutter.rounds() } };
            }
            for ( const auto& t : last_controllable_frontier( obs, marked, std::nullopt ) )
                round.insert( obs.left_ref( t ) );
        }
        cutter.cut( round );
    }
}

EnforcementOutcome enforce_scso( const Nfa& nfa ) { return enforce_dss( nfa, Notion::Scso ); }
EnforcementOutcome enforce_siso( const Nfa& nfa ) { return enforce_dss( nfa, Notion::Siso ); }
EnforcementOutcome enforce_inf_sso( const Nfa& nfa ) { return enforce_dss( nfa, Notion::InfSso ); }

EnforcementOutcome enforce( const Nfa& nfa, Notion notion, std::uint64_t k )
{
    switch ( notion )
    {
    case Notion::KSso: return enforce_k_sso( nfa, k );
    case Notion::Cso: return enforce_k_sso( nfa, 0 );
    case Notion::Scso: return enforce_scso( nfa );
    case Notion::Siso: return enforce_siso( nfa );
    case Notion::InfSso: return enforce_inf_sso( nfa );
    }
    throw Error( ErrorCode::InternalInvariant, "unknown notion" );
}

} // namespace sso
