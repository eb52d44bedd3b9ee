#include "sso/composition.hpp"

#include "sso/subautomata.hpp"

#include <algorithm>
#include <deque>

namespace sso
{

std::optional<CcIndex> CcAutomaton::find( const CcState& s ) const
{
    if ( auto it = _index.find( s ); it != _index.end() )
        return it->second;
    return std::nullopt;
}

std::optional<CcIndex> CcAutomaton::find( std::string_view name ) const
{
    for ( CcIndex s = 0; s < _states.size(); ++s )
    {
        if ( state_name( s ) == name )
            return s;
    }
    return std::nullopt;
}

std::string CcAutomaton::state_name( CcIndex s ) const
{
    const auto& st = state( s );
    return "(" + _left.state_name( st.left ) + "," + ( st.right ? _right.name( *st.right ) : std::string{ "∅" } )
           + ")";
}

std::string CcAutomaton::event_label( EventIndex e ) const
{
    const auto& name = _left.alphabet()[ e ].name;
    return "(" + name + "," + ( observable( e ) ? name : std::string{ "ε" } ) + ")";
}

bool CcAutomaton::is_initial( CcIndex s ) const
{
    return std::binary_search( _initials.begin(), _initials.end(), s );
}

std::vector<CcIndex> CcAutomaton::secret_initials() const
{
    std::vector<CcIndex> out;
    for ( auto i : _initials )
    {
        if ( _left.is_secret( _states[ i ].left ) )
            out.push_back( i );
    }
    return out;
}

TransitionRef CcAutomaton::left_ref( const CcTransition& t ) const
{
    return _left.ref( { _states.at( t.source ).left, t.event, _states.at( t.target ).left } );
}

CcAutomaton product( const Nfa& left, const Observer& right, const std::vector<CcState>& initials, bool empty_sink )
{
    const auto& la = left.alphabet();
    const auto& ra = right.source().alphabet();

    // left event index -> right event index, for observable events
    std::vector<std::optional<EventIndex>> to_right( la.size() );
    for ( EventIndex e = 0; e < ra.size(); ++e )
    {
        if ( !ra.observable( e ) )
            continue;
        auto l = la.find( ra[ e ].name );
        if ( !l || !la.observable( *l ) )
            throw Error( ErrorCode::AlphabetMismatch,
                         "observable event '" + ra[ e ].name + "' is not observable in the left automaton" );
        to_right[ *l ] = e;
    }
    for ( EventIndex e = 0; e < la.size(); ++e )
    {
        if ( auto r = ra.find( la[ e ].name ); r && ra.observable( *r ) != la.observable( e ) )
            throw Error( ErrorCode::AlphabetMismatch, "event '" + la[ e ].name + "' differs in observability" );
    }

    CcAutomaton cc;
    cc._left = left;
    cc._right = right;
    std::deque<CcIndex> queue;
    auto intern = [ & ]( const CcState& s ) {
        if ( auto it = cc._index.find( s ); it != cc._index.end() )
            return it->second;
        const auto id = static_cast<CcIndex>( cc._states.size() );
        cc._index.emplace( s, id );
        cc._states.push_back( s );
        queue.push_back( id );
        return id;
    };

    for ( const auto& s : initials )
    {
        if ( s.left >= left.num_states() || ( s.right && *s.right >= right.size() ) )
            throw Error( ErrorCode::InvalidState, "composition initial state out of range" );
        cc._initials.push_back( intern( s ) );
    }
    std::sort( cc._initials.begin(), cc._initials.end() );
    cc._initials.erase( std::unique( cc._initials.begin(), cc._initials.end() ), cc._initials.end() );

    while ( !queue.empty() )
    {
        const auto id = queue.front();
        queue.pop_front();
        const CcState s = cc._states[ id ];
        for ( const auto& e : left.successors( s.left ) )
        {
            std::optional<EstimateIndex> next = s.right;
            if ( s.right && la.observable( e.event ) )
            {
                std::optional<EstimateIndex> moved;
                if ( to_right[ e.event ] )
                    moved = right.successor( *s.right, *to_right[ e.event ] );
                if ( !moved && !empty_sink )
                    continue;
                next = moved;
            }
            const auto target = intern( { e.state, next } );
            cc._transitions.push_back( { id, e.event, target } );
        }
    }

    std::sort( cc._transitions.begin(), cc._transitions.end() );
    cc._transitions.erase( std::unique( cc._transitions.begin(), cc._transitions.end() ), cc._transitions.end() );
    cc._out.resize( cc._states.size() );
    cc._in.resize( cc._states.size() );
    for ( const auto& t : cc._transitions )
    {
        cc._out[ t.source ].push_back( { t.event, t.target } );
        cc._in[ t.target ].push_back( { t.event, t.source } );
    }
    return cc;
}

CcAutomaton cc_hat( const Nfa& nfa )
{
    const Nfa hat = initial_secret_subautomaton( nfa );
    if ( nfa.initial_states().empty() || hat.empty() )
        return product( hat, Observer{}, {}, true );

    const Observer obs = subset_construction( nfa );
    const NonsecretPart tilde = nonsecret_subautomaton( nfa, obs );
    const Observer tilde_obs = multi_initial_observer( tilde.automaton, tilde.seeds );

    std::vector<CcState> initials;
    for ( EstimateIndex q = 0; q < obs.size(); ++q )
    {
        std::optional<EstimateIndex> right;
        StateSet nonsecret;
        bool has_secret = false;
        for ( auto x : obs.estimate( q ) )
        {
            if ( nfa.is_secret( x ) )
                has_secret = true;
            else if ( auto t = tilde.automaton.find_state( nfa.state_name( x ) ) )
                nonsecret.push_back( *t );
        }
        if ( !has_secret )
            continue;
        if ( !nonsecret.empty() )
        {
            std::sort( nonsecret.begin(), nonsecret.end() );
            right = tilde_obs.find( nonsecret );
            if ( !right )
                throw Error( ErrorCode::InternalInvariant,
                             "hybrid estimate " + obs.name( q ) + " has no matching seed" );
        }
        for ( auto x : obs.estimate( q ) )
        {
            if ( nfa.is_secret( x ) )
                initials.push_back( { hat.state_index( nfa.state_name( x ) ), right } );
        }
    }
    return product( hat, tilde_obs, initials, true );
}

CcAutomaton cc_full_observer( const Nfa& nfa )
{
    if ( nfa.initial_states().empty() )
        return product( nfa, Observer{}, {}, false );
    const Observer obs = subset_construction( nfa );
    std::vector<CcState> initials;
    for ( auto x : nfa.initial_states() )
        initials.push_back( { x, obs.initials().front() } );
    return product( nfa, obs, initials, false );
}

CcAutomaton cc_dss( const Nfa& nfa )
{
    const Nfa dss = dss_subautomaton( nfa );
    Observer obs;
    std::optional<EstimateIndex> start;
    if ( !dss.initial_states().empty() )
    {
        obs = subset_construction( dss );
        start = obs.initials().front();
    }
    std::vector<CcState> initials;
    for ( auto x : nfa.initial_states() )
        initials.push_back( { x, start } );
    return product( nfa, obs, initials, true );
}

} // namespace sso
