#include "sso/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>

namespace sso
{

namespace
{

constexpr std::size_t never = std::numeric_limits<std::size_t>::max();

// A run under construction: states[j] is reached after j transitions, and
// seen[j] counts the observable events among those j transitions.
struct RunView
{
    std::vector<StateIndex> states;
    std::vector<EventIndex> events;
    std::vector<std::size_t> seen;
    std::vector<EventIndex> word;
};

// Visits every run from an initial state whose observation has at most
// `bound` events, the one-state runs included.
void for_each_run( const Nfa& nfa, std::size_t bound, const std::function<void( const RunView& )>& visit )
{
    RunView view;
    const auto& alphabet = nfa.alphabet();
    std::function<void()> extend = [ & ]() {
        visit( view );
        const auto x = view.states.back();
        for ( const auto& e : nfa.successors( x ) )
        {
            const bool observable = alphabet.observable( e.event );
            if ( observable && view.word.size() == bound )
                continue;
            view.states.push_back( e.state );
            view.events.push_back( e.event );
            if ( observable )
                view.word.push_back( e.event );
            view.seen.push_back( view.word.size() );
            extend();
            view.seen.pop_back();
            if ( observable )
                view.word.pop_back();
            view.events.pop_back();
            view.states.pop_back();
        }
    };
    for ( auto x0 : nfa.initial_states() )
    {
        view = RunView{ { x0 }, {}, { 0 }, {} };
        extend();
    }
}

bool all_nonsecret( const Nfa& nfa, const RunView& r, std::size_t from = 0 )
{
    return std::none_of( r.states.begin() + static_cast<std::ptrdiff_t>( from ), r.states.end(),
                         [ & ]( StateIndex x ) { return nfa.is_secret( x ); } );
}

// For each observation: does some run starting in X_0^NS stay non-secret?
std::map<std::vector<EventIndex>, bool> nonsecret_words( const Nfa& nfa, std::size_t bound )
{
    std::map<std::vector<EventIndex>, bool> out;
    for_each_run( nfa, bound, [ & ]( const RunView& r ) {
        auto& flag = out[ r.word ];
        flag = flag || all_nonsecret( nfa, r );
    } );
    return out;
}

// Earliest observation count from which the run's remainder is non-secret;
// `never` when it ends in a secret state.
std::size_t clean_suffix_start( const Nfa& nfa, const RunView& r )
{
    for ( std::size_t j = r.states.size(); j-- > 0; )
    {
        if ( nfa.is_secret( r.states[ j ] ) )
            return j + 1 == r.states.size() ? never : r.seen[ j + 1 ];
    }
    return 0;
}

// Smallest observation count at a secret visit whose remaining observation
// has at most k events; `never` when there is none.
std::size_t exposed_secret( const Nfa& nfa, const RunView& r, std::uint64_t k )
{
    const std::size_t total = r.word.size();
    for ( std::size_t j = 0; j < r.states.size(); ++j )
    {
        if ( nfa.is_secret( r.states[ j ] ) && total - r.seen[ j ] <= k )
            return r.seen[ j ];
    }
    return never;
}

std::map<std::vector<EventIndex>, std::size_t> clean_suffix_words( const Nfa& nfa, std::size_t bound )
{
    std::map<std::vector<EventIndex>, std::size_t> out;
    for_each_run( nfa, bound, [ & ]( const RunView& r ) {
        auto [ it, fresh ] = out.try_emplace( r.word, never );
        it->second = std::min( it->second, clean_suffix_start( nfa, r ) );
    } );
    return out;
}

std::map<std::vector<EventIndex>, bool> nonsecret_end_words( const Nfa& nfa, std::size_t bound )
{
    std::map<std::vector<EventIndex>, bool> out;
    for_each_run( nfa, bound, [ & ]( const RunView& r ) {
        auto& flag = out[ r.word ];
        flag = flag || !nfa.is_secret( r.states.back() );
    } );
    return out;
}

bool requires_nonsecret_match( const Nfa& nfa, Notion notion, const RunView& r, std::size_t position )
{
    switch ( notion )
    {
    case Notion::Scso: return position + 1 == r.states.size() && nfa.is_secret( r.states.back() );
    case Notion::Siso: return position == 0 && nfa.is_secret( r.states.front() );
    case Notion::InfSso: return nfa.is_secret( r.states[ position ] );
    default: return false;
    }
}

bool decide( const Nfa& nfa, Notion notion, std::uint64_t k, std::size_t bound )
{
    bool opaque = true;
    switch ( notion )
    {
    case Notion::KSso:
    {
        const auto clean = clean_suffix_words( nfa, bound );
        for_each_run( nfa, bound, [ & ]( const RunView& r ) {
            if ( opaque && exposed_secret( nfa, r, k ) < clean.at( r.word ) )
                opaque = false;
        } );
        return opaque;
    }
    case Notion::Cso:
    {
        const auto ends = nonsecret_end_words( nfa, bound );
        for_each_run( nfa, bound, [ & ]( const RunView& r ) {
            if ( opaque && nfa.is_secret( r.states.back() ) && !ends.at( r.word ) )
                opaque = false;
        } );
        return opaque;
    }
    default:
    {
        const auto clean = nonsecret_words( nfa, bound );
        for_each_run( nfa, bound, [ & ]( const RunView& r ) {
            if ( !opaque || clean.at( r.word ) )
                return;
            for ( std::size_t j = 0; j < r.states.size(); ++j )
            {
                if ( requires_nonsecret_match( nfa, notion, r, j ) )
                {
                    opaque = false;
                    return;
                }
            }
        } );
        return opaque;
    }
    }
}

} // namespace

BoundedRunSet enumerate_runs( const Nfa& nfa, std::size_t cap )
{
    BoundedRunSet out;
    out.cap = cap;
    std::vector<Run> stack;
    std::function<void( Run& )> extend = [ & ]( Run& run ) {
        out.runs.push_back( run );
        if ( run.steps.size() == cap )
            return;
        const auto x = nfa.state_index( run.steps.empty() ? run.start : run.steps.back().target );
        for ( const auto& e : nfa.successors( x ) )
        {
            run.steps.push_back( { nfa.alphabet()[ e.event ].name, nfa.state_name( e.state ) } );
            extend( run );
            run.steps.pop_back();
        }
    };
    for ( auto x0 : nfa.initial_states() )
    {
        Run run{ nfa.state_name( x0 ), {} };
        extend( run );
    }
    return out;
}

bool oracle_sound( const Nfa& nfa )
{
    // Kahn's algorithm on the unobservable transitions.
    std::vector<std::size_t> indegree( nfa.num_states(), 0 );
    for ( const auto& t : nfa.transitions() )
    {
        if ( !nfa.alphabet().observable( t.event ) )
            ++indegree[ t.target ];
    }
    std::vector<StateIndex> ready;
    for ( StateIndex x = 0; x < nfa.num_states(); ++x )
    {
        if ( indegree[ x ] == 0 )
            ready.push_back( x );
    }
    std::size_t removed = 0;
    while ( !ready.empty() )
    {
        const auto x = ready.back();
        ready.pop_back();
        ++removed;
        for ( const auto& e : nfa.successors( x ) )
        {
            if ( !nfa.alphabet().observable( e.event ) && --indegree[ e.state ] == 0 )
                ready.push_back( e.state );
        }
    }
    return removed == nfa.num_states();
}

std::size_t observation_bound( const Nfa& nfa, std::size_t cap )
{
    if ( !oracle_sound( nfa ) )
        throw Error( ErrorCode::OracleUnsound, "automaton has a cycle of unobservable events" );
    const std::size_t block = nfa.num_states() + 1;
    if ( cap < block )
        throw Error( ErrorCode::OracleUnsound, "run cap " + std::to_string( cap ) + " is below " + std::to_string( block ) );
    return cap / block - 1;
}

std::size_t run_cap( const Nfa& nfa, std::size_t bound )
{
    return ( nfa.num_states() + 1 ) * ( bound + 1 );
}

bool oracle_k_sso( const Nfa& nfa, std::uint64_t k, std::size_t cap )
{
    return decide( nfa, Notion::KSso, k, observation_bound( nfa, cap ) );
}

bool oracle_cso( const Nfa& nfa, std::size_t cap ) { return decide( nfa, Notion::Cso, 0, observation_bound( nfa, cap ) ); }
bool oracle_scso( const Nfa& nfa, std::size_t cap ) { return decide( nfa, Notion::Scso, 0, observation_bound( nfa, cap ) ); }
bool oracle_siso( const Nfa& nfa, std::size_t cap ) { return decide( nfa, Notion::Siso, 0, observation_bound( nfa, cap ) ); }
bool oracle_inf_sso( const Nfa& nfa, std::size_t cap ) { return decide( nfa, Notion::InfSso, 0, observation_bound( nfa, cap ) ); }

bool oracle_opaque( const Nfa& nfa, Notion notion, std::uint64_t k, std::size_t cap )
{
    return decide( nfa, notion, k, observation_bound( nfa, cap ) );
}

bool oracle_is_leaking_run( const Nfa& nfa, Notion notion, std::uint64_t k, const Run& run,
                            std::size_t secret_position, std::size_t cap )
{
    const std::size_t bound = observation_bound( nfa, cap );
    if ( !is_run_of( nfa, run ) || !nfa.is_initial( nfa.state_index( run.start ) ) )
        return false;
    if ( secret_position > run.steps.size() )
        return false;

    RunView r;
    r.states.push_back( nfa.state_index( run.start ) );
    r.seen.push_back( 0 );
    for ( const auto& step : run.steps )
    {
        const auto ev = nfa.alphabet().index_of( step.event );
        r.states.push_back( nfa.state_index( step.target ) );
        r.events.push_back( ev );
        if ( nfa.alphabet().observable( ev ) )
            r.word.push_back( ev );
        r.seen.push_back( r.word.size() );
    }
    if ( r.word.size() > bound )
        throw Error( ErrorCode::OracleUnsound, "run observation exceeds the run cap" );
    if ( !nfa.is_secret( r.states[ secret_position ] ) )
        return false;

    switch ( notion )
    {
    case Notion::KSso:
    {
        if ( r.word.size() - r.seen[ secret_position ] > k )
            return false;
        const auto clean = clean_suffix_words( nfa, bound );
        return r.seen[ secret_position ] < clean.at( r.word );
    }
    case Notion::Cso:
        return secret_position == run.steps.size() && !nonsecret_end_words( nfa, bound ).at( r.word );
    default:
        return requires_nonsecret_match( nfa, notion, r, secret_position ) && !nonsecret_words( nfa, bound ).at( r.word );
    }
}

std::optional<std::vector<TransitionRef>> oracle_enforceable( const Nfa& nfa, Notion notion, std::uint64_t k,
                                                              std::size_t cap, std::size_t max_controllable )
{
    const std::size_t bound = observation_bound( nfa, cap );
    const Nfa base = accessible_part( nfa );
    std::vector<TransitionRef> controllable;
    for ( const auto& t : base.transitions() )
    {
        if ( base.alphabet().controllable( t.event ) )
            controllable.push_back( base.ref( t ) );
    }
    const std::size_t n = controllable.size();
    if ( n > max_controllable )
        throw Error( ErrorCode::TooLarge, std::to_string( n ) + " controllable transitions exceed the limit of "
                                              + std::to_string( max_controllable ) );

    std::vector<std::size_t> pick;
    for ( std::size_t size = 0; size <= n; ++size )
    {
        pick.resize( size );
        for ( std::size_t i = 0; i < size; ++i )
            pick[ i ] = i;
        for ( ;; )
        {
            std::vector<TransitionRef> cut;
            for ( auto i : pick )
                cut.push_back( controllable[ i ] );
            if ( decide( disable_transitions( base, cut ), notion, k, bound ) )
                return cut;

            // next combination in lexicographic order
            std::size_t i = size;
            while ( i > 0 && pick[ i - 1 ] == n - size + i - 1 )
                --i;
            if ( i == 0 )
                break;
            ++pick[ i - 1 ];
            for ( std::size_t j = i; j < size; ++j )
                pick[ j ] = pick[ j - 1 ] + 1;
        }
    }
    return std::nullopt;
}

} // namespace sso
