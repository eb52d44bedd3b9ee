#include "sso/nfa.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace sso
{

const char* to_string( ErrorCode code ) noexcept
{
    switch ( code )
    {
    case ErrorCode::InvalidEvent: return "InvalidEvent";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::UncontrollableCut: return "UncontrollableCut";
    case ErrorCode::EmptyInitial: return "EmptyInitial";
    case ErrorCode::EmptyEstimate: return "EmptyEstimate";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::OracleUnsound: return "OracleUnsound";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownReference: return "UnknownReference";
    case ErrorCode::DuplicateDeclaration: return "DuplicateDeclaration";
    case ErrorCode::EmptyModel: return "EmptyModel";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
    }
    return "Unknown";
}

bool natural_less( std::string_view lhs, std::string_view rhs ) noexcept
{
    auto is_digit = []( char c ) { return std::isdigit( static_cast<unsigned char>( c ) ) != 0; };

    std::size_t i = 0;
    std::size_t j = 0;
    while ( i < lhs.size() && j < rhs.size() )
    {
        if ( is_digit( lhs[ i ] ) && is_digit( rhs[ j ] ) )
        {
            std::size_t ie = i;
            std::size_t je = j;
            while ( ie < lhs.size() && is_digit( lhs[ ie ] ) )
                ++ie;
            while ( je < rhs.size() && is_digit( rhs[ je ] ) )
                ++je;
            // strip leading zeros, then longer run means bigger number
            std::size_t is = i;
            std::size_t js = j;
            while ( is + 1 < ie && lhs[ is ] == '0' )
                ++is;
            while ( js + 1 < je && rhs[ js ] == '0' )
                ++js;
            if ( ie - is != je - js )
                return ie - is < je - js;
            if ( auto c = lhs.substr( is, ie - is ).compare( rhs.substr( js, je - js ) ); c != 0 )
                return c < 0;
            i = ie;
            j = je;
            continue;
        }
        if ( lhs[ i ] != rhs[ j ] )
            return lhs[ i ] < rhs[ j ];
        ++i;
        ++j;
    }
    if ( lhs.size() - i != rhs.size() - j )
        return lhs.size() - i < rhs.size() - j;
    return lhs < rhs;
}

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet( std::vector<Event> events )
        : _events{ std::move( events ) }
{
    std::sort( _events.begin(), _events.end(),
               []( const Event& a, const Event& b ) { return natural_less( a.name, b.name ); } );
    for ( EventIndex i = 0; i < _events.size(); ++i )
    {
        if ( !_index.emplace( _events[ i ].name, i ).second )
            throw Error( ErrorCode::DuplicateDeclaration, "duplicate event '" + _events[ i ].name + "'" );
    }
}

std::optional<EventIndex> Alphabet::find( std::string_view name ) const
{
    if ( auto it = _index.find( std::string{ name } ); it != _index.end() )
        return it->second;
    return std::nullopt;
}

EventIndex Alphabet::index_of( std::string_view name ) const
{
    if ( auto i = find( name ) )
        return *i;
    throw Error( ErrorCode::InvalidEvent, "unknown event '" + std::string{ name } + "'" );
}

// ---------------------------------------------------------------------------
// TransitionRef

std::string TransitionRef::to_string() const
{
    return source + " -" + event + "-> " + target;
}

std::strong_ordering operator<=>( const TransitionRef& lhs, const TransitionRef& rhs )
{
    auto cmp = [] ( const std::string& a, const std::string& b ) {
        if ( natural_less( a, b ) )
            return std::strong_ordering::less;
        if ( natural_less( b, a ) )
            return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    };
    if ( auto c = cmp( lhs.source, rhs.source ); c != 0 )
        return c;
    if ( auto c = cmp( lhs.event, rhs.event ); c != 0 )
        return c;
    return cmp( lhs.target, rhs.target );
}

// ---------------------------------------------------------------------------
// Nfa

struct Nfa::Data
{
    Alphabet alphabet;
    std::vector<std::string> names;
    std::unordered_map<std::string, StateIndex> index;
    std::vector<Transition> transitions;
    std::vector<std::size_t> out_offsets;
    std::vector<Edge> out_edges;
    std::vector<std::size_t> in_offsets;
    std::vector<Edge> in_edges;
    std::vector<bool> initial_flags;
    std::vector<bool> secret_flags;
    StateSet initial;
    StateSet secret;
};

Nfa::Nfa()
        : _data{ std::make_shared<const Data>() }
{
}

Nfa::Nfa( NfaParts parts )
{
    auto data = std::make_shared<Data>();
    const std::size_t n = parts.states.size();
    parts.initial.resize( n, false );
    parts.secret.resize( n, false );

    // canonical state order
    std::vector<StateIndex> order( n );
    std::iota( order.begin(), order.end(), StateIndex{ 0 } );
    std::sort( order.begin(), order.end(), [ & ]( StateIndex a, StateIndex b ) {
        return natural_less( parts.states[ a ], parts.states[ b ] );
    } );
    std::vector<StateIndex> remap( n );
    data->names.reserve( n );
    data->initial_flags.resize( n );
    data->secret_flags.resize( n );
    for ( StateIndex i = 0; i < n; ++i )
    {
        const StateIndex old = order[ i ];
        remap[ old ] = i;
        data->names.push_back( std::move( parts.states[ old ] ) );
        if ( !data->index.emplace( data->names.back(), i ).second )
            throw Error( ErrorCode::DuplicateDeclaration, "duplicate state '" + data->names.back() + "'" );
        data->initial_flags[ i ] = parts.initial[ old ];
        data->secret_flags[ i ] = parts.secret[ old ];
        if ( parts.initial[ old ] )
            data->initial.push_back( i );
        if ( parts.secret[ old ] )
            data->secret.push_back( i );
    }
    std::sort( data->initial.begin(), data->initial.end() );
    std::sort( data->secret.begin(), data->secret.end() );

    data->alphabet = std::move( parts.alphabet );
    data->transitions.reserve( parts.transitions.size() );
    for ( const auto& t : parts.transitions )
    {
        if ( t.source >= n || t.target >= n )
            throw Error( ErrorCode::InvalidState, "transition endpoint out of range" );
        if ( t.event >= data->alphabet.size() )
            throw Error( ErrorCode::InvalidEvent, "transition event out of range" );
        data->transitions.push_back( { remap[ t.source ], t.event, remap[ t.target ] } );
    }
    std::sort( data->transitions.begin(), data->transitions.end() );
    data->transitions.erase( std::unique( data->transitions.begin(), data->transitions.end() ),
                             data->transitions.end() );

    // CSR adjacency in both directions
    data->out_offsets.assign( n + 1, 0 );
    data->in_offsets.assign( n + 1, 0 );
    for ( const auto& t : data->transitions )
    {
        ++data->out_offsets[ t.source + 1 ];
        ++data->in_offsets[ t.target + 1 ];
    }
    std::partial_sum( data->out_offsets.begin(), data->out_offsets.end(), data->out_offsets.begin() );
    std::partial_sum( data->in_offsets.begin(), data->in_offsets.end(), data->in_offsets.begin() );
    data->out_edges.resize( data->transitions.size() );
    data->in_edges.resize( data->transitions.size() );
    {
        auto out_fill = data->out_offsets;
        auto in_fill = data->in_offsets;
        for ( const auto& t : data->transitions )
        {
            data->out_edges[ out_fill[ t.source ]++ ] = { t.event, t.target };
            data->in_edges[ in_fill[ t.target ]++ ] = { t.event, t.source };
        }
    }
    _data = std::move( data );
}

std::size_t Nfa::num_states() const noexcept { return _data->names.size(); }
const Alphabet& Nfa::alphabet() const noexcept { return _data->alphabet; }
const std::string& Nfa::state_name( StateIndex s ) const { return _data->names.at( s ); }
std::span<const std::string> Nfa::state_names() const noexcept { return _data->names; }

std::optional<StateIndex> Nfa::find_state( std::string_view name ) const
{
    if ( auto it = _data->index.find( std::string{ name } ); it != _data->index.end() )
        return it->second;
    return std::nullopt;
}

StateIndex Nfa::state_index( std::string_view name ) const
{
    if ( auto s = find_state( name ) )
        return *s;
    throw Error( ErrorCode::InvalidState, "unknown state '" + std::string{ name } + "'" );
}

std::span<const Transition> Nfa::transitions() const noexcept { return _data->transitions; }

std::span<const Edge> Nfa::successors( StateIndex s ) const
{
    const auto& d = *_data;
    return std::span<const Edge>{ d.out_edges }.subspan( d.out_offsets.at( s ), d.out_offsets[ s + 1 ] - d.out_offsets[ s ] );
}

std::span<const Edge> Nfa::predecessors( StateIndex s ) const
{
    const auto& d = *_data;
    return std::span<const Edge>{ d.in_edges }.subspan( d.in_offsets.at( s ), d.in_offsets[ s + 1 ] - d.in_offsets[ s ] );
}

bool Nfa::is_initial( StateIndex s ) const { return _data->initial_flags.at( s ); }
bool Nfa::is_secret( StateIndex s ) const { return _data->secret_flags.at( s ); }
const StateSet& Nfa::initial_states() const noexcept { return _data->initial; }
const StateSet& Nfa::secret_states() const noexcept { return _data->secret; }

TransitionRef Nfa::ref( const Transition& t ) const
{
    return { state_name( t.source ), alphabet()[ t.event ].name, state_name( t.target ) };
}

std::optional<Transition> Nfa::find_transition( const TransitionRef& t ) const
{
    auto src = find_state( t.source );
    auto dst = find_state( t.target );
    auto ev = alphabet().find( t.event );
    if ( !src || !dst || !ev )
        return std::nullopt;
    const Transition candidate{ *src, *ev, *dst };
    if ( std::binary_search( _data->transitions.begin(), _data->transitions.end(), candidate ) )
        return candidate;
    return std::nullopt;
}

StateSet Nfa::states_of( std::span<const std::string> names ) const
{
    StateSet out;
    out.reserve( names.size() );
    for ( const auto& n : names )
        out.push_back( state_index( n ) );
    std::sort( out.begin(), out.end() );
    out.erase( std::unique( out.begin(), out.end() ), out.end() );
    return out;
}

StateSet Nfa::states_of( std::initializer_list<std::string_view> names ) const
{
    std::vector<std::string> owned( names.begin(), names.end() );
    return states_of( std::span<const std::string>{ owned } );
}

std::vector<std::string> Nfa::names_of( const StateSet& set ) const
{
    std::vector<std::string> out;
    out.reserve( set.size() );
    for ( auto s : set )
        out.push_back( state_name( s ) );
    return out;
}

std::string Nfa::set_name( const StateSet& set ) const
{
    std::string out = "{";
    for ( std::size_t i = 0; i < set.size(); ++i )
    {
        if ( i )
            out += ',';
        out += state_name( set[ i ] );
    }
    return out + "}";
}

bool operator==( const Nfa& lhs, const Nfa& rhs )
{
    if ( lhs._data == rhs._data )
        return true;
    const auto& a = *lhs._data;
    const auto& b = *rhs._data;
    return a.alphabet == b.alphabet && a.names == b.names && a.transitions == b.transitions
           && a.initial == b.initial && a.secret == b.secret;
}

// ---------------------------------------------------------------------------
// NfaBuilder

NfaBuilder& NfaBuilder::event( std::string name, bool observable, bool controllable )
{
    _events.push_back( { std::move( name ), observable, controllable } );
    return *this;
}

NfaBuilder& NfaBuilder::state( std::string name, bool initial, bool secret )
{
    _states.push_back( std::move( name ) );
    _initial.push_back( initial );
    _secret.push_back( secret );
    return *this;
}

NfaBuilder& NfaBuilder::transition( std::string source, std::string event, std::string target )
{
    _transitions.push_back( { std::move( source ), std::move( event ), std::move( target ) } );
    return *this;
}

Nfa NfaBuilder::build() const
{
    NfaParts parts;
    parts.alphabet = Alphabet{ _events };
    parts.states = _states;
    parts.initial = _initial;
    parts.secret = _secret;

    std::unordered_map<std::string, StateIndex> index;
    for ( StateIndex i = 0; i < _states.size(); ++i )
    {
        if ( !index.emplace( _states[ i ], i ).second )
            throw Error( ErrorCode::DuplicateDeclaration, "duplicate state '" + _states[ i ] + "'" );
    }
    auto lookup = [ & ]( const std::string& name ) {
        if ( auto it = index.find( name ); it != index.end() )
            return it->second;
        throw Error( ErrorCode::InvalidState, "unknown state '" + name + "'" );
    };
    for ( const auto& t : _transitions )
        parts.transitions.push_back( { lookup( t.source ), parts.alphabet.index_of( t.event ), lookup( t.target ) } );
    return Nfa{ std::move( parts ) };
}

// ---------------------------------------------------------------------------
// Run

std::vector<std::string> Run::states() const
{
    std::vector<std::string> out{ start };
    for ( const auto& s : steps )
        out.push_back( s.target );
    return out;
}

std::vector<std::string> Run::events() const
{
    std::vector<std::string> out;
    for ( const auto& s : steps )
        out.push_back( s.event );
    return out;
}

std::string Run::to_string() const
{
    std::string out = start;
    for ( const auto& s : steps )
        out += " -" + s.event + "-> " + s.target;
    return out;
}

bool is_run_of( const Nfa& nfa, const Run& run )
{
    if ( !nfa.find_state( run.start ) )
        return false;
    std::string from = run.start;
    for ( const auto& step : run.steps )
    {
        if ( !nfa.find_transition( { from, step.event, step.target } ) )
            return false;
        from = step.target;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Operations

std::vector<std::string> natural_projection( std::span<const std::string> word, const Alphabet& alphabet )
{
    std::vector<std::string> out;
    for ( const auto& e : word )
    {
        if ( alphabet.observable( alphabet.index_of( e ) ) )
            out.push_back( e );
    }
    return out;
}

std::vector<EventIndex> natural_projection( std::span<const EventIndex> word, const Alphabet& alphabet )
{
    std::vector<EventIndex> out;
    for ( auto e : word )
    {
        if ( e >= alphabet.size() )
            throw Error( ErrorCode::InvalidEvent, "event index out of range" );
        if ( alphabet.observable( e ) )
            out.push_back( e );
    }
    return out;
}

StateSet unobservable_reach( const Nfa& nfa, const StateSet& from )
{
    const auto& alphabet = nfa.alphabet();
    std::vector<bool> seen( nfa.num_states(), false );
    std::vector<StateIndex> stack;
    for ( auto s : from )
    {
        if ( s >= nfa.num_states() )
            throw Error( ErrorCode::InvalidState, "state index out of range" );
        if ( !seen[ s ] )
        {
            seen[ s ] = true;
            stack.push_back( s );
        }
    }
    while ( !stack.empty() )
    {
        const auto s = stack.back();
        stack.pop_back();
        for ( const auto& e : nfa.successors( s ) )
        {
            if ( !alphabet.observable( e.event ) && !seen[ e.state ] )
            {
                seen[ e.state ] = true;
                stack.push_back( e.state );
            }
        }
    }
    StateSet out;
    for ( StateIndex s = 0; s < seen.size(); ++s )
    {
        if ( seen[ s ] )
            out.push_back( s );
    }
    return out;
}

namespace
{

// Sub-automaton over the states marked in `keep` and the transitions accepted
// by `keep_transition`, restricted to what is reachable from `initial`.
template <typename KeepTransition>
Nfa restricted_accessible( const Nfa& nfa, const std::vector<bool>& keep, const StateSet& initial,
                           KeepTransition keep_transition )
{
    const std::size_t n = nfa.num_states();
    std::vector<bool> reached( n, false );
    std::vector<StateIndex> stack;
    for ( auto s : initial )
    {
        if ( s < n && keep[ s ] && !reached[ s ] )
        {
            reached[ s ] = true;
            stack.push_back( s );
        }
    }
    while ( !stack.empty() )
    {
        const auto s = stack.back();
        stack.pop_back();
        for ( const auto& e : nfa.successors( s ) )
        {
            if ( keep[ e.state ] && !reached[ e.state ] && keep_transition( Transition{ s, e.event, e.state } ) )
            {
                reached[ e.state ] = true;
                stack.push_back( e.state );
            }
        }
    }

    NfaParts parts;
    parts.alphabet = nfa.alphabet();
    std::vector<StateIndex> remap( n, 0 );
    std::vector<bool> is_init( n, false );
    for ( auto s : initial )
    {
        if ( s < n )
            is_init[ s ] = true;
    }
    for ( StateIndex s = 0; s < n; ++s )
    {
        if ( !reached[ s ] )
            continue;
        remap[ s ] = static_cast<StateIndex>( parts.states.size() );
        parts.states.push_back( nfa.state_name( s ) );
        parts.initial.push_back( is_init[ s ] );
        parts.secret.push_back( nfa.is_secret( s ) );
    }
    for ( const auto& t : nfa.transitions() )
    {
        if ( reached[ t.source ] && reached[ t.target ] && keep_transition( t ) )
            parts.transitions.push_back( { remap[ t.source ], t.event, remap[ t.target ] } );
    }
    return Nfa{ std::move( parts ) };
}

} // namespace

Nfa accessible_part( const Nfa& nfa )
{
    const std::vector<bool> keep( nfa.num_states(), true );
    return restricted_accessible( nfa, keep, nfa.initial_states(), []( const Transition& ) { return true; } );
}

Nfa induced_subautomaton( const Nfa& nfa, const std::vector<bool>& keep, const StateSet& initial )
{
    if ( keep.size() != nfa.num_states() )
        throw Error( ErrorCode::InvalidState, "state mask size does not match the automaton" );
    return restricted_accessible( nfa, keep, initial, []( const Transition& ) { return true; } );
}

Nfa disable_transitions( const Nfa& nfa, std::span<const TransitionRef> cut )
{
    std::vector<Transition> removed;
    removed.reserve( cut.size() );
    for ( const auto& ref : cut )
    {
        auto t = nfa.find_transition( ref );
        if ( !t )
            throw Error( ErrorCode::InvalidState, "transition " + ref.to_string() + " is not part of the automaton" );
        if ( !nfa.alphabet().controllable( t->event ) )
            throw Error( ErrorCode::UncontrollableCut, "transition " + ref.to_string() + " is uncontrollable" );
        removed.push_back( *t );
    }
    std::sort( removed.begin(), removed.end() );
    const std::vector<bool> keep( nfa.num_states(), true );
    return restricted_accessible( nfa, keep, nfa.initial_states(), [ & ]( const Transition& t ) {
        return !std::binary_search( removed.begin(), removed.end(), t );
    } );
}

} // namespace sso
