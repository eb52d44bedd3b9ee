#include "sso/graph_export.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace sso
{

namespace
{

struct NodeLine
{
    std::string name;
    bool secret = false;
    bool initial = false;
    bool empty = false;
};

struct EdgeLine
{
    std::string source;
    std::string target;
    std::string label;
};

struct NaturalLess
{
    bool operator()( const std::string& a, const std::string& b ) const { return natural_less( a, b ); }
};

std::string quoted( std::string_view text )
{
    std::string out = "\"";
    for ( char c : text )
    {
        if ( c == '"' || c == '\\' )
            out += '\\';
        out += c;
    }
    return out + "\"";
}

void write( std::ostream& out, std::string_view name, std::vector<NodeLine> nodes, std::vector<EdgeLine> edges )
{
    std::sort( nodes.begin(), nodes.end(),
               []( const NodeLine& a, const NodeLine& b ) { return natural_less( a.name, b.name ); } );

    using Key = std::pair<std::string, std::string>;
    auto key_less = []( const Key& a, const Key& b ) {
        if ( a.first != b.first )
            return natural_less( a.first, b.first );
        return natural_less( a.second, b.second );
    };
    std::map<Key, std::vector<std::string>, decltype( key_less )> merged( key_less );
    for ( auto& e : edges )
        merged[ { e.source, e.target } ].push_back( std::move( e.label ) );

    out << "digraph " << quoted( name ) << " {\n";
    if ( !nodes.empty() )
        out << "  rankdir=LR;\n  node [shape=ellipse];\n";
    for ( const auto& n : nodes )
    {
        out << "  " << quoted( n.name ) << " [label=" << quoted( n.name );
        if ( n.secret )
            out << ", color=red";
        if ( n.initial )
            out << ", penwidth=2";
        if ( n.empty )
            out << ", style=dashed";
        out << "];\n";
    }
    for ( auto& [ key, labels ] : merged )
    {
        std::sort( labels.begin(), labels.end(), NaturalLess{} );
        labels.erase( std::unique( labels.begin(), labels.end() ), labels.end() );
        std::string label;
        for ( const auto& l : labels )
            label += ( label.empty() ? "" : ", " ) + l;
        out << "  " << quoted( key.first ) << " -> " << quoted( key.second ) << " [label=" << quoted( label ) << "];\n";
    }
    out << "}\n";
    if ( !out )
        throw Error( ErrorCode::IoError, "failed to write graph" );
}

template <typename T>
std::string render( const T& value, std::string_view name )
{
    std::ostringstream out;
    export_graph( value, out, name );
    return out.str();
}

} // namespace

void export_graph( const Nfa& nfa, std::ostream& out, std::string_view name )
{
    std::vector<NodeLine> nodes;
    for ( StateIndex x = 0; x < nfa.num_states(); ++x )
        nodes.push_back( { nfa.state_name( x ), nfa.is_secret( x ), nfa.is_initial( x ), false } );
    std::vector<EdgeLine> edges;
    for ( const auto& t : nfa.transitions() )
        edges.push_back( { nfa.state_name( t.source ), nfa.state_name( t.target ), nfa.alphabet()[ t.event ].name } );
    write( out, name, std::move( nodes ), std::move( edges ) );
}

void export_graph( const Observer& obs, std::ostream& out, std::string_view name )
{
    const auto& src = obs.source();
    const auto classes = classify_estimates( obs, src.secret_states() );
    std::vector<NodeLine> nodes;
    std::vector<EdgeLine> edges;
    for ( EstimateIndex q = 0; q < obs.size(); ++q )
    {
        nodes.push_back( { obs.name( q ), classes[ q ] == EstimateClass::Secret, obs.is_initial( q ), false } );
        for ( const auto& m : obs.moves( q ) )
            edges.push_back( { obs.name( q ), obs.name( m.target ), src.alphabet()[ m.event ].name } );
    }
    write( out, name, std::move( nodes ), std::move( edges ) );
}

void export_graph( const CcAutomaton& cc, std::ostream& out, std::string_view name )
{
    std::vector<NodeLine> nodes;
    for ( CcIndex s = 0; s < cc.num_states(); ++s )
        nodes.push_back( { cc.state_name( s ), cc.left().is_secret( cc.state( s ).left ), cc.is_initial( s ),
                           cc.empty_right( s ) } );
    std::vector<EdgeLine> edges;
    for ( const auto& t : cc.transitions() )
        edges.push_back( { cc.state_name( t.source ), cc.state_name( t.target ), cc.event_label( t.event ) } );
    write( out, name, std::move( nodes ), std::move( edges ) );
}

std::string to_dot( const Nfa& nfa, std::string_view name ) { return render( nfa, name ); }
std::string to_dot( const Observer& obs, std::string_view name ) { return render( obs, name ); }
std::string to_dot( const CcAutomaton& cc, std::string_view name ) { return render( cc, name ); }

} // namespace sso
