#include "cli.hpp"

#include "sso/sso.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>

namespace sso::cli
{

namespace
{

const std::map<std::string, Notion> notions{
    { "k-sso", Notion::KSso }, { "cso", Notion::Cso },         { "scso", Notion::Scso },
    { "siso", Notion::Siso },  { "inf-sso", Notion::InfSso },
};

const std::vector<std::string> structures{
    "model", "observer", "g-hat", "g-tilde", "g-tilde-obs", "g-dss", "cc-hat", "cc-obs", "cc-dss",
};

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct Options
{
    std::string notion;
    long long k = -1;
    bool k_given = false;
    std::string model;
    std::string out;
    std::string emit_ec;
    std::string structure;
};

std::uint64_t resolve_k( const Options& opt, Notion notion, const Nfa& nfa, std::ostream& err )
{
    if ( notion != Notion::KSso )
        return 0;
    if ( !opt.k_given )
        throw UsageError( "--k is required for --notion k-sso" );
    if ( opt.k < 0 )
        throw UsageError( "--k must be non-negative" );
    const auto k = static_cast<std::uint64_t>( opt.k );
    const auto bound = effective_k_bound( accessible_part( nfa ) );
    if ( k > bound )
        err << "note: K=" << k << " exceeds the effective bound " << bound << "; checking K=" << bound
            << " instead, which yields the same answer\n";
    return k;
}

void print_witness( std::ostream& out, const Witness& w )
{
    out << "leaking run: " << w.run.to_string() << "\n";
    out << "secret state: " << w.run.states().at( w.secret_position ) << " (after " << w.secret_position
        << " transitions)\n";
    out << "path: " << w.trace.to_string() << "\n";
}

void write_text( const std::string& path, const std::string& text )
{
    std::ofstream file( path, std::ios::binary );
    if ( !file )
        throw Error( ErrorCode::IoError, "cannot open '" + path + "' for writing" );
    file << text;
    file.flush();
    if ( !file )
        throw Error( ErrorCode::IoError, "cannot write '" + path + "'" );
}

int do_verify( const Options& opt, std::ostream& out, std::ostream& err )
{
    const Notion notion = notions.at( opt.notion );
    const Nfa nfa = read_model_file( opt.model );
    const auto k = resolve_k( opt, notion, nfa, err );
    const Verdict verdict = verify( nfa, notion, k );
    if ( verdict.opaque )
    {
        out << "OPAQUE\n";
        return exit_ok;
    }
    out << "NOT OPAQUE\n";
    if ( verdict.witness )
        print_witness( out, *verdict.witness );
    return exit_negative;
}

int do_enforce( const Options& opt, std::ostream& out, std::ostream& err )
{
    const Notion notion = notions.at( opt.notion );
    const Nfa nfa = read_model_file( opt.model );
    const auto k = resolve_k( opt, notion, nfa, err );
    const EnforcementOutcome outcome = enforce( nfa, notion, k );
    if ( !outcome.enforced() )
    {
        const auto& no = outcome.impossible();
        out << "IMPOSSIBLE\n";
        out << "uncontrollable leaking run: " << no.run.to_string() << "\n";
        if ( no.predecessor )
            out << "reaching path: " << no.predecessor->to_string() << "\n";
        out << "leaking path: " << no.leak.to_string() << "\n";
        return exit_negative;
    }
    const auto& yes = outcome.solution();
    std::string lines;
    for ( const auto& t : yes.disabled )
        lines += t.to_string() + "\n";
    out << "ENFORCED\n" << lines;
    if ( !opt.out.empty() )
        write_model_file( yes.subsystem, opt.out );
    if ( !opt.emit_ec.empty() )
        write_text( opt.emit_ec, lines );
    return exit_ok;
}

int do_export( const Options& opt, std::ostream& )
{
    const Nfa model = read_model_file( opt.model );
    const Nfa nfa = accessible_part( model );
    const auto& s = opt.structure;
    std::string text;
    if ( s == "model" )
        text = to_dot( model, "model" );
    else if ( s == "observer" )
        text = nfa.initial_states().empty() ? to_dot( Observer{}, s ) : to_dot( subset_construction( nfa ), s );
    else if ( s == "g-hat" )
        text = to_dot( initial_secret_subautomaton( nfa ), s );
    else if ( s == "g-tilde" || s == "g-tilde-obs" )
    {
        NonsecretPart tilde;
        if ( !nfa.initial_states().empty() )
            tilde = nonsecret_subautomaton( nfa, subset_construction( nfa ) );
        text = s == "g-tilde" ? to_dot( tilde.automaton, s )
                              : to_dot( multi_initial_observer( tilde.automaton, tilde.seeds ), s );
    }
    else if ( s == "g-dss" )
        text = to_dot( dss_subautomaton( nfa ), s );
    else if ( s == "cc-hat" )
        text = to_dot( cc_hat( nfa ), s );
    else if ( s == "cc-obs" )
        text = to_dot( cc_full_observer( nfa ), s );
    else
        text = to_dot( cc_dss( nfa ), s );
    write_text( opt.out, text );
    return exit_ok;
}

int do_bound( const Options& opt, std::ostream& out )
{
    out << effective_k_bound( accessible_part( read_model_file( opt.model ) ) ) << "\n";
    return exit_ok;
}

} // namespace

int run_cli( const std::vector<std::string>& args, std::ostream& out, std::ostream& err )
{
    CLI::App app{ "Verify and enforce strong state-based opacity of partially observed automata", "ssoctl" };
    app.require_subcommand( 1 );
    Options opt;

    std::vector<std::string> notion_names;
    for ( const auto& [ name, _ ] : notions )
        notion_names.push_back( name );

    auto add_notion = [ & ]( CLI::App* cmd ) {
        cmd->add_option( "--notion", opt.notion, "Opacity notion" )->required()->check( CLI::IsMember( notion_names ) );
        cmd->add_option( "--k", opt.k, "Step bound K for k-sso" );
        cmd->add_option( "MODEL", opt.model, "Model file (JSON)" )->required();
    };

    auto* verify_cmd = app.add_subcommand( "verify", "Decide an opacity notion" );
    add_notion( verify_cmd );

    auto* enforce_cmd = app.add_subcommand( "enforce", "Disable controllable transitions until a notion holds" );
    add_notion( enforce_cmd );
    enforce_cmd->add_option( "--out", opt.out, "Write the enforced subsystem as a model file" );
    enforce_cmd->add_option( "--emit-ec", opt.emit_ec, "Write the disabled transitions, one per line" );

    auto* export_cmd = app.add_subcommand( "export", "Write a structure as a Graphviz DOT graph" );
    export_cmd->add_option( "--structure", opt.structure, "Structure to export" )
        ->required()
        ->check( CLI::IsMember( structures ) );
    export_cmd->add_option( "MODEL", opt.model, "Model file (JSON)" )->required();
    export_cmd->add_option( "--out", opt.out, "Output file" )->required();

    auto* bound_cmd = app.add_subcommand( "bound", "Print the effective K bound" );
    bound_cmd->add_option( "MODEL", opt.model, "Model file (JSON)" )->required();

    try
    {
        std::vector<std::string> reversed( args.rbegin(), args.rend() );
        app.parse( reversed );
    }
    catch ( const CLI::CallForHelp& )
    {
        out << app.help();
        return exit_ok;
    }
    catch ( const CLI::CallForAllHelp& )
    {
        out << app.help( "", CLI::AppFormatMode::All );
        return exit_ok;
    }
    catch ( const CLI::ParseError& e )
    {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    for ( auto* cmd : { verify_cmd, enforce_cmd } )
        opt.k_given = opt.k_given || cmd->count( "--k" ) > 0;

    try
    {
        if ( verify_cmd->parsed() )
            return do_verify( opt, out, err );
        if ( enforce_cmd->parsed() )
            return do_enforce( opt, out, err );
        if ( export_cmd->parsed() )
            return do_export( opt, out );
        return do_bound( opt, out );
    }
    catch ( const UsageError& e )
    {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch ( const ParseError& e )
    {
        err << "error: " << opt.model << ": " << e.what() << "\n";
        return exit_usage;
    }
    catch ( const Error& e )
    {
        err << "error: " << to_string( e.code() ) << ": " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace sso::cli
