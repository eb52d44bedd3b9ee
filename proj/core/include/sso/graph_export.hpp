#pragma once

// Graphviz DOT export. Output is deterministic: nodes and edges are sorted by
// name in natural order, and parallel edges between the same pair of nodes
// share one edge line whose label lists their events.
//
// Node annotations: secret states (and all-secret estimates) are red,
// initial states are drawn bold, and composition states with an empty
// estimate are dashed.

#include "sso/composition.hpp"
#include "sso/nfa.hpp"
#include "sso/observer.hpp"

#include <ostream>
#include <string>
#include <string_view>

namespace sso
{

/// Each overload throws IoError when writing to `out` fails.
void export_graph( const Nfa& nfa, std::ostream& out, std::string_view name = "G" );
void export_graph( const Observer& obs, std::ostream& out, std::string_view name = "Obs" );
void export_graph( const CcAutomaton& cc, std::ostream& out, std::string_view name = "Cc" );

std::string to_dot( const Nfa& nfa, std::string_view name = "G" );
std::string to_dot( const Observer& obs, std::string_view name = "Obs" );
std::string to_dot( const CcAutomaton& cc, std::string_view name = "Cc" );

} // namespace sso
