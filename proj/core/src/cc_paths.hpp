#pragma once

// Path search over compositions shared by verification and enforcement.

#include "sso/composition.hpp"
#include "sso/verification.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace sso::detail
{

struct CcPath
{
    CcIndex start = 0;
    std::vector<CcTransition> steps;
};

using TransitionFilter = std::function<bool( const CcTransition& )>;

/// Shortest path from some source to some state flagged in `target`, ordered
/// by (observable moves, moves) and ties by state index. Only transitions
/// accepted by `allow` are used (all when empty).
std::optional<CcPath> shortest_path( const CcAutomaton& cc, const std::vector<CcIndex>& sources,
                                     const std::vector<bool>& target, const TransitionFilter& allow = {} );

/// Minimal observable cost from each state to a state flagged in `target`
/// over transitions accepted by `allow`; `unreachable` otherwise.
std::vector<std::uint64_t> backward_distances( const CcAutomaton& cc, const std::vector<bool>& target,
                                               const TransitionFilter& allow = {} );

PathTrace trace_of( const CcAutomaton& cc, const CcPath& path );

/// The left-automaton run a composition path projects to.
Run left_run( const CcAutomaton& cc, const CcPath& path );

/// Appends `tail` (which must start where `head` ends) to `head`.
Run concat( Run head, const Run& tail );

} // namespace sso::detail
