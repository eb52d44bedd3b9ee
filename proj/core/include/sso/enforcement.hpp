#pragma once

// Enforcement of strong opacity by disabling controllable transitions.

#include "sso/composition.hpp"
#include "sso/nfa.hpp"
#include "sso/verification.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace sso
{

struct Enforced
{
    std::vector<TransitionRef> disabled; // E_c, sorted
    Nfa subsystem;                       // disable_transitions(input, disabled)
    std::size_t rounds = 0;              // disabling rounds performed
};

/// No set of controllable transitions can be disabled to reach opacity.
/// `run` is a leaking-secret run of the input made only of uncontrollable
/// events; `leak` is its path in the composition that exposes it and, for
/// K-step opacity, `predecessor` is the uncontrollable path in Cc(G,Obs(G))
/// that leads to its secret state.
struct Impossible
{
    Run run;
    PathTrace leak;
    std::optional<PathTrace> predecessor;
    std::size_t rounds = 0;
};

struct EnforcementOutcome
{
    std::variant<Enforced, Impossible> result;

    [[nodiscard]] bool enforced() const noexcept { return std::holds_alternative<Enforced>( result ); }
    [[nodiscard]] const Enforced& solution() const { return std::get<Enforced>( result ); }
    [[nodiscard]] const Impossible& impossible() const { return std::get<Impossible>( result ); }
};

/// Controllable composition transitions after which some state flagged in
/// `bad` is reachable through uncontrollable transitions only. With a budget,
/// the cheapest such run from `sources` through the transition must have at
/// most `budget` observable moves; without one, the transition's source must
/// merely be reachable from `sources`.
std::vector<CcTransition> last_controllable_frontier( const CcAutomaton& cc, const std::vector<bool>& bad,
                                                      std::optional<std::uint64_t> budget,
                                                      const std::vector<CcIndex>& sources );

/// As above with the composition's initial states as sources.
std::vector<CcTransition> last_controllable_frontier( const CcAutomaton& cc, const std::vector<bool>& bad,
                                                      std::optional<std::uint64_t> budget );

EnforcementOutcome enforce_k_sso( const Nfa& nfa, std::uint64_t k );
EnforcementOutcome enforce_scso( const Nfa& nfa );
EnforcementOutcome enforce_siso( const Nfa& nfa );
EnforcementOutcome enforce_inf_sso( const Nfa& nfa );

/// Dispatches on `notion`; current-state opacity is enforced as 0-step.
EnforcementOutcome enforce( const Nfa& nfa, Notion notion, std::uint64_t k = 0 );

} // namespace sso
