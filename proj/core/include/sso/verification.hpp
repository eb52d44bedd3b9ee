#pragma once

// Decision procedures for K-step, current-state, initial-state and
// infinite-step strong opacity.

#include "sso/composition.hpp"
#include "sso/nfa.hpp"
#include "sso/notion.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sso
{

inline constexpr std::uint64_t unreachable = std::numeric_limits<std::uint64_t>::max();

/// A path through a derived structure, by state name and edge label.
struct PathTrace
{
    std::vector<std::string> states;
    std::vector<std::string> labels; // labels[i] leads from states[i] to states[i+1]

    [[nodiscard]] bool empty() const noexcept { return states.empty(); }
    [[nodiscard]] std::string to_string() const; // "(7,{1,2,3,4}) -(b,b)-> (8,{2})"

    friend bool operator==( const PathTrace&, const PathTrace& ) = default;
};

/// A leaking-secret run of the system. `run.states()[secret_position]` is the
/// secret state the run exposes; `trace` is the matching path in the structure
/// the verdict was read from.
struct Witness
{
    Run run;
    std::size_t secret_position = 0;
    PathTrace trace;
};

struct Verdict
{
    bool opaque = true;
    Notion notion = Notion::KSso;
    std::uint64_t k = 0; // requested K, meaningful for Notion::KSso
    std::optional<Witness> witness;
};

/// Minimal observable distance from `sources` to every state, where a move
/// costs 1 iff its event is observable; `unreachable` where there is no path.
std::vector<std::uint64_t> observational_distances( const CcAutomaton& cc, const std::vector<CcIndex>& sources );

/// Distances from the initial states, keeping only those within `budget`.
std::vector<std::optional<std::uint64_t>> observational_reach_within( const CcAutomaton& cc, std::uint64_t budget );

/// |X̂|·2^|X \ X_S| − 1, saturating at the largest representable value; 0 when
/// no secret state exists.
std::uint64_t effective_k_bound( const Nfa& nfa );

Verdict verify_k_sso( const Nfa& nfa, std::uint64_t k );
Verdict verify_cso( const Nfa& nfa );
Verdict verify_scso( const Nfa& nfa );
Verdict verify_siso( const Nfa& nfa );
Verdict verify_inf_sso( const Nfa& nfa );

/// Dispatches on `notion`; `k` is used for Notion::KSso only.
Verdict verify( const Nfa& nfa, Notion notion, std::uint64_t k = 0 );

} // namespace sso
