#pragma once

// Subset construction: state estimates of an NFA under partial observation.

#include "sso/nfa.hpp"

#include <map>
#include <optional>
#include <vector>

namespace sso
{

using EstimateIndex = std::uint32_t;

enum class EstimateClass
{
    Secret,    // estimate ⊆ X_S
    NonSecret, // estimate ∩ X_S = ∅
    Hybrid,
};

const char* to_string( EstimateClass c ) noexcept;

/// Deterministic automaton over nonempty state estimates of `source()`.
///
/// Estimates are numbered in breadth-first discovery order from the initial
/// estimates, exploring events in alphabet order. Undefined moves are absent.
class Observer
{
public:
    struct Move
    {
        EventIndex event;
        EstimateIndex target;
    };

private:
    Nfa _source;
    std::vector<StateSet> _estimates;
    std::map<StateSet, EstimateIndex> _index;
    std::vector<std::vector<Move>> _moves; // per estimate, sorted by event
    std::vector<EstimateIndex> _initials;  // sorted

    friend Observer build_observer( const Nfa& nfa, const std::vector<StateSet>& seeds );

public:
    Observer() = default;

    [[nodiscard]] const Nfa& source() const noexcept { return _source; }
    [[nodiscard]] std::size_t size() const noexcept { return _estimates.size(); }
    [[nodiscard]] bool empty() const noexcept { return _estimates.empty(); }

    [[nodiscard]] const StateSet& estimate( EstimateIndex q ) const { return _estimates.at( q ); }
    [[nodiscard]] const std::vector<StateSet>& estimates() const noexcept { return _estimates; }
    [[nodiscard]] std::optional<EstimateIndex> find( const StateSet& estimate ) const;
    /// "{1,2,7}" using the state identifiers of the source automaton.
    [[nodiscard]] std::string name( EstimateIndex q ) const { return _source.set_name( estimate( q ) ); }

    [[nodiscard]] const std::vector<EstimateIndex>& initials() const noexcept { return _initials; }
    [[nodiscard]] bool is_initial( EstimateIndex q ) const;

    [[nodiscard]] const std::vector<Move>& moves( EstimateIndex q ) const { return _moves.at( q ); }
    [[nodiscard]] std::optional<EstimateIndex> successor( EstimateIndex q, EventIndex event ) const;
    [[nodiscard]] std::size_t num_moves() const noexcept;
};

/// Obs(G): single initial estimate UR(X_0). Throws EmptyInitial when X_0 = ∅.
Observer subset_construction( const Nfa& nfa );

/// Observer explored from every seed. Seeds are taken as given (the caller
/// closes them under unobservable reach); equal seeds collapse, nested ones do
/// not. Throws EmptyEstimate for an empty seed and InvalidState for indices
/// outside `nfa`.
Observer multi_initial_observer( const Nfa& nfa, const std::vector<StateSet>& seeds );

/// Class of each estimate, indexed like `obs.estimates()`. `secret` holds
/// state indices of `obs.source()`.
std::vector<EstimateClass> classify_estimates( const Observer& obs, const StateSet& secret );

EstimateClass classify_estimate( const StateSet& estimate, const StateSet& secret );

} // namespace sso
