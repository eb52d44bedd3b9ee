#pragma once

// Concurrent compositions: a concrete run of a left NFA paired with the
// estimate an observer of a right NFA holds for the same observation.

#include "sso/nfa.hpp"
#include "sso/observer.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sso
{

using CcIndex = std::uint32_t;

struct CcState
{
    StateIndex left;
    std::optional<EstimateIndex> right; // nullopt is the Empty marker

    [[nodiscard]] bool empty_right() const noexcept { return !right.has_value(); }

    friend auto operator<=>( const CcState&, const CcState& ) = default;
};

/// Paired event (σ,σ) for observable σ and (σ,ε) otherwise; `event` indexes the
/// left alphabet.
struct CcTransition
{
    CcIndex source;
    EventIndex event;
    CcIndex target;

    friend auto operator<=>( const CcTransition&, const CcTransition& ) = default;
};

class CcAutomaton
{
public:
    struct Edge
    {
        EventIndex event;
        CcIndex state;
    };

private:
    Nfa _left;
    Observer _right;
    std::vector<CcState> _states;
    std::map<CcState, CcIndex> _index;
    std::vector<CcTransition> _transitions; // sorted
    std::vector<std::vector<Edge>> _out;
    std::vector<std::vector<Edge>> _in;
    std::vector<CcIndex> _initials; // sorted

    friend CcAutomaton product( const Nfa& left, const Observer& right, const std::vector<CcState>& initials,
                                bool empty_sink );

public:
    CcAutomaton() = default;

    [[nodiscard]] const Nfa& left() const noexcept { return _left; }
    [[nodiscard]] const Observer& right() const noexcept { return _right; }

    [[nodiscard]] std::size_t num_states() const noexcept { return _states.size(); }
    [[nodiscard]] bool empty() const noexcept { return _states.empty(); }
    [[nodiscard]] const CcState& state( CcIndex s ) const { return _states.at( s ); }
    [[nodiscard]] std::optional<CcIndex> find( const CcState& s ) const;
    /// Looks a state up by its canonical name, e.g. "(8,{2})" or "(8,∅)".
    [[nodiscard]] std::optional<CcIndex> find( std::string_view name ) const;
    [[nodiscard]] bool empty_right( CcIndex s ) const { return state( s ).empty_right(); }

    /// "(5,{2,8})" or "(8,∅)".
    [[nodiscard]] std::string state_name( CcIndex s ) const;
    /// "(b,b)" or "(u,ε)".
    [[nodiscard]] std::string event_label( EventIndex e ) const;

    [[nodiscard]] const std::vector<CcTransition>& transitions() const noexcept { return _transitions; }
    [[nodiscard]] const std::vector<Edge>& successors( CcIndex s ) const { return _out.at( s ); }
    [[nodiscard]] const std::vector<Edge>& predecessors( CcIndex s ) const { return _in.at( s ); }

    [[nodiscard]] const std::vector<CcIndex>& initials() const noexcept { return _initials; }
    [[nodiscard]] bool is_initial( CcIndex s ) const;
    /// Initial states whose left component is secret (X_cc,0^S).
    [[nodiscard]] std::vector<CcIndex> secret_initials() const;

    [[nodiscard]] bool observable( EventIndex e ) const { return _left.alphabet().observable( e ); }
    [[nodiscard]] bool controllable( EventIndex e ) const { return _left.alphabet().controllable( e ); }

    /// The left-automaton transition underlying `t`.
    [[nodiscard]] TransitionRef left_ref( const CcTransition& t ) const;
};

/// Closure of `initials` under the paired moves. An observable left move whose
/// estimate successor is undefined leads to Empty when `empty_sink` is set and
/// is dropped otherwise; Empty absorbs. Throws AlphabetMismatch when the
/// observer's source alphabet differs from `left`'s, and InvalidState when an
/// initial refers outside `left` or `right`.
CcAutomaton product( const Nfa& left, const Observer& right, const std::vector<CcState>& initials,
                     bool empty_sink );

/// Cc(Ĝ, G̃_obs).
CcAutomaton cc_hat( const Nfa& nfa );

/// Cc(G, Obs(G)); empty when `nfa` has no initial state.
CcAutomaton cc_full_observer( const Nfa& nfa );

/// Cc(G, Obs(G_dss)); the left operand is the whole of `nfa`.
CcAutomaton cc_dss( const Nfa& nfa );

} // namespace sso
