#pragma once

// Partially-observed, partially-controllable nondeterministic automata and the
// elementary operations built on them: natural projection, unobservable reach,
// accessible part and transition disablement.

#include "sso/error.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sso
{

using StateIndex = std::uint32_t;
using EventIndex = std::uint32_t;

/// Sorted, duplicate-free list of state indices of one automaton.
using StateSet = std::vector<StateIndex>;

/// Orders identifiers so that embedded digit runs compare numerically
/// ("2" < "10", "q2" < "q10"); ties fall back to plain string order.
bool natural_less( std::string_view lhs, std::string_view rhs ) noexcept;

struct Event
{
    std::string name;
    bool observable = true;
    bool controllable = true;

    friend bool operator==( const Event&, const Event& ) = default;
};

/// Event set with unique names, kept sorted by name so indices are canonical.
class Alphabet
{
    std::vector<Event> _events;
    std::unordered_map<std::string, EventIndex> _index;

public:
    Alphabet() = default;
    explicit Alphabet( std::vector<Event> events );

    [[nodiscard]] std::size_t size() const noexcept { return _events.size(); }
    [[nodiscard]] bool empty() const noexcept { return _events.empty(); }
    [[nodiscard]] const Event& operator[]( EventIndex i ) const { return _events[ i ]; }
    [[nodiscard]] std::span<const Event> events() const noexcept { return _events; }

    [[nodiscard]] std::optional<EventIndex> find( std::string_view name ) const;
    // Throws InvalidEvent for unknown names.
    [[nodiscard]] EventIndex index_of( std::string_view name ) const;

    [[nodiscard]] bool observable( EventIndex i ) const { return _events[ i ].observable; }
    [[nodiscard]] bool controllable( EventIndex i ) const { return _events[ i ].controllable; }

    friend bool operator==( const Alphabet& lhs, const Alphabet& rhs ) { return lhs._events == rhs._events; }
};

struct Transition
{
    StateIndex source;
    EventIndex event;
    StateIndex target;

    friend auto operator<=>( const Transition&, const Transition& ) = default;
};

/// One arc seen from an endpoint: the event and the state at the other end.
struct Edge
{
    EventIndex event;
    StateIndex state;
};

/// A transition named by identifiers, stable across sub-automata.
struct TransitionRef
{
    std::string source;
    std::string event;
    std::string target;

    [[nodiscard]] std::string to_string() const; // "4 -b-> 5"

    friend bool operator==( const TransitionRef&, const TransitionRef& ) = default;
    friend std::strong_ordering operator<=>( const TransitionRef& lhs, const TransitionRef& rhs );
};

/// Raw material for an automaton, indices refer to `states` and `alphabet`.
struct NfaParts
{
    Alphabet alphabet;
    std::vector<std::string> states;
    std::vector<Transition> transitions;
    std::vector<bool> initial; // per state; may be empty meaning "none"
    std::vector<bool> secret;  // per state; may be empty meaning "none"
};

/// Immutable NFA G = (X, Sigma, delta, X_0) with secret states X_S.
///
/// States are opaque string identifiers stored in natural order; the index of
/// a state is its position in that order. Copies share the underlying data.
class Nfa
{
    struct Data;
    std::shared_ptr<const Data> _data;

public:
    Nfa();
    explicit Nfa( NfaParts parts );

    [[nodiscard]] std::size_t num_states() const noexcept;
    [[nodiscard]] bool empty() const noexcept { return num_states() == 0; }
    [[nodiscard]] const Alphabet& alphabet() const noexcept;

    [[nodiscard]] const std::string& state_name( StateIndex s ) const;
    [[nodiscard]] std::span<const std::string> state_names() const noexcept;
    [[nodiscard]] std::optional<StateIndex> find_state( std::string_view name ) const;
    // Throws InvalidState for unknown names.
    [[nodiscard]] StateIndex state_index( std::string_view name ) const;

    /// Sorted by (source, event, target).
    [[nodiscard]] std::span<const Transition> transitions() const noexcept;
    [[nodiscard]] std::span<const Edge> successors( StateIndex s ) const;
    [[nodiscard]] std::span<const Edge> predecessors( StateIndex s ) const;

    [[nodiscard]] bool is_initial( StateIndex s ) const;
    [[nodiscard]] bool is_secret( StateIndex s ) const;
    [[nodiscard]] const StateSet& initial_states() const noexcept;
    [[nodiscard]] const StateSet& secret_states() const noexcept;

    [[nodiscard]] TransitionRef ref( const Transition& t ) const;
    [[nodiscard]] std::optional<Transition> find_transition( const TransitionRef& t ) const;

    /// Resolves identifiers to a sorted state set; throws InvalidState.
    [[nodiscard]] StateSet states_of( std::span<const std::string> names ) const;
    [[nodiscard]] StateSet states_of( std::initializer_list<std::string_view> names ) const;
    [[nodiscard]] std::vector<std::string> names_of( const StateSet& set ) const;
    /// "{1,2,7}" in natural order; "{}" for the empty set.
    [[nodiscard]] std::string set_name( const StateSet& set ) const;

    friend bool operator==( const Nfa& lhs, const Nfa& rhs );
};

/// Incremental construction by name. Events and states must be declared
/// before transitions reference them; duplicate transitions collapse.
class NfaBuilder
{
    std::vector<Event> _events;
    std::vector<std::string> _states;
    std::vector<bool> _initial;
    std::vector<bool> _secret;
    std::vector<TransitionRef> _transitions;

public:
    NfaBuilder& event( std::string name, bool observable = true, bool controllable = true );
    NfaBuilder& state( std::string name, bool initial = false, bool secret = false );
    NfaBuilder& transition( std::string source, std::string event, std::string target );

    /// Throws InvalidState / InvalidEvent on dangling references and
    /// DuplicateDeclaration when a name is declared twice.
    [[nodiscard]] Nfa build() const;
};

/// Sequence of (event, target) steps starting from `start`.
struct Run
{
    struct Step
    {
        std::string event;
        std::string target;

        friend bool operator==( const Step&, const Step& ) = default;
    };

    std::string start;
    std::vector<Step> steps;

    [[nodiscard]] std::vector<std::string> states() const;
    [[nodiscard]] std::vector<std::string> events() const;
    [[nodiscard]] std::string to_string() const; // "0 -a-> 1 -u-> 2"

    friend bool operator==( const Run&, const Run& ) = default;
};

/// True when every step of `run` is a transition of `nfa`.
bool is_run_of( const Nfa& nfa, const Run& run );

/// Erases unobservable events; throws InvalidEvent for names outside `alphabet`.
std::vector<std::string> natural_projection( std::span<const std::string> word, const Alphabet& alphabet );
std::vector<EventIndex> natural_projection( std::span<const EventIndex> word, const Alphabet& alphabet );

/// Least superset of `from` closed under unobservable transitions.
/// Throws InvalidState when `from` holds an index outside the automaton.
StateSet unobservable_reach( const Nfa& nfa, const StateSet& from );

/// States reachable from the initial states, with everything else dropped.
Nfa accessible_part( const Nfa& nfa );

/// Accessible part after keeping only the states flagged in `keep` and
/// replacing the initial set by `initial` (restricted to kept states).
Nfa induced_subautomaton( const Nfa& nfa, const std::vector<bool>& keep, const StateSet& initial );

/// Accessible part of `nfa` without the transitions in `cut`.
/// Throws UncontrollableCut when `cut` holds an uncontrollable transition and
/// InvalidState when a transition of `cut` is not part of `nfa`.
Nfa disable_transitions( const Nfa& nfa, std::span<const TransitionRef> cut );

} // namespace sso
