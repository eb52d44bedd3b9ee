#pragma once

// Derived systems consumed by the compositions.

#include "sso/nfa.hpp"
#include "sso/observer.hpp"

#include <vector>

namespace sso
{

/// Ĝ: accessible part of `nfa` restarted from its secret states. Secret flags
/// survive on the remaining states.
Nfa initial_secret_subautomaton( const Nfa& nfa );

struct NonsecretPart
{
    Nfa automaton;               // G̃
    std::vector<StateSet> seeds; // {q ∩ X_NS : q hybrid}, indices of `automaton`
};

/// G̃: `nfa` without its secret states, started from the non-secret parts of
/// the hybrid estimates of `obs`, which must be subset_construction(nfa).
/// Throws InternalInvariant if a seed is not closed under unobservable reach
/// in G̃.
NonsecretPart nonsecret_subautomaton( const Nfa& nfa, const Observer& obs );

/// G_dss: `nfa` without its secret states, started from X_0 ∩ X_NS.
Nfa dss_subautomaton( const Nfa& nfa );

} // namespace sso
