#pragma once

// Brute-force deciders evaluating the opacity definitions over explicitly
// enumerated runs. Independent of the observer and composition machinery.
//
// An instance is decidable for a run cap L when it has no cycle made only of
// unobservable events. Every run whose observation has at most
// B = L / (|X|+1) - 1 events then has at most L transitions, and the deciders
// are exact for all observations of length at most B.

#include "sso/nfa.hpp"
#include "sso/notion.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace sso
{

struct BoundedRunSet
{
    std::vector<Run> runs; // every run from an initial state with at most `cap` transitions
    std::size_t cap = 0;
};

BoundedRunSet enumerate_runs( const Nfa& nfa, std::size_t cap );

/// True when no cycle consists of unobservable events only.
bool oracle_sound( const Nfa& nfa );

/// Observation length the deciders cover for run cap `cap`.
/// Throws OracleUnsound when the instance is not decidable or `cap` < |X|+1.
std::size_t observation_bound( const Nfa& nfa, std::size_t cap );

/// Smallest run cap covering observations of length `bound`.
std::size_t run_cap( const Nfa& nfa, std::size_t bound );

bool oracle_k_sso( const Nfa& nfa, std::uint64_t k, std::size_t cap );
bool oracle_cso( const Nfa& nfa, std::size_t cap );
bool oracle_scso( const Nfa& nfa, std::size_t cap );
bool oracle_siso( const Nfa& nfa, std::size_t cap );
bool oracle_inf_sso( const Nfa& nfa, std::size_t cap );
bool oracle_opaque( const Nfa& nfa, Notion notion, std::uint64_t k, std::size_t cap );

/// True when `run`, exposing the secret state at `secret_position`, starts in
/// an initial state and admits no matching run as the notion requires.
bool oracle_is_leaking_run( const Nfa& nfa, Notion notion, std::uint64_t k, const Run& run,
                            std::size_t secret_position, std::size_t cap );

/// Smallest set of controllable transitions (by cardinality, then order) whose
/// disabling makes the notion hold per the deciders; nullopt when none does.
/// The run cap is interpreted against `nfa` and kept for every subsystem.
/// Throws TooLarge beyond `max_controllable` controllable transitions.
std::optional<std::vector<TransitionRef>> oracle_enforceable( const Nfa& nfa, Notion notion, std::uint64_t k,
                                                              std::size_t cap, std::size_t max_controllable = 16 );

} // namespace sso
