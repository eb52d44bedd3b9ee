#include "random_nfa.hpp"
#include "sso/sso.hpp"

#include <benchmark/benchmark.h>

using namespace sso;

namespace
{

// Random automaton with `n` states, about 2n transitions over four events.
Nfa sized( std::size_t n )
{
    sso::testing::RandomNfaOptions opt;
    opt.max_states = n;
    opt.max_transitions = 2 * n;
    opt.secret_probability = 0.2;
    std::mt19937_64 rng( 7 * n + 1 );
    Nfa best;
    for ( int attempt = 0; attempt < 32; ++attempt )
    {
        Nfa g = accessible_part( sso::testing::random_nfa( rng, opt ) );
        if ( g.num_states() > best.num_states() )
            best = std::move( g );
    }
    return best;
}

void set_counters( benchmark::State& state, const Nfa& g )
{
    state.counters[ "states" ] = static_cast<double>( g.num_states() );
    state.counters[ "transitions" ] = static_cast<double>( g.transitions().size() );
}

void observer( benchmark::State& state )
{
    const Nfa g = sized( static_cast<std::size_t>( state.range( 0 ) ) );
    for ( auto _ : state )
        benchmark::DoNotOptimize( subset_construction( g ).size() );
    set_counters( state, g );
}

void composition_hat( benchmark::State& state )
{
    const Nfa g = sized( static_cast<std::size_t>( state.range( 0 ) ) );
    for ( auto _ : state )
        benchmark::DoNotOptimize( cc_hat( g ).num_states() );
    set_counters( state, g );
}

void verify_k_step( benchmark::State& state )
{
    const Nfa g = sized( static_cast<std::size_t>( state.range( 0 ) ) );
    for ( auto _ : state )
        benchmark::DoNotOptimize( verify_k_sso( g, 3 ).opaque );
    set_counters( state, g );
}

void verify_infinite_step( benchmark::State& state )
{
    const Nfa g = sized( static_cast<std::size_t>( state.range( 0 ) ) );
    for ( auto _ : state )
        benchmark::DoNotOptimize( verify_inf_sso( g ).opaque );
    set_counters( state, g );
}

void enforce_k_step( benchmark::State& state )
{
    const Nfa g = sized( static_cast<std::size_t>( state.range( 0 ) ) );
    for ( auto _ : state )
        benchmark::DoNotOptimize( enforce_k_sso( g, 3 ).enforced() );
    set_counters( state, g );
}

void enforce_infinite_step( benchmark::State& state )
{
    const Nfa g = sized( static_cast<std::size_t>( state.range( 0 ) ) );
    for ( auto _ : state )
        benchmark::DoNotOptimize( enforce_inf_sso( g ).enforced() );
    set_counters( state, g );
}

void model_round_trip( benchmark::State& state )
{
    const Nfa g = sized( static_cast<std::size_t>( state.range( 0 ) ) );
    for ( auto _ : state )
        benchmark::DoNotOptimize( parse_model( serialize_model( g ) ).num_states() );
    set_counters( state, g );
}

} // namespace

BENCHMARK( observer )->RangeMultiplier( 2 )->Range( 8, 64 );
BENCHMARK( composition_hat )->RangeMultiplier( 2 )->Range( 8, 64 );
BENCHMARK( verify_k_step )->RangeMultiplier( 2 )->Range( 8, 64 );
BENCHMARK( verify_infinite_step )->RangeMultiplier( 2 )->Range( 8, 64 );
BENCHMARK( enforce_k_step )->RangeMultiplier( 2 )->Range( 8, 32 );
BENCHMARK( enforce_infinite_step )->RangeMultiplier( 2 )->Range( 8, 32 );
BENCHMARK( model_round_trip )->RangeMultiplier( 2 )->Range( 8, 64 );

BENCHMARK_MAIN();
