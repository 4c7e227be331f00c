#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

using Rng = std::mt19937_64;

// Uniform integer in [0, bound). Uses plain modular reduction so sequences
// are identical across standard library implementations.
int uniform_below(Rng& rng, int bound);

// Independent stream seed for item `index` of a run seeded with `seed`
// (splitmix64 finaliser).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Uniform labelled tree via a random Pruefer sequence (n >= 1).
Graph random_tree(int n, Rng& rng);
// Random tree plus each remaining pair independently with probability
// extra_edge_probability. Always connected.
Graph random_connected(int n, double extra_edge_probability, Rng& rng);
// Random tree plus one extra edge (n >= 3).
Graph random_unicyclic(int n, Rng& rng);

// Seeded libraries: item i depends only on (seed, i) and has an order drawn
// uniformly from [min_n, max_n]. Items are named "<kind>#i".
std::vector<Graph> random_connected_library(int count, int min_n, int max_n, std::uint64_t seed);
std::vector<Graph> random_tree_library(int count, int min_n, int max_n, std::uint64_t seed);
std::vector<Graph> random_unicyclic_library(int count, int min_n, int max_n, std::uint64_t seed);

}  // namespace zf
