#pragma once

// Shared fixtures for the test binaries: named graphs, a seeded RNG, an
// independent dense GF(2) rank oracle, and a subprocess runner for the CLI.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gem/colored_graph.hpp"
#include "gem/surface.hpp"

namespace testsup {

// --- named graphs ---

// melon(4) with a dipole inserted into line (color, black 0)
gem::ColoredGraph pillow(int color);

// rank 3, half 2: pi_0 = pi_1 = id, pi_2 = pi_3 = swap; degree 1
gem::ColoredGraph n4();

// lexicographically first connected rank-4 half-2 graph with a
// positive-degree 4-bubble: pi_0..2 = id, pi_3 = pi_4 = swap
gem::ColoredGraph p_first();

// half 4, pi_0 = id; its non-sphere bubbles all miss color 0, and there are
// at least two of them
gem::ColoredGraph witness4();

// --- randomness (fixed algorithms so seeds reproduce across platforms) ---

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  int below(int n);  // uniform in [0, n), rejection sampled
};

std::vector<int> random_permutation(Rng& rng, int n);
gem::ColoredGraph random_graph(Rng& rng, int rank, int half);
gem::ColoredGraph random_connected_graph(Rng& rng, int rank, int half);

// --- independent GF(2) linear algebra (plain int vectors, no packing) ---

int gf2_rank(std::vector<std::vector<int>> rows);

// mod-2 edge indicator of a directed-edge walk
std::vector<int> edge_vector(const gem::CwSurface& s, const std::vector<int>& walk);
// mod-2 boundary row per face
std::vector<std::vector<int>> face_rows(const gem::CwSurface& s);
// mod-2 vertex boundary row per edge (self-loops give zero rows)
std::vector<std::vector<int>> edge_rows(const gem::CwSurface& s);
// H1 rank computed from the three ranks above
int oracle_h1_rank(const gem::CwSurface& s);
// rank of the curve set modulo face boundaries
int oracle_relative_rank(const gem::CwSurface& s,
                         const std::vector<std::vector<int>>& curve_vectors);

// --- walk sanity ---

bool walk_closed(const gem::CwSurface& s, const std::vector<int>& walk);
// every edge used exactly once forward and once reversed across all faces
bool orientation_coherent(const gem::CwSurface& s);

// --- CLI harness ---

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

// runs the built binary; `env` is a raw VAR=value prefix, `stdin_file`
// redirects standard input when nonempty
RunResult run_cli(const std::vector<std::string>& args, const std::string& env = "",
                  const std::string& stdin_file = "");

std::string data_file(const std::string& name);
std::string golden_file(const std::string& name);
std::string read_file(const std::string& path);

}  // namespace testsup
