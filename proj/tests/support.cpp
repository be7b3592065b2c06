#include "support.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gem/moves.hpp"

namespace testsup {

using namespace gem;

ColoredGraph pillow(int color) { return insert_dipole(generate_melon(4), {color, 0}); }

namespace {
ColoredGraph from_rows(int rank, std::vector<std::vector<int>> rows) {
  return ColoredGraph(rank, std::move(rows));
}
}  // namespace

ColoredGraph n4() {
  return from_rows(3, {{0, 1}, {0, 1}, {1, 0}, {1, 0}});
}

ColoredGraph p_first() {
  return from_rows(4, {{0, 1}, {0, 1}, {0, 1}, {1, 0}, {1, 0}});
}

ColoredGraph witness4() {
  return from_rows(4, {{0, 1, 2, 3},
                       {0, 1, 3, 2},
                       {0, 2, 1, 3},
                       {1, 0, 2, 3},
                       {3, 1, 2, 0}});
}

int Rng::below(int n) {
  std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % static_cast<std::uint64_t>(n);
  std::uint64_t x;
  do {
    x = eng();
  } while (x >= limit);
  return static_cast<int>(x % static_cast<std::uint64_t>(n));
}

std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.below(i + 1)]);
  return p;
}

ColoredGraph random_graph(Rng& rng, int rank, int half) {
  std::vector<std::vector<int>> rows;
  for (int c = 0; c <= rank; ++c) rows.push_back(random_permutation(rng, half));
  return ColoredGraph(rank, std::move(rows));
}

ColoredGraph random_connected_graph(Rng& rng, int rank, int half) {
  for (;;) {
    ColoredGraph g = random_graph(rng, rank, half);
    if (g.is_connected()) return g;
  }
}

int gf2_rank(std::vector<std::vector<int>> rows) {
  int rank = 0;
  std::size_t cols = 0;
  for (const auto& r : rows) cols = std::max(cols, r.size());
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t i = rank; i < rows.size(); ++i)
      if (col < rows[i].size() && rows[i][col] % 2) {
        pivot = i;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == static_cast<std::size_t>(rank)) continue;
      if (col < rows[i].size() && rows[i][col] % 2)
        for (std::size_t j = 0; j < rows[i].size() && j < rows[rank].size(); ++j)
          rows[i][j] = (rows[i][j] + rows[rank][j]) % 2;
    }
    ++rank;
    if (rank == static_cast<int>(rows.size())) break;
  }
  return rank;
}

std::vector<int> edge_vector(const CwSurface& s, const std::vector<int>& walk) {
  std::vector<int> v(s.edge_count(), 0);
  for (int de : walk) v[de_edge(de)] ^= 1;
  return v;
}

std::vector<std::vector<int>> face_rows(const CwSurface& s) {
  std::vector<std::vector<int>> rows;
  for (const auto& f : s.faces) rows.push_back(edge_vector(s, f));
  return rows;
}

std::vector<std::vector<int>> edge_rows(const CwSurface& s) {
  std::vector<std::vector<int>> rows;
  for (const auto& e : s.edges) {
    std::vector<int> r(s.vertex_count, 0);
    r[e[0]] ^= 1;
    r[e[1]] ^= 1;
    rows.push_back(r);
  }
  return rows;
}

int oracle_h1_rank(const CwSurface& s) {
  int cycle_rank = s.edge_count() - gf2_rank(edge_rows(s));
  return cycle_rank - gf2_rank(face_rows(s));
}

int oracle_relative_rank(const CwSurface& s,
                         const std::vector<std::vector<int>>& curve_vectors) {
  std::vector<std::vector<int>> base = face_rows(s);
  int base_rank = gf2_rank(base);
  for (const auto& v : curve_vectors) base.push_back(v);
  return gf2_rank(base) - base_rank;
}

bool walk_closed(const CwSurface& s, const std::vector<int>& walk) {
  if (walk.empty()) return false;
  for (std::size_t i = 0; i < walk.size(); ++i)
    if (s.de_to(walk[i]) != s.de_from(walk[(i + 1) % walk.size()])) return false;
  return true;
}

bool orientation_coherent(const CwSurface& s) {
  std::vector<int> seen(2 * s.edge_count(), 0);
  for (const auto& f : s.faces) {
    if (!walk_closed(s, f)) return false;
    for (int de : f) seen[de] += 1;
  }
  for (int c : seen)
    if (c != 1) return false;
  return true;
}

namespace {
std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char ch : s) {
    if (ch == '\'') out += "'\\''";
    else out += ch;
  }
  return out + "'";
}

int temp_counter = 0;
}  // namespace

RunResult run_cli(const std::vector<std::string>& args, const std::string& env,
                  const std::string& stdin_file) {
  std::string base = "/tmp/gem_cli_" + std::to_string(getpid()) + "_" + std::to_string(temp_counter++);
  std::string cmd = env.empty() ? std::string() : env + " ";
  cmd += shell_quote(GEM_BIN);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  if (!stdin_file.empty()) cmd += " < " + shell_quote(stdin_file);
  cmd += " > " + base + ".out 2> " + base + ".err";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = read_file(base + ".out");
  r.err = read_file(base + ".err");
  std::remove((base + ".out").c_str());
  std::remove((base + ".err").c_str());
  return r;
}

std::string data_file(const std::string& name) { return std::string(GEM_TEST_DATA) + "/" + name; }
std::string golden_file(const std::string& name) { return std::string(GEM_GOLDEN) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace testsup
