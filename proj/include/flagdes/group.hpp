#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "flagdes/linalg.hpp"

namespace flagdes {

/// Explicit element set of a finite matrix group over GF(p), with generator
/// provenance. Elements are listed in deterministic BFS order; elems[0] = I.
/// Immutable once built.
struct Group {
  int p = 0;
  int n = 0;
  std::vector<Mat> elems;
  std::vector<std::pair<std::string, Mat>> gens;
  std::unordered_map<std::string, int> index;

  long long order() const { return (long long)elems.size(); }
  bool contains(const Mat &m) const { return index.count(m.key()) > 0; }
  std::vector<Mat> gen_mats() const {
    std::vector<Mat> g;
    for (auto &kv : gens) g.push_back(kv.second);
    return g;
  }
};

/// Breadth-first product closure. Generators are sorted by matrix key before
/// the BFS, so the element order is a function of the generator set alone.
Group closure(std::vector<std::pair<std::string, Mat>> gens, long long cap = 1000000);
Group closure_mats(const std::vector<Mat> &gens, long long cap = 1000000);
/// Variant that returns an empty group instead of throwing when cap is hit.
bool try_closure(const std::vector<Mat> &gens, long long cap, Group &out);

long long element_order(const Mat &m);

std::vector<long long> orbit_vector(const std::vector<Mat> &gens, const Vec &seed);
std::vector<Subspace> orbit_subspace(const std::vector<Mat> &gens, const Subspace &seed);
/// Orbit of a point set (ids). Each member is a sorted id list; the orbit is
/// sorted lexicographically.
std::vector<std::vector<long long>> orbit_pointset(const std::vector<Mat> &gens, int dim,
                                                   const std::vector<long long> &B);

struct OrbitDecomposition {
  std::vector<std::pair<long long, std::vector<long long>>> orbits; // (rep id, sorted members)
  std::vector<long long> lengths;                                   // sorted ascending
};

OrbitDecomposition orbits_on_nonzero(const Group &G);

struct SubspaceOrbits {
  std::vector<std::vector<Subspace>> orbits; // each sorted; orbits sorted by first key
  std::vector<long long> lengths;            // sorted ascending
};

SubspaceOrbits orbits_on_subspaces(const Group &G, int t, long long cap = 1000000);

Group setwise_stabilizer_points(const Group &G, int dim, const std::vector<long long> &S);
Group setwise_stabilizer_subspaces(const Group &G, const std::vector<Subspace> &S);

/// Word grammar: SEQ := TERM+; TERM := ATOM ['^' ['-'] DIGITS];
/// ATOM := label | '(' SEQ ')'. Labels are single letters; whitespace ignored.
Mat word_eval(const std::string &word, const std::map<char, Mat> &bindings);

} // namespace flagdes
