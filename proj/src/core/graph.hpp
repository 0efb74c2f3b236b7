#pragma once

#include <string>
#include <vector>

namespace gkmloc {

// Edge of a GKM graph.  The weight is stored as the exponent vector of the
// monomial in a_1..a_m seen from endpoint v; the weight at vp is its inverse.
struct GkmEdge {
  int v = 0, vp = 0;
  std::vector<long> w;    // exponents, length = rank
  std::vector<long> cls;  // curve class, length = picard, >= 0, not all 0
};

struct GkmGraph {
  size_t rank = 0;    // number of torus variables a_i
  size_t picard = 0;  // length of curve-class vectors
  std::vector<std::string> verts;
  std::vector<GkmEdge> edges;

  // flag at a vertex: an incident edge with its weight seen from that vertex
  struct Flag {
    size_t edge;
    int other;
    std::vector<long> w;
  };
  std::vector<Flag> incident(int v) const;
  std::vector<long> weight_at(size_t ei, int v) const;
  int other_end(size_t ei, int v) const;
  // vertex id by name; accepts "e" for the identity permutation of flag
  // manifolds; -1 if absent
  int find_vertex(const std::string& name) const;
};

// Normal-bundle decomposition along an edge: each flag f_i at v is paired
// with a flag f'_i at v' so that w(f'_i, v') = w(f_i, v) * w(e, v')^{a_i};
// the tangent direction (the edge itself) comes last with a_n = 2.
struct FlagPair {
  size_t f_edge;          // edge index of the flag at v
  std::vector<long> w;    // its weight at v
  long a;                 // normal degree
};

struct FlagData {
  std::vector<FlagPair> pairs;  // tangent last
  int vp;                       // far endpoint
};

// throws std::runtime_error when no integer pairing exists
FlagData flag_pairing(const GkmGraph& g, size_t ei, int v);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_gkm(const GkmGraph& g);

GkmGraph build_projective_space(int n);
GkmGraph build_flag_sl(int n);

std::string serialize_graph(const GkmGraph& g);
GkmGraph parse_graph(const std::string& text);  // throws on malformed input

}  // namespace gkmloc
