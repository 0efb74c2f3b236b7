#pragma once

#include <string>
#include <vector>

#include "graph.hpp"

namespace gkmloc {

// Rooted decorated tree.  The root carries the marked point and is labeled by
// a GKM vertex; each child link is labeled by a GKM edge at the current
// vertex and a covering degree.  sector = -1 for cohomological trees; after
// promotion each edge also carries a sector in {0..deg-1}.  Children are kept
// sorted, so the structure itself is the canonical form.
struct TreeNode {
  int v = 0;
  struct Child {
    size_t edge = 0;
    long deg = 1;
    long sector = -1;
    // exactly one element; vector provides the indirection the recursive
    // value type needs
    std::vector<TreeNode> sub_;
    Child() : sub_(1) {}
    TreeNode& sub() { return sub_[0]; }
    const TreeNode& sub() const { return sub_[0]; }
    bool operator<(const Child& o) const;
    bool operator==(const Child& o) const;
  };
  std::vector<Child> children;

  bool operator<(const TreeNode& o) const;
  bool operator==(const TreeNode& o) const;
  void sort_children();
  size_t edge_count() const;
  std::vector<long> total_degree(const GkmGraph& g) const;
};

// all 1-pointed cohomological trees with the mark (root) at root_vertex and
// the given multidegree; deduplicated, sorted canonically
std::vector<TreeNode> enumerate_trees(const GkmGraph& g, int root_vertex,
                                      const std::vector<long>& degree);

// all sector assignments of a cohomological tree, deduplicated by canonical
// form; sorted
std::vector<TreeNode> promote(const TreeNode& t);

// as promote, but also reports the orbit size of each class among the
// prod_e deg(e) raw assignments
std::vector<std::pair<TreeNode, long>> promote_with_orbits(const TreeNode& t);

// canonical string encoding; equal iff trees are isomorphic as rooted
// labeled (and sectored) trees
std::string canonical_form(const TreeNode& t);

// independent brute-force count of tree isomorphism classes: generates all
// abstract rooted trees up to max_edges edges and all labelings into g, then
// dedups.  Throws when the target needs more than max_edges edges.
long count_oracle(const GkmGraph& g, int root_vertex,
                  const std::vector<long>& degree, size_t max_edges = 6);

std::string to_dot(const GkmGraph& g, const TreeNode& t);

}  // namespace gkmloc
