#include "trees.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gkmloc {

namespace {

using Deg = std::vector<long>;

bool deg_le(const Deg& a, const Deg& b) {
  for (size_t i = 0; i < a.size(); i++)
    if (a[i] > b[i]) return false;
  return true;
}

Deg deg_add(const Deg& a, const Deg& b) {
  Deg r = a;
  for (size_t i = 0; i < a.size(); i++) r[i] += b[i];
  return r;
}

Deg deg_sub(const Deg& a, const Deg& b) {
  Deg r = a;
  for (size_t i = 0; i < a.size(); i++) r[i] -= b[i];
  return r;
}

Deg deg_scale(long k, const Deg& a) {
  Deg r = a;
  for (auto& x : r) x *= k;
  return r;
}

bool deg_zero(const Deg& a) {
  for (long x : a)
    if (x) return false;
  return true;
}

}  // namespace

bool TreeNode::Child::operator<(const Child& o) const {
  if (edge != o.edge) return edge < o.edge;
  if (deg != o.deg) return deg < o.deg;
  if (sector != o.sector) return sector < o.sector;
  return sub() < o.sub();
}

bool TreeNode::Child::operator==(const Child& o) const {
  return edge == o.edge && deg == o.deg && sector == o.sector &&
         sub() == o.sub();
}

bool TreeNode::operator<(const TreeNode& o) const {
  if (v != o.v) return v < o.v;
  return children < o.children;
}

bool TreeNode::operator==(const TreeNode& o) const {
  return v == o.v && children == o.children;
}

void TreeNode::sort_children() { std::sort(children.begin(), children.end()); }

size_t TreeNode::edge_count() const {
  size_t n = 0;
  for (const auto& c : children) n += 1 + c.sub().edge_count();
  return n;
}

std::vector<long> TreeNode::total_degree(const GkmGraph& g) const {
  Deg d(g.picard, 0);
  for (const auto& c : children) {
    d = deg_add(d, deg_scale(c.deg, g.edges[c.edge].cls));
    d = deg_add(d, c.sub().total_degree(g));
  }
  return d;
}

namespace {

struct Enumerator {
  const GkmGraph& g;
  std::map<std::pair<int, Deg>, std::vector<TreeNode>> memo;

  const std::vector<TreeNode>& rec(int v, const Deg& deg) {
    auto key = std::make_pair(v, deg);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    // candidate branches at v: (child subtree, its total degree)
    std::vector<std::pair<TreeNode::Child, Deg>> branches;
    for (const auto& fl : g.incident(v)) {
      const Deg& cls = g.edges[fl.edge].cls;
      for (long k = 1; deg_le(deg_scale(k, cls), deg); k++) {
        Deg base = deg_scale(k, cls);
        Deg room = deg_sub(deg, base);
        // iterate sub-degrees over the box [0, room]
        Deg sd(room.size(), 0);
        while (true) {
          for (const TreeNode& sub : rec(fl.other, sd)) {
            TreeNode::Child c;
            c.edge = fl.edge;
            c.deg = k;
            c.sub() = sub;
            branches.push_back({c, deg_add(base, sd)});
          }
          size_t i = 0;
          while (i < sd.size() && sd[i] == room[i]) sd[i++] = 0;
          if (i == sd.size()) break;
          sd[i]++;
        }
      }
    }
    // choose a multiset of branches with total degree = deg
    std::set<TreeNode> out;
    std::vector<TreeNode::Child> chosen;
    std::function<void(size_t, Deg)> choose = [&](size_t i, Deg remaining) {
      if (deg_zero(remaining)) {
        TreeNode t;
        t.v = v;
        t.children = chosen;
        t.sort_children();
        out.insert(std::move(t));
        return;
      }
      if (i >= branches.size()) return;
      choose(i + 1, remaining);
      const auto& [c, bd] = branches[i];
      if (deg_le(bd, remaining)) {
        chosen.push_back(c);
        choose(i, deg_sub(remaining, bd));
        chosen.pop_back();
      }
    };
    choose(0, deg);
    std::vector<TreeNode> res(out.begin(), out.end());
    return memo.emplace(key, std::move(res)).first->second;
  }
};

}  // namespace

std::vector<TreeNode> enumerate_trees(const GkmGraph& g, int root_vertex,
                                      const std::vector<long>& degree) {
  if (degree.size() != g.picard)
    throw std::runtime_error("enumerate_trees: degree length mismatch");
  Enumerator en{g};
  return en.rec(root_vertex, degree);
}

namespace {

std::vector<TreeNode> sector_variants(const TreeNode& t) {
  std::vector<std::vector<TreeNode::Child>> outs = {{}};
  for (const auto& c : t.children) {
    std::vector<TreeNode> subs = sector_variants(c.sub());
    std::vector<TreeNode::Child> opts;
    for (long s = 0; s < c.deg; s++)
      for (const auto& ss : subs) {
        TreeNode::Child nc = c;
        nc.sector = s;
        nc.sub() = ss;
        opts.push_back(nc);
      }
    std::vector<std::vector<TreeNode::Child>> next;
    for (const auto& o : outs)
      for (const auto& x : opts) {
        auto no = o;
        no.push_back(x);
        next.push_back(no);
      }
    outs = std::move(next);
  }
  std::vector<TreeNode> res;
  for (auto& o : outs) {
    TreeNode n;
    n.v = t.v;
    n.children = std::move(o);
    n.sort_children();
    res.push_back(std::move(n));
  }
  return res;
}

}  // namespace

std::vector<std::pair<TreeNode, long>> promote_with_orbits(const TreeNode& t) {
  std::map<TreeNode, long> counts;
  for (auto& kt : sector_variants(t)) counts[kt]++;
  return {counts.begin(), counts.end()};
}

std::vector<TreeNode> promote(const TreeNode& t) {
  std::vector<TreeNode> res;
  for (auto& [kt, n] : promote_with_orbits(t)) res.push_back(kt);
  return res;
}

std::string canonical_form(const TreeNode& t) {
  std::ostringstream os;
  std::function<void(const TreeNode&)> enc = [&](const TreeNode& n) {
    os << "(" << n.v;
    for (const auto& c : n.children) {
      os << "[" << c.edge << ":" << c.deg;
      if (c.sector >= 0) os << "." << c.sector;
      os << "]";
      enc(c.sub());
    }
    os << ")";
  };
  enc(t);
  return os.str();
}

namespace {

// abstract rooted trees: children as a sorted vector of subtrees
struct ATree {
  std::vector<ATree> ch;
  bool operator<(const ATree& o) const { return ch < o.ch; }
};

// all abstract rooted trees with exactly e edges
const std::vector<ATree>& atrees(size_t e) {
  static std::map<size_t, std::vector<ATree>> cache;
  auto it = cache.find(e);
  if (it != cache.end()) return it->second;
  std::set<ATree> out;
  if (e == 0) {
    out.insert(ATree{});
  } else {
    // pick a child consuming s edges (1 for its link + s-1 inside)
    for (size_t s = 1; s <= e; s++) {
      for (const ATree& sub : atrees(s - 1)) {
        for (const ATree& rest : atrees(e - s)) {
          ATree t = rest;
          t.ch.push_back(sub);
          std::sort(t.ch.begin(), t.ch.end());
          out.insert(std::move(t));
        }
      }
    }
  }
  return cache.emplace(e, std::vector<ATree>(out.begin(), out.end()))
      .first->second;
}

}  // namespace

long count_oracle(const GkmGraph& g, int root_vertex,
                  const std::vector<long>& degree, size_t max_edges) {
  long total = 0;
  for (long d : degree) total += d;
  if (total == 0) return 1;
  if ((size_t)total > max_edges)
    throw std::runtime_error("count_oracle: resource cap exceeded");
  std::set<TreeNode> found;
  // assign GKM labels and degrees to every abstract tree shape, keeping only
  // exact-total-degree labelings; dedup by canonical form
  std::function<void(const ATree&, int, TreeNode&, std::function<void()>)>
      label = [&](const ATree& at, int v, TreeNode& out,
                  std::function<void()> done) {
        out.v = v;
        out.children.clear();
        std::function<void(size_t)> per_child = [&](size_t ci) {
          if (ci == at.ch.size()) {
            done();
            return;
          }
          for (const auto& fl : g.incident(v)) {
            const Deg& cls = g.edges[fl.edge].cls;
            for (long k = 1; deg_le(deg_scale(k, cls), degree); k++) {
              TreeNode::Child c;
              c.edge = fl.edge;
              c.deg = k;
              out.children.push_back(c);
              label(at.ch[ci], fl.other, out.children.back().sub(),
                    [&]() { per_child(ci + 1); });
              out.children.pop_back();
            }
          }
        };
        per_child(0);
      };
  for (size_t e = 1; e <= (size_t)total; e++) {
    for (const ATree& at : atrees(e)) {
      TreeNode root;
      label(at, root_vertex, root, [&]() {
        if (root.total_degree(g) == degree) {
          TreeNode t = root;
          std::function<void(TreeNode&)> srt = [&](TreeNode& n) {
            for (auto& c : n.children) srt(c.sub());
            n.sort_children();
          };
          srt(t);
          found.insert(std::move(t));
        }
      });
    }
  }
  return (long)found.size();
}

std::string to_dot(const GkmGraph& g, const TreeNode& t) {
  std::ostringstream os;
  os << "graph ktree {\n";
  int next = 0;
  std::function<int(const TreeNode&, bool)> emit = [&](const TreeNode& n,
                                                       bool marked) {
    int id = next++;
    os << "  n" << id << " [label=\"" << g.verts[n.v]
       << (marked ? " *" : "") << "\"];\n";
    for (const auto& c : n.children) {
      int cid = emit(c.sub(), false);
      os << "  n" << id << " -- n" << cid << " [label=\"" << c.deg;
      if (c.sector >= 0) os << "_" << c.sector;
      os << "\"];\n";
    }
    return id;
  };
  emit(t, true);
  os << "}\n";
  return os.str();
}

}  // namespace gkmloc
