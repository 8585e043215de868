#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "bing/collapse.hpp"
#include "bing/complex.hpp"
#include "bing/snf.hpp"

namespace bing {

/// Letters are signed 1-based generator indices: +k is generator k-1, -k its
/// inverse.
using Word = std::vector<int>;

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::size_t total_length() const {
    std::size_t n = 0;
    for (const auto& r : relators) n += r.size();
    return n;
  }
};

inline void free_reduce(Word& w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  w = std::move(out);
}

inline void cyclic_reduce(Word& w) {
  free_reduce(w);
  std::size_t a = 0, b = w.size();
  while (b - a >= 2 && w[a] == -w[b - 1]) ++a, --b;
  w = Word(w.begin() + static_cast<long>(a), w.begin() + static_cast<long>(b));
}

inline Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (int& x : r) x = -x;
  return r;
}

struct SpanningTree {
  int root = 0;
  std::vector<Simplex> tree_edges;
};

/// Breadth-first spanning tree from `root`, visiting neighbours in id order.
inline SpanningTree spanning_tree(const SimplicialComplex& k, int root) {
  std::map<int, std::vector<int>> adj;
  for (const auto& e : k.simplices(1)) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (auto& [v, n] : adj) std::sort(n.begin(), n.end());
  SpanningTree t;
  t.root = root;
  std::set<int> seen{root};
  std::deque<int> q{root};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : adj[v])
      if (seen.insert(w).second) {
        t.tree_edges.push_back(Simplex{v, w});
        q.push_back(w);
      }
  }
  if (seen.size() != k.num_vertices()) throw TopologyError("complex is disconnected");
  return t;
}

/// Edge-path presentation of pi_1(K, base): one generator per non-tree
/// edge (oriented by increasing id), one relator per 2-simplex.
inline GroupPresentation edge_path_presentation(const SimplicialComplex& k, int base) {
  if (!k.find_vertex(base)) throw TopologyError("base vertex not found");
  auto tree = spanning_tree(k, base);
  std::unordered_set<Simplex, SimplexHash> in_tree(tree.tree_edges.begin(), tree.tree_edges.end());
  GroupPresentation p;
  std::unordered_map<Simplex, int, SimplexHash> gen;
  for (const auto& e : k.simplices(1))
    if (!in_tree.count(e)) {
      gen[e] = static_cast<int>(p.generators.size()) + 1;
      std::ostringstream os;
      os << 'e' << e[0] << '_' << e[1];
      p.generators.push_back(os.str());
    }
  auto letter = [&](int a, int b) {
    Simplex e{a, b};
    auto it = gen.find(e);
    if (it == gen.end()) return 0;
    return a < b ? it->second : -it->second;
  };
  for (const auto& t : k.simplices(2)) {
    Word w;
    for (int x : {letter(t[0], t[1]), letter(t[1], t[2]), letter(t[2], t[0])})
      if (x) w.push_back(x);
    cyclic_reduce(w);
    p.relators.push_back(std::move(w));
  }
  return p;
}

inline GroupPresentation edge_path_presentation(const SimplicialComplex& k) {
  if (k.vertices().empty()) throw TopologyError("empty complex");
  return edge_path_presentation(k, k.vertices().front().id);
}

struct TietzeResult {
  GroupPresentation presentation;
  std::size_t steps = 0;
  bool inconclusive = false;  // budget ran out before a fixpoint
};

/// Tietze simplification: free and cyclic reduction, elimination of a
/// generator occurring once in some relator (g w = 1 gives g = w^-1) when
/// that strictly shortens the presentation, and substitution of a long
/// piece of one relator by the shorter complement taken from another.
/// `budget` bounds the number of eliminations and substitutions.
inline TietzeResult tietze_simplify(GroupPresentation p, std::size_t budget) {
  const std::size_t ngen = p.generators.size();
  std::vector<Word> rel = std::move(p.relators);
  for (auto& r : rel) cyclic_reduce(r);
  std::vector<char> gen_alive(ngen + 1, 1);
  std::vector<std::vector<int>> occ(ngen + 1);  // generator -> relators (may be stale)
  for (std::size_t i = 0; i < rel.size(); ++i)
    for (int x : rel[i]) occ[static_cast<std::size_t>(std::abs(x))].push_back(static_cast<int>(i));

  TietzeResult res;
  auto count_in = [](const Word& w, int g) {
    std::size_t c = 0;
    for (int x : w)
      if (std::abs(x) == g) ++c;
    return c;
  };
  auto live_occurrences = [&](int g) {
    auto& o = occ[static_cast<std::size_t>(g)];
    std::sort(o.begin(), o.end());
    o.erase(std::unique(o.begin(), o.end()), o.end());
    std::vector<int> keep;
    std::size_t total = 0;
    for (int r : o) {
      std::size_t c = count_in(rel[static_cast<std::size_t>(r)], g);
      if (c) {
        keep.push_back(r);
        total += c;
      }
    }
    o = keep;
    return total;
  };

  // Candidate relators to inspect, shortest first.
  using Item = std::pair<std::size_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (std::size_t i = 0; i < rel.size(); ++i) queue.push({rel[i].size(), static_cast<int>(i)});

  auto eliminate = [&](int ri, int g) -> bool {
    Word& r = rel[static_cast<std::size_t>(ri)];
    auto pos = static_cast<std::size_t>(std::find_if(r.begin(), r.end(), [&](int x) { return std::abs(x) == g; }) - r.begin());
    // Rotate so g^e leads: g^e w = 1, hence g = (w)^-1 if e = +1, g = w if e = -1.
    Word rot(r.begin() + static_cast<long>(pos), r.end());
    rot.insert(rot.end(), r.begin(), r.begin() + static_cast<long>(pos));
    const int e = rot[0] > 0 ? 1 : -1;
    Word w(rot.begin() + 1, rot.end());
    Word repl = e > 0 ? inverse(w) : w;
    const std::size_t others = live_occurrences(g) - 1;
    const long delta = static_cast<long>(others) * (static_cast<long>(repl.size()) - 1) - static_cast<long>(r.size());
    if (delta >= 0) return false;
    Word repl_inv = inverse(repl);
    r.clear();
    for (int rj : occ[static_cast<std::size_t>(g)]) {
      Word& s = rel[static_cast<std::size_t>(rj)];
      if (s.empty()) continue;
      Word out;
      for (int x : s) {
        if (x == g)
          out.insert(out.end(), repl.begin(), repl.end());
        else if (x == -g)
          out.insert(out.end(), repl_inv.begin(), repl_inv.end());
        else
          out.push_back(x);
      }
      cyclic_reduce(out);
      s = std::move(out);
      for (int x : s) occ[static_cast<std::size_t>(std::abs(x))].push_back(rj);
      queue.push({s.size(), rj});
    }
    occ[static_cast<std::size_t>(g)].clear();
    gen_alive[static_cast<std::size_t>(g)] = 0;
    return true;
  };

  auto try_relator = [&](int ri) -> bool {
    const Word& r = rel[static_cast<std::size_t>(ri)];
    if (r.empty()) return false;
    // Prefer the generator with fewest occurrences elsewhere.
    int best = 0;
    std::size_t best_occ = 0;
    for (int x : r) {
      int g = std::abs(x);
      if (count_in(r, g) != 1) continue;
      std::size_t o = live_occurrences(g);
      if (!best || o < best_occ || (o == best_occ && g < best)) best = g, best_occ = o;
    }
    return best && eliminate(ri, best);
  };

  bool progress = true;
  while (progress) {
    progress = false;
    while (!queue.empty()) {
      if (res.steps >= budget) {
        res.inconclusive = true;
        break;
      }
      auto [len, ri] = queue.top();
      queue.pop();
      if (len != rel[static_cast<std::size_t>(ri)].size()) continue;
      if (try_relator(ri)) {
        ++res.steps;
        progress = true;
      }
    }
    if (res.inconclusive) break;
    // Relator substitution: if a cyclic permutation of short relator q
    // (or its inverse) has a piece u occurring in relator s with
    // 2|u| > |q|, replace u by the complement.
    for (std::size_t qi = 0; qi < rel.size() && !progress; ++qi) {
      const Word& q0 = rel[qi];
      if (q0.empty() || q0.size() > 6) continue;
      for (const Word& q : {q0, inverse(q0)}) {
        for (std::size_t rot = 0; rot < q.size() && !progress; ++rot) {
          Word c(q.begin() + static_cast<long>(rot), q.end());
          c.insert(c.end(), q.begin(), q.begin() + static_cast<long>(rot));
          for (std::size_t ulen = q.size(); 2 * ulen > q.size() && !progress; --ulen) {
            Word u(c.begin(), c.begin() + static_cast<long>(ulen));
            Word comp = inverse(Word(c.begin() + static_cast<long>(ulen), c.end()));  // u = comp in the group
            int g = std::abs(u[0]);
            live_occurrences(g);
            for (int si : occ[static_cast<std::size_t>(g)]) {
              if (static_cast<std::size_t>(si) == qi) continue;
              Word& s = rel[static_cast<std::size_t>(si)];
              auto it = std::search(s.begin(), s.end(), u.begin(), u.end());
              if (it == s.end()) continue;
              Word out(s.begin(), it);
              out.insert(out.end(), comp.begin(), comp.end());
              out.insert(out.end(), it + static_cast<long>(ulen), s.end());
              cyclic_reduce(out);
              if (out.size() >= s.size()) continue;
              s = std::move(out);
              for (int x : s) occ[static_cast<std::size_t>(std::abs(x))].push_back(si);
              queue.push({s.size(), si});
              ++res.steps;
              progress = true;
              break;
            }
            if (ulen == 1) break;
          }
        }
        if (progress) break;
      }
      if (res.steps >= budget) break;
    }
    if (res.steps >= budget && progress) {
      res.inconclusive = true;
      break;
    }
  }

  // Drop empty and duplicate relators; renumber live generators.
  std::vector<int> newidx(ngen + 1, 0);
  GroupPresentation out;
  for (std::size_t g = 1; g <= ngen; ++g)
    if (gen_alive[g]) {
      newidx[g] = static_cast<int>(out.generators.size()) + 1;
      out.generators.push_back(p.generators[g - 1]);
    }
  std::set<Word> seen;
  for (auto& r : rel) {
    if (r.empty()) continue;
    Word m;
    for (int x : r) m.push_back(x > 0 ? newidx[static_cast<std::size_t>(x)] : -newidx[static_cast<std::size_t>(-x)]);
    if (seen.insert(m).second) out.relators.push_back(std::move(m));
  }
  res.presentation = std::move(out);
  return res;
}

/// One-sided: true only when no generators survive. False means "not
/// certified", not "nontrivial".
inline bool is_certified_trivial(const GroupPresentation& p) { return p.generators.empty(); }

struct Abelianization {
  long rank = 0;
  std::vector<std::string> torsion;
};

inline Abelianization abelianize(const GroupPresentation& p) {
  SparseMatrix m;
  m.rows = p.generators.size();
  for (const auto& r : p.relators) {
    std::map<int, std::int64_t> sums;
    for (int x : r) sums[std::abs(x) - 1] += x > 0 ? 1 : -1;
    std::vector<std::pair<int, std::int64_t>> col;
    for (auto [g, s] : sums)
      if (s) col.push_back({g, s});
    m.cols.push_back(std::move(col));
  }
  auto inv = invariant_factors(m);
  Abelianization a;
  a.rank = static_cast<long>(p.generators.size()) - static_cast<long>(inv.rank);
  for (const auto& f : inv.nonunit) a.torsion.push_back(f.str());
  return a;
}

inline std::string format_word(const Word& w, const std::vector<std::string>& gens) {
  if (w.empty()) return "1";
  std::string s;
  for (int x : w) {
    if (!s.empty()) s += ' ';
    s += gens[static_cast<std::size_t>(std::abs(x) - 1)];
    if (x < 0) s += "^-1";
  }
  return s;
}

/// A smaller complex with the same fundamental group: one top cell is
/// punched out when the dimension is at least 3, the result is collapsed,
/// cut to its 2-skeleton and collapsed again.
inline SimplicialComplex pi1_model(const SimplicialComplex& k) {
  if (k.empty()) return k;
  SimplicialComplex cur = k;
  if (cur.dim() >= 3) {
    std::vector<Simplex> tops(cur.facets().begin(), cur.facets().end() - 1);
    const auto& gone = cur.facets().back();
    for (std::size_t i = 0; i < gone.size(); ++i) tops.push_back(gone.facet(i));
    cur = SimplicialComplex::from_tops(cur.vertices(), tops);
  }
  cur = greedy_collapse(cur).residue;
  if (cur.dim() > 2) {
    std::vector<Simplex> tops = cur.simplices(2);
    cur = greedy_collapse(SimplicialComplex::from_tops(cur.vertices(), tops)).residue;
  }
  return cur;
}

/// Edge-path presentation of the reduced model, Tietze-simplified.
inline TietzeResult fundamental_group(const SimplicialComplex& k, std::size_t budget) {
  return tietze_simplify(edge_path_presentation(pi1_model(k)), budget);
}

}  // namespace bing
