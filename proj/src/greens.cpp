#include "semicat/greens.hpp"

#include <algorithm>
#include <unordered_map>

namespace semicat {

namespace {

// Iterative Tarjan over an implicit graph: the neighbors of x are
// neighbor(x, i) for i in [0, degree).  Returns (count, class_of) with
// classes renumbered by least member.
template <typename NeighborFn>
std::pair<int, std::vector<int>> scc_partition(int n, int degree,
                                               NeighborFn&& neighbor) {
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> onstack(n, 0);
  std::vector<int> stack;
  struct Frame {
    int v;
    int i;
  };
  std::vector<Frame> frames;
  int next_index = 0, next_comp = 0;

  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    onstack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.i < degree) {
        int w = neighbor(f.v, f.i++);
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          onstack[w] = 1;
          frames.push_back({w, 0});
        } else if (onstack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        if (low[v] == index[v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            onstack[w] = 0;
            comp[w] = next_comp;
            if (w == v) break;
          }
          ++next_comp;
        }
      }
    }
  }
  // renumber classes in order of least member
  std::vector<int> remap(next_comp, -1);
  int id = 0;
  for (int x = 0; x < n; ++x)
    if (remap[comp[x]] == -1) remap[comp[x]] = id++;
  for (int x = 0; x < n; ++x) comp[x] = remap[comp[x]];
  return {next_comp, std::move(comp)};
}

std::pair<int, std::vector<int>> meet_partition(int n, const std::vector<int>& a,
                                                const std::vector<int>& b,
                                                int nb) {
  std::vector<int> out(n, -1);
  int id = 0;
  std::unordered_map<long long, int> seen;
  for (int x = 0; x < n; ++x) {
    long long key = static_cast<long long>(a[x]) * nb + b[x];
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(key, id);
      out[x] = id++;
    } else {
      out[x] = it->second;
    }
  }
  return {id, std::move(out)};
}

void finish_greens(const FiniteMonoid& S, GreensData& g) {
  int n = S.size;
  g.idempotents = S.idempotents();
  g.j_members.assign(g.num_j, {});
  for (ElementId x = 0; x < n; ++x) g.j_members[g.j_class[x]].push_back(x);
  g.j_regular.assign(g.num_j, 0);
  for (ElementId e : g.idempotents) g.j_regular[g.j_class[e]] = 1;
}

}  // namespace

GreensData greens(const FiniteMonoid& S) {
  int n = S.size;
  GreensData g;
  auto right = [&](int x, int i) { return S.mul(x, i); };
  auto left = [&](int x, int i) { return S.mul(i, x); };
  auto both = [&](int x, int i) {
    return i < n ? S.mul(x, i) : S.mul(i - n, x);
  };
  std::tie(g.num_r, g.r_class) = scc_partition(n, n, right);
  std::tie(g.num_l, g.l_class) = scc_partition(n, n, left);
  std::tie(g.num_j, g.j_class) = scc_partition(n, 2 * n, both);
  std::tie(g.num_h, g.h_class) = meet_partition(n, g.r_class, g.l_class, g.num_l);

  // condensation reachability: j_leq(a, b) iff J_a is reachable from J_b
  std::vector<std::vector<int>> adj(g.num_j);
  {
    std::vector<uint8_t> mark(static_cast<size_t>(g.num_j) * g.num_j, 0);
    for (int x = 0; x < n; ++x) {
      int cx = g.j_class[x];
      for (int s = 0; s < n; ++s) {
        for (int y : {S.mul(x, s), S.mul(s, x)}) {
          int cy = g.j_class[y];
          if (cy != cx && !mark[static_cast<size_t>(cx) * g.num_j + cy]) {
            mark[static_cast<size_t>(cx) * g.num_j + cy] = 1;
            adj[cx].push_back(cy);
          }
        }
      }
    }
  }
  g.j_leq.assign(static_cast<size_t>(g.num_j) * g.num_j, 0);
  for (int b = 0; b < g.num_j; ++b) {
    std::vector<int> todo{b};
    g.j_leq[static_cast<size_t>(b) * g.num_j + b] = 1;
    while (!todo.empty()) {
      int c = todo.back();
      todo.pop_back();
      for (int d : adj[c]) {
        auto& cell = g.j_leq[static_cast<size_t>(d) * g.num_j + b];
        if (!cell) {
          cell = 1;
          todo.push_back(d);
        }
      }
    }
  }
  finish_greens(S, g);
  return g;
}

GreensData greens_by_ideals(const FiniteMonoid& S) {
  int n = S.size;
  int words = (n + 63) / 64;
  auto bit = [&](std::vector<uint64_t>& v, int x) {
    v[x >> 6] |= 1ULL << (x & 63);
  };
  auto has = [&](const std::vector<uint64_t>& v, int x) {
    return (v[x >> 6] >> (x & 63)) & 1;
  };

  std::vector<std::vector<uint64_t>> rid(n), lid(n), jid(n);
  for (int x = 0; x < n; ++x) {
    rid[x].assign(words, 0);
    lid[x].assign(words, 0);
    bit(rid[x], x);
    bit(lid[x], x);
    for (int s = 0; s < n; ++s) {
      bit(rid[x], S.mul(x, s));
      bit(lid[x], S.mul(s, x));
    }
    // two-sided ideal: closure of {x} under both multiplications
    jid[x].assign(words, 0);
    std::vector<int> todo{x};
    bit(jid[x], x);
    while (!todo.empty()) {
      int y = todo.back();
      todo.pop_back();
      for (int s = 0; s < n; ++s) {
        for (int z : {S.mul(y, s), S.mul(s, y)}) {
          if (!has(jid[x], z)) {
            bit(jid[x], z);
            todo.push_back(z);
          }
        }
      }
    }
  }

  auto classes = [&](const std::vector<std::vector<uint64_t>>& ideals) {
    std::vector<int> cls(n, -1);
    int id = 0;
    for (int x = 0; x < n; ++x) {
      if (cls[x] != -1) continue;
      cls[x] = id;
      for (int y = x + 1; y < n; ++y)
        if (cls[y] == -1 && ideals[x] == ideals[y]) cls[y] = id;
      ++id;
    }
    return std::make_pair(id, cls);
  };

  GreensData g;
  std::tie(g.num_r, g.r_class) = classes(rid);
  std::tie(g.num_l, g.l_class) = classes(lid);
  std::tie(g.num_j, g.j_class) = classes(jid);
  std::tie(g.num_h, g.h_class) = meet_partition(n, g.r_class, g.l_class, g.num_l);

  g.j_leq.assign(static_cast<size_t>(g.num_j) * g.num_j, 0);
  std::vector<int> rep(g.num_j, -1);
  for (int x = 0; x < n; ++x)
    if (rep[g.j_class[x]] == -1) rep[g.j_class[x]] = x;
  for (int a = 0; a < g.num_j; ++a)
    for (int b = 0; b < g.num_j; ++b) {
      bool subset = true;
      for (int w = 0; w < words && subset; ++w)
        if (jid[rep[a]][w] & ~jid[rep[b]][w]) subset = false;
      if (subset) g.j_leq[static_cast<size_t>(a) * g.num_j + b] = 1;
    }
  finish_greens(S, g);
  return g;
}

bool greens_equal(const GreensData& a, const GreensData& b) {
  return a.num_r == b.num_r && a.num_l == b.num_l && a.num_j == b.num_j &&
         a.num_h == b.num_h && a.r_class == b.r_class &&
         a.l_class == b.l_class && a.j_class == b.j_class &&
         a.h_class == b.h_class && a.j_leq == b.j_leq &&
         a.j_regular == b.j_regular && a.idempotents == b.idempotents;
}

std::vector<ElementId> class_members(const std::vector<int>& class_of,
                                     int cls) {
  std::vector<ElementId> out;
  for (size_t x = 0; x < class_of.size(); ++x)
    if (class_of[x] == cls) out.push_back(static_cast<ElementId>(x));
  return out;
}

}  // namespace semicat
