#include "spexlab/matching.hpp"

#include <algorithm>
#include <queue>

namespace spexlab {

namespace {

class Blossom {
 public:
  explicit Blossom(const std::vector<std::vector<int>>& adj)
      : adj_(adj), n_(static_cast<int>(adj.size())), mate_(n_, -1), parent_(n_), base_(n_),
        used_(n_), in_blossom_(n_) {
    // Greedy start; augmenting paths only fix up the remainder.
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      for (int u : adj_[v]) {
        if (mate_[u] == -1 && u != v) {
          mate_[u] = v;
          mate_[v] = u;
          break;
        }
      }
    }
  }

  // Returns false as soon as some vertex stays exposed when `stop_on_exposed`.
  bool run(bool stop_on_exposed) {
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      int end = find_path(v);
      if (end == -1) {
        // A vertex with no augmenting path now never gets one later.
        if (stop_on_exposed) return false;
        continue;
      }
      while (end != -1) {
        const int pv = parent_[end];
        const int ppv = mate_[pv];
        mate_[end] = pv;
        mate_[pv] = end;
        end = ppv;
      }
    }
    return true;
  }

  const std::vector<int>& mate() const { return mate_; }

 private:
  int lca(int a, int b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          const int cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          used_[mate_[to]] = true;
          q.push(mate_[to]);
        }
      }
    }
    return -1;
  }

  const std::vector<std::vector<int>>& adj_;
  int n_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

}  // namespace

std::vector<int> maximum_matching(const std::vector<std::vector<int>>& adj) {
  Blossom b(adj);
  b.run(false);
  return b.mate();
}

bool has_perfect_matching(const std::vector<std::vector<int>>& adj) {
  if (adj.size() % 2 != 0) return false;
  Blossom b(adj);
  return b.run(true);
}

}  // namespace spexlab
