#pragma once

#include <vector>

namespace hamming {

// Dinic max-flow on integer capacities. Small graphs only; exact.
class MaxFlow {
  public:
    explicit MaxFlow(int n) : head_(n, -1), level_(n), it_(n) {}

    void add_edge(int from, int to, long long cap) {
        edges_.push_back({to, head_[from], cap});
        head_[from] = (int)edges_.size() - 1;
        edges_.push_back({from, head_[to], 0});
        head_[to] = (int)edges_.size() - 1;
    }

    long long run(int s, int t);

    // After run: vertices reachable from s in the residual graph. This is
    // the unique minimal source side over all minimum cuts.
    std::vector<char> min_cut_source_side(int s) const;

  private:
    struct Edge {
        int to, next;
        long long cap;
    };
    bool bfs(int s, int t);
    long long dfs(int v, int t, long long f);

    std::vector<int> head_, level_, it_;
    std::vector<Edge> edges_;
};

}  // namespace hamming
