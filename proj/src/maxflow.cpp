#include "hamming/maxflow.hpp"

#include <algorithm>
#include <deque>

namespace hamming {

bool MaxFlow::bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::deque<int> q{s};
    level_[s] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int e = head_[v]; e != -1; e = edges_[e].next) {
            if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
                level_[edges_[e].to] = level_[v] + 1;
                q.push_back(edges_[e].to);
            }
        }
    }
    return level_[t] >= 0;
}

long long MaxFlow::dfs(int v, int t, long long f) {
    if (v == t) return f;
    for (int& e = it_[v]; e != -1; e = edges_[e].next) {
        Edge& ed = edges_[e];
        if (ed.cap > 0 && level_[ed.to] == level_[v] + 1) {
            long long d = dfs(ed.to, t, std::min(f, ed.cap));
            if (d > 0) {
                ed.cap -= d;
                edges_[e ^ 1].cap += d;
                return d;
            }
        }
    }
    return 0;
}

long long MaxFlow::run(int s, int t) {
    long long flow = 0;
    while (bfs(s, t)) {
        it_ = head_;
        while (long long f = dfs(s, t, INT64_MAX)) flow += f;
    }
    return flow;
}

std::vector<char> MaxFlow::min_cut_source_side(int s) const {
    std::vector<char> side(head_.size(), 0);
    std::deque<int> q{s};
    side[s] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int e = head_[v]; e != -1; e = edges_[e].next) {
            if (edges_[e].cap > 0 && !side[edges_[e].to]) {
                side[edges_[e].to] = 1;
                q.push_back(edges_[e].to);
            }
        }
    }
    return side;
}

}  // namespace hamming
