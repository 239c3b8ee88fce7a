#pragma once

// Dinic's algorithm on integer capacities. Private to the core library.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace sec::detail {

class MaxFlow {
public:
    using Capacity = std::int64_t;
    static constexpr Capacity kUnbounded = std::numeric_limits<Capacity>::max() / 4;

    explicit MaxFlow(std::size_t nodes) : head_(nodes, -1), level_(nodes), cursor_(nodes) {}

    void add_arc(std::size_t from, std::size_t to, Capacity capacity) {
        arcs_.push_back({to, head_[from], capacity});
        head_[from] = static_cast<int>(arcs_.size() - 1);
        arcs_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(arcs_.size() - 1);
    }

    Capacity run(std::size_t source, std::size_t sink) {
        Capacity total = 0;
        while (bfs(source, sink)) {
            for (std::size_t v = 0; v < head_.size(); ++v) {
                cursor_[v] = head_[v];
            }
            while (const auto pushed = dfs(source, sink, kUnbounded)) {
                total += pushed;
            }
        }
        return total;
    }

    /// Nodes reachable from `source` in the residual network after run().
    std::vector<bool> source_side(std::size_t source) const {
        std::vector<bool> seen(head_.size(), false);
        std::vector<std::size_t> stack{source};
        seen[source] = true;
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            for (int a = head_[v]; a != -1; a = arcs_[a].next) {
                if (arcs_[a].capacity > 0 && !seen[arcs_[a].to]) {
                    seen[arcs_[a].to] = true;
                    stack.push_back(arcs_[a].to);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        std::size_t to;
        int next;
        Capacity capacity;
    };

    bool bfs(std::size_t source, std::size_t sink) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<std::size_t> queue;
        level_[source] = 0;
        queue.push(source);
        while (!queue.empty()) {
            const auto v = queue.front();
            queue.pop();
            for (int a = head_[v]; a != -1; a = arcs_[a].next) {
                if (arcs_[a].capacity > 0 && level_[arcs_[a].to] < 0) {
                    level_[arcs_[a].to] = level_[v] + 1;
                    queue.push(arcs_[a].to);
                }
            }
        }
        return level_[sink] >= 0;
    }

    Capacity dfs(std::size_t v, std::size_t sink, Capacity limit) {
        if (v == sink) {
            return limit;
        }
        for (int& a = cursor_[v]; a != -1; a = arcs_[a].next) {
            auto& arc = arcs_[a];
            if (arc.capacity > 0 && level_[arc.to] == level_[v] + 1) {
                if (const auto got = dfs(arc.to, sink, std::min(limit, arc.capacity))) {
                    arc.capacity -= got;
                    arcs_[a ^ 1].capacity += got;
                    return got;
                }
            }
        }
        return 0;
    }

    std::vector<Arc> arcs_;
    std::vector<int> head_;
    std::vector<int> level_;
    std::vector<int> cursor_;
};

} // namespace sec::detail
