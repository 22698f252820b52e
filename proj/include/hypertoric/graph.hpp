#pragma once
#include "hypertoric/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace hypertoric {

// Finite undirected multigraph without self-loops. Repeated edges are
// multi-edges; vertices are 0..num_vertices-1.
struct Graph {
    std::size_t num_vertices = 0;
    std::vector<std::pair<int, int>> edges;

    Graph() = default;
    Graph(std::size_t vertices, std::vector<std::pair<int, int>> e)
        : num_vertices(vertices), edges(std::move(e)) {
        for (auto& [u, v] : edges) {
            if (u == v) throw error(errc::self_loop_present, "self-loop edge");
            if (u < 0 || v < 0 || std::size_t(u) >= num_vertices || std::size_t(v) >= num_vertices)
                throw error(errc::invalid_input, "edge endpoint out of range");
        }
    }

    bool connected() const {
        if (num_vertices == 0) return true;
        std::vector<char> seen(num_vertices, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (const auto& [a, b] : edges) {
                int other = -1;
                if (a == u) other = b;
                else if (b == u) other = a;
                if (other >= 0 && !seen[other]) {
                    seen[other] = 1;
                    stack.push_back(other);
                }
            }
        }
        return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
    }
};

} // namespace hypertoric
