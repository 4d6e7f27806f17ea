#include "steiner/all_ecc3.hpp"

#include <algorithm>
#include <cassert>

#include "steiner/errors.hpp"

namespace steiner {

namespace {

#ifndef NDEBUG
void check_triples(const TopThreeState& s, VertexId v) {
    const auto& pw = s.path_weight[v];
    const auto& pi = s.path_index[v];
    assert(pw[0] >= pw[1] && pw[1] >= pw[2]);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            assert(pi[i] == -1 || pi[i] != pi[j]);
}
#endif

// Pre-order vertex list and parent links, explicit stack: the traversal must
// survive path graphs far deeper than the call stack allows.
std::vector<VertexId> preorder(const Graph& tree, VertexId root,
                               std::vector<VertexId>& parent) {
    std::vector<VertexId> order;
    order.reserve(tree.vertex_count());
    std::vector<VertexId> stack{root};
    parent[root] = -1;
    std::vector<bool> seen(tree.vertex_count(), false);
    seen[root] = true;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        order.push_back(v);
        const auto nbrs = tree.neighbors(v);
        // push descending so children are visited in ascending id order
        for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) {
            if (seen[it->to]) continue;
            seen[it->to] = true;
            parent[it->to] = v;
            stack.push_back(it->to);
        }
    }
    return order;
}

void require_tree(const Graph& tree) {
    if (tree.edge_count() != tree.vertex_count() - 1 || !is_connected(tree))
        throw NotATreeError();
}

}  // namespace

TopThreeState::TopThreeState(VertexId n)
    : path_weight(n, {0.0, 0.0, 0.0}),
      path_index(n, {-1, -1, -1}),
      attached_weight(n, {0.0, 0.0, 0.0}),
      parent(n, -1),
      mark(n, 0) {}

void TopThreeState::update(VertexId v, VertexId u, double new_weight, double new_attached) {
    auto& pw = path_weight[v];
    auto& pi = path_index[v];
    auto& aw = attached_weight[v];
    assert(pi[0] != u && pi[1] != u && pi[2] != u);

    int pos = 3;
    for (int i = 0; i < 3; ++i) {
        if (new_weight > pw[i]) {
            pos = i;
            break;
        }
    }
    if (pos == 3) return;
    for (int i = 2; i > pos; --i) {
        pw[i] = pw[i - 1];
        pi[i] = pi[i - 1];
        aw[i] = aw[i - 1];
    }
    pw[pos] = new_weight;
    pi[pos] = u;
    aw[pos] = new_attached;
#ifndef NDEBUG
    check_triples(*this, v);
#endif
}

void dfs_stage1(const Graph& tree, VertexId root, TopThreeState& state) {
    require_tree(tree);
    const auto order = preorder(tree, root, state.parent);
    // children before parents
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const VertexId v = *it;
        for (const HalfEdge& h : tree.neighbors(v)) {
            const VertexId u = h.to;
            if (state.parent[u] != v) continue;
            state.update(v, u, h.weight + state.path_weight[u][0],
                         std::max(state.path_weight[u][1], state.attached_weight[u][0]));
        }
    }
}

void dfs_stage2(const Graph& tree, VertexId root, TopThreeState& state) {
    require_tree(tree);
    std::vector<VertexId> scratch_parent(tree.vertex_count(), -1);
    const auto order = preorder(tree, root, scratch_parent);
    for (const VertexId v : order) {
        state.mark[v] = 1;
        const VertexId u = state.parent[v];
        if (u == -1) continue;  // the root keeps its downward triples

        const auto nbrs = tree.neighbors(u);
        const auto it = std::lower_bound(
            nbrs.begin(), nbrs.end(), v,
            [](const HalfEdge& h, VertexId x) { return h.to < x; });
        const double edge_weight = it->weight;

        // u is already direction-complete; pick the best path and attached
        // branch at u that do not descend back into v
        const auto& pw = state.path_weight[u];
        const auto& aw = state.attached_weight[u];
        double up_path_weight = 0.0;
        double up_attached_weight = 0.0;
        if (state.path_index[u][0] != v) {
            up_path_weight = edge_weight + pw[0];
            if (state.path_index[u][1] != v)
                up_attached_weight = std::max(pw[1], aw[0]);
            else
                up_attached_weight = std::max(pw[2], aw[0]);
        } else {
            up_path_weight = edge_weight + pw[1];
            up_attached_weight = std::max(pw[2], aw[1]);
        }
        state.update(v, u, up_path_weight, up_attached_weight);
    }
}

std::vector<double> all_ecc3(const Graph& tree) { return all_ecc3(tree, 0); }

std::vector<double> all_ecc3(const Graph& tree, VertexId root) {
    require_tree(tree);
    if (tree.vertex_count() < 3)
        throw TooSmallError("3-eccentricity needs at least 3 vertices");
    TopThreeState state(tree.vertex_count());
    dfs_stage1(tree, root, state);
    dfs_stage2(tree, root, state);
    std::vector<double> out(tree.vertex_count());
    for (VertexId v = 0; v < tree.vertex_count(); ++v)
        out[v] = state.path_weight[v][0] +
                 std::max(state.path_weight[v][1], state.attached_weight[v][0]);
    return out;
}

}  // namespace steiner
