#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "rlematch/tree_kit.hpp"

using namespace rlematch;

namespace {

std::vector<NodeId> random_parents(std::mt19937_64& rng, std::size_t n) {
    std::vector<NodeId> p(n, kNoNode);
    for (std::size_t v = 1; v < n; ++v) p[v] = static_cast<NodeId>(rng() % v);
    return p;
}

// Labels are shuffled so the root is not always node 0 and children do not
// always have larger ids.
std::vector<NodeId> shuffled(const std::vector<NodeId>& parents, std::mt19937_64& rng) {
    std::vector<NodeId> perm(parents.size());
    for (NodeId i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<NodeId> out(parents.size(), kNoNode);
    for (NodeId v = 0; v < parents.size(); ++v) {
        if (parents[v] != kNoNode) out[perm[v]] = perm[parents[v]];
    }
    return out;
}

std::vector<NodeId> walk_up(const std::vector<NodeId>& parents, NodeId v) {
    std::vector<NodeId> path;
    for (NodeId u = v; u != kNoNode; u = parents[u]) path.push_back(u);
    return path;  // v first, root last
}

}  // namespace

TEST_CASE("static tree basics on a small tree") {
    //      0
    //     / \
    //    1   2
    //   / \
    //  3   4
    const StaticTree t({kNoNode, 0, 0, 1, 1});
    CHECK(t.size() == 5);
    CHECK(t.root() == 0);
    CHECK(t.depth(0) == 0);
    CHECK(t.depth(4) == 2);
    CHECK(t.is_ancestor(0, 3));
    CHECK(t.is_ancestor(1, 4));
    CHECK(t.is_ancestor(3, 3));
    CHECK_FALSE(t.is_ancestor(2, 3));
    CHECK_FALSE(t.is_ancestor(3, 1));
    CHECK(t.level_ancestor(4, 0) == 0);
    CHECK(t.level_ancestor(4, 1) == 1);
    CHECK(t.level_ancestor(4, 2) == 4);
    CHECK(std::vector<NodeId>(t.preorder().begin(), t.preorder().end()) ==
          std::vector<NodeId>{0, 1, 3, 4, 2});
    try {
        (void)t.level_ancestor(3, 3);
        FAIL("expected DepthOutOfRange");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DepthOutOfRange);
    }
}

TEST_CASE("Euler timestamps are distinct and nest") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto parents = shuffled(random_parents(rng, 1 + rng() % 30), rng);
        const StaticTree t(parents);
        std::vector<std::uint64_t> stamps;
        for (NodeId v = 0; v < t.size(); ++v) {
            stamps.push_back(t.in_time(v));
            stamps.push_back(t.out_time(v));
            CHECK(t.in_time(v) < t.out_time(v));
        }
        std::sort(stamps.begin(), stamps.end());
        CHECK(std::adjacent_find(stamps.begin(), stamps.end()) == stamps.end());
        // Exhaustive: ancestry by interval containment equals ancestry by walking.
        for (NodeId u = 0; u < t.size(); ++u) {
            for (NodeId v = 0; v < t.size(); ++v) {
                const auto path = walk_up(parents, v);
                const bool expected = std::find(path.begin(), path.end(), u) != path.end();
                CHECK(t.is_ancestor(u, v) == expected);
                if (!expected && !t.is_ancestor(v, u)) {
                    CHECK((t.out_time(u) < t.in_time(v) || t.out_time(v) < t.in_time(u)));
                }
            }
        }
    }
}

TEST_CASE("randomized level ancestor against walking up") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10000; ++trial) {
        const auto parents = shuffled(random_parents(rng, 1 + rng() % 40), rng);
        const StaticTree t(parents);
        const NodeId v = static_cast<NodeId>(rng() % parents.size());
        const auto path = walk_up(parents, v);
        REQUIRE(t.depth(v) + 1 == path.size());
        const std::uint32_t d = static_cast<std::uint32_t>(rng() % path.size());
        CHECK(t.level_ancestor(v, d) == path[path.size() - 1 - d]);
    }
}

TEST_CASE("path minimum with shallowest tie-break") {
    const auto t = std::make_shared<const StaticTree>(std::vector<NodeId>{kNoNode, 0, 1, 2});
    const PathMinIndex pm(t, {5, 3, 3, 4});
    CHECK(pm.path_min(0, 3) == 1);
    CHECK(pm.path_min(2, 3) == 2);
    CHECK(pm.path_min(3, 3) == 3);
    CHECK(pm.path_min(0, 0) == 0);
    try {
        (void)pm.path_min(3, 0);
        FAIL("expected NotAncestor");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotAncestor);
    }
}

TEST_CASE("randomized path minimum against walking up") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 10000; ++trial) {
        const auto parents = shuffled(random_parents(rng, 1 + rng() % 40), rng);
        auto tree = std::make_shared<const StaticTree>(parents);
        std::vector<Weight> w(parents.size());
        for (auto& x : w) x = 1 + rng() % 6;
        const PathMinIndex pm(tree, w);
        const NodeId v = static_cast<NodeId>(rng() % parents.size());
        const auto path = walk_up(parents, v);
        const NodeId u = path[rng() % path.size()];
        NodeId best = kNoNode;
        for (NodeId x : path) {
            if (best == kNoNode || w[x] <= w[best]) best = x;  // later = shallower
            if (x == u) break;
        }
        CHECK(pm.path_min(u, v) == best);
    }
}

TEST_CASE("first colored ancestor on a small tree") {
    const auto t = std::make_shared<const StaticTree>(std::vector<NodeId>{kNoNode, 0, 0, 1, 1});
    const ColorAssignment colors{{'x'}, {'y'}, {'y', 'x'}, {}, {'x', 'x'}};
    const FirstColoredAncestor fca(t, colors);
    CHECK(fca.query(3, 'y') == NodeId{1});
    CHECK(fca.query(3, 'x') == NodeId{0});
    CHECK(fca.query(4, 'x') == NodeId{4});
    CHECK(fca.query(2, 'y') == NodeId{2});
    CHECK(fca.query(0, 'y') == std::nullopt);
    CHECK(fca.query(3, 'z') == std::nullopt);
    const auto* cls = fca.color_class('x');
    REQUIRE(cls != nullptr);
    CHECK(cls->nodes.size() == 3);
    CHECK(fca.color_class('z') == nullptr);
}

TEST_CASE("randomized first colored ancestor against walking up") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10000; ++trial) {
        const auto parents = shuffled(random_parents(rng, 1 + rng() % 40), rng);
        auto tree = std::make_shared<const StaticTree>(parents);
        ColorAssignment colors(parents.size());
        const std::uint32_t palette = 1 + static_cast<std::uint32_t>(rng() % 4);
        for (auto& cs : colors) {
            const int k = static_cast<int>(rng() % 3);
            for (int i = 0; i < k; ++i) cs.push_back(static_cast<Color>(rng() % palette));
        }
        const FirstColoredAncestor fca(tree, colors);
        for (int q = 0; q < 5; ++q) {
            const NodeId v = static_cast<NodeId>(rng() % parents.size());
            const Color c = static_cast<Color>(rng() % (palette + 1));
            std::optional<NodeId> expected;
            for (NodeId u : walk_up(parents, v)) {
                if (std::find(colors[u].begin(), colors[u].end(), c) != colors[u].end()) {
                    expected = u;
                    break;
                }
            }
            CHECK(fca.query(v, c) == expected);
        }
    }
}
