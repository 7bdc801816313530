#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <queue>
#include <set>

#include "ebt/lattice/boundaries.hpp"
#include "ebt/lattice/hex.hpp"

using namespace ebt;

namespace {

// Independent BFS oracle for hex distance on the adjacency graph.
int bfs_distance(FaceCoord a, FaceCoord b) {
    if (a == b) return 0;
    std::set<FaceCoord> seen{a};
    std::queue<std::pair<FaceCoord, int>> q;
    q.push({a, 0});
    while (!q.empty()) {
        auto [f, d] = q.front();
        q.pop();
        for (auto dir : kHexDirs) {
            FaceCoord g = f + dir;
            if (g == b) return d + 1;
            if (hex_distance(a, g) > 9) continue;  // prune
            if (seen.insert(g).second) q.push({g, d + 1});
        }
    }
    return -1;
}

}  // namespace

TEST_CASE("neighbors of origin are the six axial offsets") {
    Region n = neighbors(FaceCoord{0, 0});
    REQUIRE(n.size() == 6);
    for (auto d : kHexDirs) REQUIRE(n.contains(d));
    // symmetry: f in N(g) iff g in N(f)
    for (auto d : kHexDirs) REQUIRE(neighbors(d).contains({0, 0}));
}

TEST_CASE("second ring has 12 faces") {
    Region inner = elementary_disk({0, 0});
    Region ring2;
    for (auto f : neighborhood(Region{{0, 0}})) {
        for (auto g : neighbors(f))
            if (!inner.contains(g)) ring2.insert(g);
    }
    REQUIRE(ring2.size() == 12);
    REQUIRE(neighborhood(inner).size() == 12);
}

TEST_CASE("elementary disk properties") {
    Region e = elementary_disk({2, -1});
    REQUIRE(e.size() == 7);
    REQUIRE(is_simply_connected(e));
    REQUIRE(neighborhood(Region{}).empty());
    REQUIRE(neighborhood(Region{{5, 5}}).size() == 6);
}

TEST_CASE("hex distance equals BFS distance") {
    REQUIRE(hex_distance({0, 0}, {0, 0}) == 0);
    REQUIRE(hex_distance({0, 0}, {1, -1}) == 1);
    REQUIRE(hex_distance({0, 0}, {3, -1}) == 3);
    for (int q = -4; q <= 4; q += 2)
        for (int r = -4; r <= 4; r += 2) {
            FaceCoord f{q, r};
            REQUIRE(hex_distance({0, 0}, f) == bfs_distance({0, 0}, f));
        }
    // metric: triangle inequality on a sample
    FaceCoord a{0, 0}, b{3, -2}, c{-1, 4};
    REQUIRE(hex_distance(a, c) <= hex_distance(a, b) + hex_distance(b, c));
}

TEST_CASE("connectivity and simple connectivity") {
    // 7-face simply connected example
    REQUIRE(is_simply_connected(elementary_disk({0, 0})));
    // 6-face ring: connected but not simply connected
    Region ring = neighborhood(Region{{0, 0}});
    REQUIRE(is_connected(ring));
    REQUIRE_FALSE(is_simply_connected(ring));
    // two separated faces: not connected
    REQUIRE_FALSE(is_connected(Region{{0, 0}, {3, 3}}));
    REQUIRE_FALSE(is_simply_connected(Region{}));
}

TEST_CASE("torus wrap and unwrap") {
    Extent t = Extent::make_torus(6, 6);
    REQUIRE(t.canon({-1, 7}) == FaceCoord{5, 1});
    REQUIRE(hex_distance({0, 0}, {5, 0}, t) == 1);
    // a full row wraps the torus: not simply connected
    Region row;
    for (int q = 0; q < 6; ++q) row.insert({q, 0});
    REQUIRE(is_connected(row, t));
    REQUIRE_FALSE(is_simply_connected(row, t));
    // a ball unwraps fine
    REQUIRE(is_simply_connected(ball({0, 0}, 2, t), t));
}

TEST_CASE("arc partitions of the 6-ring") {
    auto parts = arc_partitions({0, 0});
    REQUIRE(parts.size() == 15);
    std::map<std::pair<std::size_t, std::size_t>, int> split_counts;
    for (auto& [b, d] : parts) {
        REQUIRE(b.size() + d.size() == 6);
        REQUIRE(!b.empty());
        REQUIRE(!d.empty());
        REQUIRE(is_simply_connected(b));
        REQUIRE(is_simply_connected(d));
        std::size_t s1 = b.size(), s2 = d.size();
        split_counts[{std::min(s1, s2), std::max(s1, s2)}]++;
    }
    // rotation classes of the three splits
    REQUIRE(split_counts[{1, 5}] == 6);
    REQUIRE(split_counts[{2, 4}] == 6);
    REQUIRE(split_counts[{3, 3}] == 3);
    // all partitions distinct
    std::set<std::pair<Region, Region>> uniq;
    for (auto& [b, d] : parts) uniq.insert(std::minmax(b, d));
    REQUIRE(uniq.size() == 15);
}

TEST_CASE("boundary classification") {
    // elementary A1 config: C center, B one arc face, D the other five
    FaceCoord c{0, 0};
    auto parts = arc_partitions(c);
    for (auto& [b, d] : parts) {
        auto seg = classify_boundaries(b, Region{c}, d);
        // B and D meet at exactly two contacts
        REQUIRE(seg.segment_count(BoundaryColor::Red) == 2);
        REQUIRE(seg.count(BoundaryColor::Green) == b.size());
        REQUIRE(seg.count(BoundaryColor::Blue) == d.size());
    }
    // D empty: no blue or red segments
    Region b6 = neighborhood(Region{c});
    auto seg = classify_boundaries(b6, Region{c}, Region{});
    REQUIRE(seg.segment_count(BoundaryColor::Blue) == 0);
    REQUIRE(seg.segment_count(BoundaryColor::Red) == 0);
    REQUIRE(seg.count(BoundaryColor::Green) == 6);
}

TEST_CASE("boundary edge count conserved under one-face move of D") {
    FaceCoord c{0, 0};
    Region cr{c};
    Region b{{-1, 0}, {-1, 1}, {0, 1}};
    Region d{{1, 0}, {0, -1}, {1, -1}};
    auto before = classify_boundaries(b, cr, d);
    // move a face of D outward and check the exactly-once accounting
    Region d2 = d;
    d2.erase({1, 0});
    d2.insert({2, 0});
    auto after = classify_boundaries(b, cr, d2);
    // every shared hex edge classified exactly once
    REQUIRE(before.total_edges ==
            before.count(BoundaryColor::Green) + before.count(BoundaryColor::Blue) +
                before.count(BoundaryColor::Red) + before.count(BoundaryColor::Outer));
    REQUIRE(after.total_edges ==
            after.count(BoundaryColor::Green) + after.count(BoundaryColor::Blue) +
                after.count(BoundaryColor::Red) + after.count(BoundaryColor::Outer));
}

TEST_CASE("disk growth keeps ring intersections disk-shaped") {
    // For any disk A and face d with A+{d} a disk, N(d) cap A is a disk.
    // Exhaustive over small disks grown from the origin.
    std::vector<Region> disks{Region{{0, 0}}};
    std::set<Region> seen{Region{{0, 0}}};
    for (std::size_t i = 0; i < disks.size(); ++i) {
        Region a = disks[i];
        if (a.size() >= 6) continue;
        for (auto f : neighborhood(a)) {
            Region grown = a;
            grown.insert(f);
            if (!is_simply_connected(grown)) continue;
            Region cap = neighbors(f) & a;
            REQUIRE(is_simply_connected(cap));
            if (hex_distance({0, 0}, f) <= 2 && seen.insert(grown).second)
                disks.push_back(grown);
        }
    }
    REQUIRE(disks.size() > 50);
}
