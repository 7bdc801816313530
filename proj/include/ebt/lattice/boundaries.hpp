#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ebt/lattice/hex.hpp"

namespace ebt {

/// All 15 unordered partitions of the 6-ring N(f) into two nonempty
/// contiguous arcs. Each part is simply connected by construction.
inline std::vector<std::pair<Region, Region>> arc_partitions(
    FaceCoord f, const Extent& ext = Extent::plane()) {
    std::array<FaceCoord, 6> ring;
    for (std::size_t i = 0; i < 6; ++i) ring[i] = ext.canon(f + kHexDirs[i]);
    std::vector<std::pair<Region, Region>> out;
    // Cut positions c1 < c2 in the 6 gaps; arc B = ring[c1..c2), D = rest.
    // Each unordered cut pair is one partition: C(6,2) = 15.
    for (std::size_t c1 = 0; c1 < 6; ++c1)
        for (std::size_t c2 = c1 + 1; c2 < 6; ++c2) {
            Region b, d;
            for (std::size_t i = 0; i < 6; ++i) {
                if (i >= c1 && i < c2)
                    b.insert(ring[i]);
                else
                    d.insert(ring[i]);
            }
            out.emplace_back(std::move(b), std::move(d));
        }
    if (out.size() != 15) throw std::logic_error("arc_partitions: expected 15");
    return out;
}

/// A hexagon edge, canonically the unordered pair of faces sharing it.
struct HexEdge {
    FaceCoord a, b;  // a < b
    auto operator<=>(const HexEdge&) const = default;
};

inline HexEdge make_edge(FaceCoord x, FaceCoord y) {
    if (y < x) std::swap(x, y);
    return {x, y};
}

/// Lattice vertices = triples of mutually adjacent faces. Each edge {a,b} has
/// two endpoint vertices, one per common neighbor of a and b.
inline std::vector<Region> edge_endpoints(const HexEdge& e, const Extent& ext) {
    std::vector<Region> out;
    Region na = neighbors(e.a, ext);
    for (auto t : neighbors(e.b, ext))
        if (na.contains(t)) out.push_back(Region{e.a, e.b, t});
    return out;
}

enum class BoundaryColor { Green, Blue, Red, Outer };

struct BoundarySegments {
    // Segments per color: connected components of same-color edges, two edges
    // being connected when they share a lattice vertex.
    std::map<BoundaryColor, std::vector<std::vector<HexEdge>>> segments;
    std::size_t total_edges = 0;

    std::size_t count(BoundaryColor c) const {
        auto it = segments.find(c);
        if (it == segments.end()) return 0;
        std::size_t n = 0;
        for (auto& s : it->second) n += s.size();
        return n;
    }
    std::size_t segment_count(BoundaryColor c) const {
        auto it = segments.find(c);
        return it == segments.end() ? 0 : it->second.size();
    }
};

/// Classify every boundary edge of B,C,D exactly once: green = B|C,
/// blue = C|D, red = B|D, outer = BCD|complement.
inline BoundarySegments classify_boundaries(const Region& b, const Region& c, const Region& d,
                                            const Extent& ext = Extent::plane()) {
    if (!(b & c).empty() || !(b & d).empty() || !(c & d).empty())
        throw std::invalid_argument("classify_boundaries: regions must be disjoint");
    Region bcd = b | c | d;
    std::map<BoundaryColor, std::vector<HexEdge>> edges;
    auto side = [&](FaceCoord f) -> int {
        if (b.contains(f)) return 0;
        if (c.contains(f)) return 1;
        if (d.contains(f)) return 2;
        return 3;
    };
    for (auto f : bcd)
        for (auto dir : kHexDirs) {
            FaceCoord g = ext.canon(f + dir);
            if (bcd.contains(g)) {
                if (!(f < g)) continue;  // visit internal edges once
                int sf = side(f), sg = side(g);
                if (sf == sg) continue;
                int lo = std::min(sf, sg), hi = std::max(sf, sg);
                BoundaryColor col;
                if (lo == 0 && hi == 1) col = BoundaryColor::Green;
                else if (lo == 1 && hi == 2) col = BoundaryColor::Blue;
                else col = BoundaryColor::Red;  // lo==0 && hi==2
                edges[col].push_back(make_edge(f, g));
            } else if (ext.contains(g)) {
                edges[BoundaryColor::Outer].push_back(make_edge(f, g));
            } else {
                edges[BoundaryColor::Outer].push_back(make_edge(f, g));
            }
        }

    BoundarySegments out;
    for (auto& [col, es] : edges) {
        out.total_edges += es.size();
        // Union-find over edges sharing an endpoint vertex.
        std::vector<std::size_t> parent(es.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::map<Region, std::vector<std::size_t>> by_vertex;
        for (std::size_t i = 0; i < es.size(); ++i)
            for (auto& v : edge_endpoints(es[i], ext)) by_vertex[v].push_back(i);
        for (auto& [v, idx] : by_vertex)
            for (std::size_t i = 1; i < idx.size(); ++i)
                parent[find(idx[i])] = find(idx[0]);
        std::map<std::size_t, std::vector<HexEdge>> comps;
        for (std::size_t i = 0; i < es.size(); ++i) comps[find(i)].push_back(es[i]);
        for (auto& [root, seg] : comps) out.segments[col].push_back(seg);
    }
    return out;
}

}  // namespace ebt
