#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ebt {

/// Axial coordinates of a hexagonal face. The six neighbors of (q,r) are
/// (q±1,r), (q,r±1), (q+1,r-1), (q-1,r+1).
struct FaceCoord {
    int q = 0;
    int r = 0;
    auto operator<=>(const FaceCoord&) const = default;
};

inline FaceCoord operator+(FaceCoord a, FaceCoord b) { return {a.q + b.q, a.r + b.r}; }
inline FaceCoord operator-(FaceCoord a, FaceCoord b) { return {a.q - b.q, a.r - b.r}; }

/// Neighbor offsets in cyclic (angular) order; consecutive entries are adjacent.
inline constexpr std::array<FaceCoord, 6> kHexDirs = {
    {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

inline int hex_distance(FaceCoord a, FaceCoord b) {
    const int dq = a.q - b.q;
    const int dr = a.r - b.r;
    return (std::abs(dq) + std::abs(dr) + std::abs(dq + dr)) / 2;
}

/// Finite lattice extent: either a torus (faces wrap modulo cols x rows), a
/// bounded patch, or the unbounded plane (rows == cols == 0).
struct Extent {
    int rows = 0;
    int cols = 0;
    bool torus = false;

    static Extent plane() { return Extent{}; }
    static Extent make_torus(int rows, int cols) { return Extent{rows, cols, true}; }
    static Extent patch(int rows, int cols) { return Extent{rows, cols, false}; }

    bool bounded() const { return rows > 0 && cols > 0; }

    FaceCoord canon(FaceCoord f) const {
        if (!torus) return f;
        int q = f.q % cols;
        int r = f.r % rows;
        if (q < 0) q += cols;
        if (r < 0) r += rows;
        return {q, r};
    }

    bool contains(FaceCoord f) const {
        if (!bounded()) return true;
        if (torus) return true;
        return f.q >= 0 && f.q < cols && f.r >= 0 && f.r < rows;
    }

    std::vector<FaceCoord> all_faces() const {
        std::vector<FaceCoord> out;
        out.reserve(static_cast<std::size_t>(rows) * cols);
        for (int r = 0; r < rows; ++r)
            for (int q = 0; q < cols; ++q) out.push_back({q, r});
        return out;
    }

    bool operator==(const Extent&) const = default;
};

inline int hex_distance(FaceCoord a, FaceCoord b, const Extent& ext) {
    if (!ext.torus) return hex_distance(a, b);
    a = ext.canon(a);
    b = ext.canon(b);
    int best = 1 << 30;
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j)
            best = std::min(best, hex_distance(a, b + FaceCoord{i * ext.cols, j * ext.rows}));
    return best;
}

/// A finite set of faces with value semantics and deterministic (q,r) order.
class Region {
public:
    Region() = default;
    Region(std::initializer_list<FaceCoord> fs) : faces_(fs) { normalize(); }
    explicit Region(std::vector<FaceCoord> fs) : faces_(std::move(fs)) { normalize(); }

    const std::vector<FaceCoord>& faces() const { return faces_; }
    std::size_t size() const { return faces_.size(); }
    bool empty() const { return faces_.empty(); }
    auto begin() const { return faces_.begin(); }
    auto end() const { return faces_.end(); }

    bool contains(FaceCoord f) const {
        return std::binary_search(faces_.begin(), faces_.end(), f);
    }

    void insert(FaceCoord f) {
        auto it = std::lower_bound(faces_.begin(), faces_.end(), f);
        if (it == faces_.end() || *it != f) faces_.insert(it, f);
    }

    void erase(FaceCoord f) {
        auto it = std::lower_bound(faces_.begin(), faces_.end(), f);
        if (it != faces_.end() && *it == f) faces_.erase(it);
    }

    Region canon(const Extent& ext) const {
        std::vector<FaceCoord> out;
        out.reserve(faces_.size());
        for (auto f : faces_) out.push_back(ext.canon(f));
        Region r(std::move(out));
        if (r.size() != size())
            throw std::runtime_error("Region::canon: faces collide under torus wrap");
        return r;
    }

    friend Region operator|(const Region& a, const Region& b) {
        std::vector<FaceCoord> out;
        std::set_union(a.faces_.begin(), a.faces_.end(), b.faces_.begin(), b.faces_.end(),
                       std::back_inserter(out));
        return Region(std::move(out));
    }
    friend Region operator&(const Region& a, const Region& b) {
        std::vector<FaceCoord> out;
        std::set_intersection(a.faces_.begin(), a.faces_.end(), b.faces_.begin(),
                              b.faces_.end(), std::back_inserter(out));
        return Region(std::move(out));
    }
    friend Region operator-(const Region& a, const Region& b) {
        std::vector<FaceCoord> out;
        std::set_difference(a.faces_.begin(), a.faces_.end(), b.faces_.begin(), b.faces_.end(),
                            std::back_inserter(out));
        return Region(std::move(out));
    }

    Region translated(FaceCoord t) const {
        std::vector<FaceCoord> out;
        out.reserve(faces_.size());
        for (auto f : faces_) out.push_back(f + t);
        return Region(std::move(out));
    }

    bool operator==(const Region&) const = default;
    auto operator<=>(const Region&) const = default;

private:
    void normalize() {
        std::sort(faces_.begin(), faces_.end());
        faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
    }
    std::vector<FaceCoord> faces_;
};

inline Region neighbors(FaceCoord f) {
    Region out;
    for (auto d : kHexDirs) out.insert(f + d);
    return out;
}

inline Region neighbors(FaceCoord f, const Extent& ext) {
    Region out;
    for (auto d : kHexDirs) {
        FaceCoord g = f + d;
        if (ext.contains(g)) out.insert(ext.canon(g));
    }
    return out;
}

inline bool adjacent(FaceCoord a, FaceCoord b, const Extent& ext) {
    return hex_distance(a, b, ext) == 1;
}

/// N(A): faces outside A adjacent to at least one face of A.
inline Region neighborhood(const Region& a, const Extent& ext = Extent::plane()) {
    Region out;
    for (auto f : a)
        for (auto d : kHexDirs) {
            FaceCoord g = ext.canon(f + d);
            if (ext.contains(g) && !a.contains(g)) out.insert(g);
        }
    return out;
}

inline Region elementary_disk(FaceCoord f, const Extent& ext = Extent::plane()) {
    Region r = neighbors(f, ext);
    r.insert(ext.canon(f));
    return r;
}

inline Region ball(FaceCoord center, int radius, const Extent& ext = Extent::plane()) {
    Region out;
    for (int dq = -radius; dq <= radius; ++dq)
        for (int dr = -radius; dr <= radius; ++dr) {
            FaceCoord f = center + FaceCoord{dq, dr};
            if (hex_distance(center, f) <= radius && ext.contains(f)) out.insert(ext.canon(f));
        }
    return out;
}

inline bool is_connected(const Region& a, const Extent& ext = Extent::plane()) {
    if (a.empty()) return true;
    std::set<FaceCoord> todo(a.begin(), a.end());
    std::queue<FaceCoord> bfs;
    bfs.push(*a.begin());
    todo.erase(*a.begin());
    while (!bfs.empty()) {
        FaceCoord f = bfs.front();
        bfs.pop();
        for (auto d : kHexDirs) {
            FaceCoord g = ext.canon(f + d);
            auto it = todo.find(g);
            if (it != todo.end()) {
                todo.erase(it);
                bfs.push(g);
            }
        }
    }
    return todo.empty();
}

namespace detail {

/// Lift a torus region to the plane by BFS. Fails (returns false) when the
/// region wraps around a torus cycle, i.e. two inconsistent lifts collide.
inline bool unwrap_region(const Region& a, const Extent& ext, Region& out) {
    if (!ext.torus || a.empty()) {
        out = a;
        return true;
    }
    std::map<FaceCoord, FaceCoord> lift;  // canon face -> plane coords
    std::queue<FaceCoord> bfs;
    FaceCoord seed = *a.begin();
    lift[seed] = seed;
    bfs.push(seed);
    while (!bfs.empty()) {
        FaceCoord f = bfs.front();
        bfs.pop();
        FaceCoord lf = lift.at(f);
        for (auto d : kHexDirs) {
            FaceCoord g = ext.canon(f + d);
            if (!a.contains(g)) continue;
            FaceCoord lg = lf + d;
            auto it = lift.find(g);
            if (it == lift.end()) {
                lift[g] = lg;
                bfs.push(g);
            } else if (it->second != lg) {
                return false;  // wraps a noncontractible cycle
            }
        }
    }
    if (lift.size() != a.size()) return false;  // disconnected; caller decides
    std::vector<FaceCoord> faces;
    faces.reserve(lift.size());
    for (auto& [c, p] : lift) faces.push_back(p);
    out = Region(std::move(faces));
    return true;
}

}  // namespace detail

/// Simply connected test: connected, and the complement inside a grown
/// bounding box (plus a virtual outside node touching the box rim) is
/// connected. Torus regions are unwrapped first; a region wrapping a torus
/// cycle is not simply connected.
inline bool is_simply_connected(const Region& a, const Extent& ext = Extent::plane()) {
    if (a.empty()) return false;
    if (!is_connected(a, ext)) return false;
    Region plane_a;
    if (!detail::unwrap_region(a, ext, plane_a)) return false;

    int qmin = plane_a.begin()->q, qmax = qmin, rmin = plane_a.begin()->r, rmax = rmin;
    for (auto f : plane_a) {
        qmin = std::min(qmin, f.q);
        qmax = std::max(qmax, f.q);
        rmin = std::min(rmin, f.r);
        rmax = std::max(rmax, f.r);
    }
    qmin -= 2; qmax += 2; rmin -= 2; rmax += 2;

    auto in_box = [&](FaceCoord f) {
        return f.q >= qmin && f.q <= qmax && f.r >= rmin && f.r <= rmax;
    };

    // BFS over complement faces starting from a rim face.
    std::set<FaceCoord> seen;
    std::queue<FaceCoord> bfs;
    FaceCoord start{qmin, rmin};
    bfs.push(start);
    seen.insert(start);
    std::size_t complement_total = 0;
    for (int q = qmin; q <= qmax; ++q)
        for (int r = rmin; r <= rmax; ++r)
            if (!plane_a.contains({q, r})) ++complement_total;
    while (!bfs.empty()) {
        FaceCoord f = bfs.front();
        bfs.pop();
        for (auto d : kHexDirs) {
            FaceCoord g = f + d;
            bool rim_hop = !in_box(g);
            if (rim_hop) continue;  // outside node is implicit: rim is connected
            if (plane_a.contains(g) || seen.count(g)) continue;
            seen.insert(g);
            bfs.push(g);
        }
    }
    // The rim of the grown box is itself connected and reachable from start,
    // so the complement is connected iff BFS reached all of it.
    return seen.size() == complement_total;
}

inline bool is_disk(const Region& a, const Extent& ext = Extent::plane()) {
    return !a.empty() && is_simply_connected(a, ext);
}

inline int region_diameter(const Region& a, const Extent& ext = Extent::plane()) {
    int best = 0;
    for (auto f : a)
        for (auto g : a) best = std::max(best, hex_distance(f, g, ext));
    return best;
}

inline int region_radius(const Region& a, const Extent& ext = Extent::plane()) {
    int best = 1 << 30;
    for (auto c : a) {
        int worst = 0;
        for (auto g : a) worst = std::max(worst, hex_distance(c, g, ext));
        best = std::min(best, worst);
    }
    return a.empty() ? 0 : best;
}

/// Count of hexagon edges between A and its complement.
inline int boundary_edge_count(const Region& a, const Extent& ext = Extent::plane()) {
    int cnt = 0;
    for (auto f : a)
        for (auto d : kHexDirs) {
            FaceCoord g = ext.canon(f + d);
            if (!ext.contains(g) || !a.contains(g)) ++cnt;
        }
    return cnt;
}

}  // namespace ebt
