#pragma once

#include <stdexcept>
#include <vector>

#include "ebt/lattice/hex.hpp"
#include "ebt/stabilizer/state.hpp"

namespace ebt {

/// Assignment of physical qubits to hexagonal faces. The provided scheme puts
/// the two toric-code edge qubits east(q,r) and north(q,r) on face (q,r), so
/// every face owns exactly two qubits and each star/plaquette is supported on
/// a triangle of three mutually adjacent faces.
struct CoarseGrainSpec {
    enum class Scheme { EastNorth } scheme = Scheme::EastNorth;
};

namespace toric {

inline std::size_t face_index(const Extent& ext, FaceCoord f) {
    FaceCoord c = ext.canon(f);
    return static_cast<std::size_t>(c.r) * ext.cols + c.q;
}
inline std::size_t east(const Extent& ext, FaceCoord f) { return 2 * face_index(ext, f); }
inline std::size_t north(const Extent& ext, FaceCoord f) { return 2 * face_index(ext, f) + 1; }

inline Pauli star(const Extent& ext, std::size_t n, FaceCoord v) {
    Pauli p(n);
    p.set_x(east(ext, v), true);
    p.set_x(north(ext, v), true);
    p.set_x(east(ext, v + FaceCoord{-1, 0}), true);
    p.set_x(north(ext, v + FaceCoord{0, -1}), true);
    return p;
}

inline Pauli plaquette(const Extent& ext, std::size_t n, FaceCoord f) {
    Pauli p(n);
    p.set_z(east(ext, f), true);
    p.set_z(north(ext, f), true);
    p.set_z(east(ext, f + FaceCoord{0, 1}), true);
    p.set_z(north(ext, f + FaceCoord{1, 0}), true);
    return p;
}

}  // namespace toric

/// Toric code on a rows x cols torus of faces (2 qubits per face), with both
/// logical operators fixed to +1 so the state is pure. Satisfies the strict
/// area law S(A) = |dA|/2 - 1 on disks.
inline StabilizerState make_toric_code(int rows, int cols,
                                       CoarseGrainSpec spec = CoarseGrainSpec{}) {
    (void)spec;
    if (rows < 3 || cols < 3)
        throw std::invalid_argument("make_toric_code: need at least a 3x3 torus");
    Extent ext = Extent::make_torus(rows, cols);
    const std::size_t n = static_cast<std::size_t>(2) * rows * cols;
    std::vector<Pauli> gens;
    gens.reserve(n);
    for (int r = 0; r < rows; ++r)
        for (int q = 0; q < cols; ++q)
            if (!(q == cols - 1 && r == rows - 1)) gens.push_back(toric::star(ext, n, {q, r}));
    for (int r = 0; r < rows; ++r)
        for (int q = 0; q < cols; ++q)
            if (!(q == cols - 1 && r == rows - 1))
                gens.push_back(toric::plaquette(ext, n, {q, r}));
    Pauli z1(n), z2(n);
    for (int q = 0; q < cols; ++q) z1.set_z(toric::east(ext, {q, 0}), true);
    for (int r = 0; r < rows; ++r) z2.set_z(toric::north(ext, {0, r}), true);
    gens.push_back(z1);
    gens.push_back(z2);

    std::vector<FaceCoord> qf(n);
    for (int r = 0; r < rows; ++r)
        for (int q = 0; q < cols; ++q) {
            qf[toric::east(ext, {q, r})] = {q, r};
            qf[toric::north(ext, {q, r})] = {q, r};
        }
    StabilizerState st(n, std::move(gens), std::move(qf), ext);
    st.translation_symmetry = TranslationSymmetry::Full;
    st.local_complete = true;
    return st;
}

/// Side classification for the domain-wall states: faces with row in
/// [0, wall_row) carry the topological phase, the rest the trivial product
/// phase. On the torus the interface consists of the line between rows
/// wall_row-1 / wall_row and the wrapped line between rows-1 / 0.
struct WallGeometry {
    int rows = 0, cols = 0, wall_row = 0;

    bool code_side(FaceCoord f, const Extent& ext) const {
        return ext.canon(f).r < wall_row;
    }
    bool edge_crosses_wall(FaceCoord a, FaceCoord b, const Extent& ext) const {
        return code_side(a, ext) != code_side(b, ext);
    }
    /// A face-adjacency contact (a,b) "touches" the wall when any of the up to
    /// two lattice vertices of the shared edge lies on the wall line, i.e.
    /// some face of {a, b, common neighbors} sits on the other side.
    bool contact_touches_wall(FaceCoord a, FaceCoord b, const Extent& ext) const {
        if (edge_crosses_wall(a, b, ext)) return true;
        bool side = code_side(a, ext);
        Region na = neighbors(a, ext);
        for (auto t : neighbors(b, ext))
            if (na.contains(t) && code_side(t, ext) != side) return true;
        return false;
    }
};

/// Toric code occupying rows [0, wall_row) of a torus, terminated by smooth
/// boundaries against a product state on the remaining rows. A0 holds at every
/// face; A1 holds at wall faces for the allowed partition patterns.
inline StabilizerState make_wall_state(int rows, int cols, int wall_row) {
    if (wall_row < 2 || wall_row > rows - 2)
        throw std::invalid_argument("make_wall_state: need 2 <= wall_row <= rows-2");
    if (cols < 3) throw std::invalid_argument("make_wall_state: need cols >= 3");
    Extent ext = Extent::make_torus(rows, cols);
    const std::size_t n = static_cast<std::size_t>(2) * rows * cols;
    const int w = wall_row;
    std::vector<Pauli> gens;
    gens.reserve(n);
    // Stars rows [0, w): full in the bulk, truncated (3 edges) at rows 0, w-1.
    for (int r = 0; r < w; ++r)
        for (int q = 0; q < cols; ++q) {
            if (q == cols - 1 && r == w - 1) continue;  // dependent: product of all = I
            Pauli p(n);
            p.set_x(toric::east(ext, {q, r}), true);
            p.set_x(toric::east(ext, {q - 1, r}), true);
            if (r <= w - 2) p.set_x(toric::north(ext, {q, r}), true);
            if (r >= 1) p.set_x(toric::north(ext, {q, r - 1}), true);
            gens.push_back(p);
        }
    // Plaquettes rows [0, w-1): all edges inside the code region.
    for (int r = 0; r + 1 < w; ++r)
        for (int q = 0; q < cols; ++q) gens.push_back(toric::plaquette(ext, n, {q, r}));
    // One logical loop fixed, as on the torus.
    Pauli z1(n);
    for (int q = 0; q < cols; ++q) z1.set_z(toric::east(ext, {q, 0}), true);
    gens.push_back(z1);
    // Trivial side: |0> on every remaining qubit.
    for (int r = 0; r < rows; ++r)
        for (int q = 0; q < cols; ++q) {
            if (r >= w) {
                Pauli pe(n);
                pe.set_z(toric::east(ext, {q, r}), true);
                gens.push_back(pe);
            }
            if (r >= w - 1) {
                Pauli pn(n);
                pn.set_z(toric::north(ext, {q, r}), true);
                gens.push_back(pn);
            }
        }

    std::vector<FaceCoord> qf(n);
    for (int r = 0; r < rows; ++r)
        for (int q = 0; q < cols; ++q) {
            qf[toric::east(ext, {q, r})] = {q, r};
            qf[toric::north(ext, {q, r})] = {q, r};
        }
    StabilizerState st(n, std::move(gens), std::move(qf), ext);
    st.translation_symmetry = TranslationSymmetry::ColsOnly;
    st.local_complete = true;
    return st;
}

/// GHZ state across all faces of the extent (one qubit per face): the A0
/// control state, S(A) = 1 for every nonempty proper region.
inline StabilizerState make_ghz_state(int rows, int cols) {
    Extent ext = Extent::make_torus(rows, cols);
    const std::size_t n = static_cast<std::size_t>(rows) * cols;
    std::vector<Pauli> gens;
    Pauli all_x(n);
    for (std::size_t q = 0; q < n; ++q) all_x.set_x(q, true);
    gens.push_back(all_x);
    for (std::size_t q = 0; q + 1 < n; ++q) {
        Pauli p(n);
        p.set_z(q, true);
        p.set_z(q + 1, true);
        gens.push_back(p);
    }
    std::vector<FaceCoord> qf(n);
    for (int r = 0; r < rows; ++r)
        for (int q = 0; q < cols; ++q) qf[static_cast<std::size_t>(r) * cols + q] = {q, r};
    StabilizerState st(n, std::move(gens), std::move(qf), ext);
    st.translation_symmetry = TranslationSymmetry::None;
    st.local_complete = false;
    return st;
}

/// Product state |0...0>, `per_face` qubits on each face.
inline StabilizerState make_product_state(int rows, int cols, int per_face = 1) {
    Extent ext = Extent::make_torus(rows, cols);
    const std::size_t n = static_cast<std::size_t>(rows) * cols * per_face;
    std::vector<Pauli> gens;
    std::vector<FaceCoord> qf(n);
    std::size_t q = 0;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            for (int k = 0; k < per_face; ++k) {
                Pauli p(n);
                p.set_z(q, true);
                gens.push_back(p);
                qf[q] = {c, r};
                ++q;
            }
    StabilizerState st(n, std::move(gens), std::move(qf), ext);
    st.translation_symmetry = TranslationSymmetry::Full;
    st.local_complete = true;
    return st;
}

enum class AnyonKind { E, M };

/// String operator creating an anyon pair at the ends of a face path on a
/// toric-code style state (E: Z-string between the path-end stars; M:
/// X-string between the path-end plaquettes). Diagonal hops route through an
/// intermediate face; an empty or single-face path is the identity.
inline Pauli anyon_string(const StabilizerState& st, AnyonKind kind,
                          const std::vector<FaceCoord>& path) {
    const Extent& ext = st.extent();
    Pauli u(st.num_qubits());
    auto toggle = [&](std::size_t q) {
        if (kind == AnyonKind::E)
            u.set_z(q, !u.get_z(q));
        else
            u.set_x(q, !u.get_x(q));
    };
    auto step = [&](FaceCoord f, FaceCoord d) {
        if (kind == AnyonKind::E) {
            if (d == FaceCoord{1, 0}) toggle(toric::east(ext, f));
            else if (d == FaceCoord{-1, 0}) toggle(toric::east(ext, f + d));
            else if (d == FaceCoord{0, 1}) toggle(toric::north(ext, f));
            else toggle(toric::north(ext, f + d));  // d == {0,-1}
        } else {
            if (d == FaceCoord{1, 0}) toggle(toric::north(ext, f + d));
            else if (d == FaceCoord{-1, 0}) toggle(toric::north(ext, f));
            else if (d == FaceCoord{0, 1}) toggle(toric::east(ext, f + d));
            else toggle(toric::east(ext, f));  // d == {0,-1}
        }
    };
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        FaceCoord f = ext.canon(path[i]);
        FaceCoord g = ext.canon(path[i + 1]);
        FaceCoord d{0, 0};
        bool found = false;
        for (auto cand : kHexDirs)
            if (ext.canon(f + cand) == g) {
                d = cand;
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("anyon_string: path faces not adjacent");
        if (d == FaceCoord{1, -1}) {
            step(f, {0, -1});
            step(ext.canon(f + FaceCoord{0, -1}), {1, 0});
        } else if (d == FaceCoord{-1, 1}) {
            step(f, {-1, 0});
            step(ext.canon(f + FaceCoord{-1, 0}), {0, 1});
        } else {
            step(f, d);
        }
    }
    return u;
}

inline StabilizerState insert_anyon_pair(const StabilizerState& st, AnyonKind kind,
                                         const std::vector<FaceCoord>& path) {
    StabilizerState out = st;
    out.apply_pauli(anyon_string(st, kind, path));
    return out;
}

}  // namespace ebt
