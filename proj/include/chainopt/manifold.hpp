#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "chainopt/simplicial_complex.hpp"

namespace chainopt {

enum class ManifoldClass {
    closed_3_manifold,
    manifold_3_with_boundary,
    surface,
    non_manifold,
};

inline const char* to_string(ManifoldClass c) {
    switch (c) {
        case ManifoldClass::closed_3_manifold: return "closed-3-manifold";
        case ManifoldClass::manifold_3_with_boundary: return "3-manifold-with-boundary";
        case ManifoldClass::surface: return "surface";
        case ManifoldClass::non_manifold: return "non-manifold";
    }
    return "?";
}

struct ManifoldReport {
    ManifoldClass classification = ManifoldClass::non_manifold;
    Subcomplex boundary;     // meaningful unless non-manifold
    std::string detail;      // names the failing simplex/link when non-manifold

    bool is_manifold() const { return classification != ManifoldClass::non_manifold; }
};

namespace detail {

// Connectivity + degree profile of a multigraph given as an edge list over
// arbitrary integer node labels. Used for link checks.
struct LinkGraph {
    std::map<int, int> degree;
    std::vector<std::pair<int, int>> edges;

    void add_node(int v) { degree.emplace(v, 0); }
    void add_edge(int a, int b) {
        edges.emplace_back(a, b);
        ++degree[a];
        ++degree[b];
    }

    bool connected() const {
        if (degree.empty()) return true;
        std::map<int, int> comp;
        int next = 0;
        for (const auto& [v, _] : degree) comp[v] = next++;
        std::vector<int> parent(next);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& [a, b] : edges) parent[find(comp[a])] = find(comp[b]);
        int root = find(0);
        for (int i = 0; i < next; ++i)
            if (find(i) != root) return false;
        return true;
    }

    // Single cycle: connected, every degree 2, #edges == #nodes.
    bool is_circle() const {
        if (degree.empty()) return false;
        for (const auto& [_, d] : degree)
            if (d != 2) return false;
        return edges.size() == degree.size() && connected();
    }

    // Single path (possibly one isolated node): connected, two endpoints of
    // degree <= 1, rest degree 2.
    bool is_arc() const {
        if (degree.empty()) return false;
        int ends = 0;
        for (const auto& [_, d] : degree) {
            if (d == 0) ends += 2;
            else if (d == 1) ++ends;
            else if (d != 2) return false;
        }
        return ends == 2 && edges.size() + 1 == degree.size() && connected();
    }
};

// True when every simplex is a face of some top-dimensional simplex.
inline bool is_pure(const SimplicialComplex& X) {
    int d = X.dim();
    std::vector<std::vector<char>> covered(d + 1);
    for (int n = 0; n <= d; ++n) covered[n].assign(X.size(n), 0);
    std::fill(covered[d].begin(), covered[d].end(), 1);
    for (int n = d; n >= 1; --n)
        for (int id = 0; id < X.size(n); ++id) {
            if (!covered[n][id]) continue;
            const Simplex& s = X.simplex(n, id);
            for (int i = 0; i <= n; ++i) covered[n - 1][*X.simplex_id(s.face(i))] = 1;
        }
    for (int n = 0; n <= d; ++n)
        for (char f : covered[n])
            if (!f) return false;
    return true;
}

}  // namespace detail

/// Classifies a 2- or 3-dimensional complex via link conditions. For
/// dimension 3: every triangle lies in at most two tetrahedra, every edge
/// link is a circle or an arc, and every vertex link is a sphere or a disc
/// (Euler characteristic plus connectivity). Reports the boundary
/// subcomplex when the complex is a manifold. Non-manifold is a valid
/// classification, not an error.
inline ManifoldReport check_manifold(const SimplicialComplex& M) {
    if (M.dim() != 2 && M.dim() != 3) throw Error("check_manifold: dimension must be 2 or 3");
    ManifoldReport report;
    report.boundary = Subcomplex(M);

    auto fail = [&](const std::string& why) {
        report.classification = ManifoldClass::non_manifold;
        report.detail = why;
        return report;
    };

    if (!detail::is_pure(M)) return fail("complex is not pure of top dimension");

    const int d = M.dim();
    // Cofacet counts for (d-1)-simplices.
    std::vector<std::vector<int>> cofacets(M.size(d - 1));
    for (int id = 0; id < M.size(d); ++id) {
        const Simplex& s = M.simplex(d, id);
        for (int i = 0; i <= d; ++i) cofacets[*M.simplex_id(s.face(i))].push_back(id);
    }
    for (int f = 0; f < M.size(d - 1); ++f)
        if (cofacets[f].size() > 2)
            return fail(M.simplex(d - 1, f).str() + " lies in more than two top simplices");

    std::vector<int> boundary_facets;
    for (int f = 0; f < M.size(d - 1); ++f)
        if (cofacets[f].size() == 1) boundary_facets.push_back(f);

    if (d == 3) {
        // Edge links: vertices w with (e, w) a triangle, edges (w1, w2) with
        // (e, w1, w2) a tetrahedron.
        for (int eid = 0; eid < M.size(1); ++eid) {
            const Simplex& e = M.simplex(1, eid);
            detail::LinkGraph link;
            for (int tid = 0; tid < M.size(2); ++tid) {
                const Simplex& t = M.simplex(2, tid);
                if (!t.contains_vertex(e.vertices[0]) || !t.contains_vertex(e.vertices[1]))
                    continue;
                for (int v : t.vertices)
                    if (v != e.vertices[0] && v != e.vertices[1]) link.add_node(v);
            }
            for (int tid = 0; tid < M.size(3); ++tid) {
                const Simplex& t = M.simplex(3, tid);
                if (!t.contains_vertex(e.vertices[0]) || !t.contains_vertex(e.vertices[1]))
                    continue;
                std::vector<int> rest;
                for (int v : t.vertices)
                    if (v != e.vertices[0] && v != e.vertices[1]) rest.push_back(v);
                link.add_edge(rest[0], rest[1]);
            }
            if (!link.is_circle() && !link.is_arc())
                return fail("link of edge " + e.str() + " is not a circle or arc");
        }
    }

    // Vertex links. For d == 3 the link is a 2-complex that must be a sphere
    // (chi 2, no boundary) or a disc (chi 1); for d == 2 a circle or arc.
    for (int vid = 0; vid < M.size(0); ++vid) {
        int v = M.simplex(0, vid).vertices[0];
        if (d == 2) {
            detail::LinkGraph link;
            for (int eid = 0; eid < M.size(1); ++eid) {
                const Simplex& e = M.simplex(1, eid);
                if (e.contains_vertex(v))
                    link.add_node(e.vertices[0] == v ? e.vertices[1] : e.vertices[0]);
            }
            for (int tid = 0; tid < M.size(2); ++tid) {
                const Simplex& t = M.simplex(2, tid);
                if (!t.contains_vertex(v)) continue;
                std::vector<int> rest;
                for (int w : t.vertices)
                    if (w != v) rest.push_back(w);
                link.add_edge(rest[0], rest[1]);
            }
            if (!link.is_circle() && !link.is_arc())
                return fail("link of vertex " + std::to_string(v) + " is not a circle or arc");
        } else {
            int lv = 0, le = 0, lf = 0;
            detail::LinkGraph conn;  // connectivity over link vertices
            std::vector<std::pair<Simplex, int>> link_edge_cover;  // link edge -> cofacet count
            std::map<Simplex, int> link_edges;
            for (int eid = 0; eid < M.size(1); ++eid)
                if (M.simplex(1, eid).contains_vertex(v)) {
                    ++lv;
                    const Simplex& e = M.simplex(1, eid);
                    conn.add_node(e.vertices[0] == v ? e.vertices[1] : e.vertices[0]);
                }
            for (int tid = 0; tid < M.size(2); ++tid) {
                const Simplex& t = M.simplex(2, tid);
                if (!t.contains_vertex(v)) continue;
                ++le;
                std::vector<int> rest;
                for (int w : t.vertices)
                    if (w != v) rest.push_back(w);
                conn.add_edge(rest[0], rest[1]);
                link_edges[Simplex(rest)] = 0;
            }
            for (int tid = 0; tid < M.size(3); ++tid) {
                const Simplex& t = M.simplex(3, tid);
                if (!t.contains_vertex(v)) continue;
                ++lf;
                std::vector<int> rest;
                for (int w : t.vertices)
                    if (w != v) rest.push_back(w);
                for (int i = 0; i < 3; ++i) {
                    std::vector<int> le2;
                    for (int j = 0; j < 3; ++j)
                        if (j != i) le2.push_back(rest[j]);
                    ++link_edges[Simplex(le2)];
                }
            }
            bool has_free_edge = false;
            for (const auto& [s, count] : link_edges) {
                if (count > 2)
                    return fail("link of vertex " + std::to_string(v) + " is not a surface");
                if (count < 2) has_free_edge = true;
            }
            if (!conn.connected())
                return fail("link of vertex " + std::to_string(v) + " is disconnected");
            int chi = lv - le + lf;
            if (!((chi == 2 && !has_free_edge) || (chi == 1 && has_free_edge)))
                return fail("link of vertex " + std::to_string(v) +
                            " is not a sphere or disc (chi " + std::to_string(chi) + ")");
        }
    }

    for (int f : boundary_facets) report.boundary.insert_closed(d - 1, f);
    if (d == 2)
        report.classification = ManifoldClass::surface;
    else
        report.classification = boundary_facets.empty() ? ManifoldClass::closed_3_manifold
                                                        : ManifoldClass::manifold_3_with_boundary;
    return report;
}

}  // namespace chainopt
