#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chainopt/rational.hpp"

namespace chainopt {

/// An abstract simplex: a strictly increasing tuple of vertex indices.
/// The canonical orientation is the increasing vertex order.
struct Simplex {
    std::vector<int> vertices;

    Simplex() = default;
    explicit Simplex(std::vector<int> v) : vertices(std::move(v)) {}

    int dim() const { return static_cast<int>(vertices.size()) - 1; }

    auto operator<=>(const Simplex&) const = default;

    /// The i-th face drops the i-th vertex; its sign in the boundary is (-1)^i.
    Simplex face(int i) const {
        Simplex f;
        f.vertices.reserve(vertices.size() - 1);
        for (int j = 0; j < static_cast<int>(vertices.size()); ++j)
            if (j != i) f.vertices.push_back(vertices[j]);
        return f;
    }

    bool contains_vertex(int v) const {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    }

    std::string str() const {
        std::ostringstream os;
        os << "(";
        for (size_t i = 0; i < vertices.size(); ++i)
            os << (i ? "," : "") << vertices[i];
        os << ")";
        return os.str();
    }
};

/// Finite face-closed simplicial complex.
///
/// Simplices of each dimension are stored sorted lexicographically on their
/// vertex tuples; the index in that order is the simplex id, stable across
/// rebuilds from the same simplex set. Input vertex labels are compacted to
/// 0..vertex_count-1 (the relabeling is kept in vertex_labels()).
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Builds the face closure of the given simplices. Tuples may list
    /// vertices in any order (they are sorted; orientation data is not taken
    /// from input order) and may use arbitrary non-negative labels.
    /// Duplicate vertices within a tuple or duplicate tuples are rejected.
    static SimplicialComplex build(const std::vector<std::vector<int>>& top_simplices) {
        std::set<int> labels;
        std::vector<Simplex> tops;
        tops.reserve(top_simplices.size());
        for (const auto& tup : top_simplices) {
            if (tup.empty()) throw Error("empty simplex in input");
            std::vector<int> v = tup;
            std::sort(v.begin(), v.end());
            if (std::adjacent_find(v.begin(), v.end()) != v.end())
                throw Error("simplex with repeated vertex: " + Simplex(tup).str());
            for (int x : v) {
                if (x < 0) throw Error("negative vertex index in input");
                labels.insert(x);
            }
            tops.emplace_back(std::move(v));
        }
        {
            auto sorted = tops;
            std::sort(sorted.begin(), sorted.end());
            auto dup = std::adjacent_find(sorted.begin(), sorted.end());
            if (dup != sorted.end())
                throw Error("duplicate top simplex " + dup->str());
        }

        SimplicialComplex X;
        X.vertex_labels_.assign(labels.begin(), labels.end());
        std::map<int, int> relabel;
        for (int i = 0; i < static_cast<int>(X.vertex_labels_.size()); ++i)
            relabel[X.vertex_labels_[i]] = i;

        std::set<Simplex> closure;
        for (auto& s : tops) {
            for (int& v : s.vertices) v = relabel[v];
            close_under_faces(s, closure);
        }
        int dim = 0;
        for (const auto& s : closure) dim = std::max(dim, s.dim());
        X.simplices_.assign(dim + 1, {});
        for (const auto& s : closure) X.simplices_[s.dim()].push_back(s);
        // std::set iteration is lex order already; per-dimension order follows.
        return X;
    }

    int dim() const { return static_cast<int>(simplices_.size()) - 1; }
    int vertex_count() const { return simplices_.empty() ? 0 : static_cast<int>(simplices_[0].size()); }

    /// Original input labels, indexed by compacted vertex id.
    const std::vector<int>& vertex_labels() const { return vertex_labels_; }

    /// Number of n-simplices (0 when n is out of range).
    int size(int n) const {
        if (n < 0 || n > dim()) return 0;
        return static_cast<int>(simplices_[n].size());
    }

    const Simplex& simplex(int n, int id) const {
        if (n < 0 || n > dim() || id < 0 || id >= size(n))
            throw Error("simplex index out of range");
        return simplices_[n][id];
    }

    const std::vector<Simplex>& simplices(int n) const {
        static const std::vector<Simplex> kEmpty;
        if (n < 0 || n > dim()) return kEmpty;
        return simplices_[n];
    }

    /// Id of the simplex with the given sorted vertex tuple, if present.
    std::optional<int> simplex_id(const Simplex& s) const {
        int n = s.dim();
        if (n < 0 || n > dim()) return std::nullopt;
        const auto& v = simplices_[n];
        auto it = std::lower_bound(v.begin(), v.end(), s);
        if (it == v.end() || !(*it == s)) return std::nullopt;
        return static_cast<int>(it - v.begin());
    }

    std::optional<int> simplex_id(std::vector<int> vertices) const {
        std::sort(vertices.begin(), vertices.end());
        return simplex_id(Simplex(std::move(vertices)));
    }

    /// Maximal simplices (those that are a face of no other simplex).
    std::vector<Simplex> top_simplices() const {
        std::set<Simplex> faces_of_something;
        for (int n = 1; n <= dim(); ++n)
            for (const auto& s : simplices_[n])
                for (int i = 0; i <= s.dim(); ++i) faces_of_something.insert(s.face(i));
        std::vector<Simplex> tops;
        for (int n = 0; n <= dim(); ++n)
            for (const auto& s : simplices_[n])
                if (!faces_of_something.count(s)) tops.push_back(s);
        return tops;
    }

private:
    static void close_under_faces(const Simplex& s, std::set<Simplex>& out) {
        if (!out.insert(s).second) return;
        if (s.dim() == 0) return;
        for (int i = 0; i <= s.dim(); ++i) close_under_faces(s.face(i), out);
    }

    std::vector<std::vector<Simplex>> simplices_;
    std::vector<int> vertex_labels_;
};

/// Face-closed collection of simplices of a parent complex, stored as
/// per-dimension membership flags.
class Subcomplex {
public:
    Subcomplex() = default;

    explicit Subcomplex(const SimplicialComplex& parent) : parent_(&parent) {
        member_.resize(parent.dim() + 1);
        for (int n = 0; n <= parent.dim(); ++n) member_[n].assign(parent.size(n), 0);
    }

    static Subcomplex empty(const SimplicialComplex& parent) { return Subcomplex(parent); }

    static Subcomplex full(const SimplicialComplex& parent) {
        Subcomplex A(parent);
        for (auto& row : A.member_) std::fill(row.begin(), row.end(), 1);
        return A;
    }

    const SimplicialComplex& parent() const {
        if (!parent_) throw Error("subcomplex has no parent");
        return *parent_;
    }

    /// Inserts a simplex together with all of its faces.
    void insert_closed(const Simplex& s) {
        auto id = parent().simplex_id(s);
        if (!id) throw Error("subcomplex member " + s.str() + " not in parent complex");
        if (member_[s.dim()][*id]) return;
        member_[s.dim()][*id] = 1;
        for (int i = 0; i <= s.dim() && s.dim() > 0; ++i) insert_closed(s.face(i));
    }

    void insert_closed(int n, int id) { insert_closed(parent().simplex(n, id)); }

    bool contains(int n, int id) const {
        if (n < 0 || n >= static_cast<int>(member_.size())) return false;
        if (id < 0 || id >= static_cast<int>(member_[n].size())) return false;
        return member_[n][id] != 0;
    }

    int size(int n) const {
        if (n < 0 || n >= static_cast<int>(member_.size())) return 0;
        int c = 0;
        for (char f : member_[n]) c += (f != 0);
        return c;
    }

    bool is_empty() const {
        for (const auto& row : member_)
            for (char f : row)
                if (f) return false;
        return true;
    }

    /// Ids of member n-simplices, ascending.
    std::vector<int> ids(int n) const {
        std::vector<int> out;
        if (n < 0 || n >= static_cast<int>(member_.size())) return out;
        for (int i = 0; i < static_cast<int>(member_[n].size()); ++i)
            if (member_[n][i]) out.push_back(i);
        return out;
    }

    /// Member simplices as a standalone complex (vertex labels preserved
    /// from the parent's compacted ids).
    SimplicialComplex as_complex() const {
        std::vector<std::vector<int>> tops;
        std::set<Simplex> faces;
        for (int n = static_cast<int>(member_.size()) - 1; n >= 0; --n)
            for (int id = 0; id < static_cast<int>(member_[n].size()); ++id)
                if (member_[n][id]) {
                    const Simplex& s = parent().simplex(n, id);
                    if (!faces.count(s)) {
                        tops.push_back(s.vertices);
                        std::set<Simplex> sub;
                        collect_faces(s, sub);
                        faces.insert(sub.begin(), sub.end());
                    }
                }
        return SimplicialComplex::build(tops);
    }

    bool face_closed() const {
        for (int n = 1; n < static_cast<int>(member_.size()); ++n)
            for (int id = 0; id < static_cast<int>(member_[n].size()); ++id)
                if (member_[n][id]) {
                    const Simplex& s = parent().simplex(n, id);
                    for (int i = 0; i <= s.dim(); ++i) {
                        auto fid = parent().simplex_id(s.face(i));
                        if (!fid || !member_[n - 1][*fid]) return false;
                    }
                }
        return true;
    }

private:
    static void collect_faces(const Simplex& s, std::set<Simplex>& out) {
        if (!out.insert(s).second) return;
        for (int i = 0; i <= s.dim() && s.dim() > 0; ++i) collect_faces(s.face(i), out);
    }

    const SimplicialComplex* parent_ = nullptr;
    std::vector<std::vector<char>> member_;
};

}  // namespace chainopt
