#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "chainopt/homology.hpp"
#include "chainopt/smith.hpp"

using namespace chainopt;

namespace {

SparseIntMatrix from_dense(const std::vector<std::vector<Int>>& d) {
    int rows = static_cast<int>(d.size());
    int cols = rows == 0 ? 0 : static_cast<int>(d[0].size());
    SparseIntMatrix M(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i)
            if (d[i][j] != 0) M.append(i, j, d[i][j]);
    return M;
}

Int det_oracle(const std::vector<std::vector<Int>>& m) {
    size_t n = m.size();
    if (n == 0) return Int(1);
    if (n == 1) return m[0][0];
    Int total(0);
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<Int>> minor(n - 1, std::vector<Int>(n - 1));
        for (size_t i = 1; i < n; ++i) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c)
                if (c != j) minor[i - 1][cc++] = m[i][c];
        }
        Int term = m[0][j] * det_oracle(minor);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

// D == U * M * V, entry for entry.
void check_decomposition(const SparseIntMatrix& M, const SmithDecomposition& snf) {
    auto dense = M.to_dense();
    int r = M.rows(), c = M.cols();
    std::vector<std::vector<Int>> UM(r, std::vector<Int>(c, Int(0)));
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k)
            if (snf.U[i][k] != 0)
                for (int j = 0; j < c; ++j) UM[i][j] += snf.U[i][k] * dense[k][j];
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            Int entry(0);
            for (int k = 0; k < c; ++k) entry += UM[i][k] * snf.V[k][j];
            Int expected = (i == j && i < static_cast<int>(snf.diagonal.size()))
                               ? snf.diagonal[i]
                               : Int(0);
            REQUIRE(entry == expected);
        }
}

// The 6-vertex triangulation of the real projective plane: the star of
// vertex 0 over the pentagon (1,2,3,4,5) plus the 5-triangle Moebius band.
SimplicialComplex rp2() {
    return SimplicialComplex::build({{0, 1, 2},
                                     {0, 2, 3},
                                     {0, 3, 4},
                                     {0, 4, 5},
                                     {0, 1, 5},
                                     {1, 2, 4},
                                     {2, 3, 5},
                                     {1, 3, 4},
                                     {2, 4, 5},
                                     {1, 3, 5}});
}

}  // namespace

TEST_CASE("smith normal form on small examples") {
    auto M = from_dense({{Int(2), Int(0)}, {Int(0), Int(3)}});
    auto snf = smith_normal_form(M);
    REQUIRE(snf.rank == 2);
    CHECK(snf.diagonal[0] == 1);
    CHECK(snf.diagonal[1] == 6);
    check_decomposition(M, snf);

    SparseIntMatrix zero(3, 2);
    auto z = smith_normal_form(zero);
    CHECK(z.rank == 0);
    for (const auto& d : z.diagonal) CHECK(d == 0);
    check_decomposition(zero, z);
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-4, 4);
    std::uniform_int_distribution<int> dims(1, 5);
    for (int trial = 0; trial < 40; ++trial) {
        int r = dims(rng), c = dims(rng);
        std::vector<std::vector<Int>> d(r, std::vector<Int>(c));
        for (auto& row : d)
            for (auto& x : row) x = entry(rng);
        auto M = from_dense(d);
        auto snf = smith_normal_form(M);
        check_decomposition(M, snf);
        Int du = det_oracle(snf.U), dv = det_oracle(snf.V);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        for (int i = 0; i + 1 < snf.rank; ++i) CHECK(snf.diagonal[i + 1] % snf.diagonal[i] == 0);
    }
}

TEST_CASE("solve_integer") {
    auto I = from_dense({{Int(1), Int(0)}, {Int(0), Int(1)}});
    auto x = solve_integer(I, {Int(5), Int(-7)});
    REQUIRE(x);
    CHECK((*x)[0] == 5);
    CHECK((*x)[1] == -7);

    auto two = from_dense({{Int(2)}});
    CHECK(!solve_integer(two, {Int(3)}));
    auto even = solve_integer(two, {Int(4)});
    REQUIRE(even);
    CHECK((*even)[0] == 2);

    // Boundary of one face of the boundary sphere of the tetrahedron.
    auto sphere = SimplicialComplex::build({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    auto d2 = boundary_matrix(sphere, 2);
    Chain face(2);
    face.set(0, Int(1));
    std::vector<Int> b(sphere.size(1), Int(0));
    auto fb = apply_boundary(sphere, face);
    for (const auto& [id, v] : fb.coefficients) b[id] = v;
    auto sol = solve_integer(d2, b);
    REQUIRE(sol);
    CHECK(d2.multiply(*sol) == b);
}

TEST_CASE("solve_integer roundtrip property") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> dims(1, 5);
    for (int trial = 0; trial < 40; ++trial) {
        int r = dims(rng), c = dims(rng);
        std::vector<std::vector<Int>> d(r, std::vector<Int>(c));
        for (auto& row : d)
            for (auto& x : row) x = entry(rng);
        auto M = from_dense(d);
        std::vector<Int> x0(c);
        for (auto& v : x0) v = entry(rng);
        auto b = M.multiply(x0);
        auto x = solve_integer(M, b);
        REQUIRE(x);
        CHECK(M.multiply(*x) == b);
    }
}

TEST_CASE("homology of standard spaces") {
    auto circle = SimplicialComplex::build({{0, 1}, {1, 2}, {0, 2}});
    CHECK(homology(circle, 1) == HomologyGroup{1, {}});
    CHECK(homology(circle, 0) == HomologyGroup{1, {}});

    auto sphere = SimplicialComplex::build({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(homology(sphere, 2) == HomologyGroup{1, {}});
    CHECK(homology(sphere, 1) == HomologyGroup{0, {}});

    auto proj = rp2();
    auto h1 = homology(proj, 1);
    CHECK(h1.betti == 0);
    REQUIRE(h1.torsion.size() == 1);
    CHECK(h1.torsion[0] == 2);
    CHECK(homology(proj, 2) == HomologyGroup{0, {}});

    // d2 of RP^2 has exactly one invariant factor equal to 2.
    auto snf = smith_normal_form(boundary_matrix(proj, 2));
    int twos = 0;
    for (const auto& d : snf.diagonal)
        if (d == 2) ++twos;
    CHECK(twos == 1);
}

TEST_CASE("homology of cones is trivial in positive dimensions") {
    std::vector<std::vector<std::vector<int>>> bases = {
        {{0, 1}, {1, 2}, {0, 2}},
        {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}},
    };
    for (const auto& base_tops : bases) {
        auto base = SimplicialComplex::build(base_tops);
        int apex = base.vertex_count();
        std::vector<std::vector<int>> tops;
        for (const auto& s : base.top_simplices()) {
            tops.push_back(s.vertices);
            auto coned = s.vertices;
            coned.push_back(apex);
            tops.push_back(coned);
        }
        auto cone = SimplicialComplex::build(tops);
        for (int n = 1; n <= cone.dim(); ++n) CHECK(homology(cone, n).trivial());
        CHECK(homology(cone, 0) == HomologyGroup{1, {}});
    }
}
