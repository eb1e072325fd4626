#include <doctest.h>

#include <algorithm>
#include <set>

#include "error.hpp"
#include "neighborhood.hpp"
#include "simplex.hpp"
#include "test_util.hpp"

using namespace scx;

static SimplicialComplex triangle() { return SimplicialComplex::build({{0, 1, 2}}); }
static SimplicialComplex two_triangles() { return SimplicialComplex::build({{0, 1, 2}, {1, 2, 3}}); }

TEST_CASE("downward closure of a single triangle") {
    auto X = triangle();
    CHECK(X.dim() == 2);
    CHECK(X.count(0) == 3);
    CHECK(X.count(1) == 3);
    CHECK(X.count(2) == 1);
    CHECK(X.size() == 7);
    CHECK(X.size_below_top() == 6);
}

TEST_CASE("single vertex complex") {
    auto X = SimplicialComplex::build({{0}});
    CHECK(X.dim() == 0);
    CHECK(X.count(0) == 1);
    CHECK(X.size() == 1);
}

TEST_CASE("two glued triangles") {
    auto X = two_triangles();
    CHECK(X.dim() == 2);
    CHECK(X.count(0) == 4);
    CHECK(X.count(1) == 5);
    CHECK(X.count(2) == 2);
    CHECK(X.size() == 11);
}

TEST_CASE("canonical order is independent of input order") {
    auto a = SimplicialComplex::build({{0, 1, 2}, {1, 2, 3}});
    auto b = SimplicialComplex::build({{3, 2, 1}, {2, 0, 1}});
    REQUIRE(a.size() == b.size());
    for (std::size_t g = 0; g < a.size(); ++g) {
        CHECK(a.simplex(g) == b.simplex(g));
    }
}

TEST_CASE("duplicate and redundant maximal simplices collapse") {
    auto a = SimplicialComplex::build({{0, 1, 2}});
    auto b = SimplicialComplex::build({{0, 1, 2}, {2, 1, 0}, {0, 1}, {2}});
    REQUIRE(a.size() == b.size());
    for (std::size_t g = 0; g < a.size(); ++g) {
        CHECK(a.simplex(g) == b.simplex(g));
    }
}

TEST_CASE("malformed simplices are rejected") {
    CHECK_THROWS_WITH_AS(make_simplex({}), doctest::Contains("malformed simplex"), Error);
    CHECK_THROWS_WITH_AS(make_simplex({1, 1, 2}), doctest::Contains("malformed simplex"), Error);
    CHECK_THROWS_WITH_AS(make_simplex({-1, 0}), doctest::Contains("malformed simplex"), Error);
    CHECK_THROWS_AS(SimplicialComplex::build({{0, 0, 1}}), Error);
}

TEST_CASE("facets") {
    auto X = triangle();
    SUBCASE("of the 2-simplex") {
        auto f = facets(X, Simplex{0, 1, 2});
        REQUIRE(f.size() == 3);
        CHECK(f[0] == Simplex{0, 1});
        CHECK(f[1] == Simplex{0, 2});
        CHECK(f[2] == Simplex{1, 2});
    }
    SUBCASE("of a vertex: none") { CHECK(facets(X, Simplex{0}).empty()); }
    SUBCASE("of an edge") {
        auto f = facets(X, Simplex{0, 1});
        REQUIRE(f.size() == 2);
        CHECK(f[0] == Simplex{0});
        CHECK(f[1] == Simplex{1});
    }
}

TEST_CASE("cofacets") {
    auto X = two_triangles();
    SUBCASE("shared edge has two") {
        auto c = cofacets(X, Simplex{1, 2});
        REQUIRE(c.size() == 2);
        CHECK(c[0] == Simplex{0, 1, 2});
        CHECK(c[1] == Simplex{1, 2, 3});
    }
    SUBCASE("top simplex has none") { CHECK(cofacets(X, Simplex{0, 1, 2}).empty()); }
    SUBCASE("boundary edge has one") {
        auto c = cofacets(X, Simplex{0, 1});
        REQUIRE(c.size() == 1);
        CHECK(c[0] == Simplex{0, 1, 2});
    }
}

TEST_CASE("CO and C intersections") {
    auto X = two_triangles();
    SUBCASE("edges of one triangle share it") {
        auto co = co_intersection(X, Simplex{0, 1}, Simplex{0, 2});
        REQUIRE(co.size() == 1);
        CHECK(co[0] == Simplex{0, 1, 2});
    }
    SUBCASE("edges of different triangles share nothing") {
        CHECK(co_intersection(X, Simplex{0, 1}, Simplex{1, 3}).empty());
    }
    SUBCASE("vertices joined by an edge") {
        auto co = co_intersection(X, Simplex{1}, Simplex{2});
        REQUIRE(co.size() == 1);
        CHECK(co[0] == Simplex{1, 2});
    }
    SUBCASE("triangles sharing an edge") {
        auto c = facet_intersection(X, Simplex{0, 1, 2}, Simplex{1, 2, 3});
        REQUIRE(c.size() == 1);
        CHECK(c[0] == Simplex{1, 2});
    }
    SUBCASE("edges sharing a vertex") {
        auto c = facet_intersection(X, Simplex{0, 1}, Simplex{1, 3});
        REQUIRE(c.size() == 1);
        CHECK(c[0] == Simplex{1});
    }
    SUBCASE("vertices never co-adjacent") {
        CHECK(facet_intersection(X, Simplex{0}, Simplex{1}).empty());
    }
    SUBCASE("dimension mismatch rejected") {
        CHECK_THROWS_WITH_AS(co_intersection(X, Simplex{0}, Simplex{1, 2}),
                              doctest::Contains("dimension mismatch"), Error);
        CHECK_THROWS_WITH_AS(facet_intersection(X, Simplex{0}, Simplex{1, 2}),
                              doctest::Contains("dimension mismatch"), Error);
    }
    SUBCASE("identical arguments rejected") {
        CHECK_THROWS_AS(co_intersection(X, Simplex{0, 1}, Simplex{0, 1}), Error);
    }
}

TEST_CASE("downward closure property on random complexes") {
    RngState rng = RngState::substream(11, 0);
    for (int trial = 0; trial < 15; ++trial) {
        auto X = testutil::random_complex(rng, 12, 3);
        for (std::size_t g = 0; g < X.size(); ++g) {
            const auto& vs = X.simplex(g).vertices;
            if (vs.size() < 2) continue;
            for (std::size_t drop = 0; drop < vs.size(); ++drop) {
                std::vector<VertexId> face;
                for (std::size_t i = 0; i < vs.size(); ++i) {
                    if (i != drop) face.push_back(vs[i]);
                }
                CHECK(X.contains(Simplex(face)));
            }
        }
        // facet/cofacet lists are mutually consistent
        for (std::size_t g = 0; g < X.size(); ++g) {
            for (std::size_t f : X.facet_ordinals(g)) {
                const auto& back = X.cofacet_ordinals(f);
                CHECK(std::find(back.begin(), back.end(), g) != back.end());
            }
        }
    }
}

TEST_CASE("unknown simplex lookup") {
    auto X = triangle();
    CHECK_THROWS_WITH_AS(X.global_ordinal(Simplex{0, 3}), doctest::Contains("unknown simplex"), Error);
    CHECK_FALSE(X.contains(Simplex{5}));
}

TEST_CASE("coordinate validation") {
    Coordinates coords;
    coords.ambient_dim = 2;
    coords.points[0] = {0.0, 0.0};
    coords.points[1] = {1.0, 0.0};
    CHECK_THROWS_WITH_AS(SimplicialComplex::build({{0, 1, 2}}, coords),
                          doctest::Contains("missing coordinate"), Error);
    coords.points[2] = {1.0};
    CHECK_THROWS_AS(SimplicialComplex::build({{0, 1, 2}}, coords), Error);
    coords.points[2] = {0.5, 1.0};
    auto X = SimplicialComplex::build({{0, 1, 2}}, coords);
    CHECK(X.has_coords());
    auto Y = triangle();
    CHECK_THROWS_WITH_AS(Y.coords(), doctest::Contains("coordinates"), Error);
}

TEST_CASE("per-dimension adjacency matches hand values") {
    SUBCASE("triangle vertex adjacency is K3") {
        auto A = per_dim_adjacency(triangle(), 0).to_dense();
        Mat expect(3, 3);
        expect << 0, 1, 1, 1, 0, 1, 1, 1, 0;
        CHECK((A - expect).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("edges of different triangles are not adjacent") {
        auto X = two_triangles();
        auto A = per_dim_adjacency(X, 1);
        auto i = X.local_ordinal(Simplex{0, 1});
        auto j = X.local_ordinal(Simplex{1, 3});
        CHECK(A.at(i, j) == 0.0);
        // the shared edge {1,2} is adjacent to every other edge
        auto s = X.local_ordinal(Simplex{1, 2});
        CHECK(A.row_sums()(static_cast<Eigen::Index>(s)) == 4.0);
    }
    SUBCASE("no adjacency at the top dimension") {
        CHECK_THROWS_WITH_AS(per_dim_adjacency(triangle(), 2), doctest::Contains("top dimension"), Error);
    }
}

TEST_CASE("per-dimension co-adjacency matches hand values") {
    SUBCASE("triangle edge co-adjacency is K3") {
        auto C = per_dim_coadjacency(triangle(), 1).to_dense();
        Mat expect(3, 3);
        expect << 0, 1, 1, 1, 0, 1, 1, 1, 0;
        CHECK((C - expect).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("glued triangles are co-adjacent via the shared edge") {
        auto C = per_dim_coadjacency(two_triangles(), 2);
        CHECK(C.at(0, 1) == 1.0);
        CHECK(C.at(0, 0) == 0.0);
    }
    SUBCASE("no co-adjacency at dimension zero") {
        CHECK_THROWS_WITH_AS(per_dim_coadjacency(triangle(), 0), doctest::Contains("dimension zero"), Error);
    }
}

TEST_CASE("coboundary incidence") {
    SUBCASE("triangle, m=1: all edges bound the one 2-simplex") {
        auto B = coboundary_incidence(triangle(), 1).to_dense();
        REQUIRE(B.rows() == 3);
        REQUIRE(B.cols() == 1);
        CHECK(B.minCoeff() == 1.0);
    }
    SUBCASE("m=0: every edge has two endpoints") {
        auto B = coboundary_incidence(two_triangles(), 0);
        Vec cs = B.col_sums();
        for (Eigen::Index j = 0; j < cs.size(); ++j) CHECK(cs(j) == 2.0);
    }
    SUBCASE("shared edge row sums to 2") {
        auto X = two_triangles();
        auto B = coboundary_incidence(X, 1);
        auto r = X.local_ordinal(Simplex{1, 2});
        CHECK(B.row_sums()(static_cast<Eigen::Index>(r)) == 2.0);
    }
}

TEST_CASE("global adjacency and co-adjacency blocks") {
    auto X = two_triangles();
    auto A = adjacency_matrix(X);
    CHECK(A.rows() == X.size_below_top());
    // cross-dimension blocks stay empty
    for (const auto& [key, v] : A.entries()) {
        bool i_vertex = key.first < X.count(0);
        bool j_vertex = key.second < X.count(0);
        CHECK(i_vertex == j_vertex);
        CHECK(v > 0.0);
    }
    auto C = coadjacency_matrix(X);
    CHECK(C.rows() == X.size() - X.count(0));

    // blocks agree with the per-dimension matrices
    auto A0 = per_dim_adjacency(X, 0);
    for (const auto& [key, v] : A0.entries()) {
        CHECK(A.at(key.first, key.second) == v);
    }
    auto C2 = per_dim_coadjacency(X, 2);
    std::size_t off = X.dim_offset(2) - X.count(0);
    for (const auto& [key, v] : C2.entries()) {
        CHECK(C.at(off + key.first, off + key.second) == v);
    }
}

TEST_CASE("neighborhood matrices agree with brute-force set oracles") {
    RngState rng = RngState::substream(12, 0);
    for (int trial = 0; trial < 10; ++trial) {
        auto X = testutil::random_complex(rng, 10, 3);
        for (int k = 0; k < X.dim(); ++k) {
            auto A = per_dim_adjacency(X, k);
            std::size_t off = X.dim_offset(k);
            for (std::size_t i = 0; i < X.count(k); ++i) {
                for (std::size_t j = 0; j < X.count(k); ++j) {
                    int expect = (i == j) ? 0
                                          : testutil::oracle_co_count(X, X.simplex(off + i).vertices,
                                                                      X.simplex(off + j).vertices);
                    CHECK(A.at(i, j) == static_cast<double>(expect));
                }
            }
        }
        for (int k = 1; k <= X.dim(); ++k) {
            auto C = per_dim_coadjacency(X, k);
            std::size_t off = X.dim_offset(k);
            for (std::size_t i = 0; i < X.count(k); ++i) {
                for (std::size_t j = 0; j < X.count(k); ++j) {
                    int expect = (i == j) ? 0
                                          : testutil::oracle_c_count(X.simplex(off + i).vertices,
                                                                     X.simplex(off + j).vertices);
                    CHECK(C.at(i, j) == static_cast<double>(expect));
                }
            }
        }
    }
}

TEST_CASE("one-dimensional complexes reduce to graph adjacency") {
    RngState rng = RngState::substream(13, 0);
    for (int trial = 0; trial < 5; ++trial) {
        auto maximal = testutil::random_maximal_simplices(rng, 12, 1);
        auto X = SimplicialComplex::build(maximal);
        if (X.dim() != 1) continue;
        auto A = per_dim_adjacency(X, 0).to_dense();
        // edge-list oracle
        Mat expect = Mat::Zero(A.rows(), A.cols());
        std::size_t off = X.dim_offset(1);
        for (std::size_t e = 0; e < X.count(1); ++e) {
            const auto& vs = X.simplex(off + e).vertices;
            auto i = static_cast<Eigen::Index>(X.local_ordinal(Simplex{vs[0]}));
            auto j = static_cast<Eigen::Index>(X.local_ordinal(Simplex{vs[1]}));
            expect(i, j) = 1.0;
            expect(j, i) = 1.0;
        }
        CHECK((A - expect).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("sparse matrix basics") {
    SparseMatrix S(3, 3, /*symmetric=*/true);
    S.add(0, 1, 2.0);
    CHECK(S.at(1, 0) == 2.0);
    S.add(1, 0, 1.0);
    CHECK(S.at(0, 1) == 3.0);
    CHECK(S.nnz() == 2);
    S.set(0, 1, 0.0);
    CHECK(S.nnz() == 0);
    CHECK_THROWS_AS(S.at(5, 0), Error);
    Mat d = S.to_dense();
    CHECK(d.cwiseAbs().maxCoeff() == 0.0);
}
