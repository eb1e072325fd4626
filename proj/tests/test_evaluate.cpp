#include <doctest.h>

#include <vector>

#include "error.hpp"
#include "evaluate.hpp"

using namespace scx;

namespace {

Vec v1(double x) {
    Vec v(1);
    v << x;
    return v;
}

} // namespace

TEST_CASE("auc on hand-ranked scores") {
    CHECK(auc({2.0, 3.0}, {0.0, 1.0}) == 1.0);
    CHECK(auc({0.0, 1.0}, {2.0, 3.0}) == 0.0);
    CHECK(auc({3.0, 1.0}, {2.0, 0.0}) == 0.75);
    // ties count half a win
    CHECK(auc({1.0}, {1.0}) == 0.5);
    CHECK(auc({1.0, 1.0}, {1.0, 0.0}) == 0.75);
    CHECK_THROWS_AS(auc({}, {1.0}), Error);
    CHECK_THROWS_AS(auc({1.0}, {}), Error);
}

TEST_CASE("reconstruction auc separates a path graph") {
    // path 0-1-2: vertex pairs (0,1) and (1,2) are adjacent, (0,2) is not
    auto X = SimplicialComplex::build({{0, 1}, {1, 2}});
    Mat u(3, 2);
    u << 1, 0, 1, 1, 0, 1;
    CHECK(reconstruction_auc(X, 0, u, DecoderKind::InnerProduct) == 1.0);

    // the laplacian decoder ranks by negative distance
    Mat w(3, 2);
    w << 0, 0, 0, 0, 5, 5;
    CHECK(reconstruction_auc(X, 0, w, DecoderKind::Laplacian) == 0.75);

    Mat wrong(2, 2);
    CHECK_THROWS_WITH_AS(reconstruction_auc(X, 0, wrong, DecoderKind::InnerProduct),
                         doctest::Contains("do not match"), Error);

    // every edge pair of a triangle shares the 2-simplex: one class only
    auto tri = SimplicialComplex::build({{0, 1, 2}});
    Mat e = Mat::Ones(3, 2);
    CHECK_THROWS_WITH_AS(reconstruction_auc(tri, 1, e, DecoderKind::InnerProduct),
                         doctest::Contains("no pair of each class"), Error);
}

TEST_CASE("leave-one-out knn with deterministic tie-break") {
    std::vector<Vec> h{v1(0.0), v1(2.0), v1(4.0)};
    std::vector<std::string> labels{"a", "a", "b"};
    // item 1 ties between items 0 and 2; the smaller index wins
    CHECK(loo_knn_accuracy(h, labels) == doctest::Approx(2.0 / 3.0));

    std::vector<Vec> clusters{v1(0.0), v1(0.1), v1(9.0), v1(9.1)};
    std::vector<std::string> two{"a", "a", "b", "b"};
    CHECK(loo_knn_accuracy(clusters, two) == 1.0);

    CHECK_THROWS_AS(loo_knn_accuracy(h, {"a", "b"}), Error);
    CHECK_THROWS_AS(loo_knn_accuracy({v1(0.0)}, {"a"}), Error);
}

TEST_CASE("triplet satisfaction counts exactly-zero hinges") {
    std::vector<std::string> labels{"a", "a", "b"};

    std::vector<Vec> spread{v1(0.0), v1(0.1), v1(5.0)};
    CHECK(triplet_satisfaction(spread, labels, 1.0) == 1.0);
    CHECK(triplet_satisfaction(spread, labels, 100.0) == 0.0);

    // (0,1,2) lands on the hinge boundary, (1,0,2) is violated
    std::vector<Vec> edge{v1(0.0), v1(1.0), v1(2.0)};
    CHECK(triplet_satisfaction(edge, labels, 3.0) == 0.5);

    CHECK_THROWS_AS(triplet_satisfaction(spread, {"a", "a", "a"}, 1.0), Error);
    CHECK_THROWS_AS(triplet_satisfaction(spread, {"a", "a"}, 1.0), Error);
}
