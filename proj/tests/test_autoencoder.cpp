#include <doctest.h>

#include <cmath>
#include <set>

#include "autoencoder.hpp"
#include "eigenmaps.hpp"
#include "error.hpp"
#include "gradcheck.hpp"
#include "neighborhood.hpp"
#include "test_util.hpp"
#include "walks.hpp"

using namespace scx;

namespace {

SimplicialComplex triangle() { return SimplicialComplex::build({{0, 1, 2}}); }
SimplicialComplex two_triangles() { return SimplicialComplex::build({{0, 1, 2}, {1, 2, 3}}); }

AutoencoderConfig inner_product_config() {
    AutoencoderConfig cfg;
    cfg.decoder = DecoderKind::InnerProduct;
    cfg.similarity = SimilarityKind::Adjacency;
    cfg.loss = LossKind::SquaredError;
    return cfg;
}

} // namespace

TEST_CASE("walk corpus on the triangle edge graph") {
    auto X = triangle();
    RandomWalkConfig cfg;
    cfg.walks_per_simplex = 2000;
    cfg.walk_length = 2;
    cfg.window = 1;
    cfg.seed = 9;
    auto corpus = random_walk_corpus(X, 1, cfg);
    REQUIRE(corpus.size() == 3 * 2000);
    // every edge has two neighbors: all walks reach full length
    std::size_t from0to1 = 0, from0 = 0;
    for (const auto& w : corpus) {
        CHECK(w.size() == 2);
        if (w[0] == 0) {
            ++from0;
            if (w[1] == 1) ++from0to1;
        }
    }
    // one-step transition probability 1/2 to each neighbor
    CHECK(std::abs(static_cast<double>(from0to1) / static_cast<double>(from0) - 0.5) < 0.05);
}

TEST_CASE("walks stop at isolated simplices") {
    auto X = SimplicialComplex::build({{0, 1}, {2}});
    RandomWalkConfig cfg;
    cfg.walks_per_simplex = 5;
    cfg.walk_length = 4;
    cfg.seed = 1;
    auto corpus = random_walk_corpus(X, 0, cfg);
    auto iso = X.local_ordinal(Simplex{2});
    for (const auto& w : corpus) {
        if (w[0] == iso) {
            CHECK(w.size() == 1);
        } else {
            CHECK(w.size() == 4);
        }
    }
}

TEST_CASE("walk corpus is reproducible and k-validated") {
    auto X = two_triangles();
    RandomWalkConfig cfg;
    cfg.seed = 4;
    auto a = random_walk_corpus(X, 1, cfg);
    auto b = random_walk_corpus(X, 1, cfg);
    CHECK(a == b);
    CHECK_THROWS_AS(random_walk_corpus(X, 2, cfg), Error);
    CHECK_THROWS_AS(random_walk_corpus(X, -1, cfg), Error);
    RandomWalkConfig bad;
    bad.walk_length = 0;
    CHECK_THROWS_AS(random_walk_corpus(X, 0, bad), Error);
}

TEST_CASE("empirical similarity is row-stochastic where populated") {
    auto X = triangle();
    RandomWalkConfig cfg;
    cfg.walks_per_simplex = 2000;
    cfg.walk_length = 2;
    cfg.window = 1;
    cfg.seed = 10;
    auto corpus = random_walk_corpus(X, 1, cfg);
    auto est = empirical_similarity(corpus, 1, X.count(1));
    for (std::size_t i = 0; i < 3; ++i) {
        REQUIRE(est.populated[i]);
        CHECK(std::abs(est.p.row(static_cast<Eigen::Index>(i)).sum() - 1.0) < 1e-9);
        CHECK(est.p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) == 0.0);
    }
    CHECK(std::abs(est.p(0, 1) - 0.5) < 0.05);

    std::vector<Walk> lonely{{0}};
    auto est2 = empirical_similarity(lonely, 1, 3);
    CHECK_FALSE(est2.populated[0]);
    CHECK(est2.p.row(0).sum() == 0.0);
    CHECK_THROWS_AS(empirical_similarity({}, 1, 3), Error);
}

TEST_CASE("window pairs with multiplicity") {
    std::vector<Walk> corpus{{0, 1, 2}};
    auto pairs = co_occurrence_pairs(corpus, 1);
    CHECK(pairs.size() == 4);
    auto wide = co_occurrence_pairs(corpus, 2);
    CHECK(wide.size() == 6);
}

TEST_CASE("eigenmaps on the path graph reproduces the Fiedler pattern") {
    auto X = SimplicialComplex::build({{0, 1}, {1, 2}});
    auto A = per_dim_adjacency(X, 0);
    auto res = laplacian_eigenmaps_solve(A, 1);
    REQUIRE(res.z.rows() == 3);
    CHECK(res.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(res.z(0, 0) > 0.0);
    CHECK(std::abs(res.z(1, 0)) < 1e-9);
    CHECK(res.z(2, 0) < 0.0);

    // Z^T D Z = I and the eigen-residual vanish
    Mat Ad = A.to_dense();
    Mat D = Vec(Ad.rowwise().sum()).asDiagonal();
    Mat L = D - Ad;
    Mat gram = res.z.transpose() * D * res.z;
    CHECK((gram - Mat::Identity(1, 1)).cwiseAbs().maxCoeff() < 1e-6);
    Mat resid = L * res.z - D * res.z * Mat(res.eigenvalues.asDiagonal());
    CHECK(resid.cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("eigenmaps orthonormality on random adjacency graphs") {
    RngState rng = RngState::substream(31, 0);
    int done = 0;
    for (int trial = 0; trial < 12 && done < 4; ++trial) {
        auto X = testutil::random_complex(rng, 12, 3);
        if (X.dim() < 1) continue;
        int k = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(X.dim())));
        auto A = per_dim_adjacency(X, k);
        auto comp = connected_components(A);
        std::map<std::size_t, std::size_t> sizes;
        for (auto c : comp) ++sizes[c];
        Eigen::Index avail = 0;
        std::size_t kept = 0;
        for (auto& [c, s] : sizes) {
            if (s >= 2) {
                avail += static_cast<Eigen::Index>(s) - 1;
                ++kept;
            }
        }
        (void)kept;
        if (avail < 2) continue;
        ++done;
        auto res = laplacian_eigenmaps_solve(A, 2);
        Mat Ad = A.to_dense();
        Mat D = Vec(Ad.rowwise().sum()).asDiagonal();
        Mat L = D - Ad;
        Mat gram = res.z.transpose() * D * res.z;
        CHECK((gram - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-6);
        Mat resid = L * res.z - D * res.z * Mat(res.eigenvalues.asDiagonal());
        CHECK(resid.cwiseAbs().maxCoeff() < 1e-8);
    }
    CHECK(done >= 3);
}

TEST_CASE("eigenmaps handles disconnection and bounds d") {
    auto X = SimplicialComplex::build({{0, 1}, {2, 3}});
    auto A = per_dim_adjacency(X, 0);
    auto comp = connected_components(A);
    CHECK(comp[0] == comp[1]);
    CHECK(comp[2] == comp[3]);
    CHECK(comp[0] != comp[2]);

    auto res = laplacian_eigenmaps_solve(A, 2);
    Mat Ad = A.to_dense();
    Mat D = Vec(Ad.rowwise().sum()).asDiagonal();
    Mat gram = res.z.transpose() * D * res.z;
    CHECK((gram - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-6);
    CHECK_THROWS_WITH_AS(laplacian_eigenmaps_solve(A, 3), doctest::Contains("maximum is 2"), Error);

    // isolated nodes embed at the origin and don't count toward capacity
    auto Y = SimplicialComplex::build({{0, 1}, {2}});
    auto Ay = per_dim_adjacency(Y, 0);
    auto resy = laplacian_eigenmaps_solve(Ay, 1);
    CHECK(resy.z.row(2).cwiseAbs().maxCoeff() == 0.0);
    CHECK_THROWS_WITH_AS(laplacian_eigenmaps_solve(Ay, 2), doctest::Contains("maximum is 1"), Error);
}

TEST_CASE("configuration accepts exactly the three supported rows") {
    AutoencoderConfig cfg;
    cfg.encoder = EncoderKind::ShallowTable;

    cfg.decoder = DecoderKind::Laplacian;
    cfg.similarity = SimilarityKind::Adjacency;
    cfg.loss = LossKind::LapProduct;
    CHECK_NOTHROW(validate_autoencoder_config(cfg));

    cfg.encoder = EncoderKind::Cxn;
    CHECK_THROWS_WITH_AS(validate_autoencoder_config(cfg), doctest::Contains("shallow_table"), Error);

    cfg.encoder = EncoderKind::ShallowTable;
    cfg.loss = LossKind::SquaredError;
    CHECK_THROWS_WITH_AS(validate_autoencoder_config(cfg), doctest::Contains("combination"), Error);

    cfg.decoder = DecoderKind::InnerProduct;
    CHECK_NOTHROW(validate_autoencoder_config(cfg));

    cfg.decoder = DecoderKind::SoftmaxRw;
    cfg.similarity = SimilarityKind::RandomWalk;
    cfg.loss = LossKind::NegLogLikelihood;
    CHECK_NOTHROW(validate_autoencoder_config(cfg));

    cfg.similarity = SimilarityKind::Adjacency;
    CHECK_THROWS_AS(validate_autoencoder_config(cfg), Error);

    cfg.similarity = SimilarityKind::RandomWalk;
    cfg.embed_dim = 0;
    CHECK_THROWS_AS(validate_autoencoder_config(cfg), Error);
}

TEST_CASE("pairwise decoders") {
    Vec a(2), c(2);
    a << 1.0, 0.0;
    c << 0.0, 1.0;
    CHECK(decode(DecoderKind::Laplacian, a, a) == 0.0);
    CHECK(decode(DecoderKind::Laplacian, a, c) == 2.0);
    CHECK(decode(DecoderKind::InnerProduct, a, c) == 0.0);
    CHECK_THROWS_AS(decode(DecoderKind::SoftmaxRw, a, c), Error);

    Mat u(3, 2);
    u << 1, 0, 0, 1, 0.5, 0.5;
    Vec p = softmax_decode(u, 0);
    CHECK(p.sum() == doctest::Approx(1.0).epsilon(1e-12));
    for (Eigen::Index i = 0; i < 3; ++i) CHECK(p(i) > 0.0);
}

TEST_CASE("positive pairs enumerate the adjacency support") {
    auto X = triangle();
    auto pairs = positive_pairs(X, 0);
    REQUIRE(pairs.size() == 3);
    for (const auto& [a, c, t] : pairs) {
        CHECK(a < c);
        CHECK(t == 1.0);
    }
}

TEST_CASE("loss values on constructed embeddings") {
    SUBCASE("perfect reconstruction zeroes the positive squared error") {
        Mat u = Mat::Ones(3, 1); // all inner products are exactly 1
        DimensionBatch batch;
        batch.positives = {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}};
        auto res = ae_loss(LossKind::SquaredError, u, batch);
        CHECK(res.value == 0.0);
        CHECK(res.d_u.cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("collapsed embeddings zero the laplacian product") {
        Mat u = Mat::Ones(3, 2);
        DimensionBatch batch;
        batch.positives = {{0, 1, 1.0}, {1, 2, 2.0}};
        auto res = ae_loss(LossKind::LapProduct, u, batch);
        CHECK(res.value == 0.0);
    }
    SUBCASE("uniform scores give log(n) per likelihood pair") {
        Mat u = Mat::Zero(2, 3);
        DimensionBatch batch;
        batch.walk_pairs = {{0, 1}, {1, 0}};
        auto res = ae_loss(LossKind::NegLogLikelihood, u, batch);
        CHECK(res.value == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));
    }
    SUBCASE("positive pairs leave other components untouched") {
        Mat u(4, 3);
        u << 1, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 1;
        DimensionBatch batch;
        batch.positives = {{0, 1, 1.0}};
        auto res = ae_loss(LossKind::SquaredError, u, batch);
        CHECK(res.d_u.row(2).cwiseAbs().maxCoeff() == 0.0);
        CHECK(res.d_u.row(3).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("loss gradients match finite differences") {
    RngState rng = RngState::substream(41, 0);
    Mat u = gaussian(5, 3, 0.8, rng);
    DimensionBatch batch;
    batch.positives = {{0, 1, 1.0}, {1, 2, 2.0}, {0, 4, 1.0}};
    batch.negatives = {{0, 3}, {1, 4}, {2, 2}};
    batch.walk_pairs = {{0, 1}, {0, 2}, {3, 4}, {4, 0}};
    for (LossKind kind : {LossKind::LapProduct, LossKind::SquaredError, LossKind::NegLogLikelihood}) {
        CAPTURE(loss_name(kind));
        auto loss = [&]() { return ae_loss(kind, u, batch).value; };
        auto analytic = ae_loss(kind, u, batch);
        double err = finite_difference_check(loss, {&u}, {analytic.d_u}, 1e-5);
        CHECK(err < 1e-4);
    }
}

TEST_CASE("training the inner-product row reduces the loss") {
    auto X = two_triangles();
    AutoencoderConfig cfg = inner_product_config();
    cfg.encoder = EncoderKind::Cxn;
    cfg.scheme = Scheme::Amps;
    cfg.layers = 2;
    cfg.embed_dim = 8;
    cfg.epochs = 500;
    cfg.seed = 77;
    auto out = train_autoencoder(X, cfg);
    REQUIRE(out.log.size() == 500);
    CHECK(out.log.back().total < out.log.front().total);
    CHECK(out.u.rows() == static_cast<Eigen::Index>(X.size_below_top()));
    CHECK(out.u.cols() == 8);
    CHECK(out.embedded == std::vector<int>{0, 1});

    auto again = train_autoencoder(X, cfg);
    CHECK((out.u.array() == again.u.array()).all());
}

TEST_CASE("shallow encoder trains the table directly") {
    auto X = two_triangles();
    AutoencoderConfig cfg = inner_product_config();
    cfg.encoder = EncoderKind::ShallowTable;
    cfg.embed_dim = 4;
    cfg.epochs = 200;
    cfg.seed = 3;
    auto out = train_autoencoder(X, cfg);
    CHECK(out.u.rows() == static_cast<Eigen::Index>(X.size_below_top()));
    CHECK(out.log.back().total < out.log.front().total);
}

TEST_CASE("random-walk row trains end to end") {
    auto X = two_triangles();
    AutoencoderConfig cfg;
    cfg.encoder = EncoderKind::ShallowTable;
    cfg.decoder = DecoderKind::SoftmaxRw;
    cfg.similarity = SimilarityKind::RandomWalk;
    cfg.loss = LossKind::NegLogLikelihood;
    cfg.embed_dim = 4;
    cfg.epochs = 60;
    cfg.walk.walks_per_simplex = 5;
    cfg.walk.walk_length = 6;
    cfg.walk.window = 2;
    cfg.seed = 5;
    auto out = train_autoencoder(X, cfg);
    CHECK(out.log.back().total < out.log.front().total);
    auto again = train_autoencoder(X, cfg);
    CHECK((out.u.array() == again.u.array()).all());
}

TEST_CASE("eigenmaps route produces orthonormal blocks per dimension") {
    auto X = two_triangles();
    AutoencoderConfig cfg;
    cfg.encoder = EncoderKind::ShallowTable;
    cfg.decoder = DecoderKind::Laplacian;
    cfg.similarity = SimilarityKind::Adjacency;
    cfg.loss = LossKind::LapProduct;
    cfg.embed_dim = 2;
    auto out = train_autoencoder(X, cfg);
    CHECK(out.u.rows() == static_cast<Eigen::Index>(X.size_below_top()));
    for (std::size_t i = 0; i < out.embedded.size(); ++i) {
        int k = out.embedded[i];
        Mat z = out.u.middleRows(static_cast<Eigen::Index>(out.row_offsets[i]),
                                 static_cast<Eigen::Index>(X.count(k)));
        Mat Ad = per_dim_adjacency(X, k).to_dense();
        Mat D = Vec(Ad.rowwise().sum()).asDiagonal();
        Mat gram = z.transpose() * D * z;
        CHECK((gram - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-6);
    }
}

TEST_CASE("degenerate training inputs are rejected") {
    auto X0 = SimplicialComplex::build({{0}, {1}});
    AutoencoderConfig cfg = inner_product_config();
    CHECK_THROWS_AS(train_autoencoder(X0, cfg), Error);

    // every trained dimension below the top has pairs by downward closure
    auto Xw = SimplicialComplex::build({{0, 1, 2}, {3, 4}});
    AutoencoderConfig wcfg = inner_product_config();
    wcfg.encoder = EncoderKind::ShallowTable;
    wcfg.epochs = 2;
    wcfg.embed_dim = 2;
    auto out = train_autoencoder(Xw, wcfg);
    CHECK(out.warnings.empty());
}
