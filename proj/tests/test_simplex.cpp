#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "hspline/simplex.hpp"

using namespace hspline;

namespace {

long binom(int a, int b) {
    long r = 1;
    for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
}

Simplex right_triangle() {
    Simplex s;
    s.vertices.resize(2, 3);
    s.vertices << 0, 1, 0,
                  0, 0, 1;
    return s;
}

}  // namespace

TEST_CASE("barycentric coordinates: vertices and centroid") {
    const Simplex s = regular_simplex(3, 1.0);
    for (int i = 0; i < 4; ++i) {
        const Eigen::VectorXd b = barycentric_coordinates(s, s.vertices.col(i));
        for (int j = 0; j < 4; ++j)
            CHECK(b(j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
    }
    const Eigen::VectorXd centroid = s.vertices.rowwise().mean();
    const Eigen::VectorXd b = barycentric_coordinates(s, centroid);
    for (int j = 0; j < 4; ++j) CHECK(b(j) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("barycentric coordinates recombine random points") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        Simplex s;
        s.vertices = Eigen::MatrixXd::NullaryExpr(3, 4, [&] { return uni(rng); });
        Eigen::MatrixXd edges = s.vertices.rightCols(3).colwise() - s.vertices.col(0);
        if (std::abs(edges.determinant()) < 1e-2) continue;  // skip near-degenerate draws
        Eigen::VectorXd x(3);
        x << uni(rng), uni(rng), uni(rng);
        const Eigen::VectorXd b = barycentric_coordinates(s, x);
        CHECK(b.sum() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK((s.vertices * b - x).norm() <= 1e-12);
    }
}

TEST_CASE("barycentric coordinates reject degenerate simplex") {
    Simplex s;
    s.vertices.resize(2, 3);
    s.vertices << 0, 1, 2,
                  0, 1, 2;  // collinear
    Eigen::VectorXd x(2);
    x << 0.5, 0.5;
    CHECK_THROWS_AS(barycentric_coordinates(s, x), std::invalid_argument);
}

TEST_CASE("equally spaced nodes: counts and first cases") {
    const Simplex tri = regular_simplex(2, 1.0);
    CHECK(equally_spaced_nodes(tri, 2).count() == 6);

    // n=1, k=2 on [0,1]: {0, 1/2, 1}
    Simplex seg;
    seg.vertices.resize(1, 2);
    seg.vertices << 0, 1;
    const NodeSet nodes = equally_spaced_nodes(seg, 2);
    REQUIRE(nodes.count() == 3);
    CHECK(nodes.nodes(0, 0) == doctest::Approx(0.0));
    CHECK(nodes.nodes(0, 1) == doctest::Approx(0.5));
    CHECK(nodes.nodes(0, 2) == doctest::Approx(1.0));
    // reverse-lexicographic order starts at (k, 0, ...)
    CHECK(nodes.indices.front().parts == std::vector<int>{2, 0});
    CHECK(nodes.indices.back().parts == std::vector<int>{0, 2});

    const NodeSet big = equally_spaced_nodes(regular_simplex(3, 2.0), 4);
    CHECK(big.count() == binom(3 + 4, 3));
    for (const auto& idx : big.indices) CHECK(idx.degree() == 4);
}

TEST_CASE("generated nodes lie in the simplex and recover their indices") {
    const Simplex s = regular_simplex(3, 1.5);
    const int k = 4;
    const NodeSet nodes = equally_spaced_nodes(s, k);
    for (int j = 0; j < nodes.count(); ++j) {
        CHECK(contains(s, nodes.nodes.col(j)));
        const Eigen::VectorXd b = barycentric_coordinates(s, nodes.nodes.col(j));
        for (int i = 0; i <= 3; ++i)
            CHECK(b(i) == doctest::Approx(nodes.indices[j].parts[i] / double(k))
                              .epsilon(1e-12));
    }
}

TEST_CASE("node construction is affinely equivariant") {
    const Simplex s = regular_simplex(2, 1.0);
    Eigen::MatrixXd a(2, 2);
    a << 2.0, 0.3,
         -0.4, 1.5;
    Eigen::VectorXd t(2);
    t << 0.7, -0.2;

    Simplex mapped;
    mapped.vertices = (a * s.vertices).colwise() + t;
    const NodeSet orig = equally_spaced_nodes(s, 3);
    const NodeSet img = equally_spaced_nodes(mapped, 3);
    for (int j = 0; j < orig.count(); ++j)
        CHECK((img.nodes.col(j) - (a * orig.nodes.col(j) + t)).norm() <= 1e-12);
}

TEST_CASE("regular simplex") {
    const Simplex seg = regular_simplex(1, 1.0);
    CHECK(seg.vertices(0, 0) == doctest::Approx(0.0));
    CHECK(seg.vertices(0, 1) == doctest::Approx(1.0));

    for (int n : {2, 4}) {
        const double diam = (n == 2) ? 1.0 : 2.0;
        const Simplex s = regular_simplex(n, diam);
        CHECK(s.vertices.col(0).norm() == doctest::Approx(0.0));
        for (int i = 0; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                CHECK((s.vertices.col(i) - s.vertices.col(j)).norm() ==
                      doctest::Approx(diam).epsilon(1e-12));
    }
}

TEST_CASE("diameter") {
    CHECK(diameter(regular_simplex(2, 1.0)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(diameter(right_triangle()) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

    Simplex scaled = right_triangle();
    scaled.vertices *= 3.5;
    CHECK(diameter(scaled) == doctest::Approx(3.5 * std::sqrt(2.0)).epsilon(1e-14));
}
