#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "hspline/polyinterp.hpp"
#include "hspline/simplex.hpp"

using namespace hspline;

namespace {

double binom(int a, int b) {
    double r = 1;
    for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
}

Eigen::VectorXd random_interior_point(const Simplex& s, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.05, 1.0);
    Eigen::VectorXd b(s.dim() + 1);
    for (int i = 0; i <= s.dim(); ++i) b(i) = uni(rng);
    b /= b.sum();
    return s.vertices * b;
}

}  // namespace

TEST_CASE("monomial basis size and order") {
    const MonomialBasis b = MonomialBasis::make(2, 2);
    REQUIRE(b.size() == 6);
    // graded lex: 1; x, y; x^2, xy, y^2
    CHECK(b.exponents[0] == std::vector<int>{0, 0});
    CHECK(b.exponents[1] == std::vector<int>{1, 0});
    CHECK(b.exponents[2] == std::vector<int>{0, 1});
    CHECK(b.exponents[3] == std::vector<int>{2, 0});
    CHECK(b.exponents[4] == std::vector<int>{1, 1});
    CHECK(b.exponents[5] == std::vector<int>{0, 2});
    CHECK(MonomialBasis::make(3, 5).size() == binom(8, 3));
}

TEST_CASE("vandermonde small cases") {
    // n=1, k=1, nodes {0,1}
    Eigen::MatrixXd pts(1, 2);
    pts << 0, 1;
    Eigen::MatrixXd v = vandermonde(pts, MonomialBasis::make(1, 1));
    CHECK(v(0, 0) == 1.0);
    CHECK(v(0, 1) == 0.0);
    CHECK(v(1, 0) == 1.0);
    CHECK(v(1, 1) == 1.0);

    const Simplex tri = regular_simplex(2, 1.0);
    Eigen::MatrixXd v3 = vandermonde(tri.vertices, MonomialBasis::make(2, 1));
    CHECK((v3.col(0) - Eigen::VectorXd::Ones(3)).norm() == 0.0);

    // equally spaced nodes give nonsingular square systems
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 6; ++k) {
            const NodeSet nodes = equally_spaced_nodes(regular_simplex(n, 1.0), k);
            CHECK_NOTHROW(CardinalEvaluator{nodes});
        }
}

TEST_CASE("cardinal values: delta property and 1D oracle") {
    const NodeSet nodes = equally_spaced_nodes(regular_simplex(2, 1.0), 3);
    const CardinalEvaluator eval(nodes);
    for (int j = 0; j < nodes.count(); ++j) {
        const Eigen::VectorXd l = eval.values(nodes.nodes.col(j));
        for (int i = 0; i < nodes.count(); ++i)
            CHECK(l(i) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-10));
    }

    // n=1, k=2, nodes {0, 1/2, 1}, x = 1/4 -> (0.375, 0.75, -0.125)
    Simplex seg;
    seg.vertices.resize(1, 2);
    seg.vertices << 0, 1;
    const NodeSet nodes1 = equally_spaced_nodes(seg, 2);
    Eigen::VectorXd x(1);
    x << 0.25;
    const Eigen::VectorXd l = cardinal_values(nodes1, x);
    // node order is (2,0) -> 0, (1,1) -> 1/2, (0,2) -> 1
    CHECK(l(0) == doctest::Approx(0.375).epsilon(1e-12));
    CHECK(l(1) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(l(2) == doctest::Approx(-0.125).epsilon(1e-12));
    CHECK(lebesgue_function(nodes1, x) == doctest::Approx(1.25).epsilon(1e-12));
}

TEST_CASE("polynomial reproduction and partition of unity") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 5; ++k) {
            const Simplex s = regular_simplex(n, 1.0);
            const NodeSet nodes = equally_spaced_nodes(s, k);
            const CardinalEvaluator eval(nodes);
            const MonomialBasis basis = MonomialBasis::make(n, k);
            const Eigen::MatrixXd v = vandermonde(nodes.nodes, basis);
            for (int trial = 0; trial < 5; ++trial) {
                const Eigen::VectorXd x = random_interior_point(s, rng);
                const Eigen::VectorXd l = eval.values(x);
                CHECK(l.sum() == doctest::Approx(1.0).epsilon(1e-10));
                const Eigen::VectorXd reproduced = v.transpose() * l;
                const Eigen::VectorXd exact = basis.evaluate(x);
                for (int j = 0; j < basis.size(); ++j)
                    CHECK(std::abs(reproduced(j) - exact(j)) <=
                          1e-9 * std::max(1.0, std::abs(exact(j))));
            }
        }
    }
}

TEST_CASE("cardinal values are affinely invariant") {
    std::mt19937_64 rng(5);
    const Simplex s = regular_simplex(2, 1.0);
    const NodeSet nodes = equally_spaced_nodes(s, 4);
    const CardinalEvaluator eval(nodes);

    Eigen::MatrixXd a(2, 2);
    a << 1.4, -0.6,
         0.2, 2.1;
    Eigen::VectorXd t(2);
    t << -3.0, 0.5;
    Simplex mapped;
    mapped.vertices = (a * s.vertices).colwise() + t;
    const CardinalEvaluator eval_mapped(equally_spaced_nodes(mapped, 4));

    for (int trial = 0; trial < 5; ++trial) {
        const Eigen::VectorXd x = random_interior_point(s, rng);
        const Eigen::VectorXd l1 = eval.values(x);
        const Eigen::VectorXd l2 = eval_mapped.values(a * x + t);
        CHECK((l1 - l2).lpNorm<Eigen::Infinity>() <= 1e-8);
    }
}

TEST_CASE("lebesgue function and max estimate") {
    const Simplex tri = regular_simplex(2, 1.0);

    // any node -> 1; k=1 -> 1 everywhere inside
    const NodeSet nodes = equally_spaced_nodes(tri, 4);
    CHECK(lebesgue_function(nodes, nodes.nodes.col(3)) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(lebesgue_max_estimate(tri, 1, 40) == doctest::Approx(1.0).epsilon(1e-10));

    // 1D equispaced quadratic constant is 1.25
    Simplex seg;
    seg.vertices.resize(1, 2);
    seg.vertices << 0, 1;
    CHECK(lebesgue_max_estimate(seg, 2, 64) == doctest::Approx(1.25).epsilon(1e-3));

    // nondecreasing in resolution, bounded by binom(2k-1, k)
    double prev = 0.0;
    for (int res : {8, 16, 32}) {
        const double est = lebesgue_max_estimate(tri, 4, res);
        CHECK(est >= prev);
        CHECK(est <= binom(7, 4) * (1.0 + 1e-6));
        prev = est;
    }
}

TEST_CASE("norming measure") {
    const Simplex tri = regular_simplex(2, 1.0);
    const NodeSet nodes = equally_spaced_nodes(tri, 3);

    // anchor at a node: point mass
    const NormingMeasure point_mass = norming_measure(nodes, nodes.nodes.col(2));
    CHECK(point_mass.total_variation() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(point_mass.weights(2) == doctest::Approx(1.0).epsilon(1e-10));

    std::mt19937_64 rng(3);
    const MonomialBasis basis = MonomialBasis::make(2, 3);
    const Eigen::MatrixXd v = vandermonde(nodes.nodes, basis);
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::VectorXd x = random_interior_point(tri, rng);
        const NormingMeasure m = norming_measure(nodes, x);
        const Eigen::VectorXd reproduced = v.transpose() * m.weights;
        const Eigen::VectorXd exact = basis.evaluate(x);
        CHECK((reproduced - exact).lpNorm<Eigen::Infinity>() <= 1e-9);
        CHECK(m.total_variation() <= binom(5, 3) + 1e-9);
        CHECK(m.total_variation() ==
              doctest::Approx(lebesgue_function(nodes, x)).epsilon(1e-12));
    }

    // anchor outside the simplex is rejected
    Eigen::VectorXd outside(2);
    outside << 5.0, 5.0;
    CHECK_THROWS_AS(norming_measure(nodes, outside), std::invalid_argument);
}
