#ifndef HSPLINE_POLYINTERP_HPP
#define HSPLINE_POLYINTERP_HPP

#include <Eigen/Dense>
#include <vector>

#include "hspline/simplex.hpp"

namespace hspline {

/// Monomial basis of P_k^n: all multi-indices of total degree <= k in
/// graded lexicographic order. Size is binom(n+k, n).
struct MonomialBasis {
    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> exponents;

    static MonomialBasis make(int n, int k);

    int size() const { return static_cast<int>(exponents.size()); }

    // Values of every basis monomial at x, in basis order.
    Eigen::VectorXd evaluate(const Eigen::VectorXd& x) const;
};

// Collocation matrix: entry (i, j) = monomial_j(points.col(i)).
Eigen::MatrixXd vandermonde(const Eigen::MatrixXd& points, const MonomialBasis& basis);

/// Lagrange cardinal functions of the equally spaced nodes of a NodeSet.
/// Coordinates are mapped to barycentric form before the Vandermonde solve,
/// and the factorization is cached for repeated evaluations.
class CardinalEvaluator {
public:
    explicit CardinalEvaluator(const NodeSet& node_set);

    // (l_1(x), ..., l_N(x)); sums to 1 and reproduces P_k^n.
    Eigen::VectorXd values(const Eigen::VectorXd& x) const;

    double condition_estimate() const { return condition_; }
    const NodeSet& nodes() const { return nodes_; }

private:
    Eigen::VectorXd reference_coords(const Eigen::VectorXd& x) const;

    NodeSet nodes_;
    MonomialBasis basis_;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu_;  // of the transposed Vandermonde
    double condition_ = 0.0;
};

// Convenience single-shot cardinal values.
Eigen::VectorXd cardinal_values(const NodeSet& node_set, const Eigen::VectorXd& x);

// Lebesgue function sum_i |l_i(x)|, always >= 1 inside the simplex.
double lebesgue_function(const NodeSet& node_set, const Eigen::VectorXd& x);

// Max of the Lebesgue function over the equally spaced sample grid of
// degree `resolution`; a lower estimate of the operator norm of degree-k
// interpolation, nondecreasing in resolution.
double lebesgue_max_estimate(const Simplex& s, int k, int resolution);

/// Signed discrete measure on the nodes reproducing point evaluation at the
/// anchor on P_k^n; weights are the cardinal values at the anchor.
struct NormingMeasure {
    NodeSet nodes;
    Eigen::VectorXd weights;
    Eigen::VectorXd anchor;

    double total_variation() const { return weights.lpNorm<1>(); }
};

// Requires the anchor to lie in the node set's simplex.
NormingMeasure norming_measure(const NodeSet& node_set, const Eigen::VectorXd& x);

}  // namespace hspline

#endif
