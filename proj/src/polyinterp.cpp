#include "hspline/polyinterp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hspline {

namespace {

// Multi-indices of exact total degree d over n variables, lexicographically
// descending in the leading entries.
void exact_degree_indices(int n, int d, std::vector<int>& current,
                          std::vector<std::vector<int>>& out) {
    if (n == 1) {
        current.push_back(d);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int first = d; first >= 0; --first) {
        current.push_back(first);
        exact_degree_indices(n - 1, d - first, current, out);
        current.pop_back();
    }
}

}  // namespace

MonomialBasis MonomialBasis::make(int n, int k) {
    if (n < 1) throw std::invalid_argument("MonomialBasis: n must be >= 1");
    if (k < 0) throw std::invalid_argument("MonomialBasis: k must be >= 0");
    MonomialBasis b;
    b.n = n;
    b.k = k;
    std::vector<int> scratch;
    for (int d = 0; d <= k; ++d) exact_degree_indices(n, d, scratch, b.exponents);
    return b;
}

Eigen::VectorXd MonomialBasis::evaluate(const Eigen::VectorXd& x) const {
    if (x.size() != n) throw std::invalid_argument("MonomialBasis: dimension mismatch");
    // power table: powers(i, p) = x_i^p
    Eigen::MatrixXd powers(n, k + 1);
    powers.col(0).setOnes();
    for (int p = 1; p <= k; ++p)
        powers.col(p) = powers.col(p - 1).cwiseProduct(x);

    Eigen::VectorXd out(size());
    for (int j = 0; j < size(); ++j) {
        double v = 1.0;
        for (int i = 0; i < n; ++i) v *= powers(i, exponents[j][i]);
        out(j) = v;
    }
    return out;
}

Eigen::MatrixXd vandermonde(const Eigen::MatrixXd& points, const MonomialBasis& basis) {
    const Eigen::Index npts = points.cols();
    Eigen::MatrixXd v(npts, basis.size());
    for (Eigen::Index i = 0; i < npts; ++i)
        v.row(i) = basis.evaluate(points.col(i)).transpose();
    return v;
}

CardinalEvaluator::CardinalEvaluator(const NodeSet& node_set) : nodes_(node_set) {
    const int n = nodes_.simplex.dim();
    basis_ = MonomialBasis::make(n, nodes_.degree);
    if (basis_.size() != nodes_.count())
        throw std::invalid_argument("CardinalEvaluator: node count != dim P_k^n");

    // Assemble the Vandermonde matrix in reference (barycentric) coordinates
    // to keep the conditioning independent of the simplex placement.
    Eigen::MatrixXd ref(n, nodes_.count());
    for (int j = 0; j < nodes_.count(); ++j)
        ref.col(j) = reference_coords(nodes_.nodes.col(j));
    Eigen::MatrixXd v = vandermonde(ref, basis_);

    lu_.compute(v.transpose());
    const double rc = lu_.rcond();
    condition_ = (rc > 0.0) ? 1.0 / rc : std::numeric_limits<double>::infinity();
    if (!(rc > 1e-14))
        throw std::runtime_error(
            "CardinalEvaluator: Vandermonde system numerically singular, condition ~ " +
            std::to_string(condition_));
}

Eigen::VectorXd CardinalEvaluator::reference_coords(const Eigen::VectorXd& x) const {
    // first n barycentric coordinates = coordinates on the unit simplex
    return barycentric_coordinates(nodes_.simplex, x).head(nodes_.simplex.dim());
}

Eigen::VectorXd CardinalEvaluator::values(const Eigen::VectorXd& x) const {
    return lu_.solve(basis_.evaluate(reference_coords(x)));
}

Eigen::VectorXd cardinal_values(const NodeSet& node_set, const Eigen::VectorXd& x) {
    return CardinalEvaluator(node_set).values(x);
}

double lebesgue_function(const NodeSet& node_set, const Eigen::VectorXd& x) {
    return cardinal_values(node_set, x).lpNorm<1>();
}

double lebesgue_max_estimate(const Simplex& s, int k, int resolution) {
    if (resolution < k)
        throw std::invalid_argument("lebesgue_max_estimate: resolution must be >= k");
    CardinalEvaluator eval(equally_spaced_nodes(s, k));
    const NodeSet grid = equally_spaced_nodes(s, resolution);
    double best = 0.0;
    for (int j = 0; j < grid.count(); ++j)
        best = std::max(best, eval.values(grid.nodes.col(j)).lpNorm<1>());
    return best;
}

NormingMeasure norming_measure(const NodeSet& node_set, const Eigen::VectorXd& x) {
    if (!contains(node_set.simplex, x))
        throw std::invalid_argument("norming_measure: anchor outside the simplex");
    NormingMeasure m;
    m.nodes = node_set;
    m.weights = cardinal_values(node_set, x);
    m.anchor = x;
    return m;
}

}  // namespace hspline
