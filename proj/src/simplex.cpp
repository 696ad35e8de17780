#include "hspline/simplex.hpp"

#include <cmath>
#include <stdexcept>

namespace hspline {

Eigen::VectorXd barycentric_coordinates(const Simplex& s, const Eigen::VectorXd& x) {
    const int n = s.dim();
    if (s.vertex_count() != n + 1)
        throw std::invalid_argument("barycentric_coordinates: simplex needs n+1 vertices");
    if (x.size() != n)
        throw std::invalid_argument("barycentric_coordinates: point dimension mismatch");

    Eigen::MatrixXd m(n + 1, n + 1);
    m.topRows(n) = s.vertices;
    m.row(n).setOnes();
    Eigen::VectorXd rhs(n + 1);
    rhs.head(n) = x;
    rhs(n) = 1.0;

    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    if (!lu.isInvertible())
        throw std::invalid_argument("barycentric_coordinates: degenerate simplex");
    return lu.solve(rhs);
}

bool contains(const Simplex& s, const Eigen::VectorXd& x, double tol) {
    return barycentric_coordinates(s, x).minCoeff() >= -tol;
}

namespace {

// Compositions of k into `parts` nonnegative integers, reverse-lexicographic:
// (k,0,...,0) first, (0,...,0,k) last.
void enumerate_compositions(int k, int parts, std::vector<int>& current,
                            std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        current.push_back(k);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int first = k; first >= 0; --first) {
        current.push_back(first);
        enumerate_compositions(k - first, parts - 1, current, out);
        current.pop_back();
    }
}

}  // namespace

NodeSet equally_spaced_nodes(const Simplex& s, int k) {
    if (k < 1) throw std::invalid_argument("equally_spaced_nodes: k must be >= 1");
    const int n = s.dim();

    std::vector<std::vector<int>> comps;
    std::vector<int> scratch;
    enumerate_compositions(k, n + 1, scratch, comps);

    NodeSet ns;
    ns.simplex = s;
    ns.degree = k;
    ns.nodes.resize(n, static_cast<Eigen::Index>(comps.size()));
    ns.indices.reserve(comps.size());
    for (std::size_t j = 0; j < comps.size(); ++j) {
        Eigen::VectorXd node = Eigen::VectorXd::Zero(n);
        for (int i = 0; i <= n; ++i)
            node += (static_cast<double>(comps[j][i]) / k) * s.vertices.col(i);
        ns.nodes.col(static_cast<Eigen::Index>(j)) = node;
        ns.indices.push_back(BarycentricIndex{comps[j]});
    }
    return ns;
}

Simplex regular_simplex(int n, double diam) {
    if (n < 1) throw std::invalid_argument("regular_simplex: n must be >= 1");
    if (!(diam > 0.0)) throw std::invalid_argument("regular_simplex: diam must be > 0");

    // Unit-edge construction: each new vertex sits above the centroid of the
    // previous face at the height that restores edge length 1.
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n, n + 1);
    for (int j = 1; j <= n; ++j) {
        Eigen::VectorXd g = v.leftCols(j).rowwise().mean();
        const double h = std::sqrt(1.0 - g.squaredNorm());
        v.col(j) = g;
        v(j - 1, j) += h;
    }
    Simplex s;
    s.vertices = diam * v;
    return s;
}

double diameter(const Simplex& s) {
    double d = 0.0;
    for (int i = 0; i < s.vertex_count(); ++i)
        for (int j = i + 1; j < s.vertex_count(); ++j)
            d = std::max(d, (s.vertices.col(i) - s.vertices.col(j)).norm());
    return d;
}

}  // namespace hspline
