#ifndef HSPLINE_SIMPLEX_HPP
#define HSPLINE_SIMPLEX_HPP

#include <Eigen/Dense>
#include <vector>

namespace hspline {

/// An n-simplex in R^n stored as an n x (n+1) matrix, one vertex per column.
struct Simplex {
    Eigen::MatrixXd vertices;

    int dim() const { return static_cast<int>(vertices.rows()); }
    int vertex_count() const { return static_cast<int>(vertices.cols()); }
};

/// Multi-index of an equally spaced barycentric node: n+1 nonnegative
/// integers summing to the degree k.
struct BarycentricIndex {
    std::vector<int> parts;

    int degree() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
};

/// Equally spaced nodes of degree k on a simplex, with their barycentric
/// multi-indices in matching order.
struct NodeSet {
    Simplex simplex;
    int degree = 0;
    Eigen::MatrixXd nodes;  // n x N, node per column
    std::vector<BarycentricIndex> indices;

    int count() const { return static_cast<int>(nodes.cols()); }
};

// Barycentric coordinates of x with respect to s; sums to 1 and recombines
// to x. Throws on a degenerate simplex.
Eigen::VectorXd barycentric_coordinates(const Simplex& s, const Eigen::VectorXd& x);

// Containment test: min barycentric coordinate >= -tol.
bool contains(const Simplex& s, const Eigen::VectorXd& x, double tol = 1e-10);

// All nodes with barycentric coordinates (k_1/k, ..., k_{n+1}/k),
// enumerated in reverse-lexicographic order of the integer parts.
// Count equals binom(n+k, n).
NodeSet equally_spaced_nodes(const Simplex& s, int k);

// Regular n-simplex with all edges equal to diam and first vertex at the
// origin; deterministic construction.
Simplex regular_simplex(int n, double diam);

// Maximum pairwise vertex distance.
double diameter(const Simplex& s);

}  // namespace hspline

#endif
