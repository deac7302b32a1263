#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qwsed/graph.hpp"

namespace qwsed {

using cd = std::complex<double>;

/// Distinct eigenvalues (strictly descending) with their orthogonal
/// eigenprojectors. The adjacency matrix reconstructs as sum lambda_i P_i
/// and the transition matrix as sum exp(i t lambda_i) P_i.
struct SpectralDecomposition {
  int n = 0;
  std::vector<double> eigenvalues;     // descending
  std::vector<int> multiplicities;     // sum to n
  std::vector<Eigen::MatrixXd> projectors;
  double cluster_tol = 1e-8;           // relative; see cluster_threshold()

  std::size_t count() const { return eigenvalues.size(); }
  double diag(std::size_t i, int u) const { return projectors[i](u, u); }

  double cluster_threshold() const {
    double m = 0.0;
    for (double l : eigenvalues) m = std::max(m, std::abs(l));
    return cluster_tol * std::max(1.0, m);
  }

  /// Index of the clustered eigenvalue equal to `value` within the
  /// clustering threshold, or -1.
  int index_of(double value, double extra_tol = 0.0) const {
    double tol = cluster_threshold() + extra_tol;
    for (std::size_t i = 0; i < eigenvalues.size(); ++i)
      if (std::abs(eigenvalues[i] - value) <= tol) return static_cast<int>(i);
    return -1;
  }

  int zero_index() const { return index_of(0.0); }
};

/// Full symmetric diagonalization; raw eigenvalues closer than
/// cluster_tol * max(1, |lambda|_max) merge into one distinct value whose
/// projector sums the corresponding outer products.
inline SpectralDecomposition eigendecompose(const WeightedGraph& g, double cluster_tol = 1e-8) {
  if (g.n < 1) fail(errc::bad_params, "eigendecompose requires at least one vertex");
  Eigen::MatrixXd a = g.adjacency_matrix();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success)
    fail(errc::convergence_failure, "symmetric eigensolver did not converge");
  Eigen::VectorXd w = solver.eigenvalues();   // ascending
  const Eigen::MatrixXd& v = solver.eigenvectors();
  double scale = std::max(1.0, std::max(std::abs(w(0)), std::abs(w(g.n - 1))));
  double gap = cluster_tol * scale;

  SpectralDecomposition s;
  s.n = g.n;
  s.cluster_tol = cluster_tol;
  int begin = 0;
  for (int i = 1; i <= g.n; ++i) {
    if (i == g.n || w(i) - w(i - 1) >= gap) {
      int len = i - begin;
      Eigen::MatrixXd basis = v.middleCols(begin, len);
      s.eigenvalues.push_back(w.segment(begin, len).mean());
      s.multiplicities.push_back(len);
      s.projectors.push_back(basis * basis.transpose());
      begin = i;
    }
  }
  std::reverse(s.eigenvalues.begin(), s.eigenvalues.end());
  std::reverse(s.multiplicities.begin(), s.multiplicities.end());
  std::reverse(s.projectors.begin(), s.projectors.end());
  return s;
}

/// Eigenvalue support of one vertex: the indices whose projector does not
/// annihilate e_u, with the matching projector diagonal entries.
struct VertexProfile {
  int vertex = 0;
  std::vector<int> support;      // indices into the decomposition
  std::vector<double> diagonals; // (E_lambda)_{u,u} per support entry
  std::vector<int> ambiguous;    // borderline norms in [1e-10, support_tol)

  double diagonal_at(int eigen_index) const {
    for (std::size_t i = 0; i < support.size(); ++i)
      if (support[i] == eigen_index) return diagonals[i];
    return 0.0;
  }
  bool contains(int eigen_index) const {
    for (int i : support)
      if (i == eigen_index) return true;
    return false;
  }
};

inline VertexProfile support(const SpectralDecomposition& s, int u, double support_tol = 1e-8) {
  if (u < 0 || u >= s.n) fail(errc::index_out_of_range, "vertex " + std::to_string(u));
  VertexProfile p;
  p.vertex = u;
  for (std::size_t i = 0; i < s.count(); ++i) {
    double d = std::max(0.0, s.diag(i, u));
    double norm = std::sqrt(d);  // ||E e_u|| since E is an orthogonal projector
    if (norm > support_tol) {
      p.support.push_back(static_cast<int>(i));
      p.diagonals.push_back(s.diag(i, u));
    } else if (norm >= 1e-10) {
      p.ambiguous.push_back(static_cast<int>(i));
    }
  }
  return p;
}

/// U(t)_{u,u} assembled from the support projector diagonals.
inline cd walk_diagonal(const VertexProfile& p, const SpectralDecomposition& s, double t) {
  cd sum(0.0, 0.0);
  for (std::size_t i = 0; i < p.support.size(); ++i)
    sum += std::polar(p.diagonals[i], s.eigenvalues[p.support[i]] * t);
  return sum;
}

inline cd walk_diagonal(const SpectralDecomposition& s, int u, double t,
                        double support_tol = 1e-8) {
  return walk_diagonal(support(s, u, support_tol), s, t);
}

/// Row u of U(t), for unitarity checks and transfer inspection.
inline Eigen::VectorXcd walk_row(const SpectralDecomposition& s, int u, double t) {
  Eigen::VectorXcd row = Eigen::VectorXcd::Zero(s.n);
  for (std::size_t i = 0; i < s.count(); ++i) {
    cd phase = std::polar(1.0, s.eigenvalues[i] * t);
    row += phase * s.projectors[i].row(u).transpose().cast<cd>();
  }
  return row;
}

/// Equal projector diagonals across the whole spectrum.
inline bool cospectral(const SpectralDecomposition& s, int u, int v, double tol = 1e-9) {
  if (u < 0 || u >= s.n || v < 0 || v >= s.n)
    fail(errc::index_out_of_range, "cospectral vertex index");
  for (std::size_t i = 0; i < s.count(); ++i)
    if (std::abs(s.diag(i, u) - s.diag(i, v)) > tol) return false;
  return true;
}

}  // namespace qwsed
