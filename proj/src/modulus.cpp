#include "satlab/modulus.hpp"

#include <array>
#include <cmath>

#include "satlab/parallel.hpp"

namespace satlab {

namespace {

using Mat2 = std::array<std::array<double, 2>, 2>;
using Local = std::array<std::array<double, 3>, 3>;

// Local P1 stiffness for a right triangle with legs h in the reference square
// under the constant metric G: K_ab = area * grad(phi_a)^T G grad(phi_b).
Local local_stiffness(const Mat2& g, bool upper, double h) {
  // Lower triangle vertices (0,0), (1,0), (0,1); upper (1,0), (1,1), (0,1),
  // both scaled by h. Barycentric gradients are constant.
  const double inv = 1.0 / h;
  std::array<std::array<double, 2>, 3> grad{};
  if (!upper) {
    grad[0] = {-inv, -inv};
    grad[1] = {inv, 0.0};
    grad[2] = {0.0, inv};
  } else {
    grad[0] = {0.0, -inv};
    grad[1] = {inv, inv};
    grad[2] = {-inv, 0.0};
  }
  const double area = 0.5 * h * h;
  Local k{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      double s = 0.0;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) s += grad[a][i] * g[i][j] * grad[b][j];
      k[a][b] = area * s;
    }
  return k;
}

struct Mesh {
  int n = 0;           // cells per side
  double h = 0.0;      // cell size
  Local lower{}, upper{};
  int nodes() const { return (n + 1) * (n + 1); }
  int id(int i, int j) const { return j * (n + 1) + i; }
  bool dirichlet(int j) const { return j == 0 || j == n; }
};

// y = A x with Dirichlet rows (t = 0 and t = 1) output as zero. Node-centric
// gather over incident triangles: no write conflicts, deterministic.
void apply_operator(const Mesh& mesh, const std::vector<double>& x,
                    std::vector<double>& y) {
  const int n = mesh.n;
  for_range(n + 1, [&](std::int64_t jj) {
    const int j = static_cast<int>(jj);
    for (int i = 0; i <= n; ++i) {
      const int node = mesh.id(i, j);
      if (mesh.dirichlet(j)) {
        y[node] = 0.0;
        continue;
      }
      double acc = 0.0;
      // Cells touching node (i, j): (ci, cj) with ci in {i-1, i}, cj in {j-1, j}.
      for (int cj = j - 1; cj <= j; ++cj) {
        if (cj < 0 || cj >= n) continue;
        for (int ci = i - 1; ci <= i; ++ci) {
          if (ci < 0 || ci >= n) continue;
          const int li = i - ci, lj = j - cj;  // 0 or 1 within the cell
          // Lower triangle nodes: (0,0), (1,0), (0,1).
          {
            int a = -1;
            if (li == 0 && lj == 0) a = 0;
            if (li == 1 && lj == 0) a = 1;
            if (li == 0 && lj == 1) a = 2;
            if (a >= 0) {
              const int nodes[3] = {mesh.id(ci, cj), mesh.id(ci + 1, cj),
                                    mesh.id(ci, cj + 1)};
              for (int b = 0; b < 3; ++b) acc += mesh.lower[a][b] * x[nodes[b]];
            }
          }
          // Upper triangle nodes: (1,0), (1,1), (0,1).
          {
            int a = -1;
            if (li == 1 && lj == 0) a = 0;
            if (li == 1 && lj == 1) a = 1;
            if (li == 0 && lj == 1) a = 2;
            if (a >= 0) {
              const int nodes[3] = {mesh.id(ci + 1, cj), mesh.id(ci + 1, cj + 1),
                                    mesh.id(ci, cj + 1)};
              for (int b = 0; b < 3; ++b) acc += mesh.upper[a][b] * x[nodes[b]];
            }
          }
        }
      }
      y[node] = acc;
    }
  });
}

double masked_dot(const Mesh& mesh, const std::vector<double>& a,
                  const std::vector<double>& b) {
  std::vector<double> prod(a.size());
  const int n = mesh.n;
  for_range(n + 1, [&](std::int64_t jj) {
    const int j = static_cast<int>(jj);
    for (int i = 0; i <= n; ++i) {
      const int node = mesh.id(i, j);
      prod[node] = mesh.dirichlet(j) ? 0.0 : a[node] * b[node];
    }
  });
  return block_sum(prod);
}

double solve_energy(Complex va, Complex vb, int n) {
  const double det = va.real() * vb.imag() - va.imag() * vb.real();
  const double scale = std::abs(va) * std::abs(vb);
  if (scale == 0.0 || std::abs(det) < 1e-14 * scale)
    throw OutOfDomain("degenerate parallelogram (zero or collinear spanning vectors)");
  const double dot = va.real() * vb.real() + va.imag() * vb.imag();
  const double ad = std::abs(det);
  const Mat2 g = {{{std::norm(vb) / ad, -dot / ad}, {-dot / ad, std::norm(va) / ad}}};

  Mesh mesh;
  mesh.n = n;
  mesh.h = 1.0 / n;
  mesh.lower = local_stiffness(g, false, mesh.h);
  mesh.upper = local_stiffness(g, true, mesh.h);

  // Potential with u = t on the Dirichlet edges, CG for the interior.
  std::vector<double> u(mesh.nodes());
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i) u[mesh.id(i, j)] = static_cast<double>(j) / n;

  std::vector<double> r(mesh.nodes()), p(mesh.nodes()), ap(mesh.nodes());
  apply_operator(mesh, u, r);
  for (double& v : r) v = -v;  // b = 0 in the interior
  p = r;
  double rr = masked_dot(mesh, r, r);
  const double rr0 = rr;
  const int max_iter = 60 * (n + 1);
  for (int it = 0; it < max_iter && rr > 1e-20 * std::max(1.0, rr0); ++it) {
    apply_operator(mesh, p, ap);
    const double pap = masked_dot(mesh, p, ap);
    if (pap <= 0.0) break;
    const double alpha = rr / pap;
    for (std::size_t k = 0; k < u.size(); ++k) u[k] += alpha * p[k];
    for (std::size_t k = 0; k < r.size(); ++k) r[k] -= alpha * ap[k];
    const double rr_next = masked_dot(mesh, r, r);
    const double beta = rr_next / rr;
    rr = rr_next;
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = r[k] + beta * p[k];
  }
  if (rr > 1e-16 * std::max(1.0, rr0))
    throw ContinuationFailure("conjugate gradient did not reach tolerance");

  // Energy by element, fixed order, blocked summation.
  std::vector<double> contrib(static_cast<std::size_t>(n) * n * 2);
  for_range(n, [&](std::int64_t cj) {
    for (int ci = 0; ci < n; ++ci) {
      const int lower_nodes[3] = {mesh.id(ci, static_cast<int>(cj)),
                                  mesh.id(ci + 1, static_cast<int>(cj)),
                                  mesh.id(ci, static_cast<int>(cj) + 1)};
      const int upper_nodes[3] = {mesh.id(ci + 1, static_cast<int>(cj)),
                                  mesh.id(ci + 1, static_cast<int>(cj) + 1),
                                  mesh.id(ci, static_cast<int>(cj) + 1)};
      double e_lower = 0.0, e_upper = 0.0;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          e_lower += u[lower_nodes[a]] * mesh.lower[a][b] * u[lower_nodes[b]];
          e_upper += u[upper_nodes[a]] * mesh.upper[a][b] * u[upper_nodes[b]];
        }
      contrib[(cj * n + ci) * 2] = e_lower;
      contrib[(cj * n + ci) * 2 + 1] = e_upper;
    }
  });
  return block_sum(contrib);
}

}  // namespace

double parallelogram_modulus(Complex va, Complex vb, int grid) {
  if (grid < 8) throw OutOfDomain("grid must be at least 8");
  const double coarse = 1.0 / solve_energy(va, vb, grid);
  const double fine = 1.0 / solve_energy(va, vb, 2 * grid);
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace satlab
