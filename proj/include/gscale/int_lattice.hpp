#ifndef GSCALE_INT_LATTICE_HPP_
#define GSCALE_INT_LATTICE_HPP_

// Small dense integer linear algebra: Hermite normal form with transform,
// exact solving, and canonical coset representatives of full-rank lattices.

#include <cstdint>
#include <optional>
#include <vector>

namespace gscale::lattice {

  using Vec = std::vector<std::int64_t>;
  using Mat = std::vector<Vec>;  // row-major

  Mat identity(std::size_t d);
  Mat mul(Mat const& a, Mat const& b);
  Vec mul(Mat const& a, Vec const& v);
  Vec add(Vec const& a, Vec const& b);
  Vec sub(Vec const& a, Vec const& b);
  Mat negate(Mat const& a);
  // [a | b], same number of rows.
  Mat hcat(Mat const& a, Mat const& b);

  std::int64_t det(Mat const& a);

  // Column-style HNF of a d×n matrix A of rank d: A·U = [H | 0] with H lower
  // triangular, positive diagonal, and 0 <= H[i][j] < H[i][i] for j < i.
  struct ColumnHnf {
    Mat H;
    Mat U;
  };
  // nullopt if A does not have full row rank.
  std::optional<ColumnHnf> column_hnf(Mat const& a);

  // Integer solution of H z = c for lower triangular H, if one exists.
  std::optional<Vec> solve_lower(Mat const& h, Vec const& c);

  // Canonical representative of v + Hℤ^d inside the box 0 <= y_j < H[j][j].
  Vec reduce(Mat const& h, Vec v);

  // Integer x with A x = b (A square, nonsingular), if one exists.
  std::optional<Vec> solve(Mat const& a, Vec const& b);

  // Some point of (m + Aℤ^d) ∩ (n + Bℤ^d), if nonempty.
  std::optional<Vec> intersect_cosets(Mat const& a, Vec const& m, Mat const& b,
                                      Vec const& n);

  // Box representatives of ℤ^d / Hℤ^d in lexicographic order.
  std::vector<Vec> coset_reps(Mat const& h);

}  // namespace gscale::lattice

#endif  // GSCALE_INT_LATTICE_HPP_
