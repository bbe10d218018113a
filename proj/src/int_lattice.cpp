#include "gscale/int_lattice.hpp"

#include <utility>

#include "gscale/arith.hpp"

namespace gscale::lattice {

  Mat identity(std::size_t d) {
    Mat out(d, Vec(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
      out[i][i] = 1;
    }
    return out;
  }

  Mat mul(Mat const& a, Mat const& b) {
    std::size_t const rows = a.size(), inner = b.size();
    std::size_t const cols = inner ? b[0].size() : 0;
    Mat               out(rows, Vec(cols, 0));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t k = 0; k < inner; ++k) {
        if (a[i][k] == 0) {
          continue;
        }
        for (std::size_t j = 0; j < cols; ++j) {
          out[i][j] = arith::add(out[i][j], arith::mul(a[i][k], b[k][j]));
        }
      }
    }
    return out;
  }

  Vec mul(Mat const& a, Vec const& v) {
    Vec out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t k = 0; k < v.size(); ++k) {
        out[i] = arith::add(out[i], arith::mul(a[i][k], v[k]));
      }
    }
    return out;
  }

  Vec add(Vec const& a, Vec const& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      out[i] = arith::add(a[i], b[i]);
    }
    return out;
  }

  Vec sub(Vec const& a, Vec const& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      out[i] = arith::sub(a[i], b[i]);
    }
    return out;
  }

  Mat negate(Mat const& a) {
    Mat out = a;
    for (auto& row : out) {
      for (auto& x : row) {
        x = arith::sub(0, x);
      }
    }
    return out;
  }

  Mat hcat(Mat const& a, Mat const& b) {
    Mat out = a;
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i].insert(out[i].end(), b[i].begin(), b[i].end());
    }
    return out;
  }

  // Bareiss fraction-free elimination.
  std::int64_t det(Mat const& a) {
    std::size_t const n = a.size();
    if (n == 0) {
      return 1;
    }
    std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] = a[i][j];
      }
    }
    __int128 prev = 1;
    int      sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m[k][k] == 0) {
        std::size_t r = k + 1;
        while (r < n && m[r][k] == 0) {
          ++r;
        }
        if (r == n) {
          return 0;
        }
        std::swap(m[k], m[r]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        }
      }
      prev = m[k][k];
    }
    return arith::narrow(sign * m[n - 1][n - 1]);
  }

  namespace {
    void column_combine(Mat& m, std::size_t c1, std::size_t c2, std::int64_t a,
                        std::int64_t b, std::int64_t c, std::int64_t d) {
      // (col c1, col c2) <- (a·c1 + b·c2, c·c1 + d·c2)
      for (auto& row : m) {
        std::int64_t x = row[c1], y = row[c2];
        row[c1]        = arith::add(arith::mul(a, x), arith::mul(b, y));
        row[c2]        = arith::add(arith::mul(c, x), arith::mul(d, y));
      }
    }

    void column_axpy(Mat& m, std::size_t dst, std::size_t src, std::int64_t q) {
      for (auto& row : m) {
        row[dst] = arith::sub(row[dst], arith::mul(q, row[src]));
      }
    }
  }  // namespace

  std::optional<ColumnHnf> column_hnf(Mat const& a) {
    std::size_t const d = a.size();
    std::size_t const n = d ? a[0].size() : 0;
    if (n < d) {
      return std::nullopt;
    }
    Mat w = a;
    Mat u = identity(n);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (w[i][j] == 0) {
          continue;
        }
        std::int64_t const x = w[i][i], y = w[i][j];
        auto const         eg = arith::extended_gcd(x, y);
        std::int64_t const xg = x / eg.g, yg = y / eg.g;
        column_combine(w, i, j, eg.x, eg.y, -yg, xg);
        column_combine(u, i, j, eg.x, eg.y, -yg, xg);
      }
      if (w[i][i] == 0) {
        return std::nullopt;
      }
      if (w[i][i] < 0) {
        column_axpy(w, i, i, 2);
        column_axpy(u, i, i, 2);
      }
      for (std::size_t j = 0; j < i; ++j) {
        std::int64_t q = arith::floor_div(w[i][j], w[i][i]);
        if (q != 0) {
          column_axpy(w, j, i, q);
          column_axpy(u, j, i, q);
        }
      }
    }
    ColumnHnf out;
    out.H.assign(d, Vec(d));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        out.H[i][j] = w[i][j];
      }
    }
    out.U = std::move(u);
    return out;
  }

  std::optional<Vec> solve_lower(Mat const& h, Vec const& c) {
    Vec z(h.size(), 0);
    for (std::size_t i = 0; i < h.size(); ++i) {
      std::int64_t r = c[i];
      for (std::size_t j = 0; j < i; ++j) {
        r = arith::sub(r, arith::mul(h[i][j], z[j]));
      }
      if (r % h[i][i] != 0) {
        return std::nullopt;
      }
      z[i] = r / h[i][i];
    }
    return z;
  }

  Vec reduce(Mat const& h, Vec v) {
    for (std::size_t j = 0; j < h.size(); ++j) {
      std::int64_t q = arith::floor_div(v[j], h[j][j]);
      if (q == 0) {
        continue;
      }
      for (std::size_t i = j; i < h.size(); ++i) {
        v[i] = arith::sub(v[i], arith::mul(q, h[i][j]));
      }
    }
    return v;
  }

  std::optional<Vec> solve(Mat const& a, Vec const& b) {
    auto f = column_hnf(a);
    if (!f) {
      return std::nullopt;
    }
    auto z = solve_lower(f->H, b);
    if (!z) {
      return std::nullopt;
    }
    return mul(f->U, *z);
  }

  // m + A u = n + B v  <=>  [A | -B](u, v) = n - m.
  std::optional<Vec> intersect_cosets(Mat const& a, Vec const& m, Mat const& b,
                                      Vec const& n) {
    auto f = column_hnf(hcat(a, negate(b)));
    if (!f) {
      return std::nullopt;
    }
    auto z = solve_lower(f->H, sub(n, m));
    if (!z) {
      return std::nullopt;
    }
    z->resize(f->U.size(), 0);
    Vec uv = mul(f->U, *z);
    uv.resize(a.size());
    return add(m, mul(a, uv));
  }

  std::vector<Vec> coset_reps(Mat const& h) {
    std::vector<Vec> out{Vec(h.size(), 0)};
    for (std::size_t j = 0; j < h.size(); ++j) {
      std::vector<Vec> next;
      for (auto const& v : out) {
        for (std::int64_t k = 0; k < h[j][j]; ++k) {
          auto w = v;
          w[j]   = k;
          next.push_back(std::move(w));
        }
      }
      out = std::move(next);
    }
    return out;
  }

}  // namespace gscale::lattice
