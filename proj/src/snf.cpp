#include "neralign/snf.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace neralign {

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

struct Worker {
  IntMatrix& d;
  IntMatrix& u;
  IntMatrix& v;
  std::size_t rows;
  std::size_t cols;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(d[a], d[b]);
    std::swap(u[a], u[b]);
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(d[i][a], d[i][b]);
    for (std::size_t i = 0; i < v.size(); ++i) std::swap(v[i][a], v[i][b]);
  }

  // row a += q * row b
  void add_row(std::size_t a, std::size_t b, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < cols; ++j) d[a][j] += q * d[b][j];
    for (std::size_t j = 0; j < u[a].size(); ++j) u[a][j] += q * u[b][j];
  }

  // col a += q * col b
  void add_col(std::size_t a, std::size_t b, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < rows; ++i) d[i][a] += q * d[i][b];
    for (std::size_t i = 0; i < v.size(); ++i) v[i][a] += q * v[i][b];
  }

  void negate_row(std::size_t a) {
    for (std::size_t j = 0; j < cols; ++j) d[a][j] = -d[a][j];
    for (std::size_t j = 0; j < u[a].size(); ++j) u[a][j] = -u[a][j];
  }

  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    BigInt best = 0;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (d[i][j] == 0) continue;
        BigInt magnitude = abs_value(d[i][j]);
        if (!found || magnitude < best) {
          found = true;
          best = magnitude;
          pi = i;
          pj = j;
        }
      }
    }
    return found;
  }

  void run() {
    std::size_t limit = std::min(rows, cols);
    for (std::size_t t = 0; t < limit; ++t) {
      std::size_t pi = t;
      std::size_t pj = t;
      if (!find_pivot(t, pi, pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      while (true) {
        bool cleared = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (d[i][t] == 0) continue;
          BigInt q = d[i][t] / d[t][t];
          add_row(i, t, -q);
          if (d[i][t] != 0) {
            swap_rows(t, i);
            cleared = false;
          }
        }
        if (!cleared) continue;
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (d[t][j] == 0) continue;
          BigInt q = d[t][j] / d[t][t];
          add_col(j, t, -q);
          if (d[t][j] != 0) {
            swap_cols(t, j);
            cleared = false;
          }
        }
        if (cleared) break;
      }
      // Pivot must divide the remaining submatrix before moving on.
      bool restart = false;
      for (std::size_t i = t + 1; i < rows && !restart; ++i) {
        for (std::size_t j = t + 1; j < cols && !restart; ++j) {
          if (d[i][j] % d[t][t] != 0) {
            add_row(t, i, 1);
            restart = true;
          }
        }
      }
      if (restart) {
        --t;
        continue;
      }
      if (d[t][t] < 0) negate_row(t);
    }
  }
};

}  // namespace

std::vector<BigInt> SmithResult::diagonal() const {
  std::vector<BigInt> out;
  std::size_t limit = d.empty() ? 0 : std::min(d.size(), d[0].size());
  for (std::size_t i = 0; i < limit; ++i) out.push_back(d[i][i]);
  return out;
}

std::vector<BigInt> SmithResult::nontrivial_factors() const {
  std::vector<BigInt> out;
  for (const BigInt& value : diagonal()) {
    if (value > 1) out.push_back(value);
  }
  return out;
}

SmithResult smith_normal_form(IntMatrix a) {
  std::size_t rows = a.size();
  std::size_t cols = rows == 0 ? 0 : a[0].size();
  SmithResult result;
  result.d = std::move(a);
  result.u = identity(rows);
  result.v = identity(cols);
  if (rows == 0 || cols == 0) return result;
  Worker worker{result.d, result.u, result.v, rows, cols};
  worker.run();
  return result;
}

std::optional<std::vector<BigInt>> solve_integer(const IntMatrix& a,
                                                 const std::vector<BigInt>& b) {
  std::size_t rows = a.size();
  std::size_t cols = rows == 0 ? 0 : a[0].size();
  if (b.size() != rows) {
    throw std::invalid_argument("solve_integer: dimension mismatch");
  }
  SmithResult snf = smith_normal_form(a);
  std::vector<BigInt> rhs(rows, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < rows; ++j) rhs[i] += snf.u[i][j] * b[j];
  }
  std::vector<BigInt> y(cols, 0);
  std::size_t limit = std::min(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    BigInt diag = i < limit ? snf.d[i][i] : BigInt(0);
    if (diag == 0) {
      if (rhs[i] != 0) return std::nullopt;
    } else {
      if (rhs[i] % diag != 0) return std::nullopt;
      y[i] = rhs[i] / diag;
    }
  }
  std::vector<BigInt> x(cols, 0);
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < cols; ++j) x[i] += snf.v[i][j] * y[j];
  }
  return x;
}

std::optional<BigInt> order_in_cokernel(const IntMatrix& a,
                                        const std::vector<BigInt>& b) {
  std::size_t rows = a.size();
  std::size_t cols = rows == 0 ? 0 : a[0].size();
  if (b.size() != rows) {
    throw std::invalid_argument("order_in_cokernel: dimension mismatch");
  }
  SmithResult snf = smith_normal_form(a);
  std::vector<BigInt> rhs(rows, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < rows; ++j) rhs[i] += snf.u[i][j] * b[j];
  }
  std::size_t limit = std::min(rows, cols);
  BigInt order = 1;
  for (std::size_t i = 0; i < rows; ++i) {
    BigInt diag = i < limit ? snf.d[i][i] : BigInt(0);
    if (diag == 0) {
      if (rhs[i] != 0) return std::nullopt;  // infinite order
      continue;
    }
    BigInt g = boost::multiprecision::gcd(rhs[i], diag);
    BigInt need = diag / (g == 0 ? diag : g);
    order = boost::multiprecision::lcm(order, need);
  }
  return order;
}

}  // namespace neralign
