#include "ctxprob/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>

#include "ctxprob/error.hpp"

namespace ctxprob {

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Kuhn's augmenting paths. Rows are processed in order and columns tried lowest index
// first, so the matching is deterministic for a given support.
template <class Support>
std::optional<std::vector<int>> perfect_matching(int n, Support support) {
  std::vector<int> match_col(n, -1);
  std::vector<char> visited(n);
  std::function<bool(int)> augment = [&](int r) -> bool {
    for (int c = 0; c < n; ++c) {
      if (!support(r, c) || visited[c]) continue;
      visited[c] = 1;
      if (match_col[c] < 0 || augment(match_col[c])) {
        match_col[c] = r;
        return true;
      }
    }
    return false;
  };
  for (int r = 0; r < n; ++r) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(r)) return std::nullopt;
  }
  std::vector<int> perm(n);
  for (int c = 0; c < n; ++c) perm[match_col[c]] = c;
  return perm;
}

// Nontrivial solution of [vec(vertex_1) .. vec(vertex_m); 1 .. 1] mu = 0, found by row
// echelon elimination (largest pivot in magnitude; exact when T
// is Rational since eps is 0 there). Empty result means full column rank.
template <class T>
std::vector<T> vertex_dependency(const std::vector<DecompositionTerm<T>>& terms, int rows,
                                 int cols, const T& eps) {
  using std::abs;
  const int m = static_cast<int>(terms.size());
  const int neq = rows * cols + 1;
  std::vector<std::vector<T>> a(neq, std::vector<T>(m, T(0)));
  for (int k = 0; k < m; ++k) {
    for (int r = 0; r < rows; ++r) a[r * cols + terms[k].cols[r]][k] = T(1);
    a[neq - 1][k] = T(1);
  }

  std::vector<int> pivot_row_of_col(m, -1);
  int row = 0;
  for (int col = 0; col < m && row < neq; ++col) {
    int best = -1;
    for (int r = row; r < neq; ++r)
      if (abs(a[r][col]) > eps && (best < 0 || abs(a[r][col]) > abs(a[best][col]))) best = r;
    if (best < 0) continue;  // free column
    std::swap(a[row], a[best]);
    for (int r = 0; r < neq; ++r) {
      if (r == row || !(abs(a[r][col]) > eps)) continue;
      const T factor = a[r][col] / a[row][col];
      // Whole-row update: earlier free columns still carry live entries.
      for (int c = 0; c < m; ++c) a[r][c] -= factor * a[row][c];
      a[r][col] = T(0);
    }
    pivot_row_of_col[col] = row;
    ++row;
  }

  int free_col = -1;
  for (int col = 0; col < m && free_col < 0; ++col)
    if (pivot_row_of_col[col] < 0) free_col = col;
  if (free_col < 0) return {};

  // Reduced echelon form: each pivot row touches only its pivot column among pivots.
  std::vector<T> mu(m, T(0));
  mu[free_col] = T(1);
  for (int col = 0; col < m; ++col) {
    const int pr = pivot_row_of_col[col];
    if (pr >= 0) mu[col] = -a[pr][free_col] / a[pr][col];
  }
  return mu;
}

// Caratheodory pruning: while more terms than the bound, walk along a dependency until
// some coefficient hits zero. Preserves the coefficient sum and the reconstruction.
template <class T>
void prune_to_bound(std::vector<DecompositionTerm<T>>& terms, int rows, int cols, size_t bound,
                    const T& eps, const T& coeff_floor) {
  using std::abs;
  while (terms.size() > bound) {
    auto mu = vertex_dependency(terms, rows, cols, eps);
    if (mu.empty()) throw DomainError("decomposition pruning found no dependency");

    T mu_scale(0);
    for (const auto& x : mu)
      if (abs(x) > mu_scale) mu_scale = abs(x);
    const T mu_eps = eps * mu_scale;

    bool has_positive = false;
    for (const auto& x : mu) has_positive = has_positive || x > mu_eps;
    if (!has_positive)
      for (auto& x : mu) x = -x;

    int arg = -1;
    T step(0);
    for (size_t k = 0; k < mu.size(); ++k) {
      if (!(mu[k] > mu_eps)) continue;
      const T t = terms[k].coeff / mu[k];
      if (arg < 0 || t < step) {
        step = t;
        arg = static_cast<int>(k);
      }
    }
    if (arg < 0) throw DomainError("decomposition pruning found no descent direction");

    for (size_t k = 0; k < mu.size(); ++k) terms[k].coeff -= step * mu[k];
    terms[arg].coeff = T(0);
    std::erase_if(terms,
                  [&](const DecompositionTerm<T>& t) { return !(t.coeff > coeff_floor); });
  }
}

size_t birkhoff_bound(int n) { return static_cast<size_t>(n - 1) * (n - 1) + 1; }

// Residual coefficient mass lost to thresholding is returned to the largest term so the
// coefficients sum to exactly 1.
void absorb_deficit(std::vector<DecompositionTerm<double>>& terms) {
  if (terms.empty()) throw DomainError("decomposition produced no terms");
  double sum = 0;
  for (const auto& t : terms) sum += t.coeff;
  const double deficit = 1.0 - sum;
  if (std::abs(deficit) > 1e-6)
    throw DomainError("decomposition lost coefficient mass (" + fmt(deficit) + ")");
  auto largest = std::max_element(
      terms.begin(), terms.end(),
      [](const auto& a, const auto& b) { return a.coeff < b.coeff; });
  largest->coeff += deficit;
}

}  // namespace

StochasticVerdict classify_stochastic(const CondProbMatrix& m) {
  StochasticVerdict v;
  const int nr = m.rows(), nc = m.cols();
  if (nr == 0 || nc == 0) throw DomainError("empty matrix");

  bool defined_rows_ok = true;
  for (int i = 0; i < nr; ++i) {
    if (!m.row_defined(i)) {
      v.partial = true;
      v.row_sums.push_back(CondProbEntry::undefined());
      continue;
    }
    Rational sum = 0;
    for (int j = 0; j < nc; ++j) {
      const auto& e = m.entries[i][j];
      if (e.p < 0 || e.p > 1)
        throw DomainError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                          ") = " + rational_to_string(e.p) + " is outside [0,1]");
      sum += e.p;
    }
    if (sum != 1) {
      defined_rows_ok = false;
      std::string who = m.row_atoms.empty() ? "row " + std::to_string(i + 1)
                                            : "row '" + m.row_atoms[i] + "'";
      v.violations.push_back(who + " sums to " + rational_to_string(sum));
    }
    v.row_sums.push_back(CondProbEntry::of(sum));
  }
  v.row_stochastic = defined_rows_ok;

  bool cols_ok = true;
  for (int j = 0; j < nc; ++j) {
    bool defined = true;
    Rational sum = 0;
    for (int i = 0; i < nr; ++i) {
      if (!m.row_defined(i)) {
        defined = false;
        break;
      }
      sum += m.entries[i][j].p;
    }
    if (!defined) {
      v.col_sums.push_back(CondProbEntry::undefined());
      cols_ok = false;
      continue;
    }
    if (sum != 1) {
      cols_ok = false;
      if (nr == nc && !v.partial) {
        std::string who = m.col_atoms.empty() ? "column " + std::to_string(j + 1)
                                              : "column '" + m.col_atoms[j] + "'";
        v.violations.push_back(who + " sums to " + rational_to_string(sum));
      }
    }
    v.col_sums.push_back(CondProbEntry::of(sum));
  }
  v.doubly_stochastic = (nr == nc) && !v.partial && v.row_stochastic && cols_ok;

  if (v.partial) v.violations.push_back("matrix has Undefined rows");
  return v;
}

StochasticVerdictReal classify_stochastic(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) throw DomainError("empty matrix");
  if (m.minCoeff() < -tol || m.maxCoeff() > 1 + tol)
    throw DomainError("entry outside [0,1] beyond tolerance");

  StochasticVerdictReal v;
  bool rows_ok = true, cols_ok = true;
  for (int i = 0; i < m.rows(); ++i) {
    const double s = m.row(i).sum();
    v.row_sums.push_back(s);
    if (std::abs(s - 1) > tol) {
      rows_ok = false;
      v.violations.push_back("row " + std::to_string(i + 1) + " sums to " + fmt(s));
    }
  }
  for (int j = 0; j < m.cols(); ++j) {
    const double s = m.col(j).sum();
    v.col_sums.push_back(s);
    if (std::abs(s - 1) > tol) cols_ok = false;
  }
  v.row_stochastic = rows_ok;
  v.doubly_stochastic = (m.rows() == m.cols()) && rows_ok && cols_ok;
  return v;
}

RealDecomposition birkhoff_decompose(const Eigen::MatrixXd& m, double tol) {
  if (tol <= 0) throw DomainError("tolerance must be positive");
  const int n = static_cast<int>(m.rows());
  if (n == 0 || m.cols() != n || m.minCoeff() < -tol) throw DomainError("not doubly stochastic");
  for (int i = 0; i < n; ++i)
    if (std::abs(m.row(i).sum() - 1) > tol || std::abs(m.col(i).sum() - 1) > tol)
      throw DomainError("not doubly stochastic");

  Eigen::MatrixXd r = m;
  std::vector<DecompositionTerm<double>> terms;
  const int cap = n * n + 2;
  for (int iter = 0; iter <= cap; ++iter) {
    bool exhausted = false;
    for (int i = 0; i < n && !exhausted; ++i) exhausted = r.row(i).maxCoeff() <= tol;
    if (exhausted) break;
    if (iter == cap) throw DomainError("matching failure: extraction did not terminate");

    auto perm = perfect_matching(n, [&](int i, int j) { return r(i, j) > tol; });
    if (!perm) {
      double mass = 0;
      for (int i = 0; i < n; ++i) mass = std::max(mass, r.row(i).sum());
      if (mass <= n * n * tol) break;  // only thresholded dust is left
      throw DomainError("matching failure: support admits no perfect matching at tolerance " +
                        fmt(tol));
    }
    double c = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) c = std::min(c, r(i, (*perm)[i]));
    terms.push_back({c, *perm});
    for (int i = 0; i < n; ++i) r(i, (*perm)[i]) -= c;
  }

  prune_to_bound<double>(terms, n, n, birkhoff_bound(n), 1e-12, 1e-14);
  absorb_deficit(terms);
  if (terms.size() > birkhoff_bound(n))
    throw DomainError("permutation term bound exceeded");
  return {"permutation", std::move(terms)};
}

namespace {

void require_rectangular(const RationalMatrix& m) {
  if (m.empty() || m.front().empty()) throw DomainError("empty matrix");
  for (const auto& row : m)
    if (row.size() != m.front().size()) throw DomainError("ragged matrix");
}

}  // namespace

RationalDecomposition birkhoff_decompose(const RationalMatrix& m) {
  require_rectangular(m);
  const int n = static_cast<int>(m.size());
  if (static_cast<int>(m.front().size()) != n) throw DomainError("not doubly stochastic");
  for (int i = 0; i < n; ++i) {
    Rational rs = 0, cs = 0;
    for (int j = 0; j < n; ++j) {
      if (m[i][j] < 0) throw DomainError("not doubly stochastic");
      rs += m[i][j];
      cs += m[j][i];
    }
    if (rs != 1 || cs != 1) throw DomainError("not doubly stochastic");
  }

  RationalMatrix r = m;
  std::vector<DecompositionTerm<Rational>> terms;
  const int cap = n * n + 2;
  for (int iter = 0; iter <= cap; ++iter) {
    bool live = false;
    for (int i = 0; i < n && !live; ++i)
      for (int j = 0; j < n && !live; ++j) live = r[i][j] > 0;
    if (!live) break;
    if (iter == cap) throw DomainError("matching failure: extraction did not terminate");

    auto perm = perfect_matching(n, [&](int i, int j) { return r[i][j] > 0; });
    if (!perm)
      throw DomainError("matching failure: support admits no perfect matching");
    Rational c = r[0][(*perm)[0]];
    for (int i = 1; i < n; ++i) c = std::min(c, r[i][(*perm)[i]]);
    terms.push_back({c, *perm});
    for (int i = 0; i < n; ++i) r[i][(*perm)[i]] -= c;
  }

  prune_to_bound<Rational>(terms, n, n, birkhoff_bound(n), Rational(0), Rational(0));
  if (terms.size() > birkhoff_bound(n))
    throw DomainError("permutation term bound exceeded");
  return {"permutation", std::move(terms)};
}

RealDecomposition row_polytope_decompose(const Eigen::MatrixXd& m, double tol) {
  if (tol <= 0) throw DomainError("tolerance must be positive");
  const int n = static_cast<int>(m.rows()), w = static_cast<int>(m.cols());
  if (n == 0 || w == 0 || m.minCoeff() < -tol) throw DomainError("not row stochastic");
  for (int i = 0; i < n; ++i)
    if (std::abs(m.row(i).sum() - 1) > tol) throw DomainError("not row stochastic");

  Eigen::MatrixXd r = m;
  std::vector<DecompositionTerm<double>> terms;
  const int cap = n * w + 2;
  for (int iter = 0; iter <= cap; ++iter) {
    std::vector<int> cols(n, -1);
    bool exhausted = false;
    for (int i = 0; i < n && !exhausted; ++i) {
      for (int j = 0; j < w; ++j)
        if (r(i, j) > tol) {
          cols[i] = j;
          break;
        }
      exhausted = cols[i] < 0;
    }
    if (exhausted) break;
    if (iter == cap) throw DomainError("extraction did not terminate");

    double c = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) c = std::min(c, r(i, cols[i]));
    terms.push_back({c, cols});
    for (int i = 0; i < n; ++i) r(i, cols[i]) -= c;
  }

  absorb_deficit(terms);
  if (terms.size() > static_cast<size_t>(n) * (w - 1) + 1)
    throw DomainError("row-vertex term bound exceeded");
  return {"row-vertex", std::move(terms)};
}

RationalDecomposition row_polytope_decompose(const RationalMatrix& m) {
  require_rectangular(m);
  const int n = static_cast<int>(m.size()), w = static_cast<int>(m.front().size());
  for (const auto& row : m) {
    Rational s = 0;
    for (const auto& x : row) {
      if (x < 0) throw DomainError("not row stochastic");
      s += x;
    }
    if (s != 1) throw DomainError("not row stochastic");
  }

  RationalMatrix r = m;
  std::vector<DecompositionTerm<Rational>> terms;
  const int cap = n * w + 2;
  for (int iter = 0; iter <= cap; ++iter) {
    std::vector<int> cols(n, -1);
    bool exhausted = false;
    for (int i = 0; i < n && !exhausted; ++i) {
      for (int j = 0; j < w; ++j)
        if (r[i][j] > 0) {
          cols[i] = j;
          break;
        }
      exhausted = cols[i] < 0;
    }
    if (exhausted) break;
    if (iter == cap) throw DomainError("extraction did not terminate");

    Rational c = r[0][cols[0]];
    for (int i = 1; i < n; ++i) c = std::min(c, r[i][cols[i]]);
    terms.push_back({c, cols});
    for (int i = 0; i < n; ++i) r[i][cols[i]] -= c;
  }

  if (terms.size() > static_cast<size_t>(n) * (w - 1) + 1)
    throw DomainError("row-vertex term bound exceeded");
  return {"row-vertex", std::move(terms)};
}

Eigen::MatrixXd reconstruct(const RealDecomposition& d, int rows, int cols) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows, cols);
  for (const auto& t : d.terms)
    for (int r = 0; r < rows; ++r) m(r, t.cols[r]) += t.coeff;
  return m;
}

RationalMatrix reconstruct(const RationalDecomposition& d, int rows, int cols) {
  RationalMatrix m(rows, std::vector<Rational>(cols, Rational(0)));
  for (const auto& t : d.terms)
    for (int r = 0; r < rows; ++r) m[r][t.cols[r]] += t.coeff;
  return m;
}

}  // namespace ctxprob
