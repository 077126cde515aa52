#include "kmroots/cartan.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <queue>

#include "kmroots/error.hpp"

namespace kmroots {

std::string_view to_string(TypeTag t) {
  switch (t) {
    case TypeTag::Finite: return "finite";
    case TypeTag::Affine: return "affine";
    case TypeTag::Indefinite: return "indefinite";
  }
  return "?";
}

namespace {

std::string pos(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

using RatMatrix = std::vector<std::vector<mpq_class>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const mpq_class inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class f = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

IntMatrix CartanMatrix::rows() const {
  IntMatrix out(n_, std::vector<long long>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

std::size_t CartanMatrix::matrix_rank() const {
  RatMatrix m(n_, std::vector<mpq_class>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m[i][j] = (*this)(i, j);
  return rref(m).size();
}

CartanMatrix validate(const IntMatrix& raw, std::size_t max_rank) {
  const std::size_t n = raw.size();
  if (n == 0) throw Error(ErrorKind::NotGCM, "empty matrix");
  if (n > max_rank || n > RootVector::kCapacity)
    throw Error(ErrorKind::RankTooLarge,
                "matrix of size " + std::to_string(n) + " exceeds the rank cap " + std::to_string(max_rank));
  for (std::size_t i = 0; i < n; ++i)
    if (raw[i].size() != n)
      throw Error(ErrorKind::NotGCM, "matrix is not square (row " + std::to_string(i + 1) + ")");

  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i][i] != 2) throw Error(ErrorKind::NotGCM, "diagonal entry at " + pos(i, i) + " is not 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (raw[i][j] > 0) throw Error(ErrorKind::NotGCM, "positive off-diagonal entry at " + pos(i, j));
      if (raw[i][j] < -1000000) throw Error(ErrorKind::Overflow, "entry at " + pos(i, j) + " is too large");
      if ((raw[i][j] == 0) != (raw[j][i] == 0))
        throw Error(ErrorKind::NotGCM, "zero-symmetry violated at " + pos(i, j) + " / " + pos(j, i));
    }
  }

  CartanMatrix a;
  a.n_ = n;
  a.a_.resize(n * n);
  a.adj_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a.a_[i * n + j] = static_cast<int>(raw[i][j]);
      if (i != j && raw[i][j] != 0) a.adj_[i].push_back(j);
    }

  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::queue<std::size_t> todo;
    todo.push(s);
    seen[s] = true;
    while (!todo.empty()) {
      auto i = todo.front();
      todo.pop();
      comp.push_back(i);
      for (auto j : a.adj_[i])
        if (!seen[j]) {
          seen[j] = true;
          todo.push(j);
        }
    }
    std::sort(comp.begin(), comp.end());
    a.components_.push_back(std::move(comp));
  }
  return a;
}

Symmetrizer symmetrize(const CartanMatrix& a) {
  const std::size_t n = a.size();
  std::vector<mpq_class> q(n);
  std::vector<int> parent(n, -1);
  std::vector<bool> seen(n, false);
  Symmetrizer out;
  out.q.assign(n, 0);

  auto path_to_root = [&](std::size_t v) {
    std::vector<std::size_t> p{v};
    while (parent[v] >= 0) {
      v = static_cast<std::size_t>(parent[v]);
      p.push_back(v);
    }
    return p;
  };

  for (const auto& comp : a.components()) {
    const std::size_t root = comp.front();
    q[root] = 1;
    seen[root] = true;
    std::queue<std::size_t> todo;
    todo.push(root);
    while (!todo.empty()) {
      auto i = todo.front();
      todo.pop();
      for (auto j : a.neighbors(i)) {
        if (!seen[j]) {
          // q_i A_ij = q_j A_ji
          q[j] = q[i] * a(i, j) / a(j, i);
          seen[j] = true;
          parent[j] = static_cast<int>(i);
          todo.push(j);
        } else if (q[i] * a(i, j) != q[j] * a(j, i)) {
          // Close the cycle through the BFS tree to report a witness.
          auto pi = path_to_root(i), pj = path_to_root(j);
          while (pi.size() > 1 && pj.size() > 1 && pi[pi.size() - 2] == pj[pj.size() - 2]) {
            pi.pop_back();
            pj.pop_back();
          }
          std::vector<std::size_t> cycle(pi.begin(), pi.end());
          for (auto it = pj.rbegin() + 1; it != pj.rend(); ++it) cycle.push_back(*it);
          mpz_class fwd = 1, bwd = 1;
          std::string names;
          for (std::size_t k = 0; k < cycle.size(); ++k) {
            auto u = cycle[k], v = cycle[(k + 1) % cycle.size()];
            fwd *= a(u, v);
            bwd *= a(v, u);
            names += std::to_string(u + 1) + "-";
          }
          names += std::to_string(cycle.front() + 1);
          throw Error(ErrorKind::NotSymmetrizable, "cycle " + names + " has forward product " + fwd.get_str() +
                                                       " but backward product " + bwd.get_str());
        }
      }
    }
    mpz_class l = 1, g = 0;
    for (auto i : comp) l = lcm(l, mpz_class(q[i].get_den()));
    for (auto i : comp) {
      mpz_class v = q[i].get_num() * (l / q[i].get_den());
      g = gcd(g, v);
    }
    for (auto i : comp) {
      mpz_class v = q[i].get_num() * (l / q[i].get_den()) / g;
      if (!v.fits_slong_p()) throw Error(ErrorKind::Overflow, "symmetrizer entry too large");
      out.q[i] = v.get_si();
    }
  }
  return out;
}

MatrixType classify_subset(const CartanMatrix& a, const Symmetrizer& q, const std::vector<std::size_t>& idx) {
  const std::size_t m = idx.size();
  MatrixType t;
  t.component = idx;

  // Symmetric elimination on B = DA with diagonal pivots only. Any negative
  // pivot, or a zero diagonal with a nonzero row, means B is not semidefinite.
  RatMatrix b(m, std::vector<mpq_class>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) b[i][j] = mpq_class(q.q[idx[i]]) * a(idx[i], idx[j]);

  std::vector<bool> alive(m, true);
  std::size_t remaining = m;
  bool semidefinite = true;
  while (remaining > 0) {
    std::size_t k = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (!alive[i]) continue;
      if (b[i][i] < 0) {
        semidefinite = false;
        break;
      }
      if (b[i][i] > 0 && k == m) k = i;
    }
    if (!semidefinite) break;
    if (k == m) {
      for (std::size_t i = 0; i < m && semidefinite; ++i)
        for (std::size_t j = 0; j < m; ++j)
          if (alive[i] && alive[j] && b[i][j] != 0) {
            semidefinite = false;
            break;
          }
      break;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (!alive[i] || i == k || b[i][k] == 0) continue;
      const mpq_class f = b[i][k] / b[k][k];
      for (std::size_t j = 0; j < m; ++j)
        if (alive[j]) b[i][j] -= f * b[k][j];
    }
    alive[k] = false;
    --remaining;
  }

  if (!semidefinite) {
    t.tag = TypeTag::Indefinite;
  } else if (remaining == 0) {
    t.tag = TypeTag::Finite;
  } else if (remaining == 1) {
    t.tag = TypeTag::Affine;
  } else {
    t.tag = TypeTag::Indefinite;
  }

  if (t.tag == TypeTag::Affine) {
    RatMatrix am(m, std::vector<mpq_class>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) am[i][j] = a(idx[i], idx[j]);
    auto piv = rref(am);
    std::size_t free_col = m;
    for (std::size_t c = 0; c < m; ++c)
      if (std::find(piv.begin(), piv.end(), c) == piv.end()) free_col = c;
    std::vector<mpq_class> x(m, 0);
    x[free_col] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -am[r][free_col];
    mpz_class l = 1, g = 0;
    for (auto& v : x) l = lcm(l, mpz_class(v.get_den()));
    std::vector<mpz_class> z(m);
    for (std::size_t i = 0; i < m; ++i) {
      z[i] = x[i].get_num() * (l / x[i].get_den());
      g = gcd(g, z[i]);
    }
    if (z[0] < 0) g = -g;
    RootVector delta(a.size());
    for (std::size_t i = 0; i < m; ++i) {
      mpz_class v = z[i] / g;
      if (v <= 0) throw Error(ErrorKind::InvalidInput, "affine kernel vector is not positive");
      if (!v.fits_sint_p()) throw Error(ErrorKind::Overflow, "null root entry too large");
      delta.set(idx[i], static_cast<RootVector::Coeff>(v.get_si()));
    }
    t.null_root = delta;
  }
  return t;
}

std::vector<MatrixType> classify_type(const CartanMatrix& a, const Symmetrizer& q) {
  std::vector<MatrixType> out;
  for (const auto& comp : a.components()) out.push_back(classify_subset(a, q, comp));
  return out;
}

CartanMatrix submatrix(const CartanMatrix& a, std::vector<std::size_t> subset) {
  if (subset.empty()) throw Error(ErrorKind::EmptySubset, "submatrix of an empty index set");
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  IntMatrix raw(subset.size(), std::vector<long long>(subset.size()));
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= a.size()) throw Error(ErrorKind::InvalidInput, "index out of range in submatrix");
    for (std::size_t j = 0; j < subset.size(); ++j) raw[i][j] = a(subset[i], subset[j]);
  }
  auto sub = validate(raw, RootVector::kCapacity);
  sub.set_name(a.name());
  return sub;
}

}  // namespace kmroots
