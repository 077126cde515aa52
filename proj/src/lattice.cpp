#include "kmroots/lattice.hpp"

#include <string>

#include "kmroots/error.hpp"

namespace kmroots {

GramTable::GramTable(const CartanMatrix& a, const Symmetrizer& q) : n_(a.size()), b_(n_ * n_), q_(q) {
  if (q.q.size() != n_) throw Error(ErrorKind::DimensionMismatch, "symmetrizer does not match matrix");
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) b_[i * n_ + j] = q.q[i] * a(i, j);
}

std::int64_t form(const GramTable& b, const RootVector& x, const RootVector& y) {
  const std::size_t n = b.size();
  if (x.rank() != n || y.rank() != n)
    throw Error(ErrorKind::DimensionMismatch, "form of " + x.str() + " and " + y.str() + " in rank " +
                                                  std::to_string(n));
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t j = 0; j < n; ++j) row += b(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

std::int64_t pairing(const CartanMatrix& a, const RootVector& x, std::size_t i) {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s += static_cast<std::int64_t>(x[j]) * a(i, j);
  return s;
}

std::int64_t rho_pairing(const GramTable& b, const RootVector& x) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < b.size(); ++i) s += static_cast<std::int64_t>(x[i]) * b.symmetrizer().q[i];
  return s;
}

bool is_connected(const CartanMatrix& a, const RootVector& x) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroVector, "connectivity of the zero vector");
  const std::size_t n = a.size();
  std::vector<bool> in(n), seen(n);
  std::size_t start = n, count = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] != 0) {
      in[i] = true;
      ++count;
      if (start == n) start = i;
    }
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  std::size_t reached = 0;
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    ++reached;
    for (auto j : a.neighbors(i))
      if (in[j] && !seen[j]) {
        seen[j] = true;
        stack.push_back(j);
      }
  }
  return reached == count;
}

bool in_K(const CartanMatrix& a, const RootVector& x) {
  if (!x.is_positive()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (pairing(a, x, i) > 0) return false;
  return is_connected(a, x);
}

}  // namespace kmroots
