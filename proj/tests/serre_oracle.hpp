#pragma once

// Independent multiplicity oracle. By the Gabber-Kac theorem the positive
// part of a symmetrizable Kac-Moody algebra is the free Lie algebra on
// e_1..e_n modulo the Serre relations, so its enveloping algebra is the free
// associative algebra modulo the two-sided ideal generated by
// ad(e_i)^{1-a_ij} e_j. Graded dimensions of that quotient are computed by
// linear algebra (rank mod a large prime), and multiplicities are peeled off
// the PBW product  sum dim U_beta t^beta = prod (1 - t^alpha)^(-mult alpha).

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace kmtest {

class SerreOracle {
 public:
  using Vec = std::vector<int>;

  SerreOracle(std::vector<std::vector<long long>> a, Vec box) : a_(std::move(a)), box_(std::move(box)) {
    n_ = a_.size();
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j) relations_.push_back(serre(i, j, static_cast<int>(1 - a_[i][j])));
    peel();
  }

  /// Multiplicity of a positive vector inside the box.
  long long mult(const Vec& beta) const {
    auto it = mult_.find(beta);
    return it == mult_.end() ? 0 : it->second;
  }

 private:
  using Word = std::vector<int>;
  struct Poly {
    std::vector<std::pair<Word, long long>> terms;
    Vec degree;
  };
  static constexpr long long kP = 1000000007LL;

  Poly serre(std::size_t i, std::size_t j, int k) const {
    // ad(x)^k y = sum_m (-1)^m C(k, m) x^{k-m} y x^m
    Poly p;
    p.degree.assign(n_, 0);
    p.degree[i] += k;
    p.degree[j] += 1;
    long long c = 1;
    for (int m = 0; m <= k; ++m) {
      Word w(static_cast<std::size_t>(k - m), static_cast<int>(i));
      w.push_back(static_cast<int>(j));
      w.insert(w.end(), static_cast<std::size_t>(m), static_cast<int>(i));
      p.terms.emplace_back(w, m % 2 ? -c : c);
      c = c * (k - m) / (m + 1);
    }
    return p;
  }

  static std::vector<Word> words(const Vec& deg) {
    Word base;
    for (std::size_t i = 0; i < deg.size(); ++i) base.insert(base.end(), static_cast<std::size_t>(deg[i]), static_cast<int>(i));
    std::vector<Word> out;
    std::sort(base.begin(), base.end());
    do out.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    return out;
  }

  static long long rank_mod_p(std::vector<std::vector<long long>> rows, std::size_t cols) {
    long long r = 0;
    for (std::size_t c = 0; c < cols && r < static_cast<long long>(rows.size()); ++c) {
      std::size_t piv = static_cast<std::size_t>(r);
      while (piv < rows.size() && rows[piv][c] == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[piv], rows[static_cast<std::size_t>(r)]);
      auto& pr = rows[static_cast<std::size_t>(r)];
      long long inv = 1, b = pr[c], e = kP - 2;
      while (e) {
        if (e & 1) inv = inv * b % kP;
        b = b * b % kP;
        e >>= 1;
      }
      for (auto& x : pr) x = x * inv % kP;
      for (std::size_t k = 0; k < rows.size(); ++k) {
        if (k == static_cast<std::size_t>(r) || rows[k][c] == 0) continue;
        const long long f = rows[k][c];
        for (std::size_t t = c; t < cols; ++t) rows[k][t] = ((rows[k][t] - f * pr[t]) % kP + kP) % kP;
      }
      ++r;
    }
    return r;
  }

  long long dim_u(const Vec& beta) const {
    const auto ws = words(beta);
    std::map<Word, std::size_t> col;
    for (std::size_t i = 0; i < ws.size(); ++i) col[ws[i]] = i;
    std::vector<std::vector<long long>> rows;
    for (const auto& r : relations_) {
      Vec rest(n_);
      bool fits = true;
      for (std::size_t i = 0; i < n_; ++i) {
        rest[i] = beta[i] - r.degree[i];
        fits = fits && rest[i] >= 0;
      }
      if (!fits) continue;
      for (const auto& w : words(rest))
        for (std::size_t cut = 0; cut <= w.size(); ++cut) {
          std::vector<long long> row(ws.size(), 0);
          for (const auto& [t, c] : r.terms) {
            Word full(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
            full.insert(full.end(), t.begin(), t.end());
            full.insert(full.end(), w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
            auto& x = row[col.at(full)];
            x = ((x + c) % kP + kP) % kP;
          }
          rows.push_back(std::move(row));
        }
    }
    return static_cast<long long>(ws.size()) - rank_mod_p(std::move(rows), ws.size());
  }

  void peel() {
    // All vectors in the box, by height.
    std::vector<Vec> all;
    Vec v(n_, 0);
    for (;;) {
      std::size_t i = 0;
      while (i < n_ && v[i] == box_[i]) v[i++] = 0;
      if (i == n_) break;
      ++v[i];
      all.push_back(v);
    }
    auto height = [](const Vec& x) {
      int h = 0;
      for (int c : x) h += c;
      return h;
    };
    std::stable_sort(all.begin(), all.end(), [&](const Vec& x, const Vec& y) { return height(x) < height(y); });
    std::map<Vec, long long> series;  // product of the factors applied so far
    series[Vec(n_, 0)] = 1;
    std::size_t start = 0;
    while (start < all.size()) {
      const int h = height(all[start]);
      std::size_t end = start;
      while (end < all.size() && height(all[end]) == h) ++end;
      for (std::size_t k = start; k < end; ++k) {
        const long long m = dim_u(all[k]) - series[all[k]];
        if (m != 0) mult_[all[k]] = m;
      }
      for (std::size_t k = start; k < end; ++k) {
        const auto it = mult_.find(all[k]);
        if (it == mult_.end()) continue;
        for (long long rep = 0; rep < it->second; ++rep)
          for (const auto& g : all) {  // ascending height: in-place 1/(1 - t^alpha)
            Vec prev(n_);
            bool ok = true;
            for (std::size_t i = 0; i < n_; ++i) {
              prev[i] = g[i] - all[k][i];
              ok = ok && prev[i] >= 0;
            }
            if (!ok) continue;
            auto p = series.find(prev);
            if (p != series.end()) series[g] += p->second;
          }
      }
      start = end;
    }
  }

  std::vector<std::vector<long long>> a_;
  Vec box_;
  std::size_t n_ = 0;
  std::vector<Poly> relations_;
  std::map<Vec, long long> mult_;
};

}  // namespace kmtest
