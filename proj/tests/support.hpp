#pragma once

#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <utility>

#include "kmroots/cartan.hpp"
#include "kmroots/lattice.hpp"
#include "kmroots/multiplicity.hpp"

namespace kmtest {

using kmroots::IntMatrix;

inline const IntMatrix kA2{{2, -1}, {-1, 2}};
inline const IntMatrix kB2{{2, -2}, {-1, 2}};
inline const IntMatrix kA1Aff{{2, -2}, {-2, 2}};
inline const IntMatrix kA2Aff{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
inline const IntMatrix kTwisted{{2, -1, 0}, {-1, 2, -3}, {0, -1, 2}};
inline const IntMatrix kHyp3{{2, -3}, {-3, 2}};
inline const IntMatrix kRank3{{2, -2, 0}, {-2, 2, -1}, {0, -1, 2}};

// Tables are expensive enough to share between tests.
inline const kmroots::MultiplicityTable& table(const IntMatrix& rows, int h) {
  static std::map<std::pair<IntMatrix, int>, std::unique_ptr<kmroots::MultiplicityTable>> memo;
  auto& slot = memo[{rows, h}];
  if (!slot) {
    const auto a = kmroots::validate(rows);
    slot = std::make_unique<kmroots::MultiplicityTable>(kmroots::compute_table(a, kmroots::symmetrize(a), h));
  }
  return *slot;
}

// Random connected symmetrizable GCM: B symmetric with b_ii = 2 q_i and
// off-diagonal entries -lcm(q_i, q_j) t, so that A = D^{-1} B is integral.
inline IntMatrix random_gcm(std::mt19937& rng, std::size_t n, int max_t = 2) {
  std::uniform_int_distribution<int> qd(1, 3), td(0, max_t), td1(1, max_t);
  std::vector<long long> q(n);
  for (auto& x : q) x = qd(rng);
  std::vector<std::vector<long long>> b(n, std::vector<long long>(n, 0));
  auto lcm = [](long long x, long long y) { return x / std::gcd(x, y) * y; };
  for (std::size_t j = 1; j < n; ++j) {
    const std::size_t i = std::uniform_int_distribution<std::size_t>(0, j - 1)(rng);
    b[i][j] = b[j][i] = -lcm(q[i], q[j]) * td1(rng);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (b[i][j] == 0) b[i][j] = b[j][i] = -lcm(q[i], q[j]) * td(rng);
  IntMatrix a(n, std::vector<long long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = i == j ? 2 : b[i][j] / q[i];
  return a;
}

}  // namespace kmtest
