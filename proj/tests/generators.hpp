#pragma once

// Hand-rolled generators of small graded rings for property tests and the acceptance run.

#include <algorithm>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "grado/crossed.hpp"
#include "grado/graded.hpp"

namespace gen {

using namespace grado;

struct Sample {
  std::string label;
  GradedPtr ring;
};

/// Preorder incidence algebra: basis e_ij for (i, j) in a reflexive transitive relation,
/// e_ij e_kl = delta_jk e_il, graded by deg e_ij = phi(i) - phi(j) in Z_m (m = 0 means Z).
inline Sample incidence(std::mt19937_64& rng, const Field& f, std::size_t max_dim) {
  for (;;) {
    const std::size_t n = 1 + rng() % 3;
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && rng() % 2) rel[i][j] = true;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (rel[i][k] && rel[k][j]) rel[i][j] = true;
    std::vector<std::pair<std::size_t, std::size_t>> basis;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rel[i][j]) basis.push_back({i, j});
    if (basis.size() > max_dim) continue;
    const std::size_t d = basis.size();
    std::vector<std::string> names;
    for (const auto& [i, j] : basis) names.push_back("e" + std::to_string(i) + std::to_string(j));
    std::vector<std::vector<Vec>> mul(d, std::vector<Vec>(d, zero_vec(f, d)));
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        if (basis[a].second == basis[b].first)
          for (std::size_t c = 0; c < d; ++c)
            if (basis[c].first == basis[a].first && basis[c].second == basis[b].second) mul[a][b][c] = f.one();
    Vec unit = zero_vec(f, d);
    for (std::size_t c = 0; c < d; ++c)
      if (basis[c].first == basis[c].second) unit[c] = f.one();
    auto alg = std::make_shared<const Algebra>(f, names, std::move(mul), std::move(unit));
    const std::size_t m = rng() % 4;  // 0 -> Z, else Z_{m+1}
    const Group g = m == 0 ? Group::free_abelian(1) : Group::cyclic(m + 1);
    std::vector<long long> phi(n);
    for (auto& p : phi) p = static_cast<long long>(rng() % 3);
    std::vector<GroupElem> deg;
    for (const auto& [i, j] : basis) {
      long long k = phi[i] - phi[j];
      if (m != 0) k = ((k % static_cast<long long>(m + 1)) + static_cast<long long>(m + 1)) % static_cast<long long>(m + 1);
      deg.push_back(GroupElem{{k}});
    }
    std::string label = "incidence n=" + std::to_string(n) + " dim=" + std::to_string(d) + " over " + f.name() +
                        (m == 0 ? " by Z" : " by Z" + std::to_string(m + 1));
    return {label, std::make_shared<const GradedRing>(alg, g, std::move(deg))};
  }
}

/// k[Z_n] graded by the quotient Z_n -> Z_m, m | n.
inline Sample group_algebra_quotient(std::mt19937_64& rng, const Field& f, std::size_t max_dim) {
  const std::size_t n = 1 + rng() % std::min<std::size_t>(max_dim, 6);
  std::vector<std::size_t> divisors;
  for (std::size_t m = 1; m <= n; ++m)
    if (n % m == 0) divisors.push_back(m);
  const std::size_t m = divisors[rng() % divisors.size()];
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  std::vector<std::vector<Vec>> mul(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mul[i][j] = unit_vec(f, n, (i + j) % n);
  auto alg = std::make_shared<const Algebra>(f, names, std::move(mul), unit_vec(f, n, 0));
  std::vector<GroupElem> deg;
  for (std::size_t i = 0; i < n; ++i) deg.push_back(GroupElem{{static_cast<long long>(i % m)}});
  return {"group algebra Z" + std::to_string(n) + " by Z" + std::to_string(m) + " over " + f.name(),
          std::make_shared<const GradedRing>(alg, Group::cyclic(m), std::move(deg))};
}

/// Restriction of a permutation action of Z_m on k^N to the ideal spanned by the coordinates in U.
inline TwistedPartialAction restricted_permutation_action(const Field& f, std::size_t N, std::size_t m,
                                                          const std::vector<std::size_t>& sigma,
                                                          const std::vector<bool>& in_u) {
  TwistedPartialAction t;
  t.base = std::make_shared<const Algebra>(diagonal_algebra(f, N));
  t.group = Group::cyclic(m);
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<std::size_t> pk(N), pinv(N);
    for (std::size_t i = 0; i < N; ++i) {
      std::size_t j = i;
      for (std::size_t s = 0; s < k; ++s) j = sigma[j];
      pk[i] = j;
      pinv[j] = i;
    }
    // D_g = R e intersect alpha_g(R e): coordinates j in U with sigma^-k(j) in U.
    Vec idem = zero_vec(f, N);
    Matrix alpha(f, N, N);
    for (std::size_t j = 0; j < N; ++j)
      if (in_u[j] && in_u[pinv[j]]) idem[j] = f.one();
    for (std::size_t i = 0; i < N; ++i)
      if (in_u[i] && in_u[pk[i]]) alpha.at(pk[i], i) = f.one();
    const GroupElem g{{static_cast<long long>(k)}};
    t.idem[g] = idem;
    t.alpha.insert_or_assign(g, alpha);
  }
  // Restrict the base to U so the unit of the base is the sum over U.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < N; ++i)
    if (in_u[i]) keep.push_back(i);
  TwistedPartialAction r;
  r.base = std::make_shared<const Algebra>(diagonal_algebra(f, keep.size()));
  r.group = t.group;
  for (const auto& [g, e] : t.idem) {
    Vec v;
    for (auto i : keep) v.push_back(e[i]);
    r.idem[g] = v;
    Matrix a(f, keep.size(), keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c)
      for (std::size_t rr = 0; rr < keep.size(); ++rr) a.at(rr, c) = t.alpha.at(g).at(keep[rr], keep[c]);
    r.alpha.insert_or_assign(g, a);
  }
  return r;
}

/// A random permutation of {0..N-1} whose order divides m.
inline std::vector<std::size_t> permutation_of_order_dividing(std::mt19937_64& rng, std::size_t N, std::size_t m) {
  std::vector<std::size_t> sigma(N);
  std::vector<std::size_t> free(N);
  for (std::size_t i = 0; i < N; ++i) free[i] = i;
  std::shuffle(free.begin(), free.end(), rng);
  std::size_t pos = 0;
  while (pos < N) {
    std::size_t len = (rng() % 2 && pos + m <= N) ? m : 1;
    for (std::size_t k = 0; k < len; ++k) sigma[free[pos + k]] = free[pos + (k + 1) % len];
    pos += len;
  }
  return sigma;
}

/// Partial crossed product k^n * Z_m from a restricted permutation action.
inline Sample partial_crossed(std::mt19937_64& rng, const Field& f, std::size_t max_dim) {
  for (;;) {
    const std::size_t m = 2 + rng() % 2;
    const std::size_t N = 1 + rng() % 4;
    auto sigma = permutation_of_order_dividing(rng, N, m);
    std::vector<bool> in_u(N);
    std::size_t u = 0;
    for (std::size_t i = 0; i < N; ++i) u += (in_u[i] = rng() % 3 != 0);
    if (u == 0) continue;
    auto t = restricted_permutation_action(f, N, m, sigma, in_u);
    std::size_t dim = 0;
    for (const auto& [g, e] : t.idem)
      for (const auto& x : e) dim += !x.is_zero();
    if (dim > max_dim) continue;
    auto cp = build_crossed_product(t);
    return {"partial crossed k^" + std::to_string(u) + " by Z" + std::to_string(m) + " over " + f.name(), cp.ring};
  }
}

/// 50 gradings of dimension at most 6 over GF(2) and GF(3), mixing the three families.
inline std::vector<Sample> random_gradings(std::uint64_t seed, std::size_t count = 50, std::size_t max_dim = 6) {
  std::mt19937_64 rng(seed);
  std::vector<Sample> out;
  for (std::size_t k = 0; k < count; ++k) {
    const Field f = Field::prime(k % 2 ? 3 : 2);
    switch (k % 3) {
      case 0: out.push_back(incidence(rng, f, max_dim)); break;
      case 1: out.push_back(group_algebra_quotient(rng, f, max_dim)); break;
      default: out.push_back(partial_crossed(rng, f, max_dim)); break;
    }
  }
  return out;
}

/// A random matrix over f.
inline Matrix random_matrix(std::mt19937_64& rng, const Field& f, std::size_t r, std::size_t c) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f.random(rng);
  return m;
}

}  // namespace gen
