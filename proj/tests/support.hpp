#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "grado/fixtures.hpp"

namespace support {

using namespace grado;

inline Vec vec(const Field& f, std::initializer_list<long long> xs) {
  Vec v;
  for (auto x : xs) v.push_back(f.from_int(x));
  return v;
}

inline Matrix mat(const Field& f, std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<Vec> rs;
  std::size_t cols = 0;
  for (const auto& r : rows) {
    rs.push_back(vec(f, r));
    cols = r.size();
  }
  return Matrix::from_rows(f, cols, rs);
}

inline GroupElem z(long long k) { return GroupElem{{k}}; }

/// Fixture instance built once per process.
inline const Instance& fixture(const std::string& name) {
  static std::map<std::string, Instance> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, build_fixture(name)).first;
  return it->second;
}

inline const GradedRing& ring(const std::string& name) { return *fixture(name).graded; }
inline GradedPtr ring_ptr(const std::string& name) { return fixture(name).graded; }

/// Operator T on k^3 to the ENDV element: E_ij (index 3i + j) acts as the matrix unit e_ij.
inline Vec endv_element(const Matrix& t) {
  Vec v;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) v.push_back(t.at(i, j));
  return v;
}

/// Linear extension of a basis-action table: coordinates of b_i b_j for arbitrary vectors.
inline Vec brute_mul(const Algebra& a, const Vec& x, const Vec& y) {
  Vec out = zero_vec(a.field(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!x[i].is_zero() && !y[j].is_zero()) axpy(out, x[i] * y[j], a.structure(i, j));
  return out;
}

/// Every vector of F_p^n, for small exhaustive oracles.
inline std::vector<Vec> all_vectors(const Field& f, std::size_t n) {
  std::vector<Vec> out{Vec{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Vec> next;
    for (const auto& v : out)
      for (std::uint64_t c = 0; c < *f.order(); ++c) {
        Vec w = v;
        w.push_back(f.element(c));
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace support

namespace support {

/// Number of module maps M -> N found by enumerating every dim N x dim M matrix (tiny GF(p) cases only).
inline std::size_t brute_hom_count(const grado::Module& m, const grado::Module& n, bool* has_iso = nullptr) {
  using namespace grado;
  const Field& f = m.field();
  std::size_t count = 0;
  if (has_iso) *has_iso = false;
  for (const auto& flat : all_vectors(f, m.dim() * n.dim())) {
    Matrix t = Matrix::unflatten(f, n.dim(), m.dim(), flat);
    bool ok = true;
    for (std::size_t i = 0; ok && i < m.left().size(); ++i) ok = t * m.left()[i] == n.left()[i] * t;
    for (std::size_t i = 0; ok && i < m.right().size(); ++i) ok = t * m.right()[i] == n.right()[i] * t;
    if (!ok) continue;
    ++count;
    if (has_iso && m.dim() == n.dim() && invertible(t)) *has_iso = true;
  }
  return count;
}

inline std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace support
