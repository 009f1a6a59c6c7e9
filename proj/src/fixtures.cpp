#include "grado/fixtures.hpp"

#include <fstream>
#include <sstream>

#ifndef GRADO_FIXTURE_DIR
#define GRADO_FIXTURE_DIR "fixtures"
#endif

namespace grado {

namespace {

GroupElem z(long long k) { return GroupElem{{k}}; }

/// End(k^3) with a*b = b o a, basis E_ij at 3i + j, V graded in degrees -1, 0, 1.
Instance endv() {
  Instance inst;
  inst.name = "endv";
  const Field f = Field::prime(5);
  inst.field = f;
  const std::size_t n = 3;
  const long long d[] = {-1, 0, 1};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  std::vector<std::vector<Vec>> mul(n * n, std::vector<Vec>(n * n, zero_vec(f, n * n)));
  // E_ij * E_kl = E_kl o E_ij = delta_li E_kj
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) mul[i * n + j][k * n + i][k * n + j] = f.one();
  Vec unit = zero_vec(f, n * n);
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = f.one();
  inst.algebra = std::make_shared<const Algebra>(f, names, std::move(mul), std::move(unit));
  inst.group = Group::free_abelian(1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inst.degrees.push_back(z(d[i] - d[j]));
  NamedModule v;
  v.name = "V";
  v.kind = "graded_vector_space";
  v.degrees = {z(-1), z(0), z(1)};
  inst.modules.push_back(std::move(v));
  inst.tasks = {"grading", "epsilon", "strong", "crossed", "pics",      "isomul", "phi",
                "gamma",   "end-build", "classify", "matcro", "equivalence"};
  inst.seed = 11;
  return inst;
}

/// [[S, S], [I, S]] with S = k x k and I = k x 0, over GF(2).
Instance tri() {
  Instance inst;
  inst.name = "tri";
  const Field f = Field::prime(2);
  inst.field = f;
  struct B {
    std::size_t i, j, c;
    std::string name;
  };
  const std::vector<B> basis = {{0, 0, 0, "e1"}, {0, 0, 1, "e2"}, {1, 1, 0, "e3"}, {1, 1, 1, "e4"},
                                {0, 1, 0, "x1"}, {0, 1, 1, "x2"}, {1, 0, 0, "y1"}};
  const std::size_t n = basis.size();
  auto find = [&](std::size_t i, std::size_t j, std::size_t c) -> std::size_t {
    for (std::size_t k = 0; k < n; ++k)
      if (basis[k].i == i && basis[k].j == j && basis[k].c == c) return k;
    throw ConstructionError("product left the triangular pattern");
  };
  std::vector<std::string> names;
  for (const auto& b : basis) names.push_back(b.name);
  std::vector<std::vector<Vec>> mul(n, std::vector<Vec>(n, zero_vec(f, n)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (basis[a].j == basis[b].i && basis[a].c == basis[b].c)
        mul[a][b][find(basis[a].i, basis[b].j, basis[a].c)] = f.one();
  Vec unit = zero_vec(f, n);
  for (std::size_t k = 0; k < 4; ++k) unit[k] = f.one();
  inst.algebra = std::make_shared<const Algebra>(f, names, std::move(mul), std::move(unit));
  inst.group = Group::cyclic(2);
  for (const auto& b : basis) inst.degrees.push_back(z(b.i == b.j ? 0 : 1));

  auto r_unit = [&](std::size_t k) { return unit_vec(f, 4, k); };
  NamedModule re1;
  re1.name = "Re1";
  re1.kind = "left_ideal";
  re1.idempotent = r_unit(0);
  inst.modules.push_back(std::move(re1));
  IdempotentFrame fr;
  fr.e = {r_unit(0)};
  fr.completion = {r_unit(0), r_unit(1), r_unit(2), r_unit(3)};
  fr.assignment = {0, 0, 0, 0};
  inst.frame = std::move(fr);
  EpsilonSystem cand;
  cand.eps[z(0)] = inst.algebra->one();
  Vec e = zero_vec(f, n);
  e[0] = e[1] = e[2] = f.one();
  cand.eps[z(1)] = e;
  inst.epsilon_candidate = std::move(cand);
  inst.tasks = {"grading", "epsilon", "strong", "crossed", "pics", "end-build", "classify", "induce", "astor",
                "equivalence", "semiperfect", "index-action"};
  inst.seed = 7;
  return inst;
}

Instance crossed_instance(std::string name, const Field& f, std::size_t n, const Group& grp,
                          const std::map<GroupElem, Vec>& idem, const std::map<GroupElem, Matrix>& alpha) {
  Instance inst;
  inst.name = std::move(name);
  inst.field = f;
  inst.algebra = std::make_shared<const Algebra>(diagonal_algebra(f, n));
  TwistedPartialAction t;
  t.base = inst.algebra;
  t.group = grp;
  t.idem = idem;
  for (const auto& [g, m] : alpha) t.alpha.insert_or_assign(g, m);
  inst.tpa = std::move(t);
  return inst;
}

Matrix permutation(const Field& f, const std::vector<long>& img) {
  Matrix m(f, img.size(), img.size());
  for (std::size_t c = 0; c < img.size(); ++c)
    if (img[c] >= 0) m.at(static_cast<std::size_t>(img[c]), c) = f.one();
  return m;
}

/// Z2 on k x k with D_g = k x 0, alpha_g = id there, trivial twist.
Instance pcp2() {
  const Field f = Field::prime(3);
  auto inst = crossed_instance("pcp2", f, 2, Group::cyclic(2), {{z(0), Vec{f.one(), f.one()}}, {z(1), Vec{f.one(), f.zero()}}},
                               {{z(0), Matrix::identity(f, 2)}, {z(1), permutation(f, {0, -1})}});
  inst.tasks = {"tpa",  "build",  "tpa-roundtrip", "epsilon",    "strong", "crossed",
                "pics", "isomul", "gamma",         "invariants", "classify", "equivalence"};
  inst.seed = 3;
  return inst;
}

/// Global swap of the two factors of k x k; the crossed product is M2(k).
Instance swap_galois() {
  const Field f = Field::prime(3);
  auto inst = crossed_instance("swap-galois", f, 2, Group::cyclic(2),
                               {{z(0), Vec{f.one(), f.one()}}, {z(1), Vec{f.one(), f.one()}}},
                               {{z(0), Matrix::identity(f, 2)}, {z(1), permutation(f, {1, 0})}});
  inst.tasks = {"tpa", "build", "epsilon", "strong", "crossed", "pics", "gamma", "invariants", "galois", "azumaya", "equivalence"};
  inst.seed = 5;
  return inst;
}

/// Z2 on k^3: D_g = k e1 + k e2 with the swap, e3 outside the domain.
Instance block_swap() {
  const Field f = Field::prime(3);
  auto inst = crossed_instance("block-swap", f, 3, Group::cyclic(2),
                               {{z(0), Vec{f.one(), f.one(), f.one()}}, {z(1), Vec{f.one(), f.one(), f.zero()}}},
                               {{z(0), Matrix::identity(f, 3)}, {z(1), permutation(f, {1, 0, -1})}});
  IdempotentFrame fr;
  for (std::size_t i = 0; i < 3; ++i) {
    fr.e.push_back(unit_vec(f, 3, i));
    fr.completion.push_back(unit_vec(f, 3, i));
    fr.assignment.push_back(i);
  }
  inst.frame = std::move(fr);
  inst.tasks = {"tpa", "build", "epsilon", "strong", "crossed", "pics", "gamma", "equivalence", "semiperfect", "index-action"};
  inst.seed = 13;
  return inst;
}

/// k[Z_n] graded by the group.
Instance group_algebra(std::string name, const Field& f, std::size_t n) {
  Instance inst;
  inst.name = std::move(name);
  inst.field = f;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  std::vector<std::vector<Vec>> mul(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mul[i][j] = unit_vec(f, n, (i + j) % n);
  inst.algebra = std::make_shared<const Algebra>(f, names, std::move(mul), unit_vec(f, n, 0));
  inst.group = Group::cyclic(n);
  for (std::size_t i = 0; i < n; ++i) inst.degrees.push_back(z(static_cast<long long>(i)));
  IdempotentFrame fr;
  fr.e = {Vec{f.one()}};
  fr.completion = {Vec{f.one()}};
  fr.assignment = {0};
  inst.frame = std::move(fr);
  inst.tasks = {"grading", "epsilon", "strong", "crossed", "pics", "isomul", "phi", "gamma", "invariants", "galois",
                "classify", "matcro", "equivalence", "semiperfect", "index-action"};
  inst.seed = 17;
  return inst;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"endv", "tri", "pcp2", "ga-z2-gf3", "ga-z4-gf3", "swap-galois", "block-swap"};
}

Instance build_fixture(const std::string& name) {
  Instance inst;
  if (name == "endv") inst = endv();
  else if (name == "tri") inst = tri();
  else if (name == "pcp2") inst = pcp2();
  else if (name == "ga-z2-gf3") inst = group_algebra(name, Field::prime(3), 2);
  else if (name == "ga-z4-gf3") inst = group_algebra(name, Field::prime(3), 4);
  else if (name == "swap-galois") inst = swap_galois();
  else if (name == "block-swap") inst = block_swap();
  else throw InputError("unknown fixture '" + name + "'");
  inst.finalize();
  return inst;
}

std::string fixture_dir() { return GRADO_FIXTURE_DIR; }
std::string fixture_path(const std::string& name) { return fixture_dir() + "/" + name + ".json"; }
std::string expected_path(const std::string& name) { return fixture_dir() + "/expected/" + name + ".json"; }

std::string fixture_bytes(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw InputError("fixture document missing: " + fixture_path(name));
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Instance load_fixture(const std::string& name) { return parse_instance(Json::parse(fixture_bytes(name))); }

std::string dump_document(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace grado
