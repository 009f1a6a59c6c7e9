#include "grado/io.hpp"

#include <fstream>
#include <sstream>

namespace grado {

namespace {

[[noreturn]] void fail(const std::string& ptr, const std::string& what) {
  throw InputError((ptr.empty() ? std::string("/") : ptr) + ": " + what);
}

const Json& need(const Json& j, const std::string& key, const std::string& ptr) {
  if (!j.is_object()) fail(ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(ptr + "/" + key, "missing");
  return *it;
}

std::size_t need_index(const Json& j, const std::string& ptr) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(ptr, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

Scalar parse_scalar(const Field& f, const Json& j, const std::string& ptr) {
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  if (j.is_string() && !f.is_finite()) {
    mpq_class q;
    if (q.set_str(j.get<std::string>(), 10) != 0) fail(ptr, "not a rational number");
    q.canonicalize();
    return f.from_rational(q);
  }
  fail(ptr, f.is_finite() ? "expected an integer" : "expected an integer or a \"p/q\" string");
}

Field parse_field(const Json& j, const std::string& ptr) {
  if (j.is_object() && (j.contains("GF") || j.contains("p"))) {
    const std::string key = j.contains("GF") ? "GF" : "p";
    try {
      return Field::prime(need_index(j[key], ptr + "/" + key));
    } catch (const InputError& e) {
      if (std::string(e.what()).rfind('/', 0) == 0) throw;
      fail(ptr + "/" + key, e.what());
    }
  }
  if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
  fail(ptr, "expected {\"GF\": p} or \"Q\"");
}

struct Names {
  std::vector<std::string> list;
  std::map<std::string, std::size_t> index;
  std::size_t at(const std::string& n, const std::string& ptr) const {
    auto it = index.find(n);
    if (it == index.end()) fail(ptr, "unknown basis name '" + n + "'");
    return it->second;
  }
};

Names parse_names(const Json& j, const std::string& ptr) {
  if (!j.is_array() || j.empty()) fail(ptr, "expected a nonempty array of basis names");
  Names n;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) fail(ptr + "/" + std::to_string(i), "expected a string");
    const auto s = j[i].get<std::string>();
    if (!n.index.emplace(s, i).second) fail(ptr + "/" + std::to_string(i), "duplicate basis name");
    n.list.push_back(s);
  }
  return n;
}

Vec parse_element(const Field& f, const Names& names, const Json& j, const std::string& ptr) {
  if (!j.is_object()) fail(ptr, "expected {basis name: coefficient}");
  Vec v = zero_vec(f, names.list.size());
  for (auto it = j.begin(); it != j.end(); ++it)
    v[names.at(it.key(), ptr + "/" + it.key())] += parse_scalar(f, it.value(), ptr + "/" + it.key());
  return v;
}

Vec parse_vec(const Field& f, const Json& j, std::size_t n, const std::string& ptr) {
  if (!j.is_array() || j.size() != n) fail(ptr, "expected an array of length " + std::to_string(n));
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(parse_scalar(f, j[i], ptr + "/" + std::to_string(i)));
  return v;
}

/// Elements are given either as a sparse name map or as a dense coordinate array.
Vec parse_any_element(const Field& f, const Names& names, const Json& j, const std::string& ptr) {
  return j.is_array() ? parse_vec(f, j, names.list.size(), ptr) : parse_element(f, names, j, ptr);
}

Matrix parse_matrix(const Field& f, const Json& j, std::size_t n, const std::string& ptr) {
  if (!j.is_array() || j.size() != n) fail(ptr, "expected " + std::to_string(n) + " rows");
  Matrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    Vec row = parse_vec(f, j[r], n, ptr + "/" + std::to_string(r));
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = row[c];
  }
  return m;
}

Group parse_group(const Json& j, const std::string& ptr) {
  if (!j.is_object()) fail(ptr, "expected a group description");
  try {
    if (j.contains("cyclic")) return Group::cyclic(need_index(j["cyclic"], ptr + "/cyclic"));
    if (j.contains("free_abelian")) return Group::free_abelian(need_index(j["free_abelian"], ptr + "/free_abelian"));
    if (j.contains("finite")) {
      const Json& fj = j["finite"];
      const Json& t = need(fj, "table", ptr + "/finite");
      std::vector<std::vector<std::size_t>> table;
      for (std::size_t r = 0; r < t.size(); ++r) {
        table.emplace_back();
        for (std::size_t c = 0; c < t[r].size(); ++c)
          table.back().push_back(need_index(t[r][c], ptr + "/finite/table/" + std::to_string(r) + "/" + std::to_string(c)));
      }
      return Group::finite(std::move(table), need_index(need(fj, "identity", ptr + "/finite"), ptr + "/finite/identity"));
    }
  } catch (const InputError& e) {
    if (std::string(e.what()).rfind('/', 0) == 0) throw;
    fail(ptr, e.what());
  }
  fail(ptr, "expected cyclic, free_abelian or finite");
}

GroupElem parse_elem(const Group& g, const Json& j, const std::string& ptr) {
  GroupElem e;
  if (g.is_finite()) {
    e.v = {static_cast<long long>(need_index(j, ptr))};
  } else if (j.is_number_integer()) {
    e.v = {j.get<long long>()};
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (!j[i].is_number_integer()) fail(ptr + "/" + std::to_string(i), "expected an integer");
      e.v.push_back(j[i].get<long long>());
    }
  } else {
    fail(ptr, "expected a group element");
  }
  if (!g.contains(e)) fail(ptr, "not an element of the group");
  return e;
}

std::shared_ptr<const Algebra> parse_algebra(const Field& f, const Json& j, const std::string& ptr, Names& names) {
  if (!j.is_object()) fail(ptr, "expected an algebra object");
  if (j.contains("basis")) {
    names = parse_names(j["basis"], ptr + "/basis");
  } else {
    const std::size_t d = need_index(need(j, "dim", ptr), ptr + "/dim");
    Json gen = Json::array();
    for (std::size_t i = 0; i < d; ++i) gen.push_back("b" + std::to_string(i));
    names = parse_names(gen, ptr + "/dim");
  }
  const std::size_t n = names.list.size();
  if (j.contains("dim") && need_index(j["dim"], ptr + "/dim") != n) fail(ptr + "/dim", "does not match the basis");
  std::vector<std::vector<Vec>> mul(n, std::vector<Vec>(n, zero_vec(f, n)));
  if (j.contains("mul")) {
    const Json& m = j["mul"];
    if (!m.is_array() || m.size() != n) fail(ptr + "/mul", "expected " + std::to_string(n) + " rows");
    for (std::size_t a = 0; a < n; ++a) {
      const std::string pa = ptr + "/mul/" + std::to_string(a);
      if (!m[a].is_array() || m[a].size() != n) fail(pa, "expected " + std::to_string(n) + " entries");
      for (std::size_t b = 0; b < n; ++b) mul[a][b] = parse_vec(f, m[a][b], n, pa + "/" + std::to_string(b));
    }
  } else {
    const Json& prods = need(j, "products", ptr);
    if (!prods.is_array()) fail(ptr + "/products", "expected an array");
    for (std::size_t k = 0; k < prods.size(); ++k) {
      const std::string p = ptr + "/products/" + std::to_string(k);
      const Json& e = prods[k];
      if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string())
        fail(p, "expected [name, name, element]");
      mul[names.at(e[0], p + "/0")][names.at(e[1], p + "/1")] = parse_any_element(f, names, e[2], p + "/2");
    }
  }
  Vec unit = parse_any_element(f, names, need(j, "unit", ptr), ptr + "/unit");
  try {
    return std::make_shared<const Algebra>(f, names.list, std::move(mul), std::move(unit));
  } catch (const InputError& e) {
    fail(ptr, e.what());
  }
}

Names names_of(const Algebra& a) {
  Names n;
  n.list = a.basis_names();
  for (std::size_t i = 0; i < n.list.size(); ++i) n.index[n.list[i]] = i;
  return n;
}

/// Group element keys: "k" for finite groups and rank 1, "a,b,..." otherwise.
GroupElem parse_key(const Group& g, const std::string& key, const std::string& ptr) {
  Json arr = Json::array();
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      arr.push_back(v);
    } catch (const std::exception&) {
      fail(ptr, "malformed group element key '" + key + "'");
    }
  }
  return parse_elem(g, arr.size() == 1 ? arr[0] : arr, ptr);
}

std::string key_of(const Group& g, const GroupElem& e) {
  std::string s;
  for (std::size_t i = 0; i < e.v.size(); ++i) s += (i ? "," : "") + std::to_string(e.v[i]);
  (void)g;
  return s;
}

std::vector<Matrix> parse_matrices(const Field& f, const Json& j, std::size_t count, std::size_t dim,
                                   const std::string& ptr) {
  if (!j.is_array() || j.size() != count) fail(ptr, "expected " + std::to_string(count) + " matrices");
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(parse_matrix(f, j[k], dim, ptr + "/" + std::to_string(k)));
  return out;
}

void build_module(const Instance& inst, NamedModule& m) {
  const Field& f = inst.field;
  if (m.kind == "graded_vector_space") {
    auto k = std::make_shared<const Algebra>(f, std::vector<std::string>{"1"},
                                             std::vector<std::vector<Vec>>{{Vec{f.one()}}}, Vec{f.one()});
    auto ring = std::make_shared<const GradedRing>(k, *inst.group, std::vector<GroupElem>{inst.group->identity()});
    m.graded.emplace(ring, m.degrees, std::vector<Matrix>{Matrix::identity(f, m.degrees.size())});
    m.plain = m.graded->module();
  } else if (m.kind == "left_ideal") {
    m.plain = left_ideal_module(inst.graded->base(), m.idempotent);
  } else if (m.kind == "graded") {
    m.graded.emplace(inst.graded, m.degrees, m.left);
    m.plain = m.graded->module();
  } else if (m.kind == "left") {
    m.plain = Module::left_module(inst.graded->base(), m.dim, m.left);
  } else if (m.kind == "bimodule") {
    m.plain = Module::bimodule(inst.graded->base(), m.dim, m.left, m.right);
  } else {
    throw InputError("unknown module kind '" + m.kind + "'");
  }
}

}  // namespace

void Instance::build_ring() {
  if (graded) return;
  if (tpa) {
    crossed = build_crossed_product(*tpa);
    graded = crossed->ring;
    group = tpa->group;
  } else if (group) {
    graded = std::make_shared<const GradedRing>(algebra, *group, degrees);
  }
}

void Instance::finalize() {
  build_ring();
  for (auto& m : modules) {
    if (m.kind != "graded_vector_space" && !graded) throw InputError("module '" + m.name + "' needs a graded ring");
    build_module(*this, m);
  }
  if (frame && graded) frame->ring = graded->base();
  if (test_set.empty() && group) {
    if (group->is_finite()) {
      test_set = group->elements();
    } else if (graded) {
      std::set<GroupElem> s;
      for (const auto& g : graded->support()) {
        s.insert(g);
        s.insert(group->inverse(g));
      }
      test_set.assign(s.begin(), s.end());
    }
  }
}

Instance parse_instance(const Json& doc) {
  Instance inst;
  if (!doc.is_object()) fail("", "expected a JSON object");
  if (need(doc, "version", "") != "grado/1") fail("/version", "unsupported version");
  const Json& name = need(doc, "name", "");
  if (!name.is_string()) fail("/name", "expected a string");
  inst.name = name.get<std::string>();
  inst.field = parse_field(need(doc, "field", ""), "/field");
  const Field& f = inst.field;
  Names names;
  inst.algebra = parse_algebra(f, need(doc, "algebra", ""), "/algebra", names);
  const std::size_t n = names.list.size();

  if (doc.contains("grading") && doc.contains("tpa")) fail("", "grading and tpa are mutually exclusive");
  if (doc.contains("grading")) {
    const Json& gj = doc["grading"];
    inst.group = parse_group(need(gj, "group", "/grading"), "/grading/group");
    const Json& dj = need(gj, "degrees", "/grading");
    if (dj.is_array()) {
      if (dj.size() != n) fail("/grading/degrees", "expected one degree per basis vector");
      for (std::size_t i = 0; i < n; ++i)
        inst.degrees.push_back(parse_elem(*inst.group, dj[i], "/grading/degrees/" + std::to_string(i)));
    } else if (dj.is_object()) {
      inst.degrees.assign(n, inst.group->identity());
      std::vector<bool> seen(n, false);
      for (auto it = dj.begin(); it != dj.end(); ++it) {
        const std::string p = "/grading/degrees/" + it.key();
        const std::size_t i = names.at(it.key(), p);
        inst.degrees[i] = parse_elem(*inst.group, it.value(), p);
        seen[i] = true;
      }
      for (std::size_t i = 0; i < n; ++i)
        if (!seen[i]) fail("/grading/degrees/" + names.list[i], "missing degree");
    } else {
      fail("/grading/degrees", "expected an array or an object");
    }
  }
  if (doc.contains("tpa")) {
    const Json& tj = doc["tpa"];
    TwistedPartialAction t;
    t.base = inst.algebra;
    t.group = parse_group(need(tj, "group", "/tpa"), "/tpa/group");
    auto object = [&](const char* key) -> const Json& {
      const Json& o = need(tj, key, "/tpa");
      if (!o.is_object()) fail(std::string("/tpa/") + key, "expected an object keyed by group element");
      return o;
    };
    const Json& ij = object("idem");
    for (auto it = ij.begin(); it != ij.end(); ++it) {
      const std::string p = "/tpa/idem/" + it.key();
      t.idem[parse_key(t.group, it.key(), p)] = parse_any_element(f, names, it.value(), p);
    }
    const Json& aj = object("alpha");
    for (auto it = aj.begin(); it != aj.end(); ++it) {
      const std::string p = "/tpa/alpha/" + it.key();
      t.alpha.insert_or_assign(parse_key(t.group, it.key(), p), parse_matrix(f, it.value(), n, p));
    }
    if (tj.contains("omega")) {
      const Json& oj = object("omega");
      for (auto it = oj.begin(); it != oj.end(); ++it) {
        const std::string p = "/tpa/omega/" + it.key();
        const auto bar = it.key().find(';');
        if (bar == std::string::npos) fail(p, "omega keys have the form \"g;h\"");
        auto g = parse_key(t.group, it.key().substr(0, bar), p);
        auto h = parse_key(t.group, it.key().substr(bar + 1), p);
        t.omega[{g, h}] = Twist{parse_any_element(f, names, need(it.value(), "value", p), p + "/value"),
                                parse_any_element(f, names, need(it.value(), "inverse", p), p + "/inverse")};
      }
    }
    inst.tpa = std::move(t);
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) fail("/seed", "expected an unsigned integer");
    inst.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("tasks")) {
    const Json& tj = doc["tasks"];
    if (!tj.is_array()) fail("/tasks", "expected an array");
    for (std::size_t k = 0; k < tj.size(); ++k) {
      if (!tj[k].is_string()) fail("/tasks/" + std::to_string(k), "expected a string");
      inst.tasks.push_back(tj[k].get<std::string>());
    }
  }

  // Module and frame elements live in R = A_1, known only once the graded ring exists.
  try {
    inst.build_ring();
  } catch (const Error& e) {
    fail(doc.contains("tpa") ? "/tpa" : "/grading", e.what());
  }
  const Names rnames = inst.graded ? names_of(*inst.graded->base()) : names;
  const std::size_t rdim = rnames.list.size();
  const std::size_t adim = inst.graded ? inst.graded->algebra().dim() : n;

  if (doc.contains("modules")) {
    const Json& mj = doc["modules"];
    if (!mj.is_array()) fail("/modules", "expected an array");
    for (std::size_t k = 0; k < mj.size(); ++k) {
      const std::string p = "/modules/" + std::to_string(k);
      NamedModule m;
      m.name = need(mj[k], "name", p).get<std::string>();
      m.kind = need(mj[k], "kind", p).get<std::string>();
      if ((m.kind == "graded_vector_space" || m.kind == "graded") && !inst.group)
        fail(p, "a graded module needs a group");
      if (m.kind != "graded_vector_space" && !inst.graded) fail(p, "this module kind needs a graded ring");
      if (m.kind == "graded_vector_space" || m.kind == "graded") {
        const Json& dj = need(mj[k], "degrees", p);
        if (!dj.is_array()) fail(p + "/degrees", "expected an array");
        for (std::size_t i = 0; i < dj.size(); ++i)
          m.degrees.push_back(parse_elem(*inst.group, dj[i], p + "/degrees/" + std::to_string(i)));
        m.dim = m.degrees.size();
      }
      if (m.kind == "left_ideal") {
        m.idempotent = parse_any_element(f, rnames, need(mj[k], "idempotent", p), p + "/idempotent");
      } else if (m.kind == "graded") {
        m.left = parse_matrices(f, need(mj[k], "left", p), adim, m.dim, p + "/left");
      } else if (m.kind == "left" || m.kind == "bimodule") {
        m.dim = need_index(need(mj[k], "dim", p), p + "/dim");
        m.left = parse_matrices(f, need(mj[k], "left", p), rdim, m.dim, p + "/left");
        if (m.kind == "bimodule") m.right = parse_matrices(f, need(mj[k], "right", p), rdim, m.dim, p + "/right");
      } else if (m.kind != "graded_vector_space") {
        fail(p + "/kind", "unknown module kind");
      }
      try {
        build_module(inst, m);
      } catch (const Error& e) {
        fail(p, e.what());
      }
      inst.modules.push_back(std::move(m));
    }
  }
  if (doc.contains("frame")) {
    if (!inst.graded) fail("/frame", "a frame needs a graded ring");
    const Json& fj = doc["frame"];
    IdempotentFrame fr;
    const Json& ej = need(fj, "E", "/frame");
    if (!ej.is_array() || ej.empty()) fail("/frame/E", "expected a nonempty array");
    for (std::size_t i = 0; i < ej.size(); ++i)
      fr.e.push_back(parse_any_element(f, rnames, ej[i], "/frame/E/" + std::to_string(i)));
    if (fj.contains("completion")) {
      const Json& cj = fj["completion"];
      for (std::size_t i = 0; i < cj.size(); ++i)
        fr.completion.push_back(parse_any_element(f, rnames, cj[i], "/frame/completion/" + std::to_string(i)));
      const Json& aj = need(fj, "assignment", "/frame");
      if (!aj.is_array() || aj.size() != cj.size()) fail("/frame/assignment", "expected one index per completion idempotent");
      for (std::size_t i = 0; i < aj.size(); ++i) {
        fr.assignment.push_back(need_index(aj[i], "/frame/assignment/" + std::to_string(i)));
        if (fr.assignment.back() >= fr.e.size()) fail("/frame/assignment/" + std::to_string(i), "index out of range");
      }
    }
    inst.frame = std::move(fr);
  }
  if (doc.contains("epsilon_candidate")) {
    if (!inst.graded) fail("/epsilon_candidate", "needs a graded ring");
    const Names anames = names_of(inst.graded->algebra());
    EpsilonSystem eps;
    const Json& cj = doc["epsilon_candidate"];
    if (!cj.is_object()) fail("/epsilon_candidate", "expected an object keyed by group element");
    for (auto it = cj.begin(); it != cj.end(); ++it) {
      const std::string p = "/epsilon_candidate/" + it.key();
      eps.eps[parse_key(*inst.group, it.key(), p)] = parse_any_element(f, anames, it.value(), p);
    }
    inst.epsilon_candidate = std::move(eps);
  }
  if (doc.contains("test_set")) {
    const Json& tj = doc["test_set"];
    if (!tj.is_array() || !inst.group) fail("/test_set", "expected an array of group elements");
    for (std::size_t k = 0; k < tj.size(); ++k)
      inst.test_set.push_back(parse_elem(*inst.group, tj[k], "/test_set/" + std::to_string(k)));
  }
  inst.finalize();
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  return parse_instance(doc);
}

Json scalar_json(const Scalar& s) {
  if (s.field().is_finite()) return s.residue();
  const mpq_class& q = s.rational();
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return s.to_string();
}

Json element_json(const Algebra& a, const Vec& v) {
  Json j = Json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) j[a.basis_names()[i]] = scalar_json(v[i]);
  return j;
}

Json vec_json(const Vec& v) {
  Json j = Json::array();
  for (const auto& s : v) j.push_back(scalar_json(s));
  return j;
}

Json matrix_json(const Matrix& m) {
  Json j = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_json(m.at(r, c)));
    j.push_back(std::move(row));
  }
  return j;
}

Json group_elem_json(const Group& g, const GroupElem& e) {
  if (g.is_finite() || e.v.size() == 1) return e.v[0];
  return e.v;
}

namespace {

Json group_json(const Group& g) {
  if (!g.is_finite()) return {{"free_abelian", g.rank()}};
  bool cyclic = g.identity_index() == 0;
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n && cyclic; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.table()[a][b] != (a + b) % n) cyclic = false;
  if (cyclic) return {{"cyclic", n}};
  return {{"finite", {{"table", g.table()}, {"identity", g.identity_index()}}}};
}

Json algebra_json(const Algebra& a) {
  Json j;
  j["dim"] = a.dim();
  j["basis"] = a.basis_names();
  Json mul = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < a.dim(); ++k) row.push_back(vec_json(a.structure(i, k)));
    mul.push_back(std::move(row));
  }
  j["mul"] = std::move(mul);
  j["unit"] = vec_json(a.one());
  return j;
}

Json matrices_json(const std::vector<Matrix>& ms) {
  Json j = Json::array();
  for (const auto& m : ms) j.push_back(matrix_json(m));
  return j;
}

}  // namespace

Json to_json(const Instance& inst) {
  Json j;
  j["version"] = "grado/1";
  j["name"] = inst.name;
  if (inst.field.is_finite())
    j["field"] = {{"GF", inst.field.characteristic()}};
  else
    j["field"] = "Q";
  j["algebra"] = algebra_json(*inst.algebra);
  if (inst.tpa) {
    const auto& t = *inst.tpa;
    Json tj;
    tj["group"] = group_json(t.group);
    tj["idem"] = Json::object();
    for (const auto& [g, e] : t.idem) tj["idem"][key_of(t.group, g)] = vec_json(e);
    tj["alpha"] = Json::object();
    for (const auto& [g, m] : t.alpha) tj["alpha"][key_of(t.group, g)] = matrix_json(m);
    tj["omega"] = Json::object();
    for (const auto& [gh, w] : t.omega)
      tj["omega"][key_of(t.group, gh.first) + ";" + key_of(t.group, gh.second)] = {{"value", vec_json(w.value)},
                                                                                  {"inverse", vec_json(w.inverse)}};
    j["tpa"] = std::move(tj);
  } else if (inst.group) {
    Json deg = Json::array();
    for (const auto& d : inst.degrees) deg.push_back(group_elem_json(*inst.group, d));
    j["grading"] = {{"group", group_json(*inst.group)}, {"degrees", std::move(deg)}};
  }
  if (!inst.modules.empty()) {
    Json ms = Json::array();
    for (const auto& m : inst.modules) {
      Json mj{{"name", m.name}, {"kind", m.kind}};
      if (m.kind == "graded_vector_space" || m.kind == "graded") {
        mj["degrees"] = Json::array();
        for (const auto& d : m.degrees) mj["degrees"].push_back(group_elem_json(*inst.group, d));
      }
      if (m.kind == "left_ideal") mj["idempotent"] = vec_json(m.idempotent);
      if (m.kind == "left" || m.kind == "bimodule") mj["dim"] = m.dim;
      if (m.kind == "graded" || m.kind == "left" || m.kind == "bimodule") mj["left"] = matrices_json(m.left);
      if (m.kind == "bimodule") mj["right"] = matrices_json(m.right);
      ms.push_back(std::move(mj));
    }
    j["modules"] = std::move(ms);
  }
  if (inst.frame) {
    Json fj;
    fj["E"] = Json::array();
    for (const auto& e : inst.frame->e) fj["E"].push_back(vec_json(e));
    if (!inst.frame->completion.empty()) {
      fj["completion"] = Json::array();
      for (const auto& e : inst.frame->completion) fj["completion"].push_back(vec_json(e));
      fj["assignment"] = inst.frame->assignment;
    }
    j["frame"] = std::move(fj);
  }
  if (inst.epsilon_candidate) {
    Json cj = Json::object();
    for (const auto& [g, e] : inst.epsilon_candidate->eps) cj[key_of(*inst.group, g)] = vec_json(e);
    j["epsilon_candidate"] = std::move(cj);
  }
  if (!inst.tasks.empty()) j["tasks"] = inst.tasks;
  j["seed"] = inst.seed;
  return j;
}

}  // namespace grado
