#include "mocklie/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace mocklie {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw DocumentError(path.empty() ? what : path + ": " + what);
}

std::string item(const std::string& path, const char* key) {
  return path.empty() ? key : path + "." + key;
}

std::string at(const std::string& path, size_t index) {
  return path + "[" + std::to_string(index) + "]";
}

const Json& expect_object(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  return j;
}

const Json& expect_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

void check_keys(const Json& obj, const std::string& path, std::set<std::string> allowed) {
  for (const auto& kv : obj.items())
    if (!allowed.count(kv.key())) fail(path.empty() ? kv.key() : path + "." + kv.key(),
                                       "unknown key");
}

const Json& require_key(const Json& obj, const std::string& path, const char* key) {
  if (!obj.contains(key)) fail(path, std::string("missing key \"") + key + "\"");
  return obj.at(key);
}

std::string get_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

long long get_integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long long>();
}

int get_dimension(const Json& j, const std::string& path) {
  long long v = get_integer(j, path);
  if (v < 0) fail(path, "expected a nonnegative integer");
  if (v > 4096) fail(path, "dimension too large");
  return (int)v;
}

int get_index(const Json& j, const std::string& path, int n) {
  long long v = get_integer(j, path);
  if (v < 0 || v >= n) fail(path, "index out of range");
  return (int)v;
}

Rational get_rational(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a rational string");
  std::string text = j.get<std::string>();
  auto r = Rational::parse(text);
  if (!r) fail(path, "malformed rational \"" + text + "\"");
  return *r;
}

GradedDimension parse_dims(const Json& j, const std::string& path) {
  expect_object(j, path);
  check_keys(j, path, {"even", "odd"});
  GradedDimension d;
  d.even = get_dimension(require_key(j, path, "even"), item(path, "even"));
  d.odd = get_dimension(require_key(j, path, "odd"), item(path, "odd"));
  return d;
}

// Entry lists of the shape [{"i": .., "j": .., "c": ".."}] describing a
// rows x cols matrix.
Matrix parse_entries(const Json& j, const std::string& path, int rows, int cols) {
  expect_array(j, path);
  Matrix m(rows, cols);
  std::set<std::pair<int, int>> seen;
  for (size_t idx = 0; idx < j.size(); ++idx) {
    std::string p = at(path, idx);
    const Json& e = expect_object(j[idx], p);
    check_keys(e, p, {"i", "j", "c"});
    int i = get_index(require_key(e, p, "i"), item(p, "i"), rows);
    int jj = get_index(require_key(e, p, "j"), item(p, "j"), cols);
    if (!seen.insert({i, jj}).second) fail(p, "duplicate entry");
    m.at(i, jj) = get_rational(require_key(e, p, "c"), item(p, "c"));
  }
  return m;
}

// Entry lists of the shape [{"i": .., "j": .., "terms": [{"k", "c"}]}]
// describing a bilinear map with vector values of length value_dim.
std::map<std::pair<int, int>, Vec> parse_valued_entries(const Json& j, const std::string& path,
                                                        int n, int value_dim) {
  expect_array(j, path);
  std::map<std::pair<int, int>, Vec> values;
  for (size_t idx = 0; idx < j.size(); ++idx) {
    std::string p = at(path, idx);
    const Json& e = expect_object(j[idx], p);
    check_keys(e, p, {"i", "j", "terms"});
    int i = get_index(require_key(e, p, "i"), item(p, "i"), n);
    int jj = get_index(require_key(e, p, "j"), item(p, "j"), n);
    if (values.count({i, jj})) fail(p, "duplicate entry");
    const Json& terms = expect_array(require_key(e, p, "terms"), item(p, "terms"));
    Vec v = zero_vec(value_dim);
    std::set<int> seen;
    for (size_t t = 0; t < terms.size(); ++t) {
      std::string tp = at(item(p, "terms"), t);
      const Json& term = expect_object(terms[t], tp);
      check_keys(term, tp, {"k", "c"});
      int k = get_index(require_key(term, tp, "k"), item(tp, "k"), value_dim);
      if (!seen.insert(k).second) fail(tp, "duplicate term");
      v[k] = get_rational(require_key(term, tp, "c"), item(tp, "c"));
    }
    values[{i, jj}] = std::move(v);
  }
  return values;
}

Json render_rational(const Rational& r) { return Json(r.str()); }

Json render_matrix_entries(const Matrix& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      if (m.at(i, j).is_zero()) continue;
      Json e;
      e["i"] = i;
      e["j"] = j;
      e["c"] = render_rational(m.at(i, j));
      entries.push_back(std::move(e));
    }
  return entries;
}

Json render_dims(const GradedDimension& d) {
  Json j;
  j["even"] = d.even;
  j["odd"] = d.odd;
  return j;
}

Json render_valued_entries(const std::map<std::pair<int, int>, Vec>& values) {
  Json entries = Json::array();
  for (const auto& [key, v] : values) {
    if (is_zero(v)) continue;
    Json e;
    e["i"] = key.first;
    e["j"] = key.second;
    Json terms = Json::array();
    for (int k = 0; k < (int)v.size(); ++k) {
      if (v[k].is_zero()) continue;
      Json t;
      t["k"] = k;
      t["c"] = render_rational(v[k]);
      terms.push_back(std::move(t));
    }
    e["terms"] = std::move(terms);
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace

AlgebraDocument parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("", "document root must be an object");
  check_keys(j, "", {"name", "dims", "products", "form", "maps", "representations", "cocycles"});

  AlgebraDocument doc;
  doc.algebra.name = get_string(require_key(j, "", "name"), "name");
  doc.algebra.dims = parse_dims(require_key(j, "", "dims"), "dims");
  int n = doc.algebra.dims.total();

  auto products = parse_valued_entries(require_key(j, "", "products"), "products", n, n);
  for (const auto& [key, v] : products) doc.algebra.set_basis_product(key.first, key.second, v);

  if (j.contains("form")) {
    const std::string path = "form";
    const Json& f = expect_object(j.at("form"), path);
    check_keys(f, path, {"entries"});
    BilinearForm form;
    form.dims = doc.algebra.dims;
    form.gram = parse_entries(require_key(f, path, "entries"), item(path, "entries"), n, n);
    doc.form = std::move(form);
  }

  if (j.contains("maps")) {
    const Json& maps = expect_array(j.at("maps"), "maps");
    for (size_t idx = 0; idx < maps.size(); ++idx) {
      std::string p = at("maps", idx);
      const Json& e = expect_object(maps[idx], p);
      check_keys(e, p, {"name", "degree", "entries"});
      std::string name = get_string(require_key(e, p, "name"), item(p, "name"));
      long long deg = get_integer(require_key(e, p, "degree"), item(p, "degree"));
      if (deg != 0 && deg != 1) fail(item(p, "degree"), "expected 0 or 1");
      GradedLinearMap m(doc.algebra.dims, doc.algebra.dims,
                        deg == 0 ? Parity::even : Parity::odd);
      m.mat = parse_entries(require_key(e, p, "entries"), item(p, "entries"), n, n);
      std::vector<int> bad = m.degree_violation();
      if (!bad.empty())
        fail(item(p, "entries"), "entry (" + std::to_string(bad[0]) + ", " +
                                     std::to_string(bad[1]) +
                                     ") violates the declared degree");
      if (!doc.maps.emplace(name, std::move(m)).second)
        fail(item(p, "name"), "duplicate name \"" + name + "\"");
    }
  }

  if (j.contains("representations")) {
    const Json& reps = expect_array(j.at("representations"), "representations");
    for (size_t idx = 0; idx < reps.size(); ++idx) {
      std::string p = at("representations", idx);
      const Json& e = expect_object(reps[idx], p);
      check_keys(e, p, {"name", "module", "operators"});
      std::string name = get_string(require_key(e, p, "name"), item(p, "name"));
      Representation r;
      r.algebra = doc.algebra;
      r.module = parse_dims(require_key(e, p, "module"), item(p, "module"));
      int m = r.module.total();
      const Json& ops = expect_array(require_key(e, p, "operators"), item(p, "operators"));
      if ((int)ops.size() != n)
        fail(item(p, "operators"), "expected one operator per algebra basis vector");
      for (size_t a = 0; a < ops.size(); ++a)
        r.action.push_back(parse_entries(ops[a], at(item(p, "operators"), a), m, m));
      if (!doc.representations.emplace(name, std::move(r)).second)
        fail(item(p, "name"), "duplicate name \"" + name + "\"");
    }
  }

  if (j.contains("cocycles")) {
    const Json& cocycles = expect_array(j.at("cocycles"), "cocycles");
    for (size_t idx = 0; idx < cocycles.size(); ++idx) {
      std::string p = at("cocycles", idx);
      const Json& e = expect_object(cocycles[idx], p);
      check_keys(e, p, {"name", "module", "entries"});
      std::string name = get_string(require_key(e, p, "name"), item(p, "name"));
      Cocycle w;
      w.algebra_dims = doc.algebra.dims;
      w.module = parse_dims(require_key(e, p, "module"), item(p, "module"));
      auto values = parse_valued_entries(require_key(e, p, "entries"), item(p, "entries"), n,
                                         w.module.total());
      for (auto& [key, v] : values) {
        if (is_zero(v)) continue;
        Parity want = parity_sum(doc.algebra.parity(key.first),
                                 doc.algebra.parity(key.second));
        for (int k = 0; k < (int)v.size(); ++k)
          if (!v[k].is_zero() && w.module.parity(k) != want)
            fail(item(p, "entries"),
                 "value of (" + std::to_string(key.first) + ", " +
                     std::to_string(key.second) + ") must have parity |e_i| + |e_j|");
        w.values[key] = std::move(v);
      }
      if (!doc.cocycles.emplace(name, std::move(w)).second)
        fail(item(p, "name"), "duplicate name \"" + name + "\"");
    }
  }

  return doc;
}

std::string render_document(const AlgebraDocument& doc) {
  Json j;
  j["name"] = doc.algebra.name;
  j["dims"] = render_dims(doc.algebra.dims);

  std::map<std::pair<int, int>, Vec> products;
  for (const auto& [key, terms] : doc.algebra.products)
    products[key] = doc.algebra.basis_product(key.first, key.second);
  j["products"] = render_valued_entries(products);

  if (doc.form) {
    Json f;
    f["entries"] = render_matrix_entries(doc.form->gram);
    j["form"] = std::move(f);
  }

  if (!doc.maps.empty()) {
    Json maps = Json::array();
    for (const auto& [name, m] : doc.maps) {
      Json e;
      e["name"] = name;
      e["degree"] = parity_bit(m.degree);
      e["entries"] = render_matrix_entries(m.mat);
      maps.push_back(std::move(e));
    }
    j["maps"] = std::move(maps);
  }

  if (!doc.representations.empty()) {
    Json reps = Json::array();
    for (const auto& [name, r] : doc.representations) {
      Json e;
      e["name"] = name;
      e["module"] = render_dims(r.module);
      Json ops = Json::array();
      for (const Matrix& op : r.action) ops.push_back(render_matrix_entries(op));
      e["operators"] = std::move(ops);
      reps.push_back(std::move(e));
    }
    j["representations"] = std::move(reps);
  }

  if (!doc.cocycles.empty()) {
    Json cocycles = Json::array();
    for (const auto& [name, w] : doc.cocycles) {
      Json e;
      e["name"] = name;
      e["module"] = render_dims(w.module);
      e["entries"] = render_valued_entries(w.values);
      cocycles.push_back(std::move(e));
    }
    j["cocycles"] = std::move(cocycles);
  }

  return j.dump(2) + "\n";
}

AlgebraDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot read \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str());
  } catch (const DocumentError& e) {
    throw DocumentError(path + ": " + e.what());
  }
}

std::string render_report_json(const CheckReport& report) {
  Json j;
  j["all_pass"] = report.all_pass();
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json je;
    je["check"] = e.check;
    je["pass"] = e.pass;
    if (!e.witness.empty()) je["witness"] = e.witness;
    if (!e.defect.empty()) {
      Json d = Json::array();
      for (const auto& c : e.defect) d.push_back(c.str());
      je["defect"] = std::move(d);
    }
    if (!e.note.empty()) je["note"] = e.note;
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

}  // namespace mocklie
