//  Copyright 2026 The Quantopia Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "quantopia/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace quantopia {
namespace {

namespace fs = std::filesystem;

const Json& field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object()) throw StructuralError(what + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw StructuralError(what + ": missing field \"" + key + "\"");
  return *it;
}

/// Element identifiers are strings; numbers are accepted and printed as JSON does.
std::string identifier(const Json& j, const std::string& what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number()) return j.dump();
  throw StructuralError(what + ": expected an identifier, got " + j.dump());
}

std::vector<std::string> identifiers(const Json& j, const std::string& what) {
  if (!j.is_array()) throw StructuralError(what + ": expected an array");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(identifier(e, what));
  return out;
}

std::vector<std::string> carrier_from_json(const Json& j, const std::string& what) {
  auto carrier = identifiers(j, what + " carrier");
  std::set<std::string> seen;
  for (const auto& c : carrier) {
    if (!seen.insert(c).second) throw StructuralError(what + ": duplicate point \"" + c + "\"");
  }
  return carrier;
}

Elem element(const FiniteQuantale& q, const Json& j, const std::string& what) {
  const std::string name = identifier(j, what);
  auto e = q.find(name);
  if (!e) throw StructuralError(what + ": unknown element \"" + name + "\"");
  return *e;
}

fs::path parent_of(const fs::path& p) {
  auto parent = p.parent_path();
  return parent.empty() ? fs::path(".") : parent;
}

}  // namespace

Json read_json_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

namespace {

bool looks_like_path(const std::string& spec) {
  return spec.find('/') != std::string::npos || fs::path(spec).has_extension();
}

}  // namespace

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xF];
    h >>= 4;
  }
  return out;
}

std::string digest(const Json& j) { return fnv1a_hex(j.dump()); }

// -- Quantales ------------------------------------------------------------------

QuantaleTable quantale_table_from_json(const Json& j) {
  const std::string what = "quantale";
  QuantaleTable t;
  t.elements = identifiers(field(j, "elements", what), what + " elements");
  const std::size_t n = t.elements.size();
  const Json& leq = field(j, "leq", what);
  const Json& mul = field(j, "mul", what);
  if (!leq.is_array() || leq.size() != n) {
    throw StructuralError(what + ": leq must have " + std::to_string(n) + " rows");
  }
  if (!mul.is_array() || mul.size() != n) {
    throw StructuralError(what + ": mul must have " + std::to_string(n) + " rows");
  }
  t.leq = Matrix<bool>(n, n, false);
  t.mul = Matrix<std::string>(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq[a].is_array() || leq[a].size() != n || !mul[a].is_array() || mul[a].size() != n) {
      throw StructuralError(what + ": row " + std::to_string(a) + " must have " +
                            std::to_string(n) + " entries");
    }
    for (std::size_t b = 0; b < n; ++b) {
      const Json& cell = leq[a][b];
      if (cell.is_boolean()) {
        t.leq(a, b) = cell.get<bool>();
      } else if (cell.is_number_integer() && (cell == 0 || cell == 1)) {
        t.leq(a, b) = cell.get<int>() == 1;
      } else {
        throw StructuralError(what + ": leq entries must be booleans");
      }
      t.mul(a, b) = identifier(mul[a][b], what + " mul");
    }
  }
  t.unit = identifier(field(j, "unit", what), what + " unit");
  return t;
}

Json quantale_to_json(const FiniteQuantale& q) {
  const std::size_t n = q.size();
  Json leq = Json::array();
  Json mul = Json::array();
  for (Elem a = 0; a < n; ++a) {
    Json lrow = Json::array();
    Json mrow = Json::array();
    for (Elem b = 0; b < n; ++b) {
      lrow.push_back(q.leq(a, b));
      mrow.push_back(q.name(q.mul(a, b)));
    }
    leq.push_back(std::move(lrow));
    mul.push_back(std::move(mrow));
  }
  return Json{{"elements", q.names()}, {"leq", leq}, {"mul", mul}, {"unit", q.name(q.unit())}};
}

QuantalePtr quantale_from_json(const Json& j, const fs::path& base_dir) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (auto q = builtin_quantale(name)) return q;
    const fs::path p = base_dir.empty() ? fs::path(name) : base_dir / name;
    if (fs::exists(p)) return quantale_from_json(read_json_file(p), parent_of(p));
    throw StructuralError("unknown quantale \"" + name + "\"");
  }
  return FiniteQuantale::make(quantale_table_from_json(j), "inline");
}

QuantalePtr resolve_quantale(const std::string& spec) {
  if (auto q = builtin_quantale(spec)) return q;
  if (!fs::exists(spec)) {
    if (looks_like_path(spec)) throw ParseError("cannot open " + spec);
    throw StructuralError("unknown quantale \"" + spec + "\" (built-ins: bool, godel<n>, mv<n>)");
  }
  const fs::path p(spec);
  Json j = read_json_file(p);
  if (j.is_string()) return quantale_from_json(j, parent_of(p));
  return FiniteQuantale::make(quantale_table_from_json(j), p.stem().string());
}

// -- T-norms --------------------------------------------------------------------

TNorm tnorm_from_json(const Json& j, std::string label) {
  const std::string what = "t-norm";
  const Json& pieces = field(j, "pieces", what);
  if (!pieces.is_array()) throw StructuralError(what + ": pieces must be an array");
  std::vector<TNormPiece> out;
  for (const auto& p : pieces) {
    const std::string kind = identifier(field(p, "kind", what), what + " kind");
    TNormPiece piece{PieceKind::lukasiewicz, 0.0, 0.0};
    if (kind == "lukasiewicz") {
      piece.kind = PieceKind::lukasiewicz;
    } else if (kind == "product") {
      piece.kind = PieceKind::product;
    } else {
      throw StructuralError(what + ": unknown piece kind \"" + kind + "\"");
    }
    const Json& lo = field(p, "lo", what);
    const Json& hi = field(p, "hi", what);
    if (!lo.is_number() || !hi.is_number()) throw StructuralError(what + ": lo/hi must be numbers");
    piece.lo = lo.get<double>();
    piece.hi = hi.get<double>();
    out.push_back(piece);
  }
  if (label.empty() && j.contains("label") && j["label"].is_string()) label = j["label"];
  try {
    return TNorm(std::move(out), std::move(label));
  } catch (const PreconditionError& e) {
    throw StructuralError(std::string(what) + ": " + e.what());
  }
}

Json tnorm_to_json(const TNorm& t) {
  Json pieces = Json::array();
  for (const auto& p : t.pieces()) {
    pieces.push_back({{"kind", p.kind == PieceKind::lukasiewicz ? "lukasiewicz" : "product"},
                      {"lo", p.lo},
                      {"hi", p.hi}});
  }
  return Json{{"pieces", pieces}};
}

TNorm resolve_tnorm(const std::string& spec) {
  if (auto t = builtin_tnorm(spec)) return *t;
  if (!fs::exists(spec)) {
    if (looks_like_path(spec)) throw ParseError("cannot open " + spec);
    throw StructuralError("unknown t-norm \"" + spec + "\"");
  }
  return tnorm_from_json(read_json_file(spec), fs::path(spec).stem().string());
}

// -- Q-ordered sets and functions -------------------------------------------------

RawQOrder raw_qorder_from_json(const Json& j, const fs::path& base_dir) {
  const std::string what = "Q-ordered set";
  QuantalePtr q = quantale_from_json(field(j, "quantale", what), base_dir);
  auto carrier = carrier_from_json(field(j, "carrier", what), what);
  const std::size_t n = carrier.size();
  const Json& order = field(j, "order", what);
  if (!order.is_array() || order.size() != n) {
    throw StructuralError(what + ": order must have " + std::to_string(n) + " rows");
  }
  Matrix<Elem> m(n, n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    if (!order[a].is_array() || order[a].size() != n) {
      throw StructuralError(what + ": order row " + std::to_string(a) + " must have " +
                            std::to_string(n) + " entries");
    }
    for (std::size_t b = 0; b < n; ++b) m(a, b) = element(*q, order[a][b], what + " order");
  }
  return RawQOrder{std::move(q), std::move(carrier), std::move(m)};
}

QOrderedSet qorder_from_json(const Json& j, const fs::path& base_dir) {
  RawQOrder raw = raw_qorder_from_json(j, base_dir);
  return QOrderedSet(std::move(raw.quantale), std::move(raw.carrier), std::move(raw.order));
}

Json qorder_to_json(const QOrderedSet& x) {
  const auto& q = x.quantale();
  Json order = Json::array();
  for (Point a = 0; a < x.size(); ++a) {
    Json row = Json::array();
    for (Point b = 0; b < x.size(); ++b) row.push_back(q.name(x(a, b)));
    order.push_back(std::move(row));
  }
  return Json{{"quantale", quantale_to_json(q)}, {"carrier", x.carrier()}, {"order", order}};
}

QFun qfun_from_json(const FiniteQuantale& q, const std::vector<std::string>& carrier,
                    const Json& j) {
  const std::string what = "Q-valued function";
  const Json& body = j.is_object() && j.contains("values") ? j["values"] : j;
  const std::size_t n = carrier.size();
  QFun f(std::vector<Elem>(n, 0));
  if (body.is_array()) {
    if (body.size() != n) {
      throw StructuralError(what + ": expected " + std::to_string(n) + " values");
    }
    for (std::size_t i = 0; i < n; ++i) f[i] = element(q, body[i], what);
    return f;
  }
  if (!body.is_object()) throw StructuralError(what + ": expected an object or an array");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(carrier[i], i);
  std::vector<bool> seen(n, false);
  for (const auto& [key, value] : body.items()) {
    auto it = index.find(key);
    if (it == index.end()) throw StructuralError(what + ": unknown point \"" + key + "\"");
    f[it->second] = element(q, value, what);
    seen[it->second] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen[i]) throw StructuralError(what + ": no value for point \"" + carrier[i] + "\"");
  }
  return f;
}

Json qfun_to_json(const FiniteQuantale& q, const std::vector<std::string>& carrier,
                  const QFun& f) {
  Json o = Json::object();
  for (std::size_t i = 0; i < carrier.size(); ++i) o[carrier[i]] = q.name(f[i]);
  return o;
}

// -- Spaces ---------------------------------------------------------------------

QTopSpace space_from_json(const Json& j, const fs::path& base_dir, const Limits& limits) {
  const std::string what = "space";
  QuantalePtr q = quantale_from_json(field(j, "quantale", what), base_dir);
  auto carrier = carrier_from_json(field(j, "carrier", what), what);
  const bool has_opens = j.contains("opens");
  const bool has_subbasis = j.contains("subbasis");
  if (has_opens == has_subbasis) {
    throw StructuralError(what + ": give exactly one of \"opens\" and \"subbasis\"");
  }
  const Json& list = has_opens ? j["opens"] : j["subbasis"];
  if (!list.is_array()) throw StructuralError(what + ": open sets must be an array");
  std::vector<QFun> funs;
  for (const auto& f : list) funs.push_back(qfun_from_json(*q, carrier, f));
  if (has_subbasis) return generate_topology(std::move(q), std::move(carrier), funs, limits);
  return make_space(std::move(q), std::move(carrier), std::move(funs));
}

Json space_to_json(const QTopSpace& t) {
  Json opens = Json::array();
  for (const auto& f : t.opens) opens.push_back(qfun_to_json(*t.quantale, t.carrier, f));
  return Json{{"quantale", quantale_to_json(*t.quantale)}, {"carrier", t.carrier}, {"opens", opens}};
}

}  // namespace quantopia
