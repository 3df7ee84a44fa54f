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

#include "quantopia/quantale.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace quantopia {
namespace {

constexpr const char* kNe = " \xE2\x89\xA0 ";  // " ≠ "

}  // namespace

ValidationReport validate_quantale(const QuantaleTable& t) {
  ValidationReport report;
  const std::size_t n = t.elements.size();
  if (n == 0) {
    report.structural.push_back("element list is empty");
    return report;
  }
  std::map<std::string, Elem> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(t.elements[i], static_cast<Elem>(i)).second) {
      report.structural.push_back("duplicate element '" + t.elements[i] + "'");
    }
  }
  if (n > 0xFFFF) report.structural.push_back("too many elements");
  if (t.leq.rows() != n || t.leq.cols() != n) {
    report.structural.push_back("leq is not " + std::to_string(n) + "x" + std::to_string(n));
  }
  if (t.mul.rows() != n || t.mul.cols() != n) {
    report.structural.push_back("mul is not " + std::to_string(n) + "x" + std::to_string(n));
  }
  if (!index.count(t.unit)) report.structural.push_back("unknown unit '" + t.unit + "'");
  Matrix<Elem> mul(n, n, 0);
  if (report.structural.empty()) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto it = index.find(t.mul(a, b));
        if (it == index.end()) {
          report.structural.push_back("mul[" + t.elements[a] + "][" + t.elements[b] +
                                      "] names unknown element '" + t.mul(a, b) + "'");
        } else {
          mul(a, b) = it->second;
        }
      }
    }
  }
  if (!report.structural.empty()) return report;

  auto add = [&](std::string axiom, std::vector<std::string> witness, std::string detail) {
    if (!report.has_violation(axiom)) {
      report.violations.push_back({std::move(axiom), std::move(witness), std::move(detail)});
    }
  };
  const auto& nm = t.elements;

  ValidationReport lattice_report = validate_lattice(t.elements, t.leq);
  for (auto& v : lattice_report.violations) report.violations.push_back(std::move(v));
  const bool lattice_ok = lattice_report.ok();

  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      if (mul(a, b) != mul(b, a)) {
        add("commutative", {nm[a], nm[b]},
            nm[a] + " & " + nm[b] + " = " + nm[mul(a, b)] + kNe + nm[b] + " & " + nm[a] + " = " +
                nm[mul(b, a)]);
      }
    }
  }
  for (Elem a = 0; a < n && !report.has_violation("associative"); ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          add("associative", {nm[a], nm[b], nm[c]},
              "(" + nm[a] + " & " + nm[b] + ") & " + nm[c] + " = " + nm[mul(mul(a, b), c)] + kNe +
                  nm[a] + " & (" + nm[b] + " & " + nm[c] + ") = " + nm[mul(a, mul(b, c))]);
        }
      }
    }
  }
  const Elem k = index.at(t.unit);
  for (Elem a = 0; a < n; ++a) {
    if (mul(k, a) != a) {
      add("unit", {nm[k], nm[a]}, "k & " + nm[a] + kNe + nm[a]);
    } else if (mul(a, k) != a) {
      add("unit", {nm[k], nm[a]}, nm[a] + " & k" + kNe + nm[a]);
    }
  }
  if (!lattice_ok) return report;

  const FiniteLattice lat(t.elements, t.leq);
  const Elem bot = static_cast<Elem>(lat.bottom());
  for (Elem a = 0; a < n; ++a) {
    if (mul(a, bot) != bot || mul(bot, a) != bot) {
      add("zero", {nm[a]}, nm[a] + " & " + nm[bot] + kNe + nm[bot]);
    }
  }
  for (Elem a = 0; a < n && !report.has_violation("distributive"); ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = b; c < n; ++c) {
        const Elem bc = static_cast<Elem>(lat.join(b, c));
        const Elem left = mul(a, bc);
        const Elem right = static_cast<Elem>(lat.join(mul(a, b), mul(a, c)));
        const Elem left2 = mul(bc, a);
        const Elem right2 = static_cast<Elem>(lat.join(mul(b, a), mul(c, a)));
        if (left != right || left2 != right2) {
          add("distributive", {nm[a], nm[b], nm[c]},
              nm[a] + " & (" + nm[b] + " v " + nm[c] + ")" + kNe + "(" + nm[a] + " & " + nm[b] +
                  ") v (" + nm[a] + " & " + nm[c] + ")");
          break;
        }
      }
    }
  }
  return report;
}

QuantalePtr FiniteQuantale::make(const QuantaleTable& table, std::string label) {
  const ValidationReport report = validate_quantale(table);
  if (!report.structural.empty()) throw StructuralError("quantale table: " + report.summary());
  if (!report.ok()) throw InvalidInstance("not a quantale: " + report.summary());

  std::shared_ptr<FiniteQuantale> q(new FiniteQuantale());
  q->label_ = std::move(label);
  q->lattice_ = FiniteLattice(table.elements, table.leq);
  const std::size_t n = table.elements.size();
  q->join_ = Matrix<Elem>(n, n, 0);
  q->meet_ = Matrix<Elem>(n, n, 0);
  q->mul_ = Matrix<Elem>(n, n, 0);
  q->impl_ = Matrix<Elem>(n, n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      q->join_(a, b) = static_cast<Elem>(q->lattice_.join(a, b));
      q->meet_(a, b) = static_cast<Elem>(q->lattice_.meet(a, b));
      q->mul_(a, b) = *q->find(table.mul(a, b));
    }
  }
  q->bottom_ = static_cast<Elem>(q->lattice_.bottom());
  q->top_ = static_cast<Elem>(q->lattice_.top());
  q->unit_ = *q->find(table.unit);
  for (Elem p = 0; p < n; ++p) {
    for (Elem r = 0; r < n; ++r) q->impl_(p, r) = implication(*q, p, r);
  }
  return q;
}

std::optional<Elem> FiniteQuantale::find(const std::string& name) const {
  auto p = lattice_.find(name);
  if (!p) return std::nullopt;
  return static_cast<Elem>(*p);
}

Elem FiniteQuantale::at(const std::string& name) const {
  auto e = find(name);
  if (!e) throw StructuralError("unknown quantale element '" + name + "'");
  return *e;
}

Elem FiniteQuantale::join_all(std::span<const Elem> xs) const {
  Elem acc = bottom_;
  for (Elem x : xs) acc = join_(acc, x);
  return acc;
}

Elem FiniteQuantale::meet_all(std::span<const Elem> xs) const {
  Elem acc = top_;
  for (Elem x : xs) acc = meet_(acc, x);
  return acc;
}

QuantaleTable FiniteQuantale::table() const {
  QuantaleTable t;
  t.elements = names();
  t.leq = lattice_.leq_matrix();
  t.mul = Matrix<std::string>(size(), size());
  for (Elem a = 0; a < size(); ++a) {
    for (Elem b = 0; b < size(); ++b) t.mul(a, b) = name(mul_(a, b));
  }
  t.unit = name(unit_);
  return t;
}

Elem implication(const FiniteQuantale& q, Elem p, Elem r) {
  Elem acc = q.bottom();
  for (Elem x = 0; x < q.size(); ++x) {
    if (q.leq(q.mul(p, x), r)) acc = q.join(acc, x);
  }
  return acc;
}

QuantaleProperties quantale_properties(const FiniteQuantale& q) {
  QuantaleProperties props;
  props.is_integral = q.unit() == q.top();
  props.is_frame = true;
  for (Elem a = 0; a < q.size(); ++a) {
    for (Elem b = 0; b < q.size(); ++b) {
      if (q.mul(a, b) != q.meet(a, b)) props.is_frame = false;
    }
    if (q.mul(a, a) == a) props.idempotents.push_back(a);
  }
  return props;
}

// -- Built-in chains ------------------------------------------------------------------

std::string fraction_label(std::size_t i, std::size_t d) {
  if (i == 0) return "0";
  if (i == d) return "1";
  const std::size_t g = std::gcd(i, d);
  return std::to_string(i / g) + "/" + std::to_string(d / g);
}

QuantalePtr lukasiewicz_block_chain(std::vector<std::string> names,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& blocks,
                                    std::string label) {
  const std::size_t n = names.size();
  QuantaleTable t;
  t.elements = std::move(names);
  t.leq = Matrix<bool>(n, n, false);
  t.mul = Matrix<std::string>(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t.leq(a, b) = a <= b;
      std::size_t prod = std::min(a, b);
      for (const auto& [lo, hi] : blocks) {
        if (lo <= a && a <= hi && lo <= b && b <= hi) {
          prod = (a + b >= lo + hi) ? a + b - hi : lo;
        }
      }
      t.mul(a, b) = t.elements[prod];
    }
  }
  t.unit = t.elements[n - 1];
  return FiniteQuantale::make(t, std::move(label));
}

namespace {

std::vector<std::string> uniform_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(fraction_label(i, n - 1));
  return names;
}

}  // namespace

QuantalePtr boolean_quantale() { return godel_chain(2); }

QuantalePtr godel_chain(std::size_t n) {
  if (n < 2) throw PreconditionError("godel_chain needs n >= 2");
  return lukasiewicz_block_chain(uniform_names(n), {}, n == 2 ? "bool" : "godel" + std::to_string(n));
}

QuantalePtr mv_chain(std::size_t n) {
  if (n < 2) throw PreconditionError("mv_chain needs n >= 2");
  return lukasiewicz_block_chain(uniform_names(n), {{0, n - 1}},
                                 n == 2 ? "bool" : "mv" + std::to_string(n));
}

QuantalePtr builtin_quantale(const std::string& name) {
  auto parse_suffix = [&](const std::string& prefix) -> std::optional<std::size_t> {
    if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return std::nullopt;
    const std::string rest = name.substr(prefix.size());
    if (!std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      return std::nullopt;
    }
    if (rest.size() > 4) return std::nullopt;
    return static_cast<std::size_t>(std::stoul(rest));
  };
  if (name == "bool" || name == "B2") return boolean_quantale();
  if (auto n = parse_suffix("godel")) return godel_chain(*n);
  if (auto n = parse_suffix("mv")) return mv_chain(*n);
  return nullptr;
}

bool is_chain(const FiniteQuantale& q) {
  for (Elem a = 0; a < q.size(); ++a) {
    for (Elem b = 0; b < q.size(); ++b) {
      if (!q.leq(a, b) && !q.leq(b, a)) return false;
    }
  }
  return true;
}

std::pair<Elem, Elem> chain_idempotent_bounds(const FiniteQuantale& q, Elem c) {
  if (!is_chain(q)) throw PreconditionError("idempotent bounds need a chain");
  if (q.mul(c, c) == c) return {c, c};
  Elem lo = q.bottom();
  Elem hi = q.top();
  for (Elem p = 0; p < q.size(); ++p) {
    if (q.mul(p, p) != p) continue;
    if (q.leq(p, c) && q.leq(lo, p)) lo = p;
    if (q.leq(c, p) && q.leq(p, hi)) hi = p;
  }
  return {lo, hi};
}

}  // namespace quantopia
