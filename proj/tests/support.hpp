#pragma once

#include <string>

#include "liereduce/algebra.hpp"
#include "liereduce/classify.hpp"
#include "liereduce/corpus.hpp"
#include "liereduce/errors.hpp"
#include "liereduce/problem.hpp"

namespace testing {

using namespace liereduce;

inline JetSpace ode(int order, const std::string& x = "x", const std::string& y = "y") {
  return JetSpace({x}, {y}, order);
}

inline JetSpace pde2(int order) { return JetSpace({"x1", "x2"}, {"u"}, order); }

/// Field from "coord: expr; coord: expr"; missing coordinates get 0.
inline VectorField field(const JetSpace& s, const std::string& text) {
  std::vector<Expr> xi(s.p()), eta(s.m());
  for (const auto& [name, e] : parse_named(text, s)) {
    if (int j = s.independent_index(name); j >= 0) {
      xi[j] = e;
    } else {
      eta[s.dependent_index(name)] = e;
    }
  }
  return VectorField(s, xi, eta);
}

inline DESystem system(const JetSpace& s, std::initializer_list<const char*> eqs) {
  std::vector<Expr> out;
  for (const char* e : eqs) out.push_back(s.parse(e));
  return DESystem(s, out);
}

inline bool same_field(const VectorField& a, const VectorField& b) {
  for (int i = 0; i < a.dimension(); ++i) {
    if (!equiv(a.coefficient(i), b.coefficient(i))) return false;
  }
  return true;
}

}  // namespace testing
