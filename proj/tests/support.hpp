#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "nestlogit/model_io.hpp"
#include "nestlogit/nested_logit.hpp"

namespace testing {

inline nestlogit::ModelSpec model_from(const std::string& json) { return nestlogit::parse_model(json); }

// root -> {a(0.5) -> {1, 2}, 3}
inline nestlogit::ModelSpec five_node() {
  return model_from(R"({"root": {"id": "0", "lambda": 1, "children": [
      {"id": "a", "lambda": 0.5, "children": [{"id": "1", "utility": 0}, {"id": "2", "utility": 0}]},
      {"id": "3", "utility": 0}]}})");
}

// root -> {a(0.5) -> {b(0.5) -> {leaf0, leaf1}, leaf2}, leaf3}
inline nestlogit::ModelSpec reference_tree() {
  return model_from(R"({"root": {"id": "root", "lambda": 1, "children": [
      {"id": "a", "lambda": 0.5, "children": [
        {"id": "b", "lambda": 0.5, "children": [{"id": "leaf0", "utility": 0}, {"id": "leaf1", "utility": 0}]},
        {"id": "leaf2", "utility": 0}]},
      {"id": "leaf3", "utility": 0}]}})");
}

// root -> {A(0.5) -> {1, 2}, B(1) -> {3}}
inline nestlogit::ModelSpec single_layer_example() {
  return model_from(R"({"root": {"id": "root", "lambda": 1, "children": [
      {"id": "A", "lambda": 0.5, "children": [{"id": "1", "utility": 0}, {"id": "2", "utility": 0}]},
      {"id": "B", "lambda": 1, "children": [{"id": "3", "utility": 0}]}]}})");
}

inline std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline nestlogit::ModelSpec single_nest(double lambda, double u1, double u2) {
  return model_from(R"({"root": {"id": "root", "lambda": 1, "children": [{"id": "n", "lambda": )" + num(lambda) +
                    R"(, "children": [{"id": "x", "utility": )" + num(u1) + R"(}, {"id": "y", "utility": )" +
                    num(u2) + "}]}]}}");
}

inline nestlogit::ModelSpec plain_logit(const std::vector<double>& u) {
  std::string kids;
  for (std::size_t k = 0; k < u.size(); ++k) {
    kids += (k ? "," : "") + std::string(R"({"id": "j)") + std::to_string(k) + R"(", "utility": )" + num(u[k]) + "}";
  }
  return model_from(R"({"root": {"id": "root", "lambda": 1, "children": [)" + kids + "]}}");
}

// Probabilities of the reference tree at U = 0, computed by hand from the
// inclusive values u_b = ln2/4, u_a = ln(1 + e^{2 u_b}) / 2, u_0 = ln(1 + e^{u_a}).
struct ReferenceValues {
  double u_b, u_a, u_0, pi_a, p0, p2, p3;
};

inline ReferenceValues reference_values() {
  ReferenceValues r{};
  r.u_b = 0.25 * std::log(2.0);
  r.u_a = 0.5 * std::log(std::exp(r.u_b / 0.5) + 1.0);
  r.u_0 = std::log(std::exp(r.u_a) + 1.0);
  r.pi_a = std::exp(r.u_a - r.u_0);
  const double pi_b = r.pi_a * std::exp(r.u_b / 0.5) / (std::exp(r.u_b / 0.5) + 1.0);
  r.p0 = pi_b / 2.0;
  r.p2 = r.pi_a - pi_b;
  r.p3 = 1.0 - r.pi_a;
  return r;
}

inline double rel_diff(double a, double b) {
  if (a == b) return 0.0;
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

}  // namespace testing
