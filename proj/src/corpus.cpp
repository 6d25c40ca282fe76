#include "perispline/corpus.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>

namespace perispline {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// d^l/dx^l of sin(w x) and cos(w x) without accumulating phase rounding.
double sin_deriv(double w, int l, double x) {
  const double amp = std::pow(w, l);
  switch (l % 4) {
    case 0: return amp * std::sin(w * x);
    case 1: return amp * std::cos(w * x);
    case 2: return -amp * std::sin(w * x);
    default: return -amp * std::cos(w * x);
  }
}

double cos_deriv(double w, int l, double x) {
  const double amp = std::pow(w, l);
  switch (l % 4) {
    case 0: return amp * std::cos(w * x);
    case 1: return -amp * std::sin(w * x);
    case 2: return -amp * std::cos(w * x);
    default: return amp * std::sin(w * x);
  }
}

TestFunction make_trig(const std::string& label, bool is_sin, int k) {
  const double w = kTwoPi * k;
  TestFunction f;
  f.label = label;
  if (is_sin) {
    f.value = [w](double x) { return std::sin(w * x); };
    f.deriv = [w](int l, double x) { return sin_deriv(w, l, x); };
  } else {
    f.value = [w](double x) { return std::cos(w * x); };
    f.deriv = [w](int l, double x) { return cos_deriv(w, l, x); };
  }
  return f;
}

// exp(sin theta) differentiates into e^{sin theta} P_n(sin, cos) with integer
// polynomials P_{n+1} = cos * P_n + dP_n/dtheta; monomials keyed (a, b) for
// sin^a cos^b.
using TrigPoly = std::map<std::pair<int, int>, long long>;

const TrigPoly& expsin_poly(int n) {
  static std::vector<TrigPoly> cache = [] {
    std::vector<TrigPoly> c(1);
    c[0][{0, 0}] = 1;
    return c;
  }();
  if (n > 24) throw std::invalid_argument("expsin derivative order capped at 24");
  while (static_cast<int>(cache.size()) <= n) {
    const TrigPoly& prev = cache.back();
    TrigPoly next;
    for (const auto& [key, coef] : prev) {
      const auto [a, b] = key;
      next[{a, b + 1}] += coef;                     // cos * monomial
      if (a > 0) next[{a - 1, b + 1}] += coef * a;  // d/dtheta of sin^a
      if (b > 0) next[{a + 1, b - 1}] -= coef * b;  // d/dtheta of cos^b
    }
    cache.push_back(std::move(next));
  }
  return cache[static_cast<std::size_t>(n)];
}

double expsin_deriv(int l, double x) {
  const double s = std::sin(kTwoPi * x);
  const double c = std::cos(kTwoPi * x);
  const TrigPoly& poly = expsin_poly(l);
  double p = 0.0;
  for (const auto& [key, coef] : poly)
    p += static_cast<double>(coef) * std::pow(s, key.first) * std::pow(c, key.second);
  return std::pow(kTwoPi, l) * std::exp(s) * p;
}

double unit_interval(std::mt19937_64& rng) {
  // Top 53 bits -> [0, 1), then stretch to [-1, 1). Avoids distribution
  // objects so the stream is identical across standard libraries.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
}

TestFunction make_randtrig(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double a0 = unit_interval(rng);
  std::vector<double> a(3), b(3);
  for (int k = 0; k < 3; ++k) {
    a[static_cast<std::size_t>(k)] = unit_interval(rng);
    b[static_cast<std::size_t>(k)] = unit_interval(rng);
  }
  TestFunction f;
  f.label = "randtrig";
  f.deriv = [a0, a, b](int l, double x) {
    double s = (l == 0) ? a0 : 0.0;
    for (int k = 1; k <= 3; ++k) {
      const double w = kTwoPi * k;
      s += a[static_cast<std::size_t>(k - 1)] * cos_deriv(w, l, x) +
           b[static_cast<std::size_t>(k - 1)] * sin_deriv(w, l, x);
    }
    return s;
  };
  f.value = [deriv = f.deriv](double x) { return deriv(0, x); };
  return f;
}

}  // namespace

std::vector<std::string> corpus_labels() {
  return {"sin1", "cos1", "sin2", "cos2", "sin5", "cos5", "expsin", "randtrig"};
}

TestFunction corpus_function(const std::string& label, std::uint64_t seed) {
  if (label == "sin1") return make_trig(label, true, 1);
  if (label == "cos1") return make_trig(label, false, 1);
  if (label == "sin2") return make_trig(label, true, 2);
  if (label == "cos2") return make_trig(label, false, 2);
  if (label == "sin5") return make_trig(label, true, 5);
  if (label == "cos5") return make_trig(label, false, 5);
  if (label == "expsin") {
    TestFunction f;
    f.label = label;
    f.value = [](double x) { return std::exp(std::sin(kTwoPi * x)); };
    f.deriv = [](int l, double x) { return expsin_deriv(l, x); };
    return f;
  }
  if (label == "randtrig") return make_randtrig(seed);
  throw std::invalid_argument("corpus_function: unknown label '" + label + "'");
}

std::vector<TestFunction> corpus(const std::vector<std::string>& labels, std::uint64_t seed) {
  std::vector<TestFunction> out;
  out.reserve(labels.size());
  for (const std::string& l : labels) out.push_back(corpus_function(l, seed));
  return out;
}

}  // namespace perispline
