#pragma once

#include <cstdint>
#include <cstdio>
#include <random>
#include <string>

namespace testsupport {

// Random integrand families, produced as source text so every test case also
// exercises the parser.
//
// smooth(): sums (and occasional products) of polynomials, sin/cos terms,
// and exp terms. Entire functions: safe for real, jet, and interval
// evaluation on any subinterval of [-3, 3].
//
// guarded(): smooth() terms plus log(c + x^2), sqrt(c + x^2), and
// 1/(c + x^2) atoms with c >= 0.5, which keep log/sqrt/div strictly inside
// their domains everywhere.
//
// convex(): a*x^2 + b*x + c + d*exp(r*x) + g*(x - s)^(2k) with a >= 0.1 and
// d, g >= 0, so f'' >= 0.2 on the real line.
class ExprGen {
 public:
  explicit ExprGen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  std::string smooth() {
    const int terms = uniform_int(1, 3);
    std::string out;
    for (int i = 0; i < terms; ++i) {
      if (i) out += " + ";
      out += smooth_term();
    }
    return out;
  }

  std::string guarded() {
    const int terms = uniform_int(1, 3);
    std::string out;
    for (int i = 0; i < terms; ++i) {
      if (i) out += " + ";
      switch (uniform_int(0, 5)) {
        case 0:
          out += "log(" + num(uniform(0.5, 3.0)) + " + x^2)";
          break;
        case 1:
          out += "sqrt(" + num(uniform(0.5, 3.0)) + " + x^2)";
          break;
        case 2:
          out += num(uniform(-2.0, 2.0)) + "/(" + num(uniform(0.5, 3.0)) + " + x^2)";
          break;
        default:
          out += smooth_term();
          break;
      }
    }
    return out;
  }

  std::string convex() {
    std::string out = num(uniform(0.1, 2.0)) + "*x^2 + " + num(uniform(-2.0, 2.0)) +
                      "*x + " + num(uniform(-2.0, 2.0));
    if (uniform_int(0, 1)) {
      out += " + " + num(uniform(0.0, 2.0)) + "*exp(" + num(uniform(-1.5, 1.5)) + "*x)";
    }
    if (uniform_int(0, 1)) {
      const int k = 2 * uniform_int(1, 3);
      out += " + " + num(uniform(0.0, 1.0)) + "*(x - " + num(uniform(-1.0, 1.0)) + ")^" +
             std::to_string(k);
    }
    return out;
  }

 private:
  std::string smooth_term() {
    switch (uniform_int(0, 3)) {
      case 0: {  // polynomial monomial
        const int k = uniform_int(0, 6);
        std::string c = num(uniform(-3.0, 3.0));
        if (k == 0) return c;
        if (k == 1) return c + "*x";
        return c + "*x^" + std::to_string(k);
      }
      case 1:
        return num(uniform(-3.0, 3.0)) + "*sin(" + num(uniform(-2.0, 2.0)) + "*x + " +
               num(uniform(-3.0, 3.0)) + ")";
      case 2:
        return num(uniform(-3.0, 3.0)) + "*cos(" + num(uniform(-2.0, 2.0)) + "*x + " +
               num(uniform(-3.0, 3.0)) + ")";
      default:
        return num(uniform(-3.0, 3.0)) + "*exp(" + num(uniform(-1.5, 1.5)) + "*x)";
    }
  }

  std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
  }

  std::mt19937_64 rng_;
};

}  // namespace testsupport
