#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "liestruct/rational.hpp"

namespace liestruct {

// Sparse multivariate polynomial over Rat. Monomials are exponent vectors of
// fixed length nvars (small: systems here have <= ~20 unknowns, degree <= 8).
class Poly {
 public:
  using Monomial = std::vector<uint8_t>;

  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rat& c) {
    Poly p(nvars);
    if (!rat_is_zero(c)) p.terms_[Monomial(nvars, 0)] = c;
    return p;
  }
  static Poly variable(int nvars, int idx) {
    Poly p(nvars);
    Monomial m(nvars, 0);
    m[idx] = 1;
    p.terms_[m] = Rat(1);
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial(nvars_, 0));
  }
  Rat constant_value() const {
    if (terms_.empty()) return Rat(0);
    auto it = terms_.find(Monomial(nvars_, 0));
    return it == terms_.end() ? Rat(0) : it->second;
  }
  size_t term_count() const { return terms_.size(); }
  int degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
      int s = 0;
      for (uint8_t e : m) s += e;
      d = std::max(d, s);
    }
    return d;
  }

  Poly operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  Poly operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  Poly operator*(const Poly& o) const {
    Poly r(nvars_);
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_) {
        Monomial m(nvars_);
        for (int i = 0; i < nvars_; ++i) m[i] = uint8_t(m1[i] + m2[i]);
        r.add_term(m, c1 * c2);
      }
    return r;
  }
  Poly operator*(const Rat& s) const {
    if (rat_is_zero(s)) return Poly(nvars_);
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c *= s;
    return r;
  }
  Poly operator/(const Rat& s) const {
    if (rat_is_zero(s)) throw std::runtime_error("polynomial division by zero");
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c /= s;
    return r;
  }

  Poly derivative(int var) const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m[var] == 0) continue;
      Monomial d = m;
      d[var] -= 1;
      r.add_term(d, c * Rat(int(m[var])));
    }
    return r;
  }

  Rat eval(const std::vector<Rat>& x) const {
    Rat sum(0);
    for (const auto& [m, c] : terms_) {
      Rat t = c;
      for (int i = 0; i < nvars_; ++i)
        for (uint8_t k = 0; k < m[i]; ++k) t *= x[i];
      sum += t;
    }
    return sum;
  }

  double eval_d(const std::vector<double>& x) const {
    double sum = 0;
    for (const auto& [m, c] : terms_) {
      double t = rat_to_double(c);
      for (int i = 0; i < nvars_; ++i)
        for (uint8_t k = 0; k < m[i]; ++k) t *= x[i];
      sum += t;
    }
    return sum;
  }

  const std::map<Monomial, Rat>& terms() const { return terms_; }

 private:
  void add_term(const Monomial& m, const Rat& c) {
    if (rat_is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_[m] = c;
    } else {
      it->second += c;
      if (rat_is_zero(it->second)) terms_.erase(it);
    }
  }

  int nvars_;
  std::map<Monomial, Rat> terms_;
};

// Flat compiled form of a list of polynomials for fast repeated double
// evaluation inside the numeric solver: per term a coefficient and the list
// of variable indices (with multiplicity).
class CompiledPolys {
 public:
  CompiledPolys() = default;
  explicit CompiledPolys(const std::vector<Poly>& polys) {
    poly_offsets_.push_back(0);
    for (const Poly& p : polys) {
      for (const auto& [m, c] : p.terms()) {
        coefs_.push_back(rat_to_double(c));
        var_offsets_.push_back(uint32_t(vars_.size()));
        for (int i = 0; i < int(m.size()); ++i)
          for (uint8_t k = 0; k < m[i]; ++k) vars_.push_back(uint16_t(i));
      }
      poly_offsets_.push_back(uint32_t(coefs_.size()));
    }
    var_offsets_.push_back(uint32_t(vars_.size()));
  }

  size_t count() const { return poly_offsets_.size() - 1; }

  void eval(const double* x, double* out) const {
    for (size_t p = 0; p + 1 < poly_offsets_.size(); ++p) {
      double sum = 0;
      for (uint32_t t = poly_offsets_[p]; t < poly_offsets_[p + 1]; ++t) {
        double v = coefs_[t];
        for (uint32_t k = var_offsets_[t]; k < var_offsets_[t + 1]; ++k) v *= x[vars_[k]];
        sum += v;
      }
      out[p] = sum;
    }
  }

 private:
  std::vector<double> coefs_;
  std::vector<uint32_t> poly_offsets_;
  std::vector<uint32_t> var_offsets_;
  std::vector<uint16_t> vars_;
};

}  // namespace liestruct
