// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cshyp {

using cplx = std::complex<double>;

inline constexpr int kMaxJetVars = 6;
inline constexpr int kMaxJetOrder = 3;

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Multi-indexed truncated Taylor coefficients for a fixed variable count and
/// total order. Spaces are interned; Jet values hold a pointer into the cache.
class JetSpace {
 public:
  using MultiIndex = std::array<std::uint8_t, kMaxJetVars>;

  static const JetSpace& get(int nvars, int order);

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  int size() const { return static_cast<int>(index_.size()); }
  const MultiIndex& multi_index(int slot) const { return index_[slot]; }
  int slot_of(const MultiIndex& mi) const;
  int var_slot(int var) const { return var_slot_[var]; }
  int total_degree(int slot) const { return degree_[slot]; }

  struct ProductTerm {
    std::uint16_t a, b, dst;
  };
  std::span<const ProductTerm> product_terms() const { return product_; }

  // slot of mi + e_var, or -1 when the bumped index exceeds the order
  int bump(int slot, int var) const { return bump_[slot * nvars_ + var]; }

 private:
  JetSpace(int nvars, int order);
  int nvars_, order_;
  std::vector<MultiIndex> index_;
  std::vector<int> degree_;
  std::vector<int> var_slot_;
  std::vector<int> bump_;
  std::vector<ProductTerm> product_;
};

/// Complex-valued jet: value plus mixed partial data up to the space's order.
/// Coefficients are Taylor coefficients (derivative / multinomial factorial),
/// so multiplication is plain truncated convolution.
class Jet {
 public:
  Jet() : sp_(nullptr) {}
  explicit Jet(const JetSpace& sp) : sp_(&sp), c_(sp.size(), cplx(0.0)) {}

  static Jet constant(const JetSpace& sp, cplx v) {
    Jet j(sp);
    j.c_[0] = v;
    return j;
  }
  static Jet variable(const JetSpace& sp, int var, cplx v) {
    Jet j(sp);
    j.c_[0] = v;
    if (sp.order() >= 1) j.c_[sp.var_slot(var)] = 1.0;
    return j;
  }

  const JetSpace& space() const { return *sp_; }
  bool valid() const { return sp_ != nullptr; }
  cplx value() const { return c_[0]; }
  cplx coeff(int slot) const { return c_[slot]; }
  cplx& coeff(int slot) { return c_[slot]; }

  /// First partial as a value (reads the linear slot).
  cplx d(int var) const { return c_[sp_->var_slot(var)]; }
  /// Taylor coefficient for an explicit multi-index.
  cplx taylor(const JetSpace::MultiIndex& mi) const { return c_[sp_->slot_of(mi)]; }

  /// Partial derivative as a jet one order lower.
  Jet derivative(int var) const;
  /// Same coefficients viewed in a lower-order (or equal) space.
  Jet truncated(int order) const;

  Jet operator-() const;
  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator+=(cplx v) { c_[0] += v; return *this; }
  Jet& operator-=(cplx v) { c_[0] -= v; return *this; }
  Jet& operator*=(cplx v);

  friend Jet operator+(Jet a, const Jet& b) { a += b; return a; }
  friend Jet operator-(Jet a, const Jet& b) { a -= b; return a; }
  friend Jet operator+(Jet a, cplx b) { a += b; return a; }
  friend Jet operator+(cplx b, Jet a) { a += b; return a; }
  friend Jet operator-(Jet a, cplx b) { a -= b; return a; }
  friend Jet operator-(cplx b, const Jet& a) { Jet r = -a; r += b; return r; }
  friend Jet operator*(Jet a, cplx b) { a *= b; return a; }
  friend Jet operator*(cplx b, Jet a) { a *= b; return a; }
  friend Jet operator/(Jet a, cplx b) { a *= cplx(1.0) / b; return a; }
  friend Jet operator*(const Jet& a, const Jet& b) { return mul(a, b); }
  friend Jet operator/(const Jet& a, const Jet& b) { return mul(a, inverse(b)); }
  friend Jet operator/(cplx a, const Jet& b) { Jet r = inverse(b); r *= a; return r; }

  static Jet mul(const Jet& a, const Jet& b);
  static Jet inverse(const Jet& u);

  /// Composition with a scalar function given its derivatives at u.value().
  /// der[k] = g^(k)(u0), k = 0..order.
  static Jet compose(const Jet& u, std::span<const cplx> der);

 private:
  const JetSpace* sp_;
  std::vector<cplx> c_;
  static void align(const Jet& a, const Jet& b, Jet& ta, Jet& tb);
};

Jet exp(const Jet& u);
Jet log(const Jet& u);
Jet sqrt(const Jet& u);
Jet sin(const Jet& u);
Jet cos(const Jet& u);
Jet sinh(const Jet& u);
Jet cosh(const Jet& u);
Jet pow(const Jet& u, int k);
Jet pow(const Jet& u, const Jet& w);
Jet re(const Jet& u);
Jet im(const Jet& u);
Jet conj(const Jet& u);

/// sin(sqrt(u))/sqrt(u) continued through u = 0, as a jet in u.
Jet sinc_sqrt(const Jet& u);
/// (1 - cos(sqrt(u)))/u continued through u = 0.
Jet versinc_sqrt(const Jet& u);

}  // namespace cshyp
