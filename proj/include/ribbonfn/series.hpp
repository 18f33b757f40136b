#pragma once

// Truncated Laurent series in the auxiliary variables z (and u) with SymFunc
// coefficients, and the plethystic translation P[X] ↦ P[X + A] for scalar
// alphabets A.

#include "ribbonfn/partition.hpp"
#include "ribbonfn/qpoly.hpp"
#include "ribbonfn/symfunc.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace ribbonfn {

/// Laurent polynomial in z with ℤ[q] coefficients.
using LaurentQ = Poly<QPoly>;

/// Raised when a computation would consult coefficients outside the retained
/// window. The message names the bounds that would have been required.
class WindowError : public std::runtime_error {
 public:
  WindowError(const std::string& what, int required_lo, int required_hi)
      : std::runtime_error(what + " (required window [" + std::to_string(required_lo) + ", " +
                           std::to_string(required_hi) + "])"),
        required_lo_(required_lo),
        required_hi_(required_hi) {}
  int required_lo() const { return required_lo_; }
  int required_hi() const { return required_hi_; }

 private:
  int required_lo_;
  int required_hi_;
};

/// A scalar alphabet A, given by the values p_k[A] ∈ ℤ[q][z, 1/z].
struct Alphabet {
  std::string id;  // cache key; distinct alphabets need distinct ids
  std::function<LaurentQ(int k)> power_sum;

  /// p_k ↦ −z^{−k}: the translation X − 1/z.
  static Alphabet minus_inverse_z();
  /// p_k ↦ +z^{−k}: the translation X + 1/z.
  static Alphabet plus_inverse_z();
  /// p_k ↦ −(1 − q^k) z^{−k}: the translation X − (1 − q)/z.
  static Alphabet hall_littlewood();
  static Alphabet zero();
};

/// s_μ[A], computed through the power-sum expansion of s_μ with an exact
/// integrality check on the result.
const LaurentQ& scalar_schur(const Partition& mu, const Alphabet& a);

/// Retained window for an input of degree n acted on with degree shift m.
struct Window {
  int lo;
  int hi;
  static Window for_degree(int n, int shift) {
    const int r = n + (shift < 0 ? -shift : shift) + 1;
    return {-r, r};
  }
};

class ZSeries {
 public:
  /// Empty series retaining exponents in [w.lo, w.hi]. A polynomial series
  /// is exact everywhere; otherwise coefficients above exact_through() are
  /// unknown.
  explicit ZSeries(Window w, bool polynomial = true);

  Window window() const { return window_; }
  bool polynomial() const { return polynomial_; }
  int exact_through() const { return exact_through_; }
  const std::map<int, SymFunc>& coefficients() const { return coeffs_; }

  /// Adds c·z^e. Exponents below the window are an error; exponents above it
  /// make the series inexact from window.hi on.
  void add(int exponent, const SymFunc& c);

  /// [z^e]; throws WindowError if the coefficient is not known exactly.
  SymFunc coefficient(int exponent) const;

  /// Full product, exact through the combined exact bound.
  friend ZSeries operator*(const ZSeries& a, const ZSeries& b);
  /// [z^e](a·b) without forming the whole product.
  static SymFunc product_coefficient(const ZSeries& a, const ZSeries& b, int exponent);

 private:
  Window window_;
  bool polynomial_;
  int exact_through_;
  std::map<int, SymFunc> coeffs_;
};

/// Ω[±zX] = Σ_n z^n h_n[±X], kept through z^{w.hi}. With sign −1 the
/// coefficients are (−1)^n e_n.
ZSeries omega_series(int sign, Window w);

/// f[X + A], expanded through the coproduct f[X + A] = Σ_μ (s_μ^⊥ f)·s_μ[A]
/// with the scalars s_μ[A] taken from the power-sum basis.
ZSeries plethystic_translate(const SymFunc& f, const Alphabet& a, Window w);

/// f[X + A] computed directly in the power-sum basis: expand f in p, send
/// p_k ↦ p_k + p_k[A], multiply out and return to Schur. Slower; exists as
/// an independent check of plethystic_translate.
ZSeries plethystic_translate_pbasis(const SymFunc& f, const Alphabet& a, Window w);

/// Laurent series in two variables (z, u) with SymFunc coefficients, known
/// exactly on a box of exponents. Used for generating-function identities.
class BiSeries {
 public:
  struct Box {
    int z_lo, z_hi, u_lo, u_hi;
    bool contains(int z, int u) const { return z >= z_lo && z <= z_hi && u >= u_lo && u <= u_hi; }
  };
  /// zero_below_z: every coefficient with z-exponent < box.z_lo is zero.
  BiSeries(Box exact, bool zero_below_z) : box_(exact), zero_below_z_(zero_below_z) {}

  const Box& box() const { return box_; }
  void add(int z, int u, const SymFunc& c);
  /// Throws WindowError outside the exact box (unless known zero).
  SymFunc coefficient(int z, int u) const;

  /// Product with a finite Laurent polynomial Σ c_{dz,du} z^{dz} u^{du}.
  BiSeries times(const std::map<std::pair<int, int>, QPoly>& poly) const;

 private:
  Box box_;
  bool zero_below_z_;
  std::map<std::pair<int, int>, SymFunc> coeffs_;
};

}  // namespace ribbonfn
