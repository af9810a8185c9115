#pragma once

// Floating-point shadow of the exact exterior calculus. Used where exact
// arithmetic cannot go: fractional powers of general h, the dual 4-form of a
// perturbed (non-pullback) 3-form, and the slope tests of the linearization.
// Coefficients are indexed directly by blade bitmask.

#include <Eigen/Core>
#include <unsupported/Eigen/AutoDiff>

#include <array>
#include <cmath>
#include <vector>

#include "holocalc/form.hpp"

namespace holocalc::shadow {

/// First-order jet in up to 8 chart coordinates.
using Jet = Eigen::AutoDiffScalar<Eigen::Matrix<double, kMaxDim, 1>>;

inline double value_of(double x) { return x; }
inline double value_of(const Jet& x) { return x.value(); }

template <class T>
T make_const(double v) {
  if constexpr (std::is_same_v<T, Jet>) {
    return Jet(v, Eigen::Matrix<double, kMaxDim, 1>::Zero());
  } else {
    return T(v);
  }
}

template <class T>
struct DenseForm {
  int n = 0;
  int k = 0;
  std::array<T, 256> c;

  DenseForm() { c.fill(make_const<T>(0.0)); }
  DenseForm(int dim, int degree) : n(dim), k(degree) { c.fill(make_const<T>(0.0)); }

  DenseForm& operator+=(const DenseForm& o) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = T(c[i] + o.c[i]);
    return *this;
  }
  DenseForm& operator-=(const DenseForm& o) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = T(c[i] - o.c[i]);
    return *this;
  }
  DenseForm& operator*=(const T& s) {
    for (auto& x : c) x = T(x * s);
    return *this;
  }
  friend DenseForm operator+(DenseForm a, const DenseForm& b) { return a += b; }
  friend DenseForm operator-(DenseForm a, const DenseForm& b) { return a -= b; }
  friend DenseForm operator*(DenseForm a, const T& s) { return a *= s; }
};

using Dense = DenseForm<double>;

/// Evaluates the polynomial coefficients of an exact form at a point.
template <class T>
DenseForm<T> evaluate(const Form& f, std::span<const T> point) {
  DenseForm<T> out(f.dim(), f.degree());
  for (const auto& [b, p] : f.terms()) out.c[b] = p.template evaluate_as<T>(point);
  return out;
}

inline Dense evaluate(const Form& f, std::span<const double> point) { return evaluate<double>(f, point); }

/// Point with derivative seeds: x_i carries ∂/∂x_i.
inline std::vector<Jet> seeded(std::span<const double> point) {
  std::vector<Jet> out;
  for (std::size_t i = 0; i < point.size(); ++i) {
    Eigen::Matrix<double, kMaxDim, 1> der = Eigen::Matrix<double, kMaxDim, 1>::Zero();
    der(static_cast<Eigen::Index>(i)) = 1.0;
    out.emplace_back(point[i], der);
  }
  return out;
}

template <class T>
DenseForm<T> wedge(const DenseForm<T>& a, const DenseForm<T>& b) {
  DenseForm<T> out(a.n, a.k + b.k);
  for (Blade x : blades(a.n, a.k)) {
    if (value_of(a.c[x]) == 0.0 && std::is_same_v<T, double>) continue;
    for (Blade y : blades(b.n, b.k)) {
      const int s = wedge_sign(x, y);
      if (s == 0) continue;
      out.c[x | y] = T(out.c[x | y] + a.c[x] * b.c[y] * double(s));
    }
  }
  return out;
}

template <class T>
DenseForm<T> contract_basis(int index, const DenseForm<T>& a) {
  DenseForm<T> out(a.n, a.k - 1);
  const Blade bit = Blade{1} << (index - 1);
  for (Blade b : blades(a.n, a.k)) {
    if (!(b & bit)) continue;
    // Position of the index within the blade decides the sign.
    const int before = blade_degree(b & (bit - 1));
    out.c[b & ~bit] = T(out.c[b & ~bit] + (before % 2 ? -1.0 : 1.0) * a.c[b]);
  }
  return out;
}

/// Dense square matrix helpers (partial pivoting on the value part).
template <class T>
using Square = std::vector<std::vector<T>>;

/// Division-free cofactor expansion. Unlike elimination it keeps the
/// derivative part of a jet whose value matrix is singular.
template <class T>
T cofactor_determinant(const Square<T>& m) {
  const std::size_t n = m.size();
  if (n == 0) return make_const<T>(1.0);
  if (n == 1) return m[0][0];
  T det = make_const<T>(0.0);
  for (std::size_t j = 0; j < n; ++j) {
    Square<T> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    const T term = T(m[0][j] * cofactor_determinant(minor));
    det = j % 2 ? T(det - term) : T(det + term);
  }
  return det;
}

template <class T>
T determinant(Square<T> m) {
  const std::size_t n = m.size();
  if (n <= 4) return cofactor_determinant(m);
  const Square<T> original = m;
  T det = make_const<T>(1.0);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(value_of(m[r][col])) > std::abs(value_of(m[pivot][col]))) pivot = r;
    if (value_of(m[pivot][col]) == 0.0) return cofactor_determinant(original);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = T(-det);
    }
    det = T(det * m[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const T factor = T(m[r][col] / m[col][col]);
      for (std::size_t c = col; c < n; ++c) m[r][c] = T(m[r][c] - factor * m[col][c]);
    }
  }
  return det;
}

template <class T>
Square<T> inverse(Square<T> m) {
  const std::size_t n = m.size();
  Square<T> inv(n, std::vector<T>(n, make_const<T>(0.0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = make_const<T>(1.0);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(value_of(m[r][col])) > std::abs(value_of(m[pivot][col]))) pivot = r;
    if (value_of(m[pivot][col]) == 0.0) throw DomainError("spin7", "singular matrix in shadow evaluation");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const T p = m[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      m[col][c] = T(m[col][c] / p);
      inv[col][c] = T(inv[col][c] / p);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const T factor = m[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        m[r][c] = T(m[r][c] - factor * m[col][c]);
        inv[r][c] = T(inv[r][c] - factor * inv[col][c]);
      }
    }
  }
  return inv;
}

/// Hodge star for an inverse metric ginv and signed volume factor
/// (orientation · √det g).
template <class T>
DenseForm<T> hodge_star(const DenseForm<T>& a, const Square<T>& ginv, const T& vol) {
  const int n = a.n;
  const Blade full = (Blade{1} << n) - 1;
  DenseForm<T> out(n, n - a.k);
  for (Blade kb : blades(n, a.k)) {
    if constexpr (std::is_same_v<T, double>)
      if (a.c[kb] == 0.0) continue;
    const auto ki = blade_indices(kb);
    for (Blade ib : blades(n, a.k)) {
      const auto ii = blade_indices(ib);
      Square<T> minor(ii.size(), std::vector<T>(ii.size()));
      for (std::size_t r = 0; r < ii.size(); ++r)
        for (std::size_t s = 0; s < ki.size(); ++s)
          minor[r][s] = ginv[static_cast<std::size_t>(ii[r] - 1)][static_cast<std::size_t>(ki[s] - 1)];
      const T gik = ii.empty() ? make_const<T>(1.0) : determinant(minor);
      const Blade comp = full & ~ib;
      out.c[comp] = T(out.c[comp] + vol * gik * a.c[kb] * double(wedge_sign(ib, comp)));
    }
  }
  return out;
}

/// Metric data recovered from a 3-form on R^7.
template <class T>
struct Recovered {
  Square<T> g;
  Square<T> ginv;
  T vol;  // signed volume factor det(b)^{1/9}
};

/// B(u,v) vol = (u⌟φ)∧(v⌟φ)∧φ / calibration, g = b / det(b)^{1/9}.
/// `calibration` is B_11 of the model form (6 for the standard one).
template <class T>
Recovered<T> recover(const DenseForm<T>& phi, double calibration) {
  const Blade full = (Blade{1} << 7) - 1;
  std::vector<DenseForm<T>> cs;
  for (int i = 1; i <= 7; ++i) cs.push_back(contract_basis(i, phi));
  Square<T> b(7, std::vector<T>(7));
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i; j < 7; ++j) {
      const T v = T(wedge(wedge(cs[i], cs[j]), phi).c[full] / calibration);
      b[i][j] = v;
      b[j][i] = v;
    }
  const T det_b = determinant(b);
  const double dv = value_of(det_b);
  if (!(std::abs(dv) > 1e-300)) throw DomainError("g2", "not a G2-structure at this point (degenerate 3-form)");
  using std::pow;
  const T root = dv > 0 ? T(pow(det_b, 1.0 / 9.0)) : T(-pow(T(-det_b), 1.0 / 9.0));
  Recovered<T> out;
  out.g = b;
  for (auto& row : out.g)
    for (auto& x : row) x = T(x / root);
  // Positive definiteness: leading minors of g.
  for (std::size_t k = 1; k <= 7; ++k) {
    Square<T> lead(k, std::vector<T>(k));
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t s = 0; s < k; ++s) lead[r][s] = out.g[r][s];
    if (!(value_of(determinant(lead)) > 0)) throw DomainError("g2", "not a G2-structure at this point (indefinite bilinear form)");
  }
  out.ginv = inverse(out.g);
  out.vol = root;
  return out;
}

/// ψ = ∗_φ φ.
template <class T>
DenseForm<T> dual_form(const DenseForm<T>& phi, double calibration) {
  const Recovered<T> r = recover(phi, calibration);
  return hodge_star(phi, r.ginv, r.vol);
}

/// d of a form whose coefficients are jets at a point: Σ e^i ∧ ∂_i F.
inline Dense exterior_d(const DenseForm<Jet>& f) {
  Dense out(f.n, f.k + 1);
  for (Blade b : blades(f.n, f.k))
    for (int i = 0; i < f.n; ++i) {
      const Blade bit = Blade{1} << i;
      if (b & bit) continue;
      const double der = f.c[b].derivatives()(i);
      if (der == 0.0) continue;
      out.c[b | bit] += wedge_sign(bit, b) * der;
    }
  return out;
}

inline Dense values(const DenseForm<Jet>& f) {
  Dense out(f.n, f.k);
  for (std::size_t i = 0; i < f.c.size(); ++i) out.c[i] = f.c[i].value();
  return out;
}

/// Coefficient (Euclidean) norm; equals the flat φ₀-metric norm.
inline double norm(const Dense& f) {
  double s = 0;
  for (double x : f.c) s += x * x;
  return std::sqrt(s);
}

inline Dense from_exact(const Form& f) {
  Dense out(f.dim(), f.degree());
  for (const auto& [b, p] : f.terms()) out.c[b] = p.constant_term().get_d();
  return out;
}

}  // namespace holocalc::shadow
