#include "holocalc/form.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

namespace holocalc {

namespace {

constexpr const char* kModule = "exterior";

struct BladeTables {
  std::array<std::array<std::vector<Blade>, kMaxDim + 1>, kMaxDim + 1> lists;
  std::array<std::array<std::size_t, 256>, kMaxDim + 1> positions{};

  BladeTables() {
    for (int n = 1; n <= kMaxDim; ++n) {
      for (int k = 0; k <= n; ++k) {
        // Lexicographic enumeration of k-subsets of {1..n}.
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        auto& out = lists[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
        while (true) {
          Blade b = 0;
          for (int i : idx) b |= Blade{1} << i;
          positions[static_cast<std::size_t>(n)][b] = out.size();
          out.push_back(b);
          int i = k - 1;
          while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
          if (i < 0) break;
          ++idx[static_cast<std::size_t>(i)];
          for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
      }
    }
  }
};

const BladeTables& tables() {
  static const BladeTables t;
  return t;
}

void check_dim(int n) {
  if (n < 1 || n > kMaxDim) throw DomainError(kModule, "dimension " + std::to_string(n) + " outside 1..8");
}

Blade full_blade(int n) { return (Blade{1} << n) - 1; }

}  // namespace

int blade_degree(Blade b) { return std::popcount(b); }

std::vector<int> blade_indices(Blade b) {
  std::vector<int> out;
  for (int i = 0; b != 0; ++i, b >>= 1)
    if (b & 1u) out.push_back(i + 1);
  return out;
}

Blade blade_from_indices(std::span<const int> indices) {
  Blade b = 0;
  for (int i : indices) {
    if (i < 1 || i > kMaxDim) throw DomainError(kModule, "index out of range");
    const Blade bit = Blade{1} << (i - 1);
    if (b & bit) throw DomainError(kModule, "repeated index in blade");
    b |= bit;
  }
  return b;
}

int wedge_sign(Blade a, Blade b) {
  if (a & b) return 0;
  int swaps = 0;
  for (Blade rest = b; rest != 0; rest &= rest - 1) {
    const Blade low = rest & (~rest + 1);  // lowest set bit of b
    swaps += std::popcount(a & ~((low << 1) - 1));
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

const std::vector<Blade>& blades(int n, int k) {
  check_dim(n);
  if (k < 0 || k > n) throw DomainError(kModule, "degree out of range");
  return tables().lists[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::size_t blade_position(int n, Blade b) {
  check_dim(n);
  return tables().positions[static_cast<std::size_t>(n)][b];
}

// ---------------------------------------------------------------- Form

Form::Form(int n, int k) : n_(n), k_(k) {
  if (n < kMinDim - 1 || n > kMaxDim) throw DomainError(kModule, "dimension " + std::to_string(n) + " outside 2..8");
  if (k < 0 || k > n) throw DomainError(kModule, "degree " + std::to_string(k) + " outside 0.." + std::to_string(n));
}

Form Form::function(int n, const Poly& f) {
  Form out(n, 0);
  out.add_term(0, f);
  return out;
}

Form Form::constant(int n, const Scalar& c) { return function(n, Poly(n, c)); }

Form Form::basis(int n, std::initializer_list<int> indices, const Scalar& coeff) {
  std::vector<int> idx(indices);
  const Blade b = blade_from_indices(idx);
  // Sort with a sign: count inversions of the given order.
  int inversions = 0;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (idx[i] > idx[j]) ++inversions;
  for (int i : idx)
    if (i > n) throw DomainError(kModule, "index exceeds dimension");
  return basis(n, b, inversions % 2 == 0 ? coeff : Scalar(-coeff));
}

Form Form::basis(int n, Blade blade, const Scalar& coeff) { return basis(n, blade, Poly(n, coeff)); }

Form Form::basis(int n, Blade blade, const Poly& coeff) {
  if (blade & ~full_blade(n)) throw DomainError(kModule, "blade exceeds dimension");
  Form out(n, blade_degree(blade));
  out.add_term(blade, coeff);
  return out;
}

Form Form::from_vector(int n, int k, std::span<const Scalar> coeffs) {
  const auto& bs = blades(n, k);
  if (coeffs.size() != bs.size()) throw DomainError(kModule, "coefficient vector has wrong length");
  Form out(n, k);
  for (std::size_t i = 0; i < bs.size(); ++i) out.add_term(bs[i], Poly(n, coeffs[i]));
  return out;
}

bool Form::is_constant() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_constant(); });
}

Poly Form::coefficient(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Poly(n_) : it->second;
}

Scalar Form::constant_coefficient(Blade b) const {
  auto it = terms_.find(b);
  if (it == terms_.end()) return 0;
  if (!it->second.is_constant()) throw DomainError(kModule, "coefficient is not constant");
  return it->second.constant_term();
}

void Form::add_term(Blade b, const Poly& p) {
  if (p.is_zero()) return;
  if (blade_degree(b) != k_) throw DomainError(kModule, "blade degree does not match form degree");
  if (b & ~full_blade(n_)) throw DomainError(kModule, "blade exceeds dimension");
  if (p.nvars() > n_) throw DomainError(kModule, "coefficient uses more variables than the chart has");
  auto [it, inserted] = terms_.emplace(b, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form& Form::operator+=(const Form& rhs) {
  if (n_ != rhs.n_ || k_ != rhs.k_) throw DomainError(kModule, "adding forms of different type");
  for (const auto& [b, p] : rhs.terms_) add_term(b, p);
  return *this;
}

Form& Form::operator-=(const Form& rhs) {
  if (n_ != rhs.n_ || k_ != rhs.k_) throw DomainError(kModule, "subtracting forms of different type");
  for (const auto& [b, p] : rhs.terms_) add_term(b, -p);
  return *this;
}

Form& Form::operator*=(const Scalar& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, p] : terms_) p *= s;
  return *this;
}

Form& Form::operator*=(const Poly& p) {
  Terms out;
  for (const auto& [b, q] : terms_) {
    Poly prod = q * p;
    if (!prod.is_zero()) out.emplace(b, std::move(prod));
  }
  terms_ = std::move(out);
  return *this;
}

std::vector<Scalar> Form::to_vector() const {
  const auto& bs = blades(n_, k_);
  std::vector<Scalar> out(bs.size());
  for (const auto& [b, p] : terms_) {
    if (!p.is_constant()) throw DomainError(kModule, "to_vector requires constant coefficients");
    out[blade_position(n_, b)] = p.constant_term();
  }
  return out;
}

Form Form::evaluate(std::span<const Scalar> point) const {
  Form out(n_, k_);
  for (const auto& [b, p] : terms_) out.add_term(b, Poly(n_, p.evaluate(point)));
  return out;
}

Form Form::lifted(int m) const {
  if (m < n_) throw DomainError(kModule, "cannot lift to a smaller dimension");
  Form out(m, k_);
  for (const auto& [b, p] : terms_) out.add_term(b, p);
  return out;
}

std::string Form::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& b : blades(n_, k_)) {
    auto it = terms_.find(b);
    if (it == terms_.end()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.to_string() << ")";
    if (k_ > 0) {
      os << " e";
      for (int i : blade_indices(b)) os << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- Metric

Metric::Metric(Matrix g, int orientation) : g_(std::move(g)), orientation_(orientation >= 0 ? 1 : -1) {
  if (g_.rows() != g_.cols()) throw DomainError(kModule, "metric matrix is not square");
  check_dim(static_cast<int>(g_.rows()));
  if (!g_.is_symmetric()) throw DomainError(kModule, "metric matrix is not symmetric");
  det_ = determinant(g_);
  if (det_ == 0) throw DomainError(kModule, "metric is singular");
  if (!is_positive_definite(g_)) throw DomainError(kModule, "metric is not positive definite");
  inv_ = *holocalc::inverse(g_);
  sqrt_det_ = exact_sqrt(det_);
  for (std::size_t r = 0; r < g_.rows(); ++r)
    for (std::size_t c = 0; c < g_.cols(); ++c)
      if (r != c && g_(r, c) != 0) diagonal_ = false;
}

Metric Metric::euclidean(int n, int orientation) {
  check_dim(n);
  return Metric(Matrix::identity(static_cast<std::size_t>(n)), orientation);
}

Metric Metric::diagonal(std::span<const Scalar> entries, int orientation) {
  Matrix g(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) g(i, i) = entries[i];
  return Metric(std::move(g), orientation);
}

Form Metric::volume_form() const {
  if (!sqrt_det_) throw DomainError(kModule, "volume factor sqrt(det g) is irrational (det = " + det_.get_str() + ")");
  return Form::basis(dim(), full_blade(dim()), Scalar(*sqrt_det_ * orientation_));
}

Scalar Metric::blade_inner(Blade a, Blade b) const {
  if (blade_degree(a) != blade_degree(b)) return 0;
  if (diagonal_) {
    if (a != b) return 0;
    Scalar prod = 1;
    for (int i : blade_indices(a)) prod *= inv_(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1));
    return prod;
  }
  const auto ia = blade_indices(a);
  const auto ib = blade_indices(b);
  Matrix minor(ia.size(), ib.size());
  for (std::size_t r = 0; r < ia.size(); ++r)
    for (std::size_t c = 0; c < ib.size(); ++c)
      minor(r, c) = inv_(static_cast<std::size_t>(ia[r] - 1), static_cast<std::size_t>(ib[c] - 1));
  return determinant(std::move(minor));
}

// ---------------------------------------------------------------- operations

Form wedge(const Form& a, const Form& b) {
  if (a.dim() != b.dim()) throw DomainError(kModule, "wedge of forms on different dimensions");
  const int n = a.dim();
  const int k = a.degree() + b.degree();
  if (k > n) throw DomainError(kModule, "wedge degree " + std::to_string(k) + " exceeds dimension");
  Form out(n, k);
  for (const auto& [ba, pa] : a.terms())
    for (const auto& [bb, pb] : b.terms()) {
      const int s = wedge_sign(ba, bb);
      if (s == 0) continue;
      Poly prod = pa * pb;
      if (s < 0) prod = -prod;
      out.add_term(ba | bb, prod);
    }
  return out;
}

Form contract(std::span<const Poly> v, const Form& a) {
  if (a.degree() == 0) throw DomainError(kModule, "contraction of a 0-form");
  if (static_cast<int>(v.size()) != a.dim()) throw DomainError(kModule, "vector dimension mismatch");
  Form out(a.dim(), a.degree() - 1);
  for (const auto& [b, p] : a.terms()) {
    int position = 0;
    for (int i : blade_indices(b)) {
      const Poly& vi = v[static_cast<std::size_t>(i - 1)];
      if (!vi.is_zero()) {
        Poly term = vi * p;
        if (position % 2 == 1) term = -term;
        out.add_term(b & ~(Blade{1} << (i - 1)), term);
      }
      ++position;
    }
  }
  return out;
}

Form contract_basis(int index, const Form& a) {
  std::vector<Poly> v(static_cast<std::size_t>(a.dim()), Poly(a.dim()));
  if (index < 1 || index > a.dim()) throw DomainError(kModule, "basis vector index out of range");
  v[static_cast<std::size_t>(index - 1)] = Poly(a.dim(), 1);
  return contract(v, a);
}

Form hodge_star(const Form& a, const Metric& g) {
  const int n = a.dim();
  if (g.dim() != n) throw DomainError(kModule, "metric dimension mismatch");
  if (!g.sqrt_det()) throw DomainError(kModule, "volume factor sqrt(det g) is irrational (det = " + g.det().get_str() + ")");
  const Scalar vol = *g.sqrt_det() * g.orientation();
  const Blade full = full_blade(n);
  Form out(n, n - a.degree());
  for (const auto& [bk, p] : a.terms()) {
    if (g.is_diagonal()) {
      const Blade comp = full & ~bk;
      out.add_term(comp, p * (vol * g.blade_inner(bk, bk) * wedge_sign(bk, comp)));
      continue;
    }
    for (Blade bi : blades(n, a.degree())) {
      const Scalar gik = g.blade_inner(bi, bk);
      if (gik == 0) continue;
      const Blade comp = full & ~bi;
      out.add_term(comp, p * (vol * gik * wedge_sign(bi, comp)));
    }
  }
  return out;
}

Form d(const Form& a) {
  const int n = a.dim();
  if (a.degree() == n) throw DomainError(kModule, "exterior derivative of a top-degree form");
  Form out(n, a.degree() + 1);
  for (const auto& [b, p] : a.terms()) {
    for (int i = 0; i < p.nvars(); ++i) {
      const Blade bit = Blade{1} << i;
      if (b & bit) continue;
      Poly dp = p.derivative(i);
      if (dp.is_zero()) continue;
      if (wedge_sign(bit, b) < 0) dp = -dp;
      out.add_term(b | bit, dp);
    }
  }
  return out;
}

Form codifferential(const Form& a, const Metric& g) {
  const int n = a.dim();
  const int k = a.degree();
  if (k == 0) return Form(n, 0);
  Form out = hodge_star(d(hodge_star(a, g)), g);
  const int exponent = n * (k - 1) + 1;
  return exponent % 2 == 0 ? out : -out;
}

Poly inner(const Form& a, const Form& b, const Metric& g) {
  if (a.dim() != b.dim() || a.degree() != b.degree()) throw DomainError(kModule, "inner product of mismatched forms");
  Poly sum(a.dim());
  for (const auto& [ba, pa] : a.terms())
    for (const auto& [bb, pb] : b.terms()) {
      const Scalar gab = g.blade_inner(ba, bb);
      if (gab != 0) sum += (pa * pb) * gab;
    }
  return sum;
}

Form flat(std::span<const Scalar> v, const Metric& g) {
  std::vector<Poly> pv;
  for (const auto& x : v) pv.emplace_back(g.dim(), x);
  return flat(pv, g);
}

Form flat(std::span<const Poly> v, const Metric& g) {
  const int n = g.dim();
  Form out(n, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Scalar& gij = g.matrix()(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (gij != 0) out.add_term(Blade{1} << i, v[static_cast<std::size_t>(j)] * gij);
    }
  return out;
}

std::vector<Poly> sharp(const Form& a, const Metric& g) {
  if (a.degree() != 1) throw DomainError(kModule, "sharp expects a 1-form");
  const int n = g.dim();
  std::vector<Poly> out(static_cast<std::size_t>(n), Poly(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Scalar& gij = g.inverse()(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (gij != 0) out[static_cast<std::size_t>(i)] += a.coefficient(Blade{1} << j) * gij;
    }
  return out;
}

Form pullback(const Form& a, const std::vector<std::vector<Poly>>& frame) {
  const int n = a.dim();
  if (static_cast<int>(frame.size()) != n) throw DomainError(kModule, "frame size mismatch");
  std::vector<Form> images;
  for (int i = 0; i < n; ++i) {
    Form e(n, 1);
    for (int j = 0; j < n; ++j) e.add_term(Blade{1} << j, frame[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    images.push_back(std::move(e));
  }
  Form out(n, a.degree());
  for (const auto& [b, p] : a.terms()) {
    Form term = Form::function(n, p);
    for (int i : blade_indices(b)) term = wedge(term, images[static_cast<std::size_t>(i - 1)]);
    out += term;
  }
  return out;
}

}  // namespace holocalc
