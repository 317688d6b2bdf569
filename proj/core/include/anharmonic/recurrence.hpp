#pragma once

#include <vector>

#include "anharmonic/errors.hpp"
#include "anharmonic/model.hpp"

namespace anharmonic::recurrence {

// ---------------------------------------------------------------------------
// a-coefficients: (k+1/2)_{2j} = sum_i a_i^{2j} k!/(k-i)!
// ---------------------------------------------------------------------------

/// Closed form a_i^j = C(j,i) (1/2)_j / (1/2)_i; zero outside 0 <= i <= j.
double a_coeff(int j, int i);

/// Recurrence-built table a^k_i = (k-1/2+i) a^{k-1}_i + a^{k-1}_{i-1},
/// templated so the exact-rational mode can reuse it.
template <class T>
class ACoeffTable {
 public:
  explicit ACoeffTable(int jmax) : jmax_(jmax), rows_(jmax + 1) {
    rows_[0] = {T(1)};
    for (int k = 1; k <= jmax; ++k) {
      rows_[k].assign(k + 1, T(0));
      for (int i = 0; i <= k; ++i) {
        T v = (T(2 * (k - 1) + 1) / T(2) + T(i)) * get(k - 1, i);
        if (i >= 1) v += get(k - 1, i - 1);
        rows_[k][i] = v;
      }
    }
  }
  T get(int j, int i) const {
    if (j < 0 || i < 0 || i > j || j > jmax_) return T(0);
    return rows_[j][i];
  }

 private:
  int jmax_;
  std::vector<std::vector<T>> rows_;
};

// ---------------------------------------------------------------------------
// (Lambda)_p^{2mu} recurrence table
// ---------------------------------------------------------------------------

/**
 * Values (L)_p^{2mu} for 1 <= L <= Lmax, 0 <= mu <= mumax, 0 <= p <= 2mu,
 * built from the omega-form recurrence
 *   (L)_p^{2mu} = sum_j C(mu,j) omega_{L-1}^{-(2mu-2j)}
 *                 sum_{i >= max(0, p-2mu+2j)}^{2j}
 *                 (A^2/(omega_{L-2} omega_{L-1}))^i (L-1)_i^{2j} a_p^{2mu-2j+i}
 * seeded by (1)_i^{2j} = a_i^{2j} / omega_0^{2j}.
 */
template <class T>
class LambdaTableT {
 public:
  /// omega must hold omega_0 .. omega_{Lmax-1}.
  LambdaTableT(const std::vector<T>& omega, const T& A2, int Lmax, int mumax)
      : Lmax_(Lmax), mumax_(mumax), acoeff_(2 * mumax + 2 * mumax + 2) {
    if (Lmax < 1 || mumax < 0) throw DomainError("lambda table: bad extents");
    if (static_cast<int>(omega.size()) < Lmax)
      throw DomainError("lambda table: omega sequence too short");
    data_.resize(Lmax);
    // binomials C(mu, j)
    std::vector<std::vector<T>> binom(mumax + 1);
    for (int m = 0; m <= mumax; ++m) {
      binom[m].assign(m + 1, T(1));
      for (int j = 1; j < m; ++j) binom[m][j] = binom[m - 1][j - 1] + binom[m - 1][j];
    }
    // L = 1 seed
    data_[0] = make_level();
    {
      T w0 = omega[0];
      for (int mu = 0; mu <= mumax_; ++mu) {
        T w0pow = power(w0, 2 * mu);
        for (int i = 0; i <= 2 * mu; ++i)
          at_ref(1, mu, i) = acoeff_.get(2 * mu, i) / w0pow;
      }
    }
    for (int L = 2; L <= Lmax; ++L) {
      data_[L - 1] = make_level();
      T r = A2 / (omega[L - 2] * omega[L - 1]);
      for (int mu = 0; mu <= mumax_; ++mu) {
        for (int p = 0; p <= 2 * mu; ++p) {
          T acc(0);
          for (int j = 0; j <= mu; ++j) {
            T winv = T(1) / power(omega[L - 1], 2 * mu - 2 * j);
            T inner(0);
            int ilo = p - 2 * mu + 2 * j;
            if (ilo < 0) ilo = 0;
            T rpow = power(r, ilo);
            for (int i = ilo; i <= 2 * j; ++i) {
              T a = acoeff_.get(2 * mu - 2 * j + i, p);
              if (!(a == T(0))) inner += rpow * at(L - 1, j, i) * a;
              rpow = rpow * r;
            }
            acc += binom[mu][j] * winv * inner;
          }
          at_ref(L, mu, p) = acc;
        }
      }
    }
  }

  const T& at(int L, int mu, int p) const {
    return data_[L - 1][offset(mu) + p];
  }

  int lmax() const { return Lmax_; }
  int mumax() const { return mumax_; }

 private:
  static T power(T base, int e) {
    T r(1);
    for (int k = 0; k < e; ++k) r = r * base;
    return r;
  }
  int offset(int mu) const { return mu * mu; }  // sum of (2k+1), k < mu
  std::vector<T> make_level() const {
    return std::vector<T>((mumax_ + 1) * (mumax_ + 1), T(0));
  }
  T& at_ref(int L, int mu, int p) { return data_[L - 1][offset(mu) + p]; }

  int Lmax_, mumax_;
  ACoeffTable<T> acoeff_;
  std::vector<std::vector<T>> data_;
};

/// Floating-point table driven by a SliceGrid (omegas from the continued
/// fraction).  (N)_0^{2mu} is at(N, mu, 0).
class LambdaTable {
 public:
  LambdaTable(const SliceGrid& grid, int Lmax, int mumax);
  double value(int L, int mu, int p) const { return table_.at(L, mu, p); }
  int lmax() const { return table_.lmax(); }
  int mumax() const { return table_.mumax(); }

 private:
  LambdaTableT<double> table_;
};

// ---------------------------------------------------------------------------
// D_xi operator and triangular matrices
// ---------------------------------------------------------------------------

/// Coefficients by ascending power of xi.
using Polynomial = std::vector<double>;

/// `times` applications of D_xi = 3/4 d^2 + 3 xi d^3 + xi^2 d^4.
Polynomial d_xi_apply(const Polynomial& poly, int times);

/// D_xi factor for a single monomial: D_xi xi^k = g(k) xi^{k-2},
/// g(k) = k(k-1) [3/4 + 3(k-2) + (k-2)(k-3)], valid for any integer k.
template <class T>
T d_xi_monomial_factor(long k) {
  T kk(static_cast<long long>(k));
  T inner = T(3) / T(4) + T(3) * (kk - T(2)) + (kk - T(2)) * (kk - T(3));
  return kk * (kk - T(1)) * inner;
}

enum class MatrixKind { a_lower, c_base, m_upper, projector };

/// Dense storage of one of the Appendix-defined triangular matrices.
struct TriMatrix {
  MatrixKind kind;
  int d;
  int rows, cols;
  std::vector<double> v;
  double& at(int r, int c) { return v[r * cols + c]; }
  double at(int r, int c) const { return v[r * cols + c]; }
};

/**
 * Builds one matrix of the product representation for extent mu:
 *  - a_lower: (2mu+1)^2, minor (2d+1)^2, entry (p,j) = a^{2d-j}_{2d-p} /
 *    (A Q_Lambda Q_{Lambda-1})^{p-j};
 *  - c_base: the Lambda = 1 seed, (2mu+1) x (mu+1), entry (j,l) =
 *    Q_0^{4l} / (A Q_1 Q_0)^j a^{2l}_{2l-j};
 *  - m_upper: (mu+1)^2, minor (d+1)^2, entry (l,k) = C(k,l) Q_{Lambda-1}^{4(k-l)};
 *  - projector: (mu+1)^2 with the single entry (d,d) = 1.
 */
TriMatrix matrix_build(MatrixKind kind, int d, int mu, const std::vector<double>& Q,
                       double A, int Lambda);

// ---------------------------------------------------------------------------
// Corner element {C(Lambda)^{2mu}}_{2mu,2mu} by both closed-form paths
// ---------------------------------------------------------------------------

namespace detail {

template <class T>
T int_power(T base, int e) {
  T r(1);
  bool inv = e < 0;
  for (int k = 0; k < (inv ? -e : e); ++k) r = r * base;
  return inv ? T(1) / r : r;
}

template <class T>
T binom_int(int n, int k) {
  if (k < 0 || k > n) return T(0);
  T r(1);
  for (int t = 0; t < k; ++t) r = r * T(n - t) / T(t + 1);
  return r;
}

}  // namespace detail

/**
 * Matrix-product path: evolve the column matrix C(1) -> C(Lambda) with
 * C(L) column d = d-th column of A^d(L) * C(L-1) * M^d(L-1), then read the
 * (2mu, mu) corner.  Q must hold Q_0..Q_Lambda.
 */
template <class T>
T c_matrix_corner_product(const T& A, const std::vector<T>& Q, int Lambda, int mu) {
  if (Lambda < 1 || mu < 0) throw DomainError("corner product: bad extents");
  ACoeffTable<T> ac(2 * mu);
  // C(1): rows p = 0..2mu, cols lam = 0..mu
  std::vector<std::vector<T>> C(2 * mu + 1, std::vector<T>(mu + 1, T(0)));
  {
    T aq10 = A * Q[1] * Q[0];
    for (int lam = 0; lam <= mu; ++lam) {
      T q0p = detail::int_power(Q[0], 4 * lam);
      for (int j = 0; j <= 2 * lam; ++j)
        C[j][lam] = q0p / detail::int_power(aq10, j) * ac.get(2 * lam, 2 * lam - j);
    }
  }
  for (int L = 2; L <= Lambda; ++L) {
    T aqq = A * Q[L] * Q[L - 1];
    std::vector<std::vector<T>> next(2 * mu + 1, std::vector<T>(mu + 1, T(0)));
    for (int d = 0; d <= mu; ++d) {
      // column d of C * M^d(L-1)
      std::vector<T> cm(2 * d + 1, T(0));
      for (int j = 0; j <= 2 * d; ++j) {
        T acc(0);
        for (int lam = (j + 1) / 2; lam <= d; ++lam)
          acc += C[j][lam] * detail::binom_int<T>(d, lam) *
                 detail::int_power(Q[L - 1], 4 * (d - lam));
        cm[j] = acc;
      }
      for (int p = 0; p <= 2 * d; ++p) {
        T acc(0);
        for (int j = 0; j <= p; ++j) {
          T a = ac.get(2 * d - j, 2 * d - p);
          if (!(a == T(0)))
            acc += a / detail::int_power(aqq, p - j) * cm[j];
        }
        next[p][d] = acc;
      }
    }
    C.swap(next);
  }
  return C[2 * mu][mu];
}

/**
 * Nested-sum closed form for the same corner element: sum over compositions
 * (i_2..i_{Lambda-1}) with the per-variable D_xi operators applied as exact
 * monomial algebra.  i_Lambda contributes only at 0 for the corner (any
 * higher power differentiates a xi_Lambda-free operand to zero).
 * Cost grows combinatorially; mu <= 3 enforced.
 */
template <class T>
T c_matrix_corner_nested(const T& A, const std::vector<T>& Q, int Lambda, int mu) {
  if (mu > 3) throw DomainError("nested closed form limited to mu <= 3");
  if (Lambda < 1) throw DomainError("nested closed form: Lambda >= 1");
  ACoeffTable<T> ac(2 * mu);
  if (Lambda == 1) {
    // seed corner: Q_0^{4mu} / (A Q_1 Q_0)^{2mu} a^{2mu}_0 = (1)_0^{2mu}
    return T(detail::int_power(Q[0], 4 * mu) /
             detail::int_power(T(A * Q[1] * Q[0]), 2 * mu) * ac.get(2 * mu, 0));
  }
  // T_m = 1/(A Q_m Q_{m-1}), m = 2..Lambda
  std::vector<T> Tm(Lambda + 1, T(0));
  for (int m = 2; m <= Lambda; ++m) Tm[m] = T(1) / (A * Q[m] * Q[m - 1]);
  T aq10 = A * Q[1] * Q[0];

  // factorials up to 4mu
  std::vector<T> fact(4 * mu + 1, T(1));
  for (int n = 1; n <= 4 * mu; ++n) fact[n] = fact[n - 1] * T(n);

  T total(0);
  // compositions i_2..i_{Lambda-1}, sum s <= mu (i_Lambda = 0)
  std::vector<int> comp(Lambda, 0);  // comp[m] = i_m for m in [2, Lambda-1]
  std::vector<int> bigI(Lambda + 2, 0);

  auto evaluate = [&](int s) {
    // I_m = mu - sum_{r >= m} i_r (i_Lambda = 0, so I_Lambda = I_{Lambda+1} = mu)
    bigI[Lambda + 1] = mu;
    bigI[Lambda] = mu;
    for (int m = Lambda - 1; m >= 2; --m) bigI[m] = bigI[m + 1] - comp[m];
    int I2 = bigI[2];  // = mu - s
    // outer combinatorial factor
    T outer(1);
    for (int m = 3; m <= Lambda; ++m)
      outer = outer * detail::binom_int<T>(bigI[m], bigI[m - 1]);
    for (int m = 2; m <= Lambda - 1; ++m)
      outer = outer * detail::int_power(Q[m], 4 * (bigI[m + 1] - bigI[m]));
    if (outer == T(0)) return;

    for (int j = 0; j <= 2 * I2; ++j) {
      int n = 2 * mu - j;  // multinomial power
      // opval = prod_m D^{i_m} applied to the expanded multinomial, at xi = 1
      T opval(0);
      std::vector<int> cnt(Lambda + 1, 0);
      // enumerate monomials (c_2..c_Lambda), sum = n
      auto rec = [&](auto&& self, int m, int rem, T factor) -> void {
        if (m == Lambda) {
          cnt[m] = rem;
          factor = factor * detail::int_power(Tm[m], rem) / fact[rem];
          // per-variable D factors
          int suffix = 0;  // sum_{r > current} c_r, built from the right
          T dfac(1);
          for (int r = Lambda - 1; r >= 2; --r) {
            suffix += cnt[r + 1];
            long k = suffix - (2 * mu - 2 * bigI[r + 1]);
            for (int t = 0; t < comp[r]; ++t) {
              dfac = dfac * d_xi_monomial_factor<T>(k - 2 * t);
              if (dfac == T(0)) break;
            }
            if (dfac == T(0)) break;
          }
          if (!(dfac == T(0))) opval += factor * fact[n] * dfac;
          return;
        }
        for (int c = 0; c <= rem; ++c) {
          cnt[m] = c;
          self(self, m + 1, rem - c, factor * detail::int_power(Tm[m], c) / fact[c]);
        }
      };
      rec(rec, 2, n, T(1));

      T lamsum(0);
      for (int lam = (j + 1) / 2; lam <= I2; ++lam) {
        T a = ac.get(2 * lam, 2 * lam - j);
        if (a == T(0)) continue;
        lamsum += detail::binom_int<T>(I2, lam) * a *
                  detail::int_power(Q[0], 4 * lam) *
                  detail::int_power(Q[1], 4 * (I2 - lam));
      }
      if (lamsum == T(0)) continue;

      T term = fact[4 * I2 - 2 * j] / fact[2 * mu - j] *
               detail::int_power(T(2), 4 * s - (4 * mu - 2 * j)) * opval /
               detail::int_power(aq10, j) * lamsum;
      total += outer * term;
    }
  };

  auto sweep = [&](auto&& self, int m, int s) -> void {
    if (m == Lambda) {
      evaluate(s);
      return;
    }
    for (int i = 0; s + i <= mu; ++i) {
      comp[m] = i;
      self(self, m + 1, s + i);
    }
  };
  if (Lambda == 2) {
    evaluate(0);
  } else {
    sweep(sweep, 2, 0);
  }
  return total;
}

/// Floating-point corner element from a SliceGrid (nested-sum path).
double c_matrix_closed_form(const SliceGrid& grid, int Lambda, int mu);

// ---------------------------------------------------------------------------
// S_Lambda assembly, J function, divergent tail
// ---------------------------------------------------------------------------

struct SLambdaResult {
  double value;          // sum_{mu <= J} (-1)^mu/(mu! (2z^2)^mu) (Lambda)_0^{2mu}
  double first_omitted;  // magnitude of the mu = J+1 term (asymptotic proxy)
};

SLambdaResult s_lambda(const SliceGrid& grid, int Lambda, int J);

/**
 * J(l, MIN; n, i_j; r) = sum_{p=l}^{MIN} C(2 i_j - l, p - l)
 * C(2 i_j - 1/2, 2 i_j - p) n! (2 i_j - p)! / (n - 2 i_j - p)! r^p.
 * Terms containing a factorial of a negative integer are zero
 * (reciprocal-gamma convention); l > MIN gives 0.
 */
double j_function(int l, int MIN, int n, int i_j, double ratio);

/// Leading large-mu divergent term of the asymptotic series:
/// (-1)^mu a^mu/(mu! c^{2mu}) delta^mu 2^mu (1/2)_{2mu} (tanh(g tau)/g)^{2mu}.
double divergent_tail_term(const ModelParams& params, double delta, double tau, int mu);

/// Smallest-term truncation rule: argmin over mu <= mu_cap of |term|.
int suggest_truncation_order(const ModelParams& params, double delta, double tau,
                             int mu_cap);

}  // namespace anharmonic::recurrence
