#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "springer/types.hpp"

namespace springer {

// Dense polynomial in y with exact rational coefficients.
class RationalPoly {
  public:
    RationalPoly() = default;  // zero polynomial
    explicit RationalPoly(std::vector<Rational> coeffs);
    static RationalPoly constant(const Rational& c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int k) const;
    Rational eval(const Rational& y) const;
    bool is_zero() const { return c_.empty(); }

    RationalPoly operator+(const RationalPoly& o) const;
    RationalPoly operator-() const;
    RationalPoly operator-(const RationalPoly& o) const;
    RationalPoly operator*(const RationalPoly& o) const;

    friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

  private:
    void trim();
    std::vector<Rational> c_;  // ascending powers, trailing zeros trimmed
};

// Truncated power series sum_{n<=N} a_n x^n with exact rational coefficients.
// Coefficients are stored plain (non-EGF); the EGF view multiplies by n!, so
// Cauchy products stay simple.
class EgfSeries {
  public:
    explicit EgfSeries(int order);
    static EgfSeries constant(const Rational& c, int order);

    int order() const { return static_cast<int>(a_.size()) - 1; }
    const Rational& coeff(int n) const;
    Rational& coeff_mut(int n);
    BigInt egf_coeff(int n) const;  // n! * a_n, which must be an integer

    EgfSeries operator+(const EgfSeries& o) const;
    EgfSeries operator-(const EgfSeries& o) const;
    EgfSeries operator*(const EgfSeries& o) const;
    EgfSeries scaled(const Rational& c) const;
    EgfSeries pow(int k) const;
    // Reciprocal through the truncation order; requires a_0 invertible.
    EgfSeries reciprocal() const;
    // Substitution x -> c x.
    EgfSeries with_argument_scaled(const Rational& c) const;

    friend bool operator==(const EgfSeries&, const EgfSeries&) = default;

  private:
    std::vector<Rational> a_;
};

EgfSeries sin_series(int order);
EgfSeries cos_series(int order);
EgfSeries sec_series(int order);
EgfSeries tan_series(int order);
EgfSeries sec2x_cosx_series(int order);   // EGF of c_{2,n} at even orders
EgfSeries sec2x_sinx_series(int order);   // EGF of d_{2,n} at odd orders
EgfSeries springer_egf_series(int order); // 1/(cos x - sin x)

// Lookup by command-line name: sin, cos, sec, tan, sec2x_cosx, sec2x_sinx,
// springer_egf.
EgfSeries named_series(std::string_view name, int order);

// Truncated series in x whose coefficients are polynomials in y. The y-degree
// of the x^n coefficient never exceeds n.
class BivariateEgf {
  public:
    explicit BivariateEgf(int order);

    int order() const { return static_cast<int>(a_.size()) - 1; }
    const RationalPoly& coeff(int n) const;
    RationalPoly& coeff_mut(int n);
    Rational coeff(int n, int k) const;
    BigInt egf_coeff(int n, int k) const;  // n! * [x^n y^k]
    EgfSeries at_y(const Rational& y) const;

    BivariateEgf reciprocal() const;  // requires an invertible rational constant term

  private:
    std::vector<RationalPoly> a_;
};

// 1/(cos x - y sin x); n! [x^n y^k] equals B(n,k).
BivariateEgf b_bivariate(int order);

enum class ColumnKind { B, T };

// Column generating functions: B column k is tan^k(x) sec(x); T column k
// (k >= 1) is tan^k(x) / k.
EgfSeries column_egf(ColumnKind kind, int k, int order);

// c_{2,m} = (2m)! [x^{2m}] sec(2x)cos(x), m = 0..m_max.
std::vector<BigInt> c2_sequence(int m_max);
// d_{2,m} = (2m-1)! [x^{2m-1}] sec(2x)sin(x), m = 1..m_max; index 0 unused.
std::vector<BigInt> d2_sequence(int m_max);

// sum_{i=0}^{n} (-4)^i C(2n,2i) c_{2,n-i} == (-1)^n for all n <= n_max.
bool shanks_c_recurrence_holds(int n_max);
// sum_{i=0}^{n-1} (-4)^i C(2n-1,2i) d_{2,n-i} == (-1)^{n-1} for all n <= n_max.
bool shanks_d_recurrence_holds(int n_max);

// s_{2,n}: c_{2,n/2} for even n, d_{2,(n+1)/2} for odd n; equals S_n.
std::vector<BigInt> s2_sequence(int n_max);

struct RosenStrehlRow {
    int n = 0;
    BigInt tan_sum;        // sum over Lambda_n of prod lambda_i(lambda_i+1)
    BigInt sec_sum;        // sum over Lambda_n of prod lambda_i^2
    BigInt tangent_coeff;  // (2n+1)! [x^{2n+1}] tan x
    BigInt secant_coeff;   // (2n)! [x^{2n}] sec x
    BigInt b_2n_0;         // B(2n, 0)
    bool ok() const { return tan_sum == tangent_coeff && sec_sum == secant_coeff && sec_sum == b_2n_0; }
};

struct RosenStrehlReport {
    std::vector<RosenStrehlRow> rows;
    bool all_ok() const;
};

// Level-code product sums against the tangent/secant coefficients and B(2n,0),
// for each n <= n_max.
RosenStrehlReport rosen_strehl_check(int n_max);

// JSON array of {"num": ..., "den": ...}; either the EGF-normalized
// coefficients n! a_n or the plain a_n.
std::string series_to_json(const EgfSeries& s, bool egf_normalized);

}  // namespace springer
