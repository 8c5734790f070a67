#include "springer/series.hpp"

#include <stdexcept>

#include <json.hpp>

#include "springer/paths.hpp"
#include "springer/triangles.hpp"

namespace springer {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RationalPoly RationalPoly::constant(const Rational& c) {
    if (c == 0) return {};
    return RationalPoly(std::vector<Rational>{c});
}

void RationalPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RationalPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(k)];
}

Rational RationalPoly::eval(const Rational& y) const {
    Rational r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * y + c_[i];
    return r;
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator-() const {
    std::vector<Rational> r = c_;
    for (Rational& v : r) v = -v;
    return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const { return *this + (-o); }

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return RationalPoly(std::move(r));
}

EgfSeries::EgfSeries(int order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    a_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

EgfSeries EgfSeries::constant(const Rational& c, int order) {
    EgfSeries s(order);
    s.a_[0] = c;
    return s;
}

const Rational& EgfSeries::coeff(int n) const {
    if (n < 0 || n > order()) throw std::out_of_range("series coefficient index out of range");
    return a_[static_cast<std::size_t>(n)];
}

Rational& EgfSeries::coeff_mut(int n) {
    if (n < 0 || n > order()) throw std::out_of_range("series coefficient index out of range");
    return a_[static_cast<std::size_t>(n)];
}

BigInt EgfSeries::egf_coeff(int n) const {
    const Rational v = coeff(n) * Rational(factorial(n));
    if (denominator(v) != 1)
        throw std::logic_error("EGF coefficient at order " + std::to_string(n) + " is not an integer");
    return numerator(v);
}

EgfSeries EgfSeries::operator+(const EgfSeries& o) const {
    if (order() != o.order()) throw std::invalid_argument("series order mismatch");
    EgfSeries r(order());
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

EgfSeries EgfSeries::operator-(const EgfSeries& o) const {
    if (order() != o.order()) throw std::invalid_argument("series order mismatch");
    EgfSeries r(order());
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

EgfSeries EgfSeries::operator*(const EgfSeries& o) const {
    if (order() != o.order()) throw std::invalid_argument("series order mismatch");
    EgfSeries r(order());
    for (int n = 0; n <= order(); ++n) {
        Rational acc = 0;
        for (int i = 0; i <= n; ++i) {
            const Rational& ai = a_[static_cast<std::size_t>(i)];
            if (ai == 0) continue;
            acc += ai * o.a_[static_cast<std::size_t>(n - i)];
        }
        r.a_[static_cast<std::size_t>(n)] = acc;
    }
    return r;
}

EgfSeries EgfSeries::scaled(const Rational& c) const {
    EgfSeries r(order());
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

EgfSeries EgfSeries::pow(int k) const {
    if (k < 0) throw std::invalid_argument("series pow: exponent must be nonnegative");
    EgfSeries r = constant(1, order());
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

EgfSeries EgfSeries::reciprocal() const {
    if (a_[0] == 0)
        throw std::invalid_argument("series reciprocal requires an invertible constant term");
    EgfSeries r(order());
    const Rational inv0 = Rational(1) / a_[0];
    r.a_[0] = inv0;
    for (int n = 1; n <= order(); ++n) {
        Rational acc = 0;
        for (int k = 1; k <= n; ++k)
            acc += a_[static_cast<std::size_t>(k)] * r.a_[static_cast<std::size_t>(n - k)];
        r.a_[static_cast<std::size_t>(n)] = -inv0 * acc;
    }
    return r;
}

EgfSeries EgfSeries::with_argument_scaled(const Rational& c) const {
    EgfSeries r(order());
    Rational cp = 1;
    for (int n = 0; n <= order(); ++n) {
        r.a_[static_cast<std::size_t>(n)] = a_[static_cast<std::size_t>(n)] * cp;
        cp *= c;
    }
    return r;
}

EgfSeries sin_series(int order) {
    EgfSeries s(order);
    int sign = 1;
    for (int n = 1; n <= order; n += 2) {
        s.coeff_mut(n) = Rational(sign) / Rational(factorial(n));
        sign = -sign;
    }
    return s;
}

EgfSeries cos_series(int order) {
    EgfSeries s(order);
    int sign = 1;
    for (int n = 0; n <= order; n += 2) {
        s.coeff_mut(n) = Rational(sign) / Rational(factorial(n));
        sign = -sign;
    }
    return s;
}

EgfSeries sec_series(int order) { return cos_series(order).reciprocal(); }

EgfSeries tan_series(int order) { return sin_series(order) * sec_series(order); }

EgfSeries sec2x_cosx_series(int order) {
    const EgfSeries sec_2x = cos_series(order).with_argument_scaled(2).reciprocal();
    return sec_2x * cos_series(order);
}

EgfSeries sec2x_sinx_series(int order) {
    const EgfSeries sec_2x = cos_series(order).with_argument_scaled(2).reciprocal();
    return sec_2x * sin_series(order);
}

EgfSeries springer_egf_series(int order) {
    return (cos_series(order) - sin_series(order)).reciprocal();
}

EgfSeries named_series(std::string_view name, int order) {
    if (name == "sin") return sin_series(order);
    if (name == "cos") return cos_series(order);
    if (name == "sec") return sec_series(order);
    if (name == "tan") return tan_series(order);
    if (name == "sec2x_cosx") return sec2x_cosx_series(order);
    if (name == "sec2x_sinx") return sec2x_sinx_series(order);
    if (name == "springer_egf") return springer_egf_series(order);
    throw std::invalid_argument("unknown series name '" + std::string(name) + "'");
}

BivariateEgf::BivariateEgf(int order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    a_.assign(static_cast<std::size_t>(order) + 1, RationalPoly{});
}

const RationalPoly& BivariateEgf::coeff(int n) const {
    if (n < 0 || n > order()) throw std::out_of_range("series coefficient index out of range");
    return a_[static_cast<std::size_t>(n)];
}

RationalPoly& BivariateEgf::coeff_mut(int n) {
    if (n < 0 || n > order()) throw std::out_of_range("series coefficient index out of range");
    return a_[static_cast<std::size_t>(n)];
}

Rational BivariateEgf::coeff(int n, int k) const { return coeff(n).coeff(k); }

BigInt BivariateEgf::egf_coeff(int n, int k) const {
    const Rational v = coeff(n, k) * Rational(factorial(n));
    if (denominator(v) != 1) throw std::logic_error("EGF coefficient is not an integer");
    return numerator(v);
}

EgfSeries BivariateEgf::at_y(const Rational& y) const {
    EgfSeries s(order());
    for (int n = 0; n <= order(); ++n) s.coeff_mut(n) = coeff(n).eval(y);
    return s;
}

BivariateEgf BivariateEgf::reciprocal() const {
    const RationalPoly& a0 = a_[0];
    if (a0.degree() != 0)
        throw std::invalid_argument("bivariate reciprocal requires an invertible rational constant term");
    const RationalPoly inv0 = RationalPoly::constant(Rational(1) / a0.coeff(0));
    BivariateEgf r(order());
    r.a_[0] = inv0;
    for (int n = 1; n <= order(); ++n) {
        RationalPoly acc;
        for (int k = 1; k <= n; ++k)
            acc = acc + a_[static_cast<std::size_t>(k)] * r.a_[static_cast<std::size_t>(n - k)];
        r.a_[static_cast<std::size_t>(n)] = -(inv0 * acc);
    }
    return r;
}

BivariateEgf b_bivariate(int order) {
    const EgfSeries c = cos_series(order);
    const EgfSeries s = sin_series(order);
    BivariateEgf denom(order);
    for (int n = 0; n <= order; ++n)
        denom.coeff_mut(n) = RationalPoly({c.coeff(n), -s.coeff(n)});  // cos_n - y sin_n
    return denom.reciprocal();
}

EgfSeries column_egf(ColumnKind kind, int k, int order) {
    if (k < 0) throw std::invalid_argument("column index must be nonnegative");
    switch (kind) {
        case ColumnKind::B:
            return tan_series(order).pow(k) * sec_series(order);
        case ColumnKind::T:
            if (k == 0) throw std::invalid_argument("T column requires k >= 1");
            return tan_series(order).pow(k).scaled(Rational(1) / k);
    }
    throw std::invalid_argument("unknown column kind");
}

std::vector<BigInt> c2_sequence(int m_max) {
    if (m_max < 0) throw std::invalid_argument("c2_sequence: m_max must be nonnegative");
    const EgfSeries s = sec2x_cosx_series(2 * m_max);
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(m_max) + 1);
    for (int m = 0; m <= m_max; ++m) out.push_back(s.egf_coeff(2 * m));
    return out;
}

std::vector<BigInt> d2_sequence(int m_max) {
    if (m_max < 0) throw std::invalid_argument("d2_sequence: m_max must be nonnegative");
    std::vector<BigInt> out(static_cast<std::size_t>(m_max) + 1, BigInt(0));
    if (m_max >= 1) {
        const EgfSeries s = sec2x_sinx_series(2 * m_max - 1);
        for (int m = 1; m <= m_max; ++m) out[static_cast<std::size_t>(m)] = s.egf_coeff(2 * m - 1);
    }
    return out;
}

bool shanks_c_recurrence_holds(int n_max) {
    const std::vector<BigInt> c = c2_sequence(n_max);
    for (int n = 0; n <= n_max; ++n) {
        BigInt sum = 0;
        BigInt pow4 = 1;  // (-4)^i
        for (int i = 0; i <= n; ++i) {
            sum += pow4 * binomial(2 * n, 2 * i) * c[static_cast<std::size_t>(n - i)];
            pow4 *= -4;
        }
        if (sum != (n % 2 == 0 ? 1 : -1)) return false;
    }
    return true;
}

bool shanks_d_recurrence_holds(int n_max) {
    const std::vector<BigInt> d = d2_sequence(n_max);
    for (int n = 1; n <= n_max; ++n) {
        BigInt sum = 0;
        BigInt pow4 = 1;
        for (int i = 0; i <= n - 1; ++i) {
            sum += pow4 * binomial(2 * n - 1, 2 * i) * d[static_cast<std::size_t>(n - i)];
            pow4 *= -4;
        }
        if (sum != (n % 2 == 1 ? 1 : -1)) return false;
    }
    return true;
}

std::vector<BigInt> s2_sequence(int n_max) {
    if (n_max < 0) throw std::invalid_argument("s2_sequence: n_max must be nonnegative");
    const std::vector<BigInt> c = c2_sequence(n_max / 2);
    const std::vector<BigInt> d = d2_sequence((n_max + 1) / 2);
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        out.push_back(n % 2 == 0 ? c[static_cast<std::size_t>(n / 2)]
                                 : d[static_cast<std::size_t>((n + 1) / 2)]);
    return out;
}

bool RosenStrehlReport::all_ok() const {
    for (const RosenStrehlRow& r : rows)
        if (!r.ok()) return false;
    return true;
}

RosenStrehlReport rosen_strehl_check(int n_max) {
    if (n_max < 0) throw std::invalid_argument("rosen_strehl_check: n_max must be nonnegative");
    const EgfSeries tan = tan_series(2 * n_max + 1);
    const EgfSeries sec = sec_series(2 * n_max);
    const Triangle b = Triangle::build(TriangleKind::B, 2 * n_max);
    RosenStrehlReport report;
    for (int n = 0; n <= n_max; ++n) {
        RosenStrehlRow row;
        row.n = n;
        row.tan_sum = 0;
        row.sec_sum = 0;
        for_each_level_code(
            n,
            [&](const LevelCode& code) {
                BigInt p1 = 1, p2 = 1;
                for (int v : code.values()) {
                    p1 *= BigInt(v) * (v + 1);
                    p2 *= BigInt(v) * v;
                }
                row.tan_sum += p1;
                row.sec_sum += p2;
            },
            n);
        row.tangent_coeff = tan.egf_coeff(2 * n + 1);
        row.secant_coeff = sec.egf_coeff(2 * n);
        row.b_2n_0 = b.at(2 * n, 0);
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string series_to_json(const EgfSeries& s, bool egf_normalized) {
    nlohmann::json arr = nlohmann::json::array();
    for (int n = 0; n <= s.order(); ++n) {
        const Rational v = egf_normalized ? s.coeff(n) * Rational(factorial(n)) : s.coeff(n);
        arr.push_back({{"num", numerator(v).str()}, {"den", denominator(v).str()}});
    }
    return arr.dump();
}

}  // namespace springer
