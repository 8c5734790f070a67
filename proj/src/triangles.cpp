#include "springer/triangles.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace springer {

TriangleKind parse_triangle_kind(std::string_view text) {
    if (text == "B") return TriangleKind::B;
    if (text == "E") return TriangleKind::E;
    if (text == "T") return TriangleKind::T;
    throw std::invalid_argument("unknown triangle kind '" + std::string(text) + "' (expected B, E or T)");
}

std::string to_string(TriangleKind kind) {
    switch (kind) {
        case TriangleKind::B: return "B";
        case TriangleKind::E: return "E";
        case TriangleKind::T: return "T";
    }
    return "?";
}

namespace {

// Row value with out-of-band indices reading as zero.
BigInt get(const std::vector<BigInt>& row, int k) {
    if (k < 0 || k >= static_cast<int>(row.size())) return 0;
    return row[static_cast<std::size_t>(k)];
}

}  // namespace

Triangle Triangle::build(TriangleKind kind, int max_n, int cap) {
    if (max_n < 0) throw std::invalid_argument("triangle: max_n must be nonnegative");
    if (max_n > cap)
        throw std::length_error("triangle cap exceeded: max_n=" + std::to_string(max_n) +
                                ", cap=" + std::to_string(cap));
    Triangle t(kind, max_n);
    t.rows_.resize(static_cast<std::size_t>(max_n) + 1);
    switch (kind) {
        case TriangleKind::B:
            t.rows_[0] = {BigInt(1)};
            for (int n = 1; n <= max_n; ++n) {
                const auto& prev = t.rows_[static_cast<std::size_t>(n - 1)];
                auto& row = t.rows_[static_cast<std::size_t>(n)];
                row.resize(static_cast<std::size_t>(n) + 1);
                for (int k = 0; k <= n; ++k)
                    row[static_cast<std::size_t>(k)] = (k + 1) * get(prev, k + 1) + k * get(prev, k - 1);
            }
            break;
        case TriangleKind::E:
            t.rows_[0] = {BigInt(0), BigInt(1)};  // E(0,1) = 1
            for (int n = 1; n <= max_n; ++n) {
                const auto& prev = t.rows_[static_cast<std::size_t>(n - 1)];
                auto& row = t.rows_[static_cast<std::size_t>(n)];
                row.resize(static_cast<std::size_t>(n) + 2);
                for (int k = 1; k <= n + 1; ++k)
                    row[static_cast<std::size_t>(k)] = (k - 1) * get(prev, k - 1) + k * get(prev, k + 1);
            }
            break;
        case TriangleKind::T:
            t.rows_[0] = {BigInt(0)};
            if (max_n >= 1) t.rows_[1] = {BigInt(0), BigInt(1)};  // T(1,1) = 1
            for (int n = 2; n <= max_n; ++n) {
                const auto& prev = t.rows_[static_cast<std::size_t>(n - 1)];
                auto& row = t.rows_[static_cast<std::size_t>(n)];
                row.resize(static_cast<std::size_t>(n) + 1);
                for (int k = 1; k <= n; ++k)
                    row[static_cast<std::size_t>(k)] = (k - 1) * get(prev, k - 1) + (k + 1) * get(prev, k + 1);
            }
            break;
    }
    return t;
}

const BigInt& Triangle::at(int n, int k) const {
    if (n < 0 || n > max_n_) throw std::out_of_range("triangle row index out of range");
    const auto& row = rows_[static_cast<std::size_t>(n)];
    if (k < 0 || k >= static_cast<int>(row.size())) return zero_;
    return row[static_cast<std::size_t>(k)];
}

bool Triangle::structural_zero(int n, int k) const {
    switch (kind_) {
        case TriangleKind::B: return k < 0 || k > n || (n + k) % 2 != 0;
        case TriangleKind::E: return k < 1 || k > n + 1 || (n + k) % 2 == 0;
        case TriangleKind::T: return n < 1 || k < 1 || k > n || (n + k) % 2 != 0;
    }
    return true;
}

BigInt Triangle::row_sum(int n) const {
    if (n < 0 || n > max_n_) throw std::out_of_range("triangle row index out of range");
    BigInt s = 0;
    for (const BigInt& v : rows_[static_cast<std::size_t>(n)]) s += v;
    return s;
}

std::string Triangle::to_csv() const {
    std::ostringstream os;
    os << "n,k,value\n";
    for (int n = 0; n <= max_n_; ++n) {
        const auto& row = rows_[static_cast<std::size_t>(n)];
        for (int k = 0; k < static_cast<int>(row.size()); ++k) {
            if (structural_zero(n, k)) continue;
            os << n << ',' << k << ',' << row[static_cast<std::size_t>(k)].str() << '\n';
        }
    }
    return os.str();
}

std::string Triangle::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 0; n <= max_n_; ++n) {
        nlohmann::json entries = nlohmann::json::array();
        const auto& row = rows_[static_cast<std::size_t>(n)];
        for (int k = 0; k < static_cast<int>(row.size()); ++k) {
            if (structural_zero(n, k)) continue;
            entries.push_back({{"k", k}, {"value", row[static_cast<std::size_t>(k)].str()}});
        }
        rows.push_back({{"n", n}, {"entries", entries}});
    }
    return rows.dump();
}

BigInt springer_number(int n) {
    if (n < 0) throw std::invalid_argument("springer_number: n must be nonnegative");
    return Triangle::build(TriangleKind::B, n).row_sum(n);
}

std::vector<BigInt> springer_numbers(int max_n) {
    const Triangle b = Triangle::build(TriangleKind::B, max_n);
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) out.push_back(b.row_sum(n));
    return out;
}

BigInt RowPolynomial::eval_one() const {
    BigInt s = 0;
    for (const BigInt& c : coefficients) s += c;
    return s;
}

RowPolynomial row_polynomial(int n) {
    const Triangle b = Triangle::build(TriangleKind::B, n);
    RowPolynomial p;
    p.coefficients.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) p.coefficients.push_back(b.at(n, k));
    return p;
}

std::optional<ShiftMismatch> b_equals_e_shift(int max_n) {
    const Triangle b = Triangle::build(TriangleKind::B, max_n);
    const Triangle e = Triangle::build(TriangleKind::E, max_n);
    for (int n = 0; n <= max_n; ++n)
        for (int k = 0; k <= n; ++k)
            if (b.at(n, k) != e.at(n, k + 1)) return ShiftMismatch{n, k, b.at(n, k), e.at(n, k + 1)};
    return std::nullopt;
}

}  // namespace springer
