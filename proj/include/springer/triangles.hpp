#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "springer/types.hpp"

namespace springer {

// B(n,k): labeled ballot paths of length n ending at height k.
//   B(0,0) = 1, B(n,k) = (k+1)B(n-1,k+1) + kB(n-1,k-1), with B(n,0) = B(n-1,1)
//   (a path ending on the axis ends with a down step from height 1).
// E(n,k): E(0,1) = 1, E(n,k) = (k-1)E(n-1,k-1) + kE(n-1,k+1), support k >= 1.
// T(n,k): T(1,1) = 1, T(n,k) = (k-1)T(n-1,k-1) + (k+1)T(n-1,k+1), support k >= 1;
//   T(n,k) is the weight sum over ballot paths from (1,1) to (n,k).
enum class TriangleKind { B, E, T };

TriangleKind parse_triangle_kind(std::string_view text);
std::string to_string(TriangleKind kind);

class Triangle {
  public:
    static Triangle build(TriangleKind kind, int max_n, int cap = kDefaultTriangleCap);

    TriangleKind kind() const { return kind_; }
    int max_n() const { return max_n_; }

    // Entry (n, k); any k outside the stored band reads as zero.
    const BigInt& at(int n, int k) const;

    // True where the table is zero by construction (parity or band).
    bool structural_zero(int n, int k) const;

    BigInt row_sum(int n) const;

    std::string to_csv() const;   // header "n,k,value"; structural zeros omitted
    std::string to_json() const;  // array of rows

  private:
    Triangle(TriangleKind kind, int max_n) : kind_(kind), max_n_(max_n) {}

    TriangleKind kind_;
    int max_n_ = 0;
    std::vector<std::vector<BigInt>> rows_;
    BigInt zero_ = 0;
};

// S_n = sum_k B(n,k).
BigInt springer_number(int n);
std::vector<BigInt> springer_numbers(int max_n);

// Coefficients of G_n(y) = sum_k B(n,k) y^k; G_n(1) = S_n.
struct RowPolynomial {
    std::vector<BigInt> coefficients;  // index k
    BigInt eval_one() const;
};
RowPolynomial row_polynomial(int n);

struct ShiftMismatch {
    int n = 0;
    int k = 0;
    BigInt b;
    BigInt e;
};

// Checks B(n,k) == E(n,k+1) for all 0 <= k <= n <= max_n; returns the first
// mismatch, or nullopt when the identity holds everywhere.
std::optional<ShiftMismatch> b_equals_e_shift(int max_n);

}  // namespace springer
