#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "springer/types.hpp"

namespace springer {

// Sequence of nonzero signed integers whose absolute values form a
// permutation of {1,...,n}. The natural order -n < ... < -1 < 1 < ... < n
// coincides with ordinary signed-integer order (0 never occurs), so entries
// are compared with plain operator<. Never order by absolute value.
class SignedPermutation {
  public:
    SignedPermutation() = default;
    explicit SignedPermutation(std::vector<int> entries);

    std::size_t size() const { return entries_.size(); }
    int at(std::size_t i) const { return entries_.at(i); }
    const std::vector<int>& entries() const { return entries_; }

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

  private:
    std::vector<int> entries_;
};

bool is_snake(const SignedPermutation& p);

// Signed permutation satisfying 0 < pi_1 > pi_2 < pi_3 > pi_4 < ...
// The empty sequence is a snake.
class Snake {
  public:
    Snake() = default;
    explicit Snake(SignedPermutation p);
    explicit Snake(std::vector<int> entries);

    std::size_t size() const { return perm_.size(); }
    int at(std::size_t i) const { return perm_.at(i); }
    const std::vector<int>& entries() const { return perm_.entries(); }
    const SignedPermutation& perm() const { return perm_; }

    std::vector<int> prefix(std::size_t len) const;

    friend bool operator==(const Snake&, const Snake&) = default;

  private:
    SignedPermutation perm_;
};

// c_1..c_n; every value is a count, hence >= 0.
using InversionCode = std::vector<int>;

// Counts, for each position i, the adjacent (valley, peak) pairs strictly to
// the right of i that straddle pi_i. For odd n the pairs are
// (pi_{2k}, pi_{2k+1}) with i < 2k; for even n, (pi_{2k-1}, pi_{2k}) with
// i < 2k-1.
InversionCode inversion_code(const Snake& s);

// (#positive at odd positions) + (#negative at even positions)
// - (#negative at odd positions) - (#positive at even positions).
int alpha(const Snake& s);

// Sign-preserving relabeling onto {±1,...,±n}: each entry becomes
// sign(entry) * rank of |entry|. Entries must be nonzero with pairwise
// distinct absolute values; they need not come from {1..n}.
SignedPermutation standardize(const std::vector<int>& entries);

// Visits every snake of type B_n exactly once, in lexicographic order of the
// entry sequences under the element order 1 < -1 < 2 < -2 < ... < n < -n.
void for_each_snake(int n, const std::function<void(const Snake&)>& visit,
                    int cap = kDefaultEnumerationCap);

std::vector<Snake> enumerate_snakes(int n, int cap = kDefaultEnumerationCap);

// Text form: comma-separated signed decimal integers, e.g. "2,-1,5,4,7,-6,-3".
// Rejects 0, duplicate magnitudes, and anything that is not an integer list.
SignedPermutation parse_signed_permutation(std::string_view text);
std::string to_string(const SignedPermutation& p);
std::string to_string(const Snake& s);

}  // namespace springer
