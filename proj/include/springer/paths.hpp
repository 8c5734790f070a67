#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "springer/types.hpp"

namespace springer {

enum class Step : std::uint8_t { up, down };  // u = (1,1), d = (1,-1)

// Lattice path of up/down steps from the origin that never goes below the
// x-axis (every prefix has #up >= #down).
class BallotPath {
  public:
    BallotPath() = default;
    explicit BallotPath(std::vector<Step> steps);

    std::size_t size() const { return steps_.size(); }
    Step at(std::size_t i) const { return steps_.at(i); }
    const std::vector<Step>& steps() const { return steps_; }

    // Height of step i (0-based): the smaller y-coordinate of its endpoints.
    int height(std::size_t i) const;
    std::vector<int> heights() const;
    int end_height() const;
    bool is_dyck() const { return size() % 2 == 0 && end_height() == 0; }

    friend bool operator==(const BallotPath&, const BallotPath&) = default;

  private:
    std::vector<Step> steps_;
};

// Ballot path whose step i carries an integer label in [0, height(i)].
class LabeledBallotPath {
  public:
    LabeledBallotPath() = default;
    LabeledBallotPath(BallotPath path, std::vector<int> labels);

    const BallotPath& path() const { return path_; }
    const std::vector<int>& labels() const { return labels_; }
    std::size_t size() const { return path_.size(); }

    friend bool operator==(const LabeledBallotPath&, const LabeledBallotPath&) = default;

  private:
    BallotPath path_;
    std::vector<int> labels_;
};

// Number of valid label assignments: prod over steps of (height + 1).
BigInt labeling_count(const BallotPath& path);

// Visits ballot paths of length n in lexicographic order with u < d,
// restricted to the given terminal height when one is supplied. A terminal
// height of the wrong parity (or out of range) yields an empty stream.
void for_each_ballot_path(int n, std::optional<int> end_height,
                          const std::function<void(const BallotPath&)>& visit,
                          int cap = kDefaultEnumerationCap);

// Labelings of each path are visited odometer-style with the first label
// changing fastest (colexicographic order).
void for_each_labeled_path(int n, std::optional<int> end_height,
                           const std::function<void(const LabeledBallotPath&)>& visit,
                           int cap = kDefaultEnumerationCap);

// Alternate level code of ballots: lambda_1 = 1 and
// 1 <= lambda_j <= lambda_{j-1} + 1 for j >= 2.
class LevelCode {
  public:
    LevelCode() = default;
    explicit LevelCode(std::vector<int> values);

    std::size_t size() const { return values_.size(); }
    const std::vector<int>& values() const { return values_; }

    friend bool operator==(const LevelCode&, const LevelCode&) = default;

  private:
    std::vector<int> values_;
};

// With lambda_{n+1} := 1, block i is u d^{lambda_i - lambda_{i+1} + 1} when
// lambda_i >= lambda_{i+1}, and a bare u when lambda_{i+1} = lambda_i + 1.
// The result is a Dyck path of length 2n.
BallotPath level_code_to_dyck(const LevelCode& code);

// Inverse: lambda_i = height of the i-th up step plus one. Rejects non-Dyck
// input.
LevelCode dyck_to_level_code(const BallotPath& path);

// Visits all of Lambda_n in lexicographic order; there are Catalan(n) codes.
void for_each_level_code(int n, const std::function<void(const LevelCode&)>& visit,
                         int cap = kDefaultEnumerationCap);

// Weight of a step sequence re-anchored to start at (1,1): the product of the
// y-coordinates of every lattice endpoint except the final one. Every
// endpoint before the final one must stay at y >= 1; the steps need not form
// a ballot path from the origin.
BigInt path_weight(const std::vector<Step>& steps);

// Text forms: path "uuudduu", labels "0,1,1,0,1,1,2", level code "122"
// (comma-separated once values exceed one digit).
BallotPath parse_path(std::string_view text);
std::vector<int> parse_labels(std::string_view text);
LevelCode parse_level_code(std::string_view text);
std::string to_string(const BallotPath& path);
std::string to_string(const LabeledBallotPath& lp);
std::string to_string(const LevelCode& code);
std::string labels_to_string(const std::vector<int>& labels);

}  // namespace springer
