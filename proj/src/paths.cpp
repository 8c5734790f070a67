#include "springer/paths.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace springer {

BallotPath::BallotPath(std::vector<Step> steps) : steps_(std::move(steps)) {
    int y = 0;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        y += steps_[i] == Step::up ? 1 : -1;
        if (y < 0)
            throw std::invalid_argument("ballot path goes below the x-axis after step " +
                                        std::to_string(i + 1));
    }
}

int BallotPath::height(std::size_t i) const {
    if (i >= steps_.size()) throw std::out_of_range("ballot path step index out of range");
    int y = 0;
    for (std::size_t j = 0; j < i; ++j) y += steps_[j] == Step::up ? 1 : -1;
    return steps_[i] == Step::up ? y : y - 1;
}

std::vector<int> BallotPath::heights() const {
    std::vector<int> h(steps_.size());
    int y = 0;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        if (steps_[i] == Step::up) {
            h[i] = y;
            ++y;
        } else {
            h[i] = y - 1;
            --y;
        }
    }
    return h;
}

int BallotPath::end_height() const {
    int y = 0;
    for (Step s : steps_) y += s == Step::up ? 1 : -1;
    return y;
}

LabeledBallotPath::LabeledBallotPath(BallotPath path, std::vector<int> labels)
    : path_(std::move(path)), labels_(std::move(labels)) {
    if (labels_.size() != path_.size())
        throw std::invalid_argument("labeled ballot path: label count does not match step count");
    const std::vector<int> h = path_.heights();
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] < 0)
            throw std::invalid_argument("labeled ballot path: negative label at step " +
                                        std::to_string(i + 1));
        if (labels_[i] > h[i])
            throw std::invalid_argument("labeled ballot path: label " + std::to_string(labels_[i]) +
                                        " at step " + std::to_string(i + 1) + " exceeds its height " +
                                        std::to_string(h[i]));
    }
}

BigInt labeling_count(const BallotPath& path) {
    BigInt r = 1;
    for (int h : path.heights()) r *= h + 1;
    return r;
}

namespace {

void path_rec(int n, std::optional<int> end, std::vector<Step>& steps, int y,
              const std::function<void(const BallotPath&)>& visit) {
    const int remaining = n - static_cast<int>(steps.size());
    if (remaining == 0) {
        visit(BallotPath(steps));
        return;
    }
    for (Step s : {Step::up, Step::down}) {
        const int ny = y + (s == Step::up ? 1 : -1);
        if (ny < 0) continue;
        if (end && std::abs(ny - *end) > remaining - 1) continue;
        steps.push_back(s);
        path_rec(n, end, steps, ny, visit);
        steps.pop_back();
    }
}

}  // namespace

void for_each_ballot_path(int n, std::optional<int> end_height,
                          const std::function<void(const BallotPath&)>& visit, int cap) {
    if (n < 0) throw std::invalid_argument("for_each_ballot_path: n must be nonnegative");
    if (n > cap)
        throw std::length_error("enumeration cap exceeded: n=" + std::to_string(n) +
                                ", cap=" + std::to_string(cap));
    if (end_height && (*end_height < 0 || *end_height > n || (n + *end_height) % 2 != 0))
        return;  // no such paths
    std::vector<Step> steps;
    steps.reserve(static_cast<std::size_t>(n));
    path_rec(n, end_height, steps, 0, visit);
}

void for_each_labeled_path(int n, std::optional<int> end_height,
                           const std::function<void(const LabeledBallotPath&)>& visit, int cap) {
    for_each_ballot_path(
        n, end_height,
        [&](const BallotPath& p) {
            const std::vector<int> h = p.heights();
            std::vector<int> w(p.size(), 0);
            for (;;) {
                visit(LabeledBallotPath(p, w));
                std::size_t i = 0;
                while (i < w.size()) {
                    if (++w[i] <= h[i]) break;
                    w[i] = 0;
                    ++i;
                }
                if (i == w.size()) break;
            }
        },
        cap);
}

LevelCode::LevelCode(std::vector<int> values) : values_(std::move(values)) {
    for (std::size_t j = 0; j < values_.size(); ++j) {
        const int hi = j == 0 ? 1 : values_[j - 1] + 1;
        if (values_[j] < 1 || values_[j] > hi)
            throw std::invalid_argument("level code: value at position " + std::to_string(j + 1) +
                                        " violates 1 <= lambda_j <= lambda_{j-1}+1");
    }
}

BallotPath level_code_to_dyck(const LevelCode& code) {
    const std::vector<int>& lam = code.values();
    const int n = static_cast<int>(lam.size());
    std::vector<Step> steps;
    steps.reserve(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        const int next = i + 1 < n ? lam[static_cast<std::size_t>(i + 1)] : 1;
        steps.push_back(Step::up);
        for (int j = 0; j < lam[static_cast<std::size_t>(i)] - next + 1; ++j)
            steps.push_back(Step::down);
    }
    return BallotPath(std::move(steps));
}

LevelCode dyck_to_level_code(const BallotPath& path) {
    if (path.size() % 2 != 0 || path.end_height() != 0)
        throw std::invalid_argument("dyck_to_level_code: input is not a Dyck path");
    std::vector<int> lam;
    lam.reserve(path.size() / 2);
    int y = 0;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (path.at(i) == Step::up) {
            lam.push_back(y + 1);
            ++y;
        } else {
            --y;
        }
    }
    return LevelCode(std::move(lam));
}

namespace {

void level_code_rec(int n, std::vector<int>& vals,
                    const std::function<void(const LevelCode&)>& visit) {
    if (static_cast<int>(vals.size()) == n) {
        visit(LevelCode(vals));
        return;
    }
    const int hi = vals.empty() ? 1 : vals.back() + 1;
    for (int v = 1; v <= hi; ++v) {
        vals.push_back(v);
        level_code_rec(n, vals, visit);
        vals.pop_back();
    }
}

}  // namespace

void for_each_level_code(int n, const std::function<void(const LevelCode&)>& visit, int cap) {
    if (n < 0) throw std::invalid_argument("for_each_level_code: n must be nonnegative");
    if (n > cap)
        throw std::length_error("enumeration cap exceeded: n=" + std::to_string(n) +
                                ", cap=" + std::to_string(cap));
    std::vector<int> vals;
    vals.reserve(static_cast<std::size_t>(n));
    level_code_rec(n, vals, visit);
}

BigInt path_weight(const std::vector<Step>& steps) {
    BigInt w = 1;
    int y = 1;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        w *= y;
        y += steps[i] == Step::up ? 1 : -1;
        if (i + 1 < steps.size() && y <= 0)
            throw std::invalid_argument("path_weight: path reaches y <= 0 before its final point");
    }
    return w;
}

BallotPath parse_path(std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char c : text) {
        if (c == 'u')
            steps.push_back(Step::up);
        else if (c == 'd')
            steps.push_back(Step::down);
        else
            throw std::invalid_argument(std::string("path characters must be 'u' or 'd', got '") + c +
                                        "'");
    }
    return BallotPath(std::move(steps));
}

std::vector<int> parse_labels(std::string_view text) {
    std::vector<int> labels;
    std::size_t pos = 0;
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos == text.size()) return labels;
    pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
        while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
        int v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument("cannot parse label '" + std::string(tok) + "'");
        labels.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return labels;
}

LevelCode parse_level_code(std::string_view text) {
    std::vector<int> vals;
    if (text.find(',') != std::string_view::npos) {
        for (int v : parse_labels(text)) vals.push_back(v);
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument(std::string("cannot parse level code digit '") + c + "'");
            vals.push_back(c - '0');
        }
    }
    return LevelCode(std::move(vals));
}

std::string to_string(const BallotPath& path) {
    std::string s;
    s.reserve(path.size());
    for (Step st : path.steps()) s += st == Step::up ? 'u' : 'd';
    return s;
}

std::string labels_to_string(const std::vector<int>& labels) {
    std::ostringstream os;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) os << ',';
        os << labels[i];
    }
    return os.str();
}

std::string to_string(const LabeledBallotPath& lp) {
    return to_string(lp.path()) + " " + labels_to_string(lp.labels());
}

std::string to_string(const LevelCode& code) {
    bool single_digit = true;
    for (int v : code.values())
        if (v > 9) single_digit = false;
    if (single_digit) {
        std::string s;
        for (int v : code.values()) s += static_cast<char>('0' + v);
        return s;
    }
    return labels_to_string(code.values());
}

}  // namespace springer
