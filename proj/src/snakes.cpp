#include "springer/snakes.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

namespace springer {

SignedPermutation::SignedPermutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = static_cast<int>(entries_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : entries_) {
        if (v == 0) throw std::invalid_argument("signed permutation: entry 0 is not allowed");
        const int m = v < 0 ? -v : v;
        if (m > n)
            throw std::invalid_argument("signed permutation: magnitude " + std::to_string(m) +
                                        " exceeds length " + std::to_string(n));
        if (seen[m])
            throw std::invalid_argument("signed permutation: duplicate magnitude " + std::to_string(m));
        seen[m] = true;
    }
}

bool is_snake(const SignedPermutation& p) {
    const std::size_t n = p.size();
    if (n == 0) return true;
    if (p.at(0) <= 0) return false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        // positions are 1-based: between positions i+1 and i+2
        if (i % 2 == 0) {
            if (!(p.at(i) > p.at(i + 1))) return false;
        } else {
            if (!(p.at(i) < p.at(i + 1))) return false;
        }
    }
    return true;
}

Snake::Snake(SignedPermutation p) : perm_(std::move(p)) {
    if (!is_snake(perm_))
        throw std::invalid_argument("not a snake: sequence is not alternating (0 < pi_1 > pi_2 < pi_3 > ...)");
}

Snake::Snake(std::vector<int> entries) : Snake(SignedPermutation(std::move(entries))) {}

std::vector<int> Snake::prefix(std::size_t len) const {
    if (len > size()) throw std::out_of_range("snake prefix length out of range");
    return {entries().begin(), entries().begin() + static_cast<std::ptrdiff_t>(len)};
}

InversionCode inversion_code(const Snake& s) {
    const int n = static_cast<int>(s.size());
    InversionCode code(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        const int v = s.at(static_cast<std::size_t>(i - 1));
        int cnt = 0;
        if (n % 2 == 1) {
            for (int k = 1; 2 * k + 1 <= n; ++k) {
                if (i >= 2 * k) continue;
                const int lo = s.at(static_cast<std::size_t>(2 * k - 1));  // pi_{2k}
                const int hi = s.at(static_cast<std::size_t>(2 * k));      // pi_{2k+1}
                if (lo < v && v < hi) ++cnt;
            }
        } else {
            for (int k = 1; 2 * k <= n; ++k) {
                if (i >= 2 * k - 1) continue;
                const int hi = s.at(static_cast<std::size_t>(2 * k - 2));  // pi_{2k-1}
                const int lo = s.at(static_cast<std::size_t>(2 * k - 1));  // pi_{2k}
                if (lo < v && v < hi) ++cnt;
            }
        }
        code[static_cast<std::size_t>(i - 1)] = cnt;
    }
    return code;
}

int alpha(const Snake& s) {
    int a = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const bool odd_position = i % 2 == 0;
        const bool positive = s.at(i) > 0;
        a += (positive == odd_position) ? 1 : -1;
    }
    return a;
}

SignedPermutation standardize(const std::vector<int>& entries) {
    std::vector<int> mags;
    mags.reserve(entries.size());
    for (int v : entries) {
        if (v == 0) throw std::invalid_argument("standardize: entry 0 is not allowed");
        mags.push_back(v < 0 ? -v : v);
    }
    std::vector<int> sorted = mags;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("standardize: duplicate absolute values");
    std::map<int, int> rank;
    for (std::size_t i = 0; i < sorted.size(); ++i) rank[sorted[i]] = static_cast<int>(i) + 1;
    std::vector<int> out;
    out.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        out.push_back(entries[i] < 0 ? -rank[mags[i]] : rank[mags[i]]);
    return SignedPermutation(std::move(out));
}

namespace {

void snake_rec(int n, std::vector<int>& current, std::vector<bool>& used,
               const std::function<void(const Snake&)>& visit) {
    if (static_cast<int>(current.size()) == n) {
        visit(Snake(SignedPermutation(current)));
        return;
    }
    const int j = static_cast<int>(current.size()) + 1;  // 1-based position being filled
    for (int m = 1; m <= n; ++m) {
        if (used[static_cast<std::size_t>(m)]) continue;
        for (int v : {m, -m}) {
            if (j == 1) {
                if (v < 0) continue;
            } else {
                const int prev = current.back();
                if (j % 2 == 0 ? !(v < prev) : !(v > prev)) continue;
            }
            used[static_cast<std::size_t>(m)] = true;
            current.push_back(v);
            snake_rec(n, current, used, visit);
            current.pop_back();
            used[static_cast<std::size_t>(m)] = false;
        }
    }
}

}  // namespace

void for_each_snake(int n, const std::function<void(const Snake&)>& visit, int cap) {
    if (n < 0) throw std::invalid_argument("for_each_snake: n must be nonnegative");
    if (n > cap)
        throw std::length_error("enumeration cap exceeded: n=" + std::to_string(n) +
                                ", cap=" + std::to_string(cap));
    std::vector<int> current;
    current.reserve(static_cast<std::size_t>(n));
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    snake_rec(n, current, used, visit);
}

std::vector<Snake> enumerate_snakes(int n, int cap) {
    std::vector<Snake> out;
    for_each_snake(n, [&](const Snake& s) { out.push_back(s); }, cap);
    return out;
}

SignedPermutation parse_signed_permutation(std::string_view text) {
    std::vector<int> entries;
    std::size_t pos = 0;
    // skip all-whitespace input: empty permutation
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos == text.size()) return SignedPermutation{};
    pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
        while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
        int v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument("cannot parse signed permutation entry '" + std::string(tok) + "'");
        entries.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return SignedPermutation(std::move(entries));
}

namespace {

std::string join_entries(const std::vector<int>& entries) {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ',';
        os << entries[i];
    }
    return os.str();
}

}  // namespace

std::string to_string(const SignedPermutation& p) { return join_entries(p.entries()); }
std::string to_string(const Snake& s) { return join_entries(s.entries()); }

}  // namespace springer
