#include "springer/bijection.hpp"

#include <stdexcept>

#include <json.hpp>

namespace springer {

LabeledBallotPath phi(const Snake& snake) {
    const int n = static_cast<int>(snake.size());
    const InversionCode code = inversion_code(snake);
    std::vector<int> position_of(static_cast<std::size_t>(n) + 1, 0);  // 1-based position by magnitude
    for (int i = 0; i < n; ++i) {
        const int v = snake.at(static_cast<std::size_t>(i));
        position_of[static_cast<std::size_t>(v < 0 ? -v : v)] = i + 1;
    }
    std::vector<Step> steps;
    std::vector<int> labels;
    steps.reserve(static_cast<std::size_t>(n));
    labels.reserve(static_cast<std::size_t>(n));
    int y = 0;
    for (int k = 1; k <= n; ++k) {
        const int i = position_of[static_cast<std::size_t>(n - k + 1)];
        const int v = snake.at(static_cast<std::size_t>(i - 1));
        const bool odd = i % 2 == 1;
        const Step s = (v > 0) == odd ? Step::up : Step::down;
        const int h = s == Step::up ? y : y - 1;
        const int c = code[static_cast<std::size_t>(i - 1)];
        steps.push_back(s);
        labels.push_back(v > 0 ? c : h - c);
        y += s == Step::up ? 1 : -1;
    }
    return {BallotPath(std::move(steps)), std::move(labels)};
}

namespace {

struct LiveStep {
    int orig;  // 1-based index in the input path
    Step dir;
    int label;
};

std::vector<int> live_heights(const std::vector<LiveStep>& live) {
    std::vector<int> h(live.size());
    int y = 0;
    for (std::size_t i = 0; i < live.size(); ++i) {
        if (live[i].dir == Step::up) {
            h[i] = y;
            ++y;
        } else {
            h[i] = y - 1;
            --y;
        }
    }
    return h;
}

enum class Rule { odd_down, odd_up, even_down, even_up };

PsiTrace psi_run(const LabeledBallotPath& lpath, bool collect) {
    const int n = static_cast<int>(lpath.size());
    std::vector<LiveStep> live;
    live.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        live.push_back({i + 1, lpath.path().at(static_cast<std::size_t>(i)),
                        lpath.labels()[static_cast<std::size_t>(i)]});

    PsiTrace trace;
    std::vector<int> gamma;
    for (int stage = 0; stage < n; ++stage) {
        const std::vector<int> h = live_heights(live);
        const int m = static_cast<int>(live.size());
        int chosen = -1;
        Rule rule{};
        if (m % 2 == 1) {
            for (int i = 0; i < m; ++i)  // leftmost down step labeled by its height
                if (live[static_cast<std::size_t>(i)].dir == Step::down &&
                    live[static_cast<std::size_t>(i)].label == h[static_cast<std::size_t>(i)]) {
                    chosen = i;
                    rule = Rule::odd_down;
                    break;
                }
            if (chosen < 0) {
                for (int i = m - 1; i >= 0; --i)  // rightmost up step labeled 0
                    if (live[static_cast<std::size_t>(i)].dir == Step::up &&
                        live[static_cast<std::size_t>(i)].label == 0) {
                        chosen = i;
                        rule = Rule::odd_up;
                        break;
                    }
            }
        } else {
            for (int i = 0; i < m; ++i)  // leftmost down step labeled 0
                if (live[static_cast<std::size_t>(i)].dir == Step::down &&
                    live[static_cast<std::size_t>(i)].label == 0) {
                    chosen = i;
                    rule = Rule::even_down;
                    break;
                }
            if (chosen < 0) {
                for (int i = m - 1; i >= 0; --i)  // rightmost up step labeled by its height
                    if (live[static_cast<std::size_t>(i)].dir == Step::up &&
                        live[static_cast<std::size_t>(i)].label == h[static_cast<std::size_t>(i)]) {
                        chosen = i;
                        rule = Rule::even_up;
                        break;
                    }
            }
        }
        if (chosen < 0)
            throw std::logic_error("psi: no contractible step at stage " + std::to_string(stage + 1));

        PsiStage snapshot;
        if (collect) {
            std::vector<Step> steps;
            std::vector<int> labels;
            for (const LiveStep& s : live) {
                steps.push_back(s.dir);
                labels.push_back(s.label);
                snapshot.original_indices.push_back(s.orig);
            }
            snapshot.path = LabeledBallotPath(BallotPath(std::move(steps)), std::move(labels));
        }

        const int r = live[static_cast<std::size_t>(chosen)].orig;
        const bool negative = rule == Rule::odd_down || rule == Rule::even_up;
        live.erase(live.begin() + chosen);
        switch (rule) {
            case Rule::odd_down:
                for (LiveStep& s : live)
                    if (s.dir == Step::down) ++s.label;
                break;
            case Rule::odd_up:
                for (LiveStep& s : live) {
                    if (s.dir == Step::up && s.orig > r) --s.label;
                    if (s.dir == Step::down && s.orig < r) ++s.label;
                }
                break;
            case Rule::even_down:
                for (LiveStep& s : live) {
                    if (s.dir == Step::up && s.orig > r) ++s.label;
                    if (s.dir == Step::down && s.orig < r) --s.label;
                }
                break;
            case Rule::even_up:
                for (LiveStep& s : live)
                    if (s.dir == Step::down) --s.label;
                break;
        }
        // Survivors must again form a labeled ballot path.
        const std::vector<int> h2 = live_heights(live);
        for (std::size_t i = 0; i < live.size(); ++i) {
            if (h2[i] < 0 || live[i].label < 0 || live[i].label > h2[i])
                throw std::logic_error("psi: contraction broke the labeled ballot path invariants");
        }

        gamma.insert(gamma.begin(), negative ? -(n - r + 1) : n - r + 1);
        if (collect) {
            snapshot.contracted_original_index = r;
            snapshot.gamma = gamma;
            trace.stages.push_back(std::move(snapshot));
        }
    }
    try {
        trace.result = Snake(SignedPermutation(std::move(gamma)));
    } catch (const std::invalid_argument& e) {
        throw std::logic_error(std::string("psi produced a non-snake: ") + e.what());
    }
    return trace;
}

}  // namespace

Snake psi(const LabeledBallotPath& lpath) { return psi_run(lpath, false).result; }

PsiTrace psi_trace(const LabeledBallotPath& lpath) { return psi_run(lpath, true); }

std::string trace_to_json(const PsiTrace& trace) {
    nlohmann::json stages = nlohmann::json::array();
    for (const PsiStage& st : trace.stages) {
        stages.push_back({{"steps", to_string(st.path.path())},
                          {"labels", st.path.labels()},
                          {"gamma", st.gamma},
                          {"contracted_original_index", st.contracted_original_index}});
    }
    return stages.dump();
}

LabeledBallotPath phi_on_alternating(const Snake& perm) {
    if (perm.size() % 2 != 0)
        throw std::invalid_argument("phi_on_alternating: length must be even");
    for (int v : perm.entries())
        if (v < 0) throw std::invalid_argument("phi_on_alternating: entries must all be positive");
    LabeledBallotPath image = phi(perm);
    if (image.path().end_height() != 0)
        throw std::logic_error("phi_on_alternating: image is not a Dyck path");
    return image;
}

}  // namespace springer
