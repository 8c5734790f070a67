#pragma once

#include <string>
#include <vector>

#include "springer/paths.hpp"
#include "springer/snakes.hpp"

namespace springer {

// Maps a snake of type B_n to a labeled ballot path of length n. Step k
// locates the entry of magnitude n-k+1 at position i: a positive entry gives
// an up step at odd i (down at even i) labeled c_i; a negative entry gives a
// down step at odd i (up at even i) labeled h_k - c_i, where h_k is the
// height of the new step.
LabeledBallotPath phi(const Snake& snake);

// Inverse of phi. Runs n contraction stages; each stage removes one step,
// relabels the survivors, and prepends a signed entry to the growing snake.
Snake psi(const LabeledBallotPath& lpath);

struct PsiStage {
    LabeledBallotPath path;             // (P_i; W_i) before this stage's contraction
    std::vector<int> original_indices;  // 1-based positions of P_i's steps in the input
    int contracted_original_index = 0;  // r_i
    std::vector<int> gamma;             // Gamma_i, after this stage's prepend
};

struct PsiTrace {
    std::vector<PsiStage> stages;  // one per contraction
    Snake result;                  // Gamma_n
};

// Same computation as psi, exposing every intermediate (P_i; W_i), Gamma_i
// and r_i.
PsiTrace psi_trace(const LabeledBallotPath& lpath);

// JSON array of stages with fields steps, labels, gamma,
// contracted_original_index.
std::string trace_to_json(const PsiTrace& trace);

// phi restricted to all-positive snakes of even length (alternating
// permutations). The image is always a labeled Dyck path; a non-Dyck result
// signals an internal bug.
LabeledBallotPath phi_on_alternating(const Snake& perm);

}  // namespace springer
