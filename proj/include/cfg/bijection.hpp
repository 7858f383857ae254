#pragma once

#include "cfg/combinat.hpp"

#include <optional>
#include <set>

namespace cfg {

/// Inversion-table code (c_1..c_n), c_i = #{j > i : pi_i > pi_j}.
struct PermutationCode {
    std::vector<int> c;

    int size() const { return static_cast<int>(c.size()); }
    bool valid() const;
};

PermutationCode perm_code(const Permutation& pi);
Permutation code_to_perm(const PermutationCode& code);

/// One step of the tree construction; M/i are absent at step 1.
struct PhiStep {
    int k = 0;
    std::set<int> I;  // vertices placed so far
    std::set<int> J;  // current roots
    std::set<int> U;
    std::set<int> V;
    std::optional<std::set<int>> M;
    std::optional<int> chosen;              // i_k
    std::vector<int> forest_parent;         // parent per vertex 1..n; -1 = unplaced, 0 = root
};

struct PhiTrace {
    std::vector<PhiStep> steps;
};

IncreasingTree phi(const Permutation& pi, PhiTrace* trace = nullptr);
Permutation psi(const IncreasingTree& tree);

/// Exhaustive checks over S_n for n <= max_n: injectivity, round trips,
/// statistic transport, root-parity law, down-up permutations.
Report verify_bijection(int max_n);

}  // namespace cfg
