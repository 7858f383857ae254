#pragma once

#include "cfg/laurent.hpp"

#include <functional>
#include <vector>

namespace cfg {

/// Pass/fail lines produced by the verification suites.
struct Report {
    struct Entry {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Entry> entries;

    void check(const std::string& name, bool pass, const std::string& detail = "") {
        entries.push_back({name, pass, detail});
    }
    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
};

struct Permutation {
    std::vector<int> word;  // pi_1..pi_n, a bijection on [n]

    int size() const { return static_cast<int>(word.size()); }
    bool valid() const;
};

struct PermutationStats {
    int asc = 0;
    int des = 0;
    int ext_peaks = 0;
    int valleys = 0;
};

/// Rooted tree on {0..n}, parent(v) < v, unordered children.
struct IncreasingTree {
    int n = 0;
    std::vector<int> parent;  // parent[v-1] is the parent of vertex v, v = 1..n

    bool valid() const;
    /// degree = number of children; index 0..n
    std::vector<int> degrees() const;
};

PermutationStats perm_stats(const Permutation& pi);

/// Visit all n! permutations of [n] in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

/// Visit all n! increasing trees on {0..n} (each v picks a parent < v).
void for_each_increasing_tree(int n, const std::function<void(const IncreasingTree&)>& fn);

LaurentPoly eulerian_oracle(int n);        // sum x^(asc+1) y^(des+1) over S_n
LaurentPoly cyclic_oracle(int n);          // over single (n+1)-cycles
LaurentPoly stirling_oracle(int n, int r); // padded-word ascent/non-ascent weights
LaurentPoly list_partition_oracle(int n);  // z * product of per-list padded weights
Integer lah_number(int n, int k);          // binom(n-1,k-1) * n!/k!
LaurentPoly tree_degree_oracle(int n);     // prod x_i^(#vertices of degree i)
LaurentPoly tree_parity_oracle(int n);     // x^(#even degree) y^(#odd degree)
LaurentPoly andre_oracle(int n);           // 0-1-2 trees on {0..n-1}: x^leaves y^(deg-1 count)

std::map<int, Integer> peaks_oracle(int n);
std::map<int, Integer> peaks_from_grammar(int n);

/// T_n(x) recovered from the grammar via D^n(x)|_{y=1} = x T_n(x^2).
LaurentPoly peak_polynomial(int n);

/// Eulerian and exterior-peak recurrences, checked exactly for n <= max_n.
Report verify_recurrences(int max_n);

}  // namespace cfg
