#include "cfg/bijection.hpp"

#include <algorithm>
#include <sstream>

namespace cfg {

bool PermutationCode::valid() const {
    int n = size();
    for (int k = 1; k <= n; ++k)
        if (c[k - 1] < 0 || c[k - 1] > n - k) return false;
    return true;
}

PermutationCode perm_code(const Permutation& pi) {
    int n = pi.size();
    PermutationCode code;
    code.c.resize(n);
    for (int i = 0; i < n; ++i) {
        int cnt = 0;
        for (int j = i + 1; j < n; ++j)
            if (pi.word[i] > pi.word[j]) ++cnt;
        code.c[i] = cnt;
    }
    return code;
}

Permutation code_to_perm(const PermutationCode& code) {
    if (!code.valid()) throw std::invalid_argument("invalid code");
    int n = code.size();
    std::vector<int> remaining(n);
    for (int i = 0; i < n; ++i) remaining[i] = i + 1;
    Permutation pi;
    for (int i = 0; i < n; ++i) {
        int idx = code.c[i];  // pi_i is the (c_i+1)-th smallest remaining value
        pi.word.push_back(remaining[idx]);
        remaining.erase(remaining.begin() + idx);
    }
    return pi;
}

namespace {

// Split the unplaced vertices by the root intervals: with roots listed in
// decreasing order j_1 > ... > j_l (j_0 = n+1, j_{l+1} = 0), m lies in V when
// it falls in an interval (j_{2p+1}, j_{2p}) and in U for (j_{2p+2}, j_{2p+1}).
void classify(const std::set<int>& roots, const std::vector<bool>& used, int n,
              std::set<int>& U, std::set<int>& V) {
    U.clear();
    V.clear();
    for (int m = 1; m <= n; ++m) {
        if (used[m]) continue;
        int greater = static_cast<int>(std::distance(roots.upper_bound(m), roots.end()));
        (greater % 2 == 1 ? U : V).insert(m);
    }
}

[[noreturn]] void phi_internal_error(int k, const std::string& what) {
    throw std::logic_error("phi: step " + std::to_string(k) + ": " + what);
}

}  // namespace

IncreasingTree phi(const Permutation& pi, PhiTrace* trace) {
    if (!pi.valid()) throw std::invalid_argument("not a permutation");
    int n = pi.size();
    PermutationCode code = perm_code(pi);
    std::vector<int> c(n + 1, 0);  // c[0] = 0 by convention
    for (int k = 1; k <= n; ++k) c[k] = code.c[k - 1];

    std::vector<int> par(n + 1, -1);
    std::vector<bool> used(n + 1, false);
    std::set<int> roots;

    int i1 = n - c[1];
    used[i1] = true;
    roots.insert(i1);
    if (trace) {
        PhiStep st;
        st.k = 1;
        st.I = {i1};
        st.J = roots;
        st.chosen = i1;
        st.forest_parent.assign(n, -1);
        st.forest_parent[i1 - 1] = 0;
        trace->steps.push_back(std::move(st));
    }

    for (int k = 2; k <= n; ++k) {
        std::set<int> U, V;
        classify(roots, used, n, U, V);
        bool chain_up = c[k - 2] <= c[k - 1] && c[k - 1] <= c[k];
        bool chain_down = c[k - 2] > c[k - 1] && c[k - 1] > c[k];
        const std::set<int>& M = (chain_up || chain_down) ? U : V;

        size_t expected = c[k - 1] > c[k] ? static_cast<size_t>(c[k - 1])
                                          : static_cast<size_t>(n - k + 1 - c[k - 1]);
        if (M.size() != expected)
            phi_internal_error(k, "|M| = " + std::to_string(M.size()) + ", expected " +
                                      std::to_string(expected));

        int rank = c[k - 1] > c[k] ? c[k] + 1 : n - k + 1 - c[k];  // 1-based, ascending
        if (rank < 1 || static_cast<size_t>(rank) > M.size())
            phi_internal_error(k, "chosen rank out of range");
        int ik = *std::next(M.begin(), rank - 1);

        for (auto it = roots.upper_bound(ik); it != roots.end();) {
            par[*it] = ik;
            it = roots.erase(it);
        }
        roots.insert(ik);
        used[ik] = true;

        if (trace) {
            PhiStep st;
            st.k = k;
            for (int v = 1; v <= n; ++v)
                if (used[v]) st.I.insert(v);
            st.J = roots;
            st.U = U;
            st.V = V;
            st.M = M;
            st.chosen = ik;
            st.forest_parent.assign(n, -1);
            for (int v = 1; v <= n; ++v) {
                if (par[v] >= 0)
                    st.forest_parent[v - 1] = par[v];
                else if (used[v])
                    st.forest_parent[v - 1] = 0;
            }
            trace->steps.push_back(std::move(st));
        }
    }

    IncreasingTree t;
    t.n = n;
    t.parent.resize(n);
    for (int v = 1; v <= n; ++v) t.parent[v - 1] = par[v] >= 0 ? par[v] : 0;
    return t;
}

Permutation psi(const IncreasingTree& tree) {
    if (!tree.valid()) throw std::invalid_argument("not an increasing tree");
    int n = tree.n;
    if (n < 1) throw std::invalid_argument("not an increasing tree");

    std::vector<std::vector<int>> children(n + 1);
    for (int v = 1; v <= n; ++v) children[tree.parent[v - 1]].push_back(v);

    // peel: repeatedly remove the largest root of the forest F_k
    std::vector<bool> present(n + 1, true);
    std::set<int> roots(children[0].begin(), children[0].end());
    std::vector<std::set<int>> J(n + 1), I(n + 1);
    std::vector<int> chosen(n + 1, 0);
    for (int k = n; k >= 1; --k) {
        J[k] = roots;
        for (int v = 1; v <= n; ++v)
            if (present[v]) I[k].insert(v);
        int ik = *roots.rbegin();
        chosen[k] = ik;
        roots.erase(ik);
        present[ik] = false;
        for (int ch : children[ik]) roots.insert(ch);
    }

    // per-step membership of i_k in U_k or V_k, relative to F_{k-1}
    std::vector<bool> m_is_U(n + 1, false);
    std::vector<int> m_size(n + 1, 0);
    for (int k = 2; k <= n; ++k) {
        std::vector<bool> used_prev(n + 1, false);
        for (int v : I[k - 1]) used_prev[v] = true;
        std::set<int> U, V;
        classify(J[k - 1], used_prev, n, U, V);
        m_is_U[k] = U.count(chosen[k]) > 0;
        const std::set<int>& M = m_is_U[k] ? U : V;
        m_size[k] = static_cast<int>(M.size());
    }

    std::vector<int> c(n + 1, 0);
    c[n] = 0;
    if (n >= 2) {
        if (m_size[n] != 1) throw std::logic_error("psi: |M_n| != 1");
        c[n - 1] = static_cast<int>(children[0].size()) % 2 == 0 ? 1 : 0;
    }
    for (int k = n - 2; k >= 1; --k) {
        bool take_size = m_is_U[k + 2] ? c[k + 1] > c[k + 2] : c[k + 1] <= c[k + 2];
        c[k] = take_size ? m_size[k + 1] : n - k - m_size[k + 1];
    }

    PermutationCode code;
    code.c.assign(c.begin() + 1, c.end());
    return code_to_perm(code);
}

namespace {

std::string tree_key(const IncreasingTree& t) {
    std::ostringstream os;
    for (int p : t.parent) os << p << ',';
    return os.str();
}

}  // namespace

Report verify_bijection(int max_n) {
    if (max_n > 8) throw std::invalid_argument("verify_bijection: max_n must be <= 8");
    Report rep;
    for (int n = 1; n <= max_n; ++n) {
        std::set<std::string> images;
        bool round_trip = true, transport = true, root_parity = true, down_up_even = true;
        bool leaf_i1 = true;
        for_each_permutation(n, [&](const Permutation& pi) {
            IncreasingTree t = phi(pi);
            images.insert(tree_key(t));
            Permutation back = psi(t);
            if (back.word != pi.word) round_trip = false;

            PermutationStats s = perm_stats(pi);
            std::vector<int> deg = t.degrees();
            int even = 0;
            for (int d : deg)
                if (d % 2 == 0) ++even;
            if (even != 2 * s.ext_peaks + 1) transport = false;

            PermutationCode code = perm_code(pi);
            if (n >= 2) {
                bool root_even = deg[0] % 2 == 0;
                if (root_even != (code.c[n - 2] == 1)) root_parity = false;
            }
            if (deg[n - code.c[0]] != 0) leaf_i1 = false;

            bool down_up = true;
            for (int i = 0; i + 1 < n; ++i) {
                bool want_desc = i % 2 == 0;
                if ((pi.word[i] > pi.word[i + 1]) != want_desc) down_up = false;
            }
            if (down_up) {
                for (int v = 1; v <= n; ++v)
                    if (deg[v] % 2 != 0) down_up_even = false;
            }
        });
        std::string tag = " n=" + std::to_string(n);
        rep.check("phi injective over S_n" + tag,
                  images.size() == static_cast<size_t>(factorial(n).convert_to<long>()));
        rep.check("psi o phi = id" + tag, round_trip);
        rep.check("even-degree count = 2*peaks+1" + tag, transport);
        rep.check("root parity matches c_(n-1)" + tag, root_parity);
        rep.check("i_1 is a leaf" + tag, leaf_i1);
        rep.check("down-up image is an even increasing tree" + tag, down_up_even);
        if (n <= 7) {
            bool tree_round = true;
            for_each_increasing_tree(n, [&](const IncreasingTree& t) {
                if (phi(psi(t)).parent != t.parent) tree_round = false;
            });
            rep.check("phi o psi = id on trees" + tag, tree_round);
        }
    }
    return rep;
}

}  // namespace cfg
