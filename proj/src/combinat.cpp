#include "cfg/combinat.hpp"

#include "cfg/grammar.hpp"

#include <algorithm>
#include <numeric>

namespace cfg {

bool Permutation::valid() const {
    std::vector<int> sorted = word;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < size(); ++i)
        if (sorted[i] != i + 1) return false;
    return true;
}

bool IncreasingTree::valid() const {
    if (static_cast<int>(parent.size()) != n) return false;
    for (int v = 1; v <= n; ++v)
        if (parent[v - 1] < 0 || parent[v - 1] >= v) return false;
    return true;
}

std::vector<int> IncreasingTree::degrees() const {
    std::vector<int> deg(n + 1, 0);
    for (int v = 1; v <= n; ++v) ++deg[parent[v - 1]];
    return deg;
}

PermutationStats perm_stats(const Permutation& pi) {
    PermutationStats s;
    const auto& w = pi.word;
    int n = pi.size();
    for (int i = 0; i + 1 < n; ++i)
        (w[i] < w[i + 1] ? s.asc : s.des)++;
    for (int i = 1; i <= n; ++i) {
        bool peak;
        if (i == 1)
            peak = n >= 2 && w[0] > w[1];
        else if (i < n)
            peak = w[i - 2] < w[i - 1] && w[i - 1] > w[i];
        else
            peak = false;  // the last position is never an exterior peak
        if (peak) ++s.ext_peaks;
    }
    for (int k = 2; k <= n - 1; ++k)
        if (w[k - 2] > w[k - 1] && w[k - 1] < w[k]) ++s.valleys;
    return s;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
    Permutation pi;
    pi.word.resize(n);
    std::iota(pi.word.begin(), pi.word.end(), 1);
    do {
        fn(pi);
    } while (std::next_permutation(pi.word.begin(), pi.word.end()));
}

void for_each_increasing_tree(int n, const std::function<void(const IncreasingTree&)>& fn) {
    IncreasingTree t;
    t.n = n;
    t.parent.assign(n, 0);
    for (;;) {
        fn(t);
        // mixed-radix increment: parent of v ranges over 0..v-1
        int v = n;
        while (v >= 1) {
            if (t.parent[v - 1] + 1 < v) {
                ++t.parent[v - 1];
                break;
            }
            t.parent[v - 1] = 0;
            --v;
        }
        if (v < 1) return;
    }
}

LaurentPoly eulerian_oracle(int n) {
    if (n < 1 || n > 9) throw std::invalid_argument("eulerian_oracle: n out of range [1,9]");
    LaurentPoly sum;
    for_each_permutation(n, [&](const Permutation& pi) {
        PermutationStats s = perm_stats(pi);
        sum.add_term(Monomial{{{"x", s.asc + 1}, {"y", s.des + 1}}}, 1);
    });
    return sum;
}

LaurentPoly cyclic_oracle(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("cyclic_oracle: n out of range [1,8]");
    // single (n+1)-cycles (1, a_1, ..., a_n) with (a_i) ranging over
    // permutations of {2..n+1}; ascents of the successor map
    std::vector<int> rest(n);
    std::iota(rest.begin(), rest.end(), 2);
    LaurentPoly sum;
    do {
        std::vector<int> succ(n + 2);
        int prev = 1;
        for (int a : rest) {
            succ[prev] = a;
            prev = a;
        }
        succ[prev] = 1;
        int asc = 0;
        for (int i = 1; i <= n + 1; ++i)
            if (i < succ[i]) ++asc;
        sum.add_term(Monomial{{{"x", asc}, {"y", n + 1 - asc}}}, 1);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return sum;
}

namespace {

// weight of the 0-padded word: x per ascent, y per descent or plateau
Monomial padded_weight(const std::vector<int>& w) {
    std::vector<int> p;
    p.reserve(w.size() + 2);
    p.push_back(0);
    p.insert(p.end(), w.begin(), w.end());
    p.push_back(0);
    long xs = 0, ys = 0;
    for (size_t i = 0; i + 1 < p.size(); ++i)
        (p[i] < p[i + 1] ? xs : ys)++;
    return Monomial{{{"x", xs}, {"y", ys}}};
}

}  // namespace

LaurentPoly stirling_oracle(int n, int r) {
    if (n < 1 || r < 2 || n * r > 14)
        throw std::invalid_argument("stirling_oracle: out of range (need n>=1, r>=2, n*r<=14)");
    // build words by inserting the block i^r into every gap; this generates
    // exactly the r-Stirling permutations
    std::vector<std::vector<int>> words{std::vector<int>(r, 1)};
    for (int i = 2; i <= n; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& w : words) {
            for (size_t pos = 0; pos <= w.size(); ++pos) {
                std::vector<int> nw(w.begin(), w.begin() + pos);
                nw.insert(nw.end(), r, i);
                nw.insert(nw.end(), w.begin() + pos, w.end());
                next.push_back(std::move(nw));
            }
        }
        words = std::move(next);
    }
    LaurentPoly sum;
    for (const auto& w : words) sum.add_term(padded_weight(w), 1);
    return sum;
}

LaurentPoly list_partition_oracle(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("list_partition_oracle: n out of range [1,7]");
    using Lists = std::vector<std::vector<int>>;
    std::vector<Lists> structures{{{1}}};
    for (int e = 2; e <= n; ++e) {
        std::vector<Lists> next;
        for (const auto& st : structures) {
            Lists with_new = st;
            with_new.push_back({e});
            next.push_back(std::move(with_new));
            for (size_t li = 0; li < st.size(); ++li) {
                for (size_t pos = 0; pos <= st[li].size(); ++pos) {
                    Lists copy = st;
                    copy[li].insert(copy[li].begin() + pos, e);
                    next.push_back(std::move(copy));
                }
            }
        }
        structures = std::move(next);
    }
    LaurentPoly sum;
    for (const auto& st : structures) {
        Monomial m = Monomial::var("z");
        for (const auto& list : st) m = m.times(padded_weight(list));
        sum.add_term(m, 1);
    }
    return sum;
}

Integer lah_number(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("lah_number: need 1 <= k <= n");
    return binomial(n - 1, k - 1) * factorial(n) / factorial(k);
}

LaurentPoly tree_degree_oracle(int n) {
    if (n < 0 || n > 8) throw std::invalid_argument("tree_degree_oracle: n out of range [0,8]");
    LaurentPoly sum;
    for_each_increasing_tree(n, [&](const IncreasingTree& t) {
        Monomial m;
        for (int d : t.degrees()) m = m.times(Monomial::var("x" + std::to_string(d)));
        sum.add_term(m, 1);
    });
    return sum;
}

LaurentPoly tree_parity_oracle(int n) {
    if (n < 0 || n > 9) throw std::invalid_argument("tree_parity_oracle: n out of range [0,9]");
    LaurentPoly sum;
    for_each_increasing_tree(n, [&](const IncreasingTree& t) {
        long even = 0, odd = 0;
        for (int d : t.degrees()) (d % 2 == 0 ? even : odd)++;
        sum.add_term(Monomial{{{"x", even}, {"y", odd}}}, 1);
    });
    return sum;
}

LaurentPoly andre_oracle(int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("andre_oracle: n out of range [1,10]");
    // 0-1-2 increasing trees with vertex set {0..n-1}
    int m = n - 1;
    LaurentPoly sum;
    std::vector<int> parent(m), deg(m + 1, 0);
    std::function<void(int)> rec = [&](int v) {
        if (v > m) {
            long leaves = 0, singles = 0;
            for (int d : deg) {
                if (d == 0) ++leaves;
                if (d == 1) ++singles;
            }
            sum.add_term(Monomial{{{"x", leaves}, {"y", singles}}}, 1);
            return;
        }
        for (int p = 0; p < v; ++p) {
            if (deg[p] == 2) continue;
            parent[v - 1] = p;
            ++deg[p];
            rec(v + 1);
            --deg[p];
        }
    };
    rec(1);
    return sum;
}

std::map<int, Integer> peaks_oracle(int n) {
    if (n < 1 || n > 9) throw std::invalid_argument("peaks_oracle: n out of range [1,9]");
    std::map<int, Integer> row;
    for_each_permutation(n, [&](const Permutation& pi) { row[perm_stats(pi).ext_peaks] += 1; });
    return row;
}

std::map<int, Integer> peaks_from_grammar(int n) {
    if (n < 1) throw std::invalid_argument("peaks_from_grammar: need n >= 1");
    LaurentPoly d = derive_n(builtin_grammar("ext_peaks"), LaurentPoly::var("x"), n);
    std::map<int, Integer> row;
    for (const auto& [m, c] : d.terms()) {
        long ex = m.exponent("x"), ey = m.exponent("y");
        if (ex < 1 || ex % 2 != 1 || ey != n - (ex - 1) ||
            static_cast<long>(m.exps.size()) != (ey == 0 ? 1 : 2) ||
            denominator(c) != 1)
            throw std::runtime_error("grammar output violates the x^(2k+1) y^(n-2k) shape");
        row[static_cast<int>((ex - 1) / 2)] = numerator(c);
    }
    return row;
}

namespace {

LaurentPoly set_y_to_one(const LaurentPoly& p) {
    return p.substitute({{"y", LaurentPoly(Rational(1))}});
}

}  // namespace

LaurentPoly peak_polynomial(int n) {
    if (n == 0) return LaurentPoly(Rational(1));
    LaurentPoly d = set_y_to_one(derive_n(builtin_grammar("ext_peaks"), LaurentPoly::var("x"), n));
    LaurentPoly t;
    for (const auto& [m, c] : d.terms()) {
        long ex = m.exponent("x");
        if (ex < 1 || ex % 2 != 1 || m.exps.size() != 1)
            throw std::runtime_error("specialized peak polynomial has unexpected monomial");
        t.add_term(Monomial::var("x", (ex - 1) / 2), c);
    }
    return t;
}

Report verify_recurrences(int max_n) {
    if (max_n > 10) throw std::invalid_argument("verify_recurrences: max_n must be <= 10");
    Report rep;
    Grammar eulerian = builtin_grammar("eulerian");
    LaurentPoly x = LaurentPoly::var("x");
    LaurentPoly one{Rational(1)};

    // descent convention: A_n(x) = x^-1 D^n(x)|_{y=1}, so A_1 = 1, A_2 = 1 + x
    LaurentPoly xinv = LaurentPoly::var("x", -1);
    std::vector<LaurentPoly> A{one};
    for (int n = 1; n <= max_n; ++n) A.push_back(xinv * set_y_to_one(derive_n(eulerian, x, n)));
    for (int n = 1; n <= max_n; ++n) {
        LaurentPoly rhs;
        for (int k = 0; k <= n - 1; ++k)
            rhs += Rational(binomial(n, k)) * A[k] * (x - one).pow(n - 1 - k);
        rep.check("eulerian recurrence n=" + std::to_string(n), A[n] == rhs);
    }

    std::vector<LaurentPoly> T{one};  // T_0(x) = 1
    for (int n = 1; n <= max_n; ++n) T.push_back(peak_polynomial(n));
    for (int n = 1; n <= max_n; ++n) {
        LaurentPoly rhs;
        for (int j = 1; j <= n; ++j) {
            Rational coef = Rational(binomial(n, j)) * (j % 2 == 1 ? 1 : -1);
            rhs += coef * (one - x).pow(j / 2) * T[n - j];
        }
        rep.check("exterior-peak recurrence n=" + std::to_string(n), T[n] == rhs);
    }
    return rep;
}

}  // namespace cfg
