// Acceptance suite: one pass/fail line per criterion, all exact equality.
#include "cfg/bijection.hpp"
#include "cfg/series.hpp"
#include "cfg/verify.hpp"

#include <chrono>
#include <iostream>

using namespace cfg;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, bool pass) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": " << name << "\n";
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const LaurentPoly X = LaurentPoly::var("x");
const LaurentPoly Y = LaurentPoly::var("y");
const LaurentPoly ONE{Rational(1)};

}  // namespace

int main() {
    // 1. Eulerian polynomials from the grammar match the S_n enumeration.
    {
        auto start = std::chrono::steady_clock::now();
        bool ok = true;
        Grammar g = builtin_grammar("eulerian");
        for (int n = 1; n <= 8; ++n)
            if (derive_n(g, X, n) != eulerian_oracle(n)) ok = false;
        if (derive_n(g, X, 3) != LaurentPoly::parse("x*y^3 + 4*x^2*y^2 + x^3*y")) ok = false;
        ok = ok && seconds_since(start) < 10.0;
        criterion(1, "eulerian grammar = S_n ascent/descent enumeration, n <= 8, < 10 s", ok);
    }

    // 2. Cyclic-permutation polynomial equals the linear-permutation one.
    {
        bool ok = true;
        for (int n = 1; n <= 7; ++n)
            if (cyclic_oracle(n) != eulerian_oracle(n)) ok = false;
        criterion(2, "cyclic enumeration = linear enumeration, n <= 7", ok);
    }

    // 3. Stirling permutations.
    {
        bool ok = true;
        Grammar g = builtin_grammar("stirling2");
        for (int n = 1; n <= 6; ++n)
            if (derive_n(g, X, n) != stirling_oracle(n, 2)) ok = false;
        if (derive_n(g, X, 3) != LaurentPoly::parse("x*y^6 + 8*x^2*y^5 + 6*x^3*y^4")) ok = false;
        criterion(3, "stirling grammar = Stirling-word enumeration, n <= 6, row 3 = (1,8,6)", ok);
    }

    // 4. Partitions into lists and the signless Lah specialization.
    {
        bool ok = true;
        Grammar lah = builtin_grammar("lah");
        LaurentPoly z = LaurentPoly::var("z");
        for (int n = 1; n <= 7; ++n)
            if (derive_n(lah, z, n) != list_partition_oracle(n)) ok = false;
        Grammar signless = builtin_grammar("lah_signless");
        for (int n = 1; n <= 8; ++n) {
            LaurentPoly expected;
            for (int k = 1; k <= n; ++k)
                expected += LaurentPoly(Monomial::var("x", n + k), Rational(lah_number(n, k)));
            if (derive_n(signless, z, n) != expected * z) ok = false;
        }
        criterion(4, "lah grammar = list-partition enumeration, n <= 7; Lah columns, n <= 8", ok);
    }

    // 5. The 0-1-2 tree generating function matches its closed form.
    {
        auto start = std::chrono::steady_clock::now();
        TruncatedSeries lhs = egf(builtin_grammar("andre"), Y, 10);
        bool ok = lhs == andre_gf_rhs(10);
        std::vector<long> euler = {1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521};
        for (int n = 0; n <= 10; ++n)
            if (lhs.scaled_coeff(n).evaluate({{"x", 1}, {"y", 1}}) != euler[n]) ok = false;
        ok = ok && seconds_since(start) < 5.0;
        criterion(5, "0-1-2 tree EGF = closed form, order 10; Euler numbers to 50521, < 5 s", ok);
    }

    // 6. Exterior-peak triangle from the grammar = enumeration.
    {
        bool ok = true;
        for (int n = 1; n <= 8; ++n)
            if (peaks_from_grammar(n) != peaks_oracle(n)) ok = false;
        ok = ok && peaks_from_grammar(2) == std::map<int, Integer>{{0, 1}, {1, 1}};
        ok = ok && peaks_from_grammar(3) == std::map<int, Integer>{{0, 1}, {1, 5}};
        ok = ok && peaks_from_grammar(4) == std::map<int, Integer>{{0, 1}, {1, 18}, {2, 5}};
        criterion(6, "peak triangle from grammar = S_n enumeration, n <= 8", ok);
    }

    // 7. Gessel's generating function through order 12.
    {
        TruncatedSeries lhs(12);
        for (int n = 0; n <= 12; ++n)
            lhs.set_coeff(n, Rational(1, factorial(n)) * peak_polynomial(n));
        criterion(7, "peak EGF = Gessel closed form, order 12", lhs == gessel_gf_rhs(12));
    }

    // 8. Auxiliary grammar generating function.
    {
        LaurentPoly uinv_v = LaurentPoly::var("u", -1) * LaurentPoly::var("v");
        criterion(8, "Gen(u^-1 v) = v/(u cosh t + (v^2-u) sinh t), order 10",
                  egf(builtin_grammar("aux_uv"), uinv_v, 10) == aux_gf_rhs(10));
    }

    // 9. Classical recurrences for both polynomial families, n <= 10.
    criterion(9, "eulerian and exterior-peak recurrences, n <= 10",
              verify_recurrences(10).all_pass());

    // 10. Closed forms for iterated derivatives of Laurent words.
    {
        bool ok = true;
        Grammar eulerian = builtin_grammar("eulerian");
        LaurentPoly w = LaurentPoly::var("x", -1) * Y;
        for (int n = 0; n <= 10; ++n)
            if (derive_n(eulerian, w, n) != w * (X - Y).pow(n)) ok = false;

        Grammar andre = builtin_grammar("andre");
        LaurentPoly a_base = Y * Y - Rational(2) * X;
        for (int m = 0; m <= 5; ++m) {
            if (derive_n(andre, w, 2 * m + 1) !=
                (ONE - LaurentPoly::var("x", -1) * Y * Y) * a_base.pow(m))
                ok = false;
            if (derive_n(andre, w, 2 * m) != w * a_base.pow(m)) ok = false;
        }

        Grammar peaks = builtin_grammar("ext_peaks");
        LaurentPoly xinv = LaurentPoly::var("x", -1);
        LaurentPoly p_base = Y * Y - X * X;
        for (int m = 0; m <= 5; ++m) {
            if (derive_n(peaks, xinv, 2 * m + 1) != -(xinv * Y) * p_base.pow(m)) ok = false;
            if (derive_n(peaks, xinv, 2 * m) != xinv * p_base.pow(m)) ok = false;
        }
        criterion(10, "Laurent-word derivative closed forms (three grammars)", ok);
    }

    // 11. Increasing-tree degree polynomials and the parity collapse.
    {
        bool ok = true;
        Grammar g = builtin_grammar("tree_degrees");
        LaurentPoly x0 = LaurentPoly::var("x0");
        for (int n = 1; n <= 8; ++n) {
            LaurentPoly degrees = tree_degree_oracle(n);
            if (derive_n(g, x0, n) != degrees) ok = false;
            std::map<std::string, LaurentPoly> parity;
            for (int i = 0; i <= n + 1; ++i)
                parity["x" + std::to_string(i)] = i % 2 == 0 ? X : Y;
            LaurentPoly par_poly = tree_parity_oracle(n);
            if (degrees.substitute(parity) != par_poly) ok = false;
            LaurentPoly expected;
            for (const auto& [k, cnt] : peaks_oracle(n))
                expected.add_term(Monomial{{{"x", 2 * k + 1}, {"y", n - 2 * k}}}, Rational(cnt));
            if (par_poly != expected) ok = false;
        }
        criterion(11, "tree degree / parity oracles match grammars and peak triangle, n <= 8", ok);
    }

    // 12. The bijection, exhaustively to n = 8 plus the worked example.
    {
        auto start = std::chrono::steady_clock::now();
        bool ok = verify_bijection(8).all_pass();
        Permutation sigma{{5, 3, 4, 6, 7, 2, 1}};
        if (perm_code(sigma).c != std::vector<int>({4, 2, 2, 2, 2, 1, 0})) ok = false;
        PhiTrace trace;
        IncreasingTree t = phi(sigma, &trace);
        if (t.parent != std::vector<int>({0, 1, 2, 0, 4, 2, 2})) ok = false;
        if (psi(t).word != sigma.word) ok = false;
        if (trace.steps.at(1).M != std::set<int>({4, 5, 6, 7}) ||
            trace.steps.at(1).chosen != 6 || trace.steps.at(4).M != std::set<int>({1}) ||
            trace.steps.at(4).chosen != 1 || trace.steps.at(6).M != std::set<int>({4}) ||
            trace.steps.at(6).chosen != 4)
            ok = false;
        ok = ok && seconds_since(start) < 60.0;
        criterion(12, "bijection exhaustive to n = 8 with worked example and trace, < 60 s", ok);
    }

    // 13. The weighted peak grammar maps into the auxiliary grammar.
    {
        LaurentPoly u = LaurentPoly::var("u"), v = LaurentPoly::var("v");
        std::map<std::string, LaurentPoly> phi_map = {
            {"x", u.pow(-1) * v},
            {"y", ONE - u.pow(-1) * v * v},
            {"w", v * v - Rational(2) * u},
        };
        criterion(13, "substitution is a grammar morphism",
                  check_morphism(builtin_grammar("ext_peaks_weighted"),
                                 builtin_grammar("aux_uv"), phi_map, {"x", "y", "w"}));
    }

    if (failures == 0)
        std::cout << "all 13 criteria passed\n";
    else
        std::cout << failures << " criteria FAILED\n";
    return failures == 0 ? 0 : 1;
}
