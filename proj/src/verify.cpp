#include "cfg/verify.hpp"

#include "cfg/bijection.hpp"
#include "cfg/series.hpp"

#include <algorithm>

namespace cfg {

namespace {

const LaurentPoly X = LaurentPoly::var("x");
const LaurentPoly Y = LaurentPoly::var("y");
const LaurentPoly ONE{Rational(1)};

std::string tag(int n) { return " n=" + std::to_string(n); }

Report suite_eulerian(int max_n) {
    Report rep;
    Grammar g = builtin_grammar("eulerian");
    for (int n = 1; n <= std::min(max_n, 8); ++n) {
        LaurentPoly d = derive_n(g, X, n);
        rep.check("derive_n(eulerian,x) = S_n oracle" + tag(n), d == eulerian_oracle(n));
        rep.check("eulerian row sum = n!" + tag(n),
                  d.evaluate({{"x", 1}, {"y", 1}}) == Rational(factorial(n)));
    }
    // D^n(x^-1 y) = x^-1 y (x-y)^n
    LaurentPoly w = LaurentPoly::var("x", -1) * Y;
    for (int n = 0; n <= 10; ++n)
        rep.check("D^n(x^-1*y) = x^-1*y*(x-y)^n" + tag(n),
                  derive_n(g, w, n) == w * (X - Y).pow(n));
    return rep;
}

Report suite_cyclic(int max_n) {
    Report rep;
    for (int n = 1; n <= std::min(max_n, 7); ++n)
        rep.check("cyclic oracle = permutation oracle" + tag(n),
                  cyclic_oracle(n) == eulerian_oracle(n));
    return rep;
}

Report suite_stirling(int max_n) {
    Report rep;
    for (int n = 1; n <= std::min(max_n, 6); ++n)
        rep.check("derive_n(stirling(2),x) = Stirling-word oracle" + tag(n),
                  derive_n(builtin_grammar("stirling2"), X, n) == stirling_oracle(n, 2));
    for (int n = 1; n <= std::min(max_n, 4); ++n)
        rep.check("derive_n(stirling(3),x) = oracle" + tag(n),
                  derive_n(builtin_grammar("stirling3"), X, n) == stirling_oracle(n, 3));
    for (int n = 1; n <= std::min(max_n, 3); ++n)
        rep.check("derive_n(stirling(4),x) = oracle" + tag(n),
                  derive_n(builtin_grammar("stirling4"), X, n) == stirling_oracle(n, 4));
    return rep;
}

Report suite_lah(int max_n) {
    Report rep;
    LaurentPoly z = LaurentPoly::var("z");
    Grammar lah = builtin_grammar("lah");
    for (int n = 1; n <= std::min(max_n, 7); ++n)
        rep.check("derive_n(lah,z) = list-partition oracle" + tag(n),
                  derive_n(lah, z, n) == list_partition_oracle(n));
    Grammar signless = builtin_grammar("lah_signless");
    for (int n = 1; n <= std::min(std::max(max_n, 8), 8); ++n) {
        LaurentPoly expected;
        for (int k = 1; k <= n; ++k)
            expected += LaurentPoly(Monomial::var("x", n + k), Rational(lah_number(n, k)));
        expected = expected * z;
        rep.check("derive_n(lah_signless,z) = x^n z sum L(n,k) x^k" + tag(n),
                  derive_n(signless, z, n) == expected);
    }
    return rep;
}

Report suite_andre(int max_n) {
    Report rep;
    Grammar g = builtin_grammar("andre");
    for (int n = 1; n <= std::min(std::max(max_n, 9), 9); ++n)
        rep.check("derive_n(andre,y) = 0-1-2 tree oracle" + tag(n),
                  derive_n(g, Y, n) == andre_oracle(n));
    // odd/even closed forms for D^n(x^-1 y)
    LaurentPoly w = LaurentPoly::var("x", -1) * Y;
    LaurentPoly base = Y * Y - Rational(2) * X;
    for (int m = 0; m <= 5; ++m) {
        rep.check("D^(2m+1)(x^-1*y) = (1-x^-1*y^2)(y^2-2x)^m m=" + std::to_string(m),
                  derive_n(g, w, 2 * m + 1) ==
                      (ONE - LaurentPoly::var("x", -1) * Y * Y) * base.pow(m));
        rep.check("D^(2m)(x^-1*y) = x^-1*y*(y^2-2x)^m m=" + std::to_string(m),
                  derive_n(g, w, 2 * m) == w * base.pow(m));
    }
    return rep;
}

Report suite_peaks(int max_n) {
    Report rep;
    for (int n = 1; n <= std::min(max_n, 8); ++n)
        rep.check("grammar peak triangle = enumeration" + tag(n),
                  peaks_from_grammar(n) == peaks_oracle(n));
    // odd/even closed forms for D^n(x^-1)
    Grammar g = builtin_grammar("ext_peaks");
    LaurentPoly xinv = LaurentPoly::var("x", -1);
    LaurentPoly base = Y * Y - X * X;
    for (int m = 0; m <= 5; ++m) {
        rep.check("D^(2m+1)(x^-1) = -x^-1*y*(y^2-x^2)^m m=" + std::to_string(m),
                  derive_n(g, xinv, 2 * m + 1) == -(xinv * Y) * base.pow(m));
        rep.check("D^(2m)(x^-1) = x^-1*(y^2-x^2)^m m=" + std::to_string(m),
                  derive_n(g, xinv, 2 * m) == xinv * base.pow(m));
    }
    // weighted grammar keeps a w^k marker on the triangle
    Grammar weighted = builtin_grammar("ext_peaks_weighted");
    for (int n = 1; n <= std::min(max_n, 8); ++n) {
        LaurentPoly expected;
        for (const auto& [k, cnt] : peaks_oracle(n))
            expected.add_term(
                Monomial{{{"x", 2 * k + 1}, {"y", n - 2 * k}, {"w", k}}}, Rational(cnt));
        rep.check("weighted peak grammar" + tag(n), derive_n(weighted, X, n) == expected);
    }
    return rep;
}

Report suite_trees(int max_n) {
    Report rep;
    Grammar g = builtin_grammar("tree_degrees");
    LaurentPoly x0 = LaurentPoly::var("x0");
    int bound = std::min(max_n, 8);
    for (int n = 1; n <= bound; ++n) {
        LaurentPoly degrees = tree_degree_oracle(n);
        rep.check("derive_n(tree_degrees,x0) = degree oracle" + tag(n),
                  derive_n(g, x0, n) == degrees);

        std::map<std::string, LaurentPoly> parity;
        for (int i = 0; i <= n + 1; ++i)
            parity["x" + std::to_string(i)] = i % 2 == 0 ? X : Y;
        LaurentPoly par_poly = tree_parity_oracle(n);
        rep.check("degree oracle under parity collapse = parity oracle" + tag(n),
                  degrees.substitute(parity) == par_poly);

        LaurentPoly expected;
        for (const auto& [k, cnt] : peaks_oracle(n))
            expected.add_term(Monomial{{{"x", 2 * k + 1}, {"y", n - 2 * k}}}, Rational(cnt));
        rep.check("parity oracle = sum T(n,k) x^(2k+1) y^(n-2k)" + tag(n),
                  par_poly == expected);
    }
    for (int n = 1; n <= bound; ++n) {
        bool odd_even_count = true;
        for_each_increasing_tree(n, [&](const IncreasingTree& t) {
            int even = 0;
            for (int d : t.degrees())
                if (d % 2 == 0) ++even;
            if (even % 2 == 0) odd_even_count = false;
        });
        rep.check("every tree has an odd number of even-degree vertices" + tag(n),
                  odd_even_count);
    }
    return rep;
}

Report suite_gf(int order) {
    Report rep;
    rep.check("Gen(andre, y) = closed form, order " + std::to_string(order),
              egf(builtin_grammar("andre"), Y, order) == andre_gf_rhs(order));

    int gessel_order = std::max(order, 12);
    TruncatedSeries lhs(gessel_order);
    for (int n = 0; n <= gessel_order; ++n)
        lhs.set_coeff(n, Rational(1, factorial(n)) * peak_polynomial(n));
    rep.check("peak EGF = closed form, order " + std::to_string(gessel_order),
              lhs == gessel_gf_rhs(gessel_order));

    LaurentPoly uinv_v = LaurentPoly::var("u", -1) * LaurentPoly::var("v");
    rep.check("Gen(aux, u^-1*v) = closed form, order " + std::to_string(order),
              egf(builtin_grammar("aux_uv"), uinv_v, order) == aux_gf_rhs(order));

    // d/dt Gen(w,t) = Gen(D(w),t) for every builtin grammar
    struct Probe {
        const char* grammar;
        LaurentPoly word;
    };
    std::vector<Probe> probes = {
        {"eulerian", X},      {"stirling2", X},
        {"lah", LaurentPoly::var("z")}, {"lah_signless", LaurentPoly::var("z")},
        {"andre", Y},         {"ext_peaks", X},
        {"ext_peaks_weighted", X}, {"aux_uv", uinv_v},
        {"tree_degrees", LaurentPoly::var("x0")},
    };
    for (const auto& probe : probes) {
        Grammar g = builtin_grammar(probe.grammar);
        rep.check(std::string("Gen'(w) = Gen(D(w)) under ") + probe.grammar,
                  series_ddt(egf(g, probe.word, 8)) ==
                      egf(g, formal_derivative(g, probe.word), 7));
    }

    // additivity and multiplicativity of Gen on sample words
    Grammar eul = builtin_grammar("eulerian");
    LaurentPoly u = X * Y + Rational(2) * X;
    LaurentPoly v = Y - LaurentPoly::var("x", -1);
    rep.check("Gen(u+v) = Gen(u)+Gen(v)",
              egf(eul, u + v, 6) == series_add(egf(eul, u, 6), egf(eul, v, 6)));
    rep.check("Gen(u*v) = Gen(u)*Gen(v)",
              egf(eul, u * v, 6) == series_mul(egf(eul, u, 6), egf(eul, v, 6)));
    return rep;
}

Report suite_bijection_checks(int max_n) {
    Report rep = verify_bijection(std::min(max_n, 8));
    // worked 7-element example
    Permutation sigma{{5, 3, 4, 6, 7, 2, 1}};
    PermutationCode code = perm_code(sigma);
    rep.check("example code", code.c == std::vector<int>({4, 2, 2, 2, 2, 1, 0}));
    IncreasingTree t = phi(sigma);
    rep.check("example tree", t.parent == std::vector<int>({0, 1, 2, 0, 4, 2, 2}));
    rep.check("example inverse", psi(t).word == sigma.word);
    return rep;
}

Report suite_morphism() {
    Report rep;
    LaurentPoly uinv_v = LaurentPoly::var("u", -1) * LaurentPoly::var("v");
    LaurentPoly v2 = LaurentPoly::var("v", 2);
    std::map<std::string, LaurentPoly> phi_map = {
        {"x", uinv_v},
        {"y", ONE - LaurentPoly::var("u", -1) * v2},
        {"w", v2 - Rational(2) * LaurentPoly::var("u")},
    };
    rep.check("weighted peak grammar maps into aux grammar",
              check_morphism(builtin_grammar("ext_peaks_weighted"), builtin_grammar("aux_uv"),
                             phi_map, {"x", "y", "w"}));
    rep.check("identity map is a morphism",
              check_morphism(builtin_grammar("eulerian"), builtin_grammar("eulerian"),
                             {{"x", X}, {"y", Y}}, {"x", "y"}));
    rep.check("identity is not a morphism between different grammars",
              !check_morphism(builtin_grammar("eulerian"), builtin_grammar("andre"),
                              {{"x", X}, {"y", Y}}, {"x", "y"}));
    return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "eulerian", "cyclic", "stirling", "lah",       "andre",    "peaks",
        "trees",    "gf",     "recurrences", "bijection", "morphism",
    };
    return names;
}

Report run_suite(const std::string& id, int max_n, int order) {
    if (id == "all") {
        Report rep;
        for (const auto& name : suite_names()) {
            Report sub = run_suite(name, max_n, order);
            for (auto& e : sub.entries) {
                e.name = name + ": " + e.name;
                rep.entries.push_back(std::move(e));
            }
        }
        return rep;
    }
    if (id == "eulerian") return suite_eulerian(max_n);
    if (id == "cyclic") return suite_cyclic(max_n);
    if (id == "stirling") return suite_stirling(max_n);
    if (id == "lah") return suite_lah(max_n);
    if (id == "andre") return suite_andre(max_n);
    if (id == "peaks") return suite_peaks(max_n);
    if (id == "trees") return suite_trees(max_n);
    if (id == "gf") return suite_gf(order);
    if (id == "recurrences") return verify_recurrences(std::min(std::max(max_n, 10), 10));
    if (id == "bijection") return suite_bijection_checks(max_n);
    if (id == "morphism") return suite_morphism();
    throw std::invalid_argument("unknown suite: " + id);
}

}  // namespace cfg
