#include "cfg/combinat.hpp"

#include "cfg/grammar.hpp"

#include <doctest.h>

using namespace cfg;

TEST_CASE("permutation statistics") {
    PermutationStats s = perm_stats(Permutation{{3, 2, 5, 6, 4, 1}});
    CHECK(s.asc == 2);
    CHECK(s.des == 3);
    CHECK(s.ext_peaks == 2);

    PermutationStats id5 = perm_stats(Permutation{{1, 2, 3, 4, 5}});
    CHECK(id5.asc == 4);
    CHECK(id5.des == 0);
    CHECK(id5.ext_peaks == 0);
    CHECK(id5.valleys == 0);

    PermutationStats w = perm_stats(Permutation{{5, 3, 4, 6, 7, 2, 1}});
    CHECK(w.ext_peaks == 2);  // position 1 (5>3) and position 5 (6<7>2)
    CHECK(w.valleys == 1);

    // peaks and valleys alternate starting with a peak
    for_each_permutation(6, [](const Permutation& pi) {
        PermutationStats st = perm_stats(pi);
        CHECK(st.asc + st.des == 5);
        int diff = st.ext_peaks - st.valleys;
        CHECK(diff >= 0);
        CHECK(diff <= 1);
    });
}

TEST_CASE("eulerian oracle rows") {
    CHECK(eulerian_oracle(1) == LaurentPoly::parse("x*y"));
    CHECK(eulerian_oracle(2) == LaurentPoly::parse("x*y^2 + x^2*y"));
    CHECK(eulerian_oracle(3) == LaurentPoly::parse("x*y^3 + 4*x^2*y^2 + x^3*y"));
    CHECK_THROWS_AS(eulerian_oracle(0), std::invalid_argument);
}

TEST_CASE("cyclic oracle agrees with the linear one") {
    CHECK(cyclic_oracle(1) == LaurentPoly::parse("x*y"));
    for (int n = 1; n <= 5; ++n) CHECK(cyclic_oracle(n) == eulerian_oracle(n));
}

TEST_CASE("stirling words") {
    CHECK(stirling_oracle(1, 2) == LaurentPoly::parse("x*y^2"));
    CHECK(stirling_oracle(2, 2) == LaurentPoly::parse("x*y^4 + 2*x^2*y^3"));
    CHECK(stirling_oracle(3, 2) == LaurentPoly::parse("x*y^6 + 8*x^2*y^5 + 6*x^3*y^4"));
    CHECK(derive_n(builtin_grammar("stirling2"), LaurentPoly::var("x"), 4) ==
          stirling_oracle(4, 2));
    CHECK(derive_n(builtin_grammar("stirling3"), LaurentPoly::var("x"), 3) ==
          stirling_oracle(3, 3));
}

TEST_CASE("list partitions and Lah numbers") {
    CHECK(list_partition_oracle(1) == LaurentPoly::parse("x*y*z"));
    CHECK(list_partition_oracle(2) == LaurentPoly::parse("x^2*y*z + x*y^2*z + x^2*y^2*z"));
    LaurentPoly collapsed =
        list_partition_oracle(3).substitute({{"y", LaurentPoly::var("x")}});
    CHECK(collapsed ==
          LaurentPoly::parse("6*x^4*z + 6*x^5*z + x^6*z"));
    CHECK(lah_number(3, 1) == 6);
    CHECK(lah_number(3, 2) == 6);
    CHECK(lah_number(3, 3) == 1);
    CHECK(lah_number(4, 2) == 36);
    CHECK(lah_number(5, 5) == 1);
    CHECK_THROWS_AS(lah_number(3, 0), std::invalid_argument);
    CHECK(derive_n(builtin_grammar("lah"), LaurentPoly::var("z"), 4) ==
          list_partition_oracle(4));
}

TEST_CASE("increasing tree enumeration counts n!") {
    for (int n : {1, 3, 7}) {
        long count = 0;
        for_each_increasing_tree(n, [&](const IncreasingTree& t) {
            CHECK(t.valid());
            ++count;
        });
        CHECK(count == factorial(n).convert_to<long>());
    }
}

TEST_CASE("tree degree and parity oracles") {
    CHECK(tree_degree_oracle(1) == LaurentPoly::parse("x0*x1"));
    CHECK(tree_degree_oracle(2) == LaurentPoly::parse("x0*x1^2 + x0^2*x2"));
    CHECK(tree_parity_oracle(1) == LaurentPoly::parse("x*y"));
    CHECK(tree_parity_oracle(3) == LaurentPoly::parse("x*y^3 + 5*x^3*y"));
    for (int n = 1; n <= 6; ++n) {
        CHECK(derive_n(builtin_grammar("tree_degrees"), LaurentPoly::var("x0"), n) ==
              tree_degree_oracle(n));
        CHECK(derive_n(builtin_grammar("ext_peaks"), LaurentPoly::var("x"), n) ==
              tree_parity_oracle(n));
    }
}

TEST_CASE("andre oracle") {
    CHECK(andre_oracle(1) == LaurentPoly::parse("x"));
    CHECK(andre_oracle(3) == LaurentPoly::parse("x^2 + x*y^2"));
    std::vector<long> euler = {1, 1, 1, 2, 5, 16, 61, 272};
    for (int n = 1; n <= 7; ++n)
        CHECK(andre_oracle(n).evaluate({{"x", 1}, {"y", 1}}) == euler[n]);
    for (int n = 1; n <= 7; ++n)
        CHECK(derive_n(builtin_grammar("andre"), LaurentPoly::var("y"), n) == andre_oracle(n));
}

TEST_CASE("peak triangles") {
    std::map<int, Integer> row2 = {{0, 1}, {1, 1}};
    std::map<int, Integer> row3 = {{0, 1}, {1, 5}};
    std::map<int, Integer> row4 = {{0, 1}, {1, 18}, {2, 5}};
    CHECK(peaks_oracle(2) == row2);
    CHECK(peaks_oracle(3) == row3);
    CHECK(peaks_oracle(4) == row4);
    CHECK(peaks_from_grammar(1) == std::map<int, Integer>{{0, 1}});
    for (int n = 1; n <= 7; ++n) CHECK(peaks_from_grammar(n) == peaks_oracle(n));
}

TEST_CASE("row sums are n!") {
    for (int n = 1; n <= 6; ++n) {
        Integer total = 0;
        for (const auto& [k, cnt] : peaks_oracle(n)) total += cnt;
        CHECK(total == factorial(n));
        CHECK(eulerian_oracle(n).evaluate({{"x", 1}, {"y", 1}}) == Rational(factorial(n)));
    }
}

TEST_CASE("recurrences hold through n = 10") {
    Report rep = verify_recurrences(10);
    for (const auto& e : rep.entries) {
        INFO(e.name);
        CHECK(e.pass);
    }
    CHECK(rep.entries.size() == 20);
    CHECK(peak_polynomial(3) == LaurentPoly::parse("1 + 5*x"));
}
