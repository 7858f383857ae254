#include "cfg/bijection.hpp"
#include "cfg/series.hpp"
#include "cfg/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::json;

namespace {

cfg::Grammar load_grammar(const std::string& spec) {
    try {
        return cfg::builtin_grammar(spec);
    } catch (const std::invalid_argument&) {
        std::ifstream in(spec);
        if (!in) throw std::invalid_argument("unknown grammar name and no such file: " + spec);
        std::ostringstream buf;
        buf << in.rdbuf();
        return cfg::parse_grammar(buf.str());
    }
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad integer list: " + text);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

std::string set_str(const std::set<int>& s) {
    std::string out = "{";
    for (auto it = s.begin(); it != s.end(); ++it) {
        if (it != s.begin()) out += ",";
        out += std::to_string(*it);
    }
    return out + "}";
}

void print_series(const cfg::TruncatedSeries& s, bool as_json) {
    if (as_json) {
        json j;
        j["order"] = s.order();
        j["coeffs"] = json::array();
        for (int n = 0; n <= s.order(); ++n) j["coeffs"].push_back(s.scaled_coeff(n).to_string());
        std::cout << j.dump() << "\n";
    } else {
        for (int n = 0; n <= s.order(); ++n)
            std::cout << n << ": " << s.scaled_coeff(n).to_string() << "\n";
    }
}

int print_report(const cfg::Report& rep, bool as_json) {
    if (as_json) {
        json j;
        j["checks"] = json::array();
        for (const auto& e : rep.entries)
            j["checks"].push_back({{"name", e.name}, {"pass", e.pass}});
        j["all_pass"] = rep.all_pass();
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& e : rep.entries)
            std::cout << (e.pass ? "PASS " : "FAIL ") << e.name
                      << (e.detail.empty() ? "" : "  (" + e.detail + ")") << "\n";
        std::cout << (rep.all_pass() ? "all checks passed" : "FAILURES present") << "\n";
    }
    return rep.all_pass() ? 0 : 1;
}

std::string rational_text(const cfg::Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

int run(int argc, char** argv) {
    CLI::App app{"Exact grammar calculus on combinatorial polynomials"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    // derive
    auto* derive = app.add_subcommand("derive", "Iterated formal derivative D^n(word)");
    std::string grammar_spec = "eulerian", word = "x";
    int nsteps = 1;
    derive->add_option("--grammar", grammar_spec, "Builtin grammar name or rule file");
    derive->add_option("--word", word, "Laurent polynomial to derive");
    derive->add_option("--n", nsteps, "Number of derivative steps")->check(CLI::NonNegativeNumber);

    // egf
    auto* egf_cmd = app.add_subcommand("egf", "Truncated EGF Gen(word,t); prints n!*c_n per row");
    int egf_order = 10;
    egf_cmd->add_option("--grammar", grammar_spec, "Builtin grammar name or rule file");
    egf_cmd->add_option("--word", word, "Starting word");
    egf_cmd->add_option("--order", egf_order, "Truncation order")->check(CLI::NonNegativeNumber);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "Brute-force enumeration oracles");
    std::string oracle = "eulerian";
    int enum_n = 4, stirling_r = 2;
    enumerate->add_option("--oracle", oracle, "Oracle family")
        ->check(CLI::IsMember({"eulerian", "cyclic", "stirling", "lah", "andre", "peaks",
                               "tree-degree", "tree-parity"}));
    enumerate->add_option("--n", enum_n, "Size parameter");
    enumerate->add_option("--r", stirling_r, "Stirling multiplicity");

    // verify
    auto* verify = app.add_subcommand("verify", "Run identity-verification suites");
    std::string suite = "all";
    int max_n = 7, order = 10;
    std::vector<std::string> ids = cfg::suite_names();
    ids.push_back("all");
    verify->add_option("--suite", suite, "Suite id")->check(CLI::IsMember(ids));
    verify->add_option("--max-n", max_n, "Exhaustive enumeration bound");
    verify->add_option("--order", order, "Series truncation order");

    // bijection
    auto* bijection = app.add_subcommand("bijection", "Permutations <-> increasing trees");
    bijection->require_subcommand(1);
    auto* phi_cmd = bijection->add_subcommand("phi", "Permutation to increasing tree");
    std::string perm_text;
    bool trace_flag = false;
    phi_cmd->add_option("--perm", perm_text, "Permutation, e.g. 5,3,4,6,7,2,1")->required();
    phi_cmd->add_flag("--trace", trace_flag, "Print the step table");
    auto* psi_cmd = bijection->add_subcommand("psi", "Increasing tree to permutation");
    std::string tree_text;
    psi_cmd->add_option("--tree", tree_text, "Parent list for vertices 1..n, e.g. 0,1,2,0,4,2,2")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    bool as_json = format == "json";

    if (*derive) {
        cfg::Grammar g = load_grammar(grammar_spec);
        cfg::LaurentPoly p = derive_n(g, cfg::LaurentPoly::parse(word), nsteps);
        if (as_json)
            std::cout << json{{"result", p.to_string()}}.dump() << "\n";
        else
            std::cout << p.to_string() << "\n";
    } else if (*egf_cmd) {
        cfg::Grammar g = load_grammar(grammar_spec);
        print_series(cfg::egf(g, cfg::LaurentPoly::parse(word), egf_order), as_json);
    } else if (*enumerate) {
        if (oracle == "peaks") {
            json rows = json::object();
            for (int n = 1; n <= enum_n; ++n) {
                std::vector<std::string> row;
                auto triangle = cfg::peaks_oracle(n);
                int kmax = triangle.empty() ? -1 : triangle.rbegin()->first;
                for (int k = 0; k <= kmax; ++k) row.push_back(rational_text(triangle[k]));
                rows[std::to_string(n)] = row;
            }
            json j = {{"name", "T"}, {"rows", rows}};
            std::cout << j.dump() << "\n";
        } else {
            cfg::LaurentPoly p;
            if (oracle == "eulerian")
                p = cfg::eulerian_oracle(enum_n);
            else if (oracle == "cyclic")
                p = cfg::cyclic_oracle(enum_n);
            else if (oracle == "stirling")
                p = cfg::stirling_oracle(enum_n, stirling_r);
            else if (oracle == "lah")
                p = cfg::list_partition_oracle(enum_n);
            else if (oracle == "andre")
                p = cfg::andre_oracle(enum_n);
            else if (oracle == "tree-degree")
                p = cfg::tree_degree_oracle(enum_n);
            else
                p = cfg::tree_parity_oracle(enum_n);
            if (as_json)
                std::cout << json{{"result", p.to_string()}}.dump() << "\n";
            else
                std::cout << p.to_string() << "\n";
        }
    } else if (*verify) {
        return print_report(cfg::run_suite(suite, max_n, order), as_json);
    } else if (*phi_cmd) {
        cfg::Permutation pi{parse_int_list(perm_text)};
        cfg::PhiTrace trace;
        cfg::IncreasingTree t = cfg::phi(pi, trace_flag ? &trace : nullptr);
        if (trace_flag) {
            for (const auto& st : trace.steps) {
                std::cout << "k=" << st.k
                          << "  M=" << (st.M ? set_str(*st.M) : std::string("-"))
                          << "  i=" << (st.chosen ? std::to_string(*st.chosen) : std::string("-"))
                          << "  J=" << set_str(st.J) << "\n";
            }
        }
        if (as_json)
            std::cout << json{{"n", t.n}, {"parents", t.parent}}.dump() << "\n";
        else
            std::cout << join_ints(t.parent) << "\n";
    } else if (*psi_cmd) {
        cfg::IncreasingTree t;
        t.parent = parse_int_list(tree_text);
        t.n = static_cast<int>(t.parent.size());
        cfg::Permutation pi = cfg::psi(t);
        if (as_json)
            std::cout << json{{"word", pi.word}}.dump() << "\n";
        else
            std::cout << join_ints(pi.word) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
