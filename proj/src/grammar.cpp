#include "cfg/grammar.hpp"

#include <cctype>
#include <sstream>

namespace cfg {

namespace {

// "x12" -> 12, anything else -> nullopt
std::optional<long> family_index(const std::string& name) {
    if (name.size() < 2 || name[0] != 'x') return std::nullopt;
    for (size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    return std::stol(name.substr(1));
}

}  // namespace

LaurentPoly Grammar::rule_for(const std::string& name) const {
    auto it = rules.find(name);
    if (it != rules.end()) return it->second;
    if (family_rule) {
        if (auto idx = family_index(name)) return family_rule(*idx);
    }
    return LaurentPoly();  // constant
}

LaurentPoly formal_derivative(const Grammar& g, const LaurentPoly& p) {
    LaurentPoly result;
    for (const auto& [m, c] : p.terms()) {
        // D(prod v^e) = sum_v e * v^(e-1) * (rest) * D(v), valid for e < 0
        for (const auto& [name, e] : m.exps) {
            LaurentPoly dv = g.rule_for(name);
            if (dv.is_zero()) continue;
            Monomial rest = m.times(Monomial::var(name, -1));
            result += LaurentPoly(rest, c * e) * dv;
        }
    }
    return result;
}

LaurentPoly derive_n(const Grammar& g, const LaurentPoly& p, int n) {
    LaurentPoly r = p;
    for (int i = 0; i < n; ++i) r = formal_derivative(g, r);
    return r;
}

Grammar builtin_grammar(const std::string& name) {
    auto X = [](const char* v) { return LaurentPoly::var(v); };
    Grammar g;
    if (name == "eulerian") {
        g.rules["x"] = X("x") * X("y");
        g.rules["y"] = X("x") * X("y");
    } else if (name.rfind("stirling", 0) == 0) {
        long r = 2;
        std::string suffix = name.substr(8);
        if (!suffix.empty()) {
            for (char c : suffix)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw std::invalid_argument("unknown grammar: " + name);
            r = std::stol(suffix);
        }
        if (r < 2) throw std::invalid_argument("stirling multiplicity must be >= 2");
        LaurentPoly rhs = X("x") * LaurentPoly::var("y", r);
        g.rules["x"] = rhs;
        g.rules["y"] = rhs;
    } else if (name == "lah") {
        g.rules["z"] = X("x") * X("y") * X("z");
        g.rules["x"] = X("x") * X("y");
        g.rules["y"] = X("x") * X("y");
    } else if (name == "lah_signless") {
        g.rules["z"] = LaurentPoly::var("x", 2) * X("z");
        g.rules["x"] = LaurentPoly::var("x", 2);
    } else if (name == "andre") {
        g.rules["x"] = X("x") * X("y");
        g.rules["y"] = X("x");
    } else if (name == "ext_peaks") {
        g.rules["x"] = X("x") * X("y");
        g.rules["y"] = LaurentPoly::var("x", 2);
    } else if (name == "ext_peaks_weighted") {
        g.rules["x"] = X("x") * X("y");
        g.rules["y"] = X("w") * LaurentPoly::var("x", 2);
    } else if (name == "aux_uv") {
        g.rules["u"] = LaurentPoly::var("v", 2);
        g.rules["v"] = X("v");
    } else if (name == "tree_degrees") {
        g.family_rule = [](long i) {
            return LaurentPoly::var("x0") * LaurentPoly::var("x" + std::to_string(i + 1));
        };
    } else {
        throw std::invalid_argument("unknown grammar: " + name);
    }
    return g;
}

Grammar parse_grammar(const std::string& text) {
    Grammar g;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        size_t arrow = line.find("->");
        if (arrow == std::string::npos)
            throw std::invalid_argument("grammar parse error on line " + std::to_string(lineno) +
                                        ": missing '->'");
        std::string lhs = line.substr(0, arrow);
        size_t b = lhs.find_first_not_of(" \t");
        size_t e = lhs.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw std::invalid_argument("grammar parse error on line " + std::to_string(lineno) +
                                        ": empty left-hand side");
        lhs = lhs.substr(b, e - b + 1);
        for (char c : lhs)
            if (!(std::islower(static_cast<unsigned char>(c)) ||
                  std::isdigit(static_cast<unsigned char>(c))))
                throw std::invalid_argument("grammar parse error on line " +
                                            std::to_string(lineno) + ": bad variable '" + lhs + "'");
        if (g.rules.count(lhs))
            throw std::invalid_argument("grammar parse error on line " + std::to_string(lineno) +
                                        ": duplicate rule for '" + lhs + "'");
        try {
            g.rules[lhs] = LaurentPoly::parse(line.substr(arrow + 2));
        } catch (const std::invalid_argument& err) {
            throw std::invalid_argument("grammar parse error on line " + std::to_string(lineno) +
                                        ": " + err.what());
        }
    }
    return g;
}

Grammar grammar_from_spec(const std::string& name_or_text) {
    try {
        return builtin_grammar(name_or_text);
    } catch (const std::invalid_argument&) {
        return parse_grammar(name_or_text);
    }
}

bool check_morphism(const Grammar& g_src, const Grammar& g_dst,
                    const std::map<std::string, LaurentPoly>& phi,
                    const std::set<std::string>& vars) {
    for (const auto& v : vars) {
        auto it = phi.find(v);
        LaurentPoly image = it == phi.end() ? LaurentPoly::var(v) : it->second;
        LaurentPoly lhs = formal_derivative(g_dst, image);
        LaurentPoly rhs = g_src.rule_for(v).substitute(phi);
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace cfg
