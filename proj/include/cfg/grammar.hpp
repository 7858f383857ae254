#pragma once

#include "cfg/laurent.hpp"

#include <functional>
#include <optional>
#include <set>

namespace cfg {

/// A context-free grammar in the differential sense: substitution rules
/// mapping variables to Laurent polynomials.  Variables without a rule are
/// constants (derivative 0).  An optional family rule covers the indexed
/// alphabet x0, x1, x2, ... lazily.
struct Grammar {
    std::map<std::string, LaurentPoly> rules;
    std::function<LaurentPoly(long)> family_rule;  // rule for "x<i>", or null

    /// D(v) for a single variable; zero for constants.
    LaurentPoly rule_for(const std::string& name) const;
};

/// Names of the built-in grammars.  stirling takes a multiplicity r >= 2.
Grammar builtin_grammar(const std::string& name);

/// Parse `<var> -> <poly>` lines; '#' starts a comment line.
Grammar parse_grammar(const std::string& text);

/// Accepts a builtin name or, failing that, the contents of a grammar file.
Grammar grammar_from_spec(const std::string& name_or_text);

LaurentPoly formal_derivative(const Grammar& g, const LaurentPoly& p);
LaurentPoly derive_n(const Grammar& g, const LaurentPoly& p, int n);

/// True iff the substitution phi intertwines the two derivatives on vars:
/// D_dst(phi(v)) = phi(D_src(v)) for every v in vars.
bool check_morphism(const Grammar& g_src, const Grammar& g_dst,
                    const std::map<std::string, LaurentPoly>& phi,
                    const std::set<std::string>& vars);

}  // namespace cfg
