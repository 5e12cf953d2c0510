/*
 * Copyright 2026 The braidrep Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "braidrep/cli.hpp"

#include "braidrep/error.hpp"
#include "braidrep/format.hpp"
#include "braidrep/invariants.hpp"
#include "braidrep/reps.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <random>

namespace braidrep {

namespace {

struct CliConfig {
    int strands = 3;
    std::string rep = "reduced-burau";
    std::string form = "conjugated";
    std::string word;
    bool has_word = false;
    std::string format = "text";
    int dim = 0;
    std::string lambda;
    bool t_form = false;
    std::string invariant;
    std::string at_t, at_q;
    std::string check;
    int samples = 20;
    unsigned seed = 1;
};

class UsageError : public Error {
public:
    using Error::Error;
};

void require_strands(const CliConfig& c) {
    if (c.strands < 2) throw UsageError("--strands must be at least 2");
}

Representation build_rep(const CliConfig& c) {
    const std::string& r = c.rep;
    if (r == "qpascal") {
        if (c.strands != 3) throw UsageError("qpascal is a representation of B_3 (--strands 3)");
        if (c.lambda.empty() && c.dim < 1) throw UsageError("qpascal needs --dim or --lambda");
        LambdaSpec l = c.lambda.empty() ? LambdaSpec::identity(c.dim) : LambdaSpec::parse(c.lambda);
        if (c.dim > 0 && l.n() != c.dim)
            throw UsageError("--lambda needs dim+1 = " + std::to_string(c.dim + 1) + " entries");
        return c.t_form ? qpascal_t_form(l) : qpascal_rep(l);
    }
    require_strands(c);
    if (r == "burau") return burau_unreduced(c.strands);
    if (r == "reduced-burau") {
        if (c.form != "standard" && c.form != "conjugated")
            throw UsageError("--form must be standard or conjugated");
        return burau_reduced(c.strands,
                             c.form == "standard" ? BurauForm::Standard : BurauForm::Conjugated);
    }
    if (r == "lk") return lk(c.strands, LkNotation::New);
    if (r == "lk-orig") return lk(c.strands, LkNotation::Bigelow);
    if (r == "sym2q") {
        if (c.strands < 3) throw UsageError("sym2q needs --strands >= 3");
        return sym2_quantized(c.strands);
    }
    if (r == "lie") {
        if (c.dim > 0) {
            if (c.strands != 3) throw UsageError("lie --dim M builds a B_3 representation");
            return braid_from_lie_rep(sl2_symmetric_power(c.dim));
        }
        return braid_from_lie_rep(natural_gl(c.strands - 1));
    }
    throw UsageError("unknown representation '" + r +
                     "' (burau, reduced-burau, lk, lk-orig, sym2q, qpascal, lie)");
}

void emit_matrix(std::ostream& out, OutputFormat f, const PolyMatrix& m) {
    if (f == OutputFormat::Latex)
        out << to_latex(m) << "\n";
    else
        out << m.to_string();
}

int cmd_rep(const CliConfig& c, std::ostream& out) {
    OutputFormat f = parse_format(c.format);
    Representation rep = build_rep(c);
    if (c.has_word) {
        BraidWord w = parse_word(c.word, rep.strands());
        PolyMatrix img = image_of_word(rep, w);
        if (f == OutputFormat::Json) {
            nlohmann::ordered_json j{{"schema", kJsonSchema}, {"rep", rep.label()},
                             {"strands", rep.strands()}, {"dim", rep.dim()},
                             {"word", w.to_string()}, {"image", to_json(img)}};
            out << j.dump(2) << "\n";
        } else {
            emit_matrix(out, f, img);
        }
        return 0;
    }
    if (f == OutputFormat::Json) {
        nlohmann::ordered_json gens = nlohmann::ordered_json::array();
        for (const auto& g : rep.generators()) gens.push_back(to_json(g));
        nlohmann::ordered_json j{{"schema", kJsonSchema}, {"rep", rep.label()}, {"strands", rep.strands()},
                         {"dim", rep.dim()}, {"generators", std::move(gens)}};
        out << j.dump(2) << "\n";
        return 0;
    }
    for (int i = 1; i < rep.strands(); ++i) {
        out << (f == OutputFormat::Latex ? "% " : "") << "sigma_" << i << ":\n";
        emit_matrix(out, f, rep.generator(i));
    }
    return 0;
}

std::optional<mpq_class> parse_rational(const std::string& s, const char* flag) {
    if (s.empty()) return std::nullopt;
    try {
        mpq_class v(s);
        v.canonicalize();
        return v;
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string(flag) + ": '" + s + "' is not a rational number");
    }
}

void emit_fraction(std::ostream& out, OutputFormat f, const std::string& name,
                   const PolyFraction& frac, const std::optional<LaurentPoly>& collapsed) {
    if (f == OutputFormat::Json) {
        nlohmann::ordered_json j{{"schema", kJsonSchema},
                         {"invariant", name},
                         {"num", to_json(frac.num())},
                         {"den", to_json(frac.den())},
                         {"collapsed", collapsed ? to_json(*collapsed) : nlohmann::ordered_json(nullptr)}};
        out << j.dump(2) << "\n";
    } else if (f == OutputFormat::Latex) {
        out << (collapsed ? to_latex(*collapsed) : to_latex(frac)) << "\n";
    } else {
        out << (collapsed ? collapsed->to_string() : frac.to_string()) << "\n";
    }
}

int cmd_invariant(const CliConfig& c, std::ostream& out) {
    require_strands(c);
    OutputFormat f = parse_format(c.format);
    BraidWord w = parse_word(c.word, c.strands);
    auto t_val = parse_rational(c.at_t, "--at-t");
    auto q_val = parse_rational(c.at_q, "--at-q");
    if (c.invariant == "alexander") {
        if (q_val) throw UsageError("the Alexander polynomial has no q");
        AlexanderResult a = alexander(w);
        if (t_val) {
            PolyFraction v = specialize(PolyFraction(a.normalized), t_val, std::nullopt);
            emit_fraction(out, f, "alexander", v, v.as_polynomial());
        } else {
            emit_fraction(out, f, "alexander", a.raw_fraction, a.normalized);
        }
        return 0;
    }
    if (c.invariant == "krammer") {
        KrammerResult k = krammer_fraction(w);
        if (t_val || q_val) {
            PolyFraction v = specialize(k.fraction, t_val, q_val);
            emit_fraction(out, f, "krammer", v, v.as_polynomial());
        } else {
            emit_fraction(out, f, "krammer", k.fraction, k.collapsed);
        }
        return 0;
    }
    throw UsageError("unknown invariant '" + c.invariant + "' (alexander, krammer)");
}

BraidWord default_word(int n) {
    // s1^3 s2 .. s_{n-1}: a trefoil closure for every n >= 2
    std::vector<int> idx{1, 1, 1};
    for (int i = 2; i < n; ++i) idx.push_back(i);
    return BraidWord::from_indices(n, idx);
}

BraidWord random_word(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(1, 6), gen(1, n - 1), sign(0, 1);
    std::vector<int> idx;
    for (int k = len(rng); k > 0; --k) idx.push_back(sign(rng) ? gen(rng) : -gen(rng));
    return BraidWord::from_indices(n, idx);
}

int emit_report(std::ostream& out, OutputFormat f, const std::string& check, const CheckReport& r) {
    if (f == OutputFormat::Json) {
        nlohmann::ordered_json j = to_json(r);
        j["schema"] = kJsonSchema;
        j["check"] = check;
        out << j.dump(2) << "\n";
    } else {
        out << to_text(r);
    }
    return r.passed() ? 0 : 1;
}

int emit_markov2(std::ostream& out, OutputFormat f, const Markov2Probe& p) {
    if (f == OutputFormat::Json) {
        nlohmann::ordered_json j{{"schema", kJsonSchema},
                         {"check", "markov2-probe"},
                         {"base", {{"strands", p.base.strands()}, {"word", p.base.to_string()}}},
                         {"stabilized",
                          {{"strands", p.stabilized.strands()}, {"word", p.stabilized.to_string()}}},
                         {"krammer_base", to_json(p.k_base.fraction)},
                         {"krammer_stabilized", to_json(p.k_stabilized.fraction)},
                         {"ratio", p.ratio ? to_json(*p.ratio) : nlohmann::ordered_json()},
                         {"krammer_base_q1", to_json(p.base_q1)},
                         {"krammer_stabilized_q1", to_json(p.stabilized_q1)},
                         {"krammer_base_t1", to_json(p.base_t1)},
                         {"krammer_stabilized_t1", to_json(p.stabilized_t1)},
                         {"alexander_base", to_json(p.alexander_base)},
                         {"alexander_stabilized", to_json(p.alexander_stabilized)},
                         {"krammer_equal", p.krammer_equal()},
                         {"alexander_equal", p.alexander_equal()}};
        out << j.dump(2) << "\n";
        return 0;
    }
    auto row = [&](const std::string& k, const std::string& v) { out << k << " = " << v << "\n"; };
    row("base", "[" + p.base.to_string() + "] on " + std::to_string(p.base.strands()) + " strands");
    row("stabilized",
        "[" + p.stabilized.to_string() + "] on " + std::to_string(p.stabilized.strands()) + " strands");
    row("krammer(base)", p.k_base.fraction.to_string());
    row("krammer(stabilized)", p.k_stabilized.fraction.to_string());
    row("ratio", p.ratio ? p.ratio->to_string() : "undefined (krammer(base) = 0)");
    row("krammer(base) at q=1", p.base_q1.to_string());
    row("krammer(stabilized) at q=1", p.stabilized_q1.to_string());
    row("krammer(base) at t=1", p.base_t1.to_string());
    row("krammer(stabilized) at t=1", p.stabilized_t1.to_string());
    row("alexander(base)", p.alexander_base.to_string());
    row("alexander(stabilized)", p.alexander_stabilized.to_string());
    row("krammer equal", p.krammer_equal() ? "yes" : "no");
    row("alexander equal", p.alexander_equal() ? "yes" : "no");
    return 0;
}

int cmd_verify(const CliConfig& c, std::ostream& out) {
    OutputFormat f = parse_format(c.format);
    if (f == OutputFormat::Latex) throw UsageError("verify supports text and json output");
    const std::string& k = c.check;
    if (k == "ext-square") return emit_report(out, f, k, verify_ext_square_identity());
    if (k == "humphry") return emit_report(out, f, k, verify_humphry(c.dim > 0 ? c.dim : 7));
    if (k == "braid-relations") return emit_report(out, f, k, check_braid_relations(build_rep(c)));
    require_strands(c);
    if (k == "lk-equivalence") {
        if (c.strands < 3) throw UsageError("lk-equivalence needs --strands >= 3");
        return emit_report(out, f, k, verify_lk_equivalence(c.strands));
    }
    if (k == "spectrum") return emit_report(out, f, k, verify_spectrum(c.strands));
    if (k == "stability") {
        if (c.strands < 3) throw UsageError("stability needs --strands >= 3");
        return emit_report(out, f, k, verify_stability(c.strands));
    }
    BraidWord w = c.has_word ? parse_word(c.word, c.strands) : default_word(c.strands);
    if (k == "markov1") {
        std::mt19937_64 rng(c.seed);
        std::vector<BraidWord> gs;
        for (int i = 0; i < c.samples; ++i) gs.push_back(random_word(c.strands, rng));
        return emit_report(out, f, k, markov1_test(w, gs));
    }
    if (k == "markov2-probe") return emit_markov2(out, f, markov2_probe(w));
    throw UsageError("unknown check '" + k +
                     "' (braid-relations, lk-equivalence, spectrum, markov1, markov2-probe, "
                     "stability, ext-square, humphry)");
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact braid group representations and knot invariants", "braidrep"};
    app.require_subcommand(1);
    CliConfig c;

    auto common = [&c](CLI::App* s) {
        s->add_option("--strands,-n", c.strands, "Number of strands")->capture_default_str();
        s->add_option("--format,-f", c.format, "text, json or latex")->capture_default_str();
    };
    auto rep_opts = [&c](CLI::App* s) {
        s->add_option("--rep,-r", c.rep,
                      "burau, reduced-burau, lk, lk-orig, sym2q, qpascal, lie")
            ->capture_default_str();
        s->add_option("--form", c.form, "reduced-burau form: standard or conjugated")
            ->capture_default_str();
        s->add_option("--dim", c.dim, "qpascal / lie module parameter");
        s->add_option("--lambda", c.lambda, "qpascal diagonal, e.g. t^2,-t,1");
        s->add_flag("--t-form", c.t_form, "qpascal: sharp-conjugated family");
    };

    CLI::App* rep = app.add_subcommand("rep", "Print generator images or the image of a word");
    common(rep);
    rep_opts(rep);
    rep->add_option("--word,-w", c.word, "Braid word, e.g. \"1 -2 3\"");

    CLI::App* inv = app.add_subcommand("invariant", "Alexander polynomial or Krammer fraction");
    common(inv);
    inv->add_option("--invariant,-i", c.invariant, "alexander or krammer")->required();
    inv->add_option("--word,-w", c.word, "Braid word")->required();
    inv->add_option("--at-t", c.at_t, "Specialize t to a rational");
    inv->add_option("--at-q", c.at_q, "Specialize q to a rational");

    CLI::App* ver = app.add_subcommand("verify", "Run a verification suite");
    common(ver);
    rep_opts(ver);
    ver->add_option("--check,-c", c.check,
                    "braid-relations, lk-equivalence, spectrum, markov1, markov2-probe, "
                    "stability, ext-square, humphry")
        ->required();
    ver->add_option("--word,-w", c.word, "Word for markov1 / markov2-probe");
    ver->add_option("--samples", c.samples, "markov1: random conjugators")->capture_default_str();
    ver->add_option("--seed", c.seed, "markov1: random seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    c.has_word = !c.word.empty() || (rep->count("--word") + ver->count("--word")) > 0;

    try {
        if (*rep) return cmd_rep(c, out);
        if (*inv) return cmd_invariant(c, out);
        return cmd_verify(c, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << " (at position " << e.position() << ")\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace braidrep
