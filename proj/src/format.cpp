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

#include "braidrep/format.hpp"

#include "braidrep/error.hpp"

#include <sstream>

namespace braidrep {

OutputFormat parse_format(std::string_view name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "json") return OutputFormat::Json;
    if (name == "latex") return OutputFormat::Latex;
    throw RangeError("unknown format '" + std::string(name) + "' (text, json, latex)");
}

nlohmann::ordered_json to_json(const LaurentPoly& p) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& term : p.terms()) {
        nlohmann::ordered_json c;
        if (term.coeff.fits_slong_p())
            c = static_cast<std::int64_t>(term.coeff.get_si());
        else
            c = term.coeff.get_str();
        arr.push_back({{"c", c}, {"et", term.mono.et}, {"eq", term.mono.eq}});
    }
    return arr;
}

nlohmann::ordered_json to_json(const PolyMatrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

nlohmann::ordered_json to_json(const PolyFraction& f) {
    return {{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

nlohmann::ordered_json to_json(const CheckReport& r) {
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const auto& i : r.items)
        items.push_back({{"label", i.label}, {"passed", i.passed}, {"detail", i.detail}});
    return {{"title", r.title}, {"passed", r.passed()}, {"items", std::move(items)}};
}

LaurentPoly poly_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_array()) throw ParseError("polynomial JSON must be an array", 0);
    std::vector<LaurentPoly::Term> terms;
    for (const auto& t : j) {
        mpz_class c;
        const auto& cj = t.at("c");
        if (cj.is_string())
            c = mpz_class(cj.get<std::string>());
        else
            c = mpz_class(std::to_string(cj.get<std::int64_t>()));
        terms.push_back({Monomial{t.at("et").get<int>(), t.at("eq").get<int>(), 0}, c});
    }
    return LaurentPoly::from_terms(std::move(terms));
}

namespace {

void latex_power(std::ostringstream& os, const char* var, int e) {
    if (e == 0) return;
    os << var;
    if (e != 1) os << "^{" << e << "}";
}

} // namespace

std::string to_latex(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& term : p.terms()) {
        mpz_class c = term.coeff;
        if (sgn(c) < 0) {
            os << "-";
            c = -c;
        } else if (!first) {
            os << "+";
        }
        first = false;
        bool bare = term.mono.is_one();
        if (c != 1 || bare) os << c.get_str();
        latex_power(os, "x", term.mono.ex);
        latex_power(os, "t", term.mono.et);
        latex_power(os, "q", term.mono.eq);
    }
    return os.str();
}

std::string to_latex(const PolyFraction& f) {
    if (f.is_polynomial()) return to_latex(f.num());
    return "\\frac{" + to_latex(f.num()) + "}{" + to_latex(f.den()) + "}";
}

std::string to_latex(const PolyMatrix& m) {
    std::ostringstream os;
    os << "\\left(\\begin{smallmatrix}\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "&" : "") << to_latex(m(i, j));
        os << "\\\\\n";
    }
    os << "\\end{smallmatrix}\\right)";
    return os.str();
}

std::string to_text(const CheckReport& r) {
    std::ostringstream os;
    for (const auto& i : r.items) {
        os << (i.passed ? "PASS " : "FAIL ") << i.label << "\n";
        if (!i.passed && !i.detail.empty()) {
            std::istringstream lines(i.detail);
            for (std::string line; std::getline(lines, line);) os << "    " << line << "\n";
        }
    }
    std::size_t f = r.failures();
    if (f == 0)
        os << "PASS " << r.title << " (" << r.items.size() << " checks)\n";
    else
        os << "FAIL " << r.title << " (" << f << " of " << r.items.size() << " failed)\n";
    return os.str();
}

} // namespace braidrep
