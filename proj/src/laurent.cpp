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

#include "braidrep/laurent.hpp"

#include "braidrep/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

namespace braidrep {

namespace {

bool descending(const LaurentPoly::Term& a, const LaurentPoly::Term& b) {
    return a.mono > b.mono;
}

// Sorted (descending) terms with possible repeats -> canonical terms.
void merge_sorted(std::vector<LaurentPoly::Term>& v) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i + 1;
        mpz_class c = std::move(v[i].coeff);
        while (j < v.size() && v[j].mono == v[i].mono) {
            c += v[j].coeff;
            ++j;
        }
        if (c != 0) {
            v[out].mono = v[i].mono;
            v[out].coeff = std::move(c);
            ++out;
        }
        i = j;
    }
    v.resize(out);
}

std::vector<LaurentPoly::Term> add_terms(const std::vector<LaurentPoly::Term>& a,
                                         const std::vector<LaurentPoly::Term>& b, bool negate_b) {
    std::vector<LaurentPoly::Term> r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].mono > a[i].mono) {
            r.push_back(b[j]);
            if (negate_b) r.back().coeff = -r.back().coeff;
            ++j;
        } else {
            mpz_class c = negate_b ? mpz_class(a[i].coeff - b[j].coeff)
                                   : mpz_class(a[i].coeff + b[j].coeff);
            if (c != 0) r.push_back({a[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return r;
}

mpq_class pow_q(const mpq_class& base, int e) {
    if (e == 0) return 1;
    mpz_class n, d;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -static_cast<long>(e) : e);
    mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), k);
    mpq_class r = e > 0 ? mpq_class(n, d) : mpq_class(d, n);
    r.canonicalize();
    return r;
}

void append_power(std::string& s, const char* var, int e) {
    s += var;
    if (e != 1) {
        s += '^';
        s += std::to_string(e);
    }
}

} // namespace

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_.push_back({Monomial{}, mpz_class(c)});
}

LaurentPoly::LaurentPoly(const mpz_class& c) {
    if (c != 0) terms_.push_back({Monomial{}, c});
}

LaurentPoly LaurentPoly::monomial(const mpz_class& c, const Monomial& m) {
    LaurentPoly p;
    if (c != 0) p.terms_.push_back({m, c});
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    LaurentPoly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void LaurentPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(), descending);
    merge_sorted(terms_);
}

bool LaurentPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool LaurentPoly::is_unit() const noexcept {
    return terms_.size() == 1 && (terms_[0].coeff == 1 || terms_[0].coeff == -1);
}

bool LaurentPoly::is_one() const noexcept {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

mpz_class LaurentPoly::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) { return t.mono > k; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return 0;
}

const LaurentPoly::Term& LaurentPoly::leading() const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    return terms_.front();
}

const LaurentPoly::Term& LaurentPoly::trailing() const {
    if (terms_.empty()) throw DomainError("trailing term of the zero polynomial");
    return terms_.back();
}

Monomial LaurentPoly::min_exponents() const noexcept {
    if (terms_.empty()) return {};
    Monomial m = terms_.front().mono;
    for (const auto& t : terms_) {
        m.et = std::min(m.et, t.mono.et);
        m.eq = std::min(m.eq, t.mono.eq);
        m.ex = std::min(m.ex, t.mono.ex);
    }
    return m;
}

Monomial LaurentPoly::max_exponents() const noexcept {
    if (terms_.empty()) return {};
    Monomial m = terms_.front().mono;
    for (const auto& t : terms_) {
        m.et = std::max(m.et, t.mono.et);
        m.eq = std::max(m.eq, t.mono.eq);
        m.ex = std::max(m.ex, t.mono.ex);
    }
    return m;
}

mpz_class LaurentPoly::content() const {
    mpz_class g = 0;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = add_terms(terms_, o.terms_, false);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = add_terms(terms_, o.terms_, true);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.empty() || b.terms_.empty()) return {};
    if (a.terms_.size() == 1) return b.times(a.terms_[0].mono).times(a.terms_[0].coeff);
    if (b.terms_.size() == 1) return a.times(b.terms_[0].mono).times(b.terms_[0].coeff);
    LaurentPoly r;
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_)
            r.terms_.push_back({x.mono * y.mono, x.coeff * y.coeff});
    r.normalize();
    return r;
}

LaurentPoly operator-(LaurentPoly a) {
    for (auto& t : a.terms_) t.coeff = -t.coeff;
    return a;
}

LaurentPoly LaurentPoly::times(const Monomial& m) const {
    LaurentPoly r = *this;
    if (m.is_one()) return r;
    for (auto& t : r.terms_) t.mono = t.mono * m;
    return r;
}

LaurentPoly LaurentPoly::times(const mpz_class& c) const {
    if (c == 0) return {};
    LaurentPoly r = *this;
    if (c == 1) return r;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

LaurentPoly LaurentPoly::divided_by(const mpz_class& c) const {
    if (c == 0) throw DomainError("division by zero");
    LaurentPoly r = *this;
    for (auto& t : r.terms_) {
        if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t()))
            throw DomainError("coefficient " + t.coeff.get_str() + " not divisible by " + c.get_str());
        mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
    }
    return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
    if (e < 0) {
        if (!is_unit()) throw DomainError("negative power of a non-unit polynomial " + to_string());
        const Term& u = terms_[0];
        long k = -static_cast<long>(e);
        Monomial m{static_cast<int>(-u.mono.et * k), static_cast<int>(-u.mono.eq * k),
                   static_cast<int>(-u.mono.ex * k)};
        return monomial((u.coeff < 0 && (k % 2 == 1)) ? -1 : 1, m);
    }
    LaurentPoly result = 1;
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        mpz_class c = t.coeff;
        if (first) {
            if (c < 0) s += '-';
        } else {
            s += c < 0 ? " - " : " + ";
        }
        c = abs(c);
        const Monomial& m = t.mono;
        bool has_mono = !m.is_one();
        bool need_star = false;
        if (c != 1 || !has_mono) {
            s += c.get_str();
            need_star = true;
        }
        auto put = [&](const char* v, int e) {
            if (e == 0) return;
            if (need_star) s += '*';
            append_power(s, v, e);
            need_star = true;
        };
        put("x", m.ex);
        put("t", m.et);
        put("q", m.eq);
        first = false;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    LaurentPoly parse() {
        skip();
        if (pos_ == s_.size()) throw ParseError("empty polynomial", pos_);
        LaurentPoly r = expr();
        skip();
        if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return r;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    LaurentPoly expr() {
        LaurentPoly r = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                r += term();
            } else if (c == '-') {
                ++pos_;
                r -= term();
            } else {
                return r;
            }
        }
    }

    static bool starts_factor(char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == 't' || c == 'q' || c == '(';
    }

    LaurentPoly term() {
        LaurentPoly r = signed_power();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                r *= signed_power();
            } else if (starts_factor(c)) {
                r *= power();
            } else {
                return r;
            }
        }
    }

    LaurentPoly signed_power() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -signed_power();
        }
        if (c == '+') {
            ++pos_;
            return signed_power();
        }
        return power();
    }

    LaurentPoly power() {
        LaurentPoly base = primary();
        if (peek() != '^') return base;
        ++pos_;
        std::size_t at = pos_;
        bool neg = false;
        char c = peek();
        if (c == '-' || c == '+') {
            neg = c == '-';
            ++pos_;
        }
        skip();
        at = pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("expected integer exponent", pos_);
        long e = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            e = e * 10 + (s_[pos_] - '0');
            if (e > 1000000) throw ParseError("exponent too large", at);
            ++pos_;
        }
        if (neg) e = -e;
        if (e < 0 && !base.is_unit())
            throw ParseError("negative power of a non-unit", at);
        return base.pow(static_cast<int>(e));
    }

    LaurentPoly primary() {
        char c = peek();
        std::size_t at = pos_;
        if (c == 't' || c == 'q') {
            ++pos_;
            return c == 't' ? LaurentPoly::t() : LaurentPoly::q();
        }
        if (c == '(') {
            ++pos_;
            LaurentPoly r = expr();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t b = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return LaurentPoly(mpz_class(std::string(s_.substr(b, pos_ - b))));
        }
        if (c == '\0') throw ParseError("unexpected end of input", at);
        throw ParseError(std::string("unexpected '") + c + "'", at);
    }
};

} // namespace

LaurentPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

// ---------------------------------------------------------------------------

std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DomainError("exact_div by zero");
    if (a.is_zero()) return LaurentPoly{};
    if (b.is_monomial()) {
        const auto& u = b.terms().front();
        LaurentPoly r = a.times(u.mono.inverse());
        for (const auto& t : r.terms())
            if (!mpz_divisible_p(t.coeff.get_mpz_t(), u.coeff.get_mpz_t())) return std::nullopt;
        return r.divided_by(u.coeff);
    }

    // Shift both into ordinary polynomials.
    Monomial ma = a.min_exponents(), mb = b.min_exponents();
    LaurentPoly pa = a.times(ma.inverse());
    LaurentPoly pb = b.times(mb.inverse());
    Monomial da = pa.max_exponents(), db = pb.max_exponents();
    if (da.et < db.et || da.eq < db.eq || da.ex < db.ex) return std::nullopt;
    Monomial bound{da.et - db.et, da.eq - db.eq, da.ex - db.ex};

    const auto& lead = pb.leading();
    std::map<Monomial, mpz_class, std::greater<>> rem;
    for (const auto& t : pa.terms()) rem.emplace(t.mono, t.coeff);

    std::vector<LaurentPoly::Term> quot;
    mpz_class qc;
    while (!rem.empty()) {
        auto it = rem.begin();
        Monomial m{it->first.et - lead.mono.et, it->first.eq - lead.mono.eq,
                   it->first.ex - lead.mono.ex};
        if (m.et < 0 || m.eq < 0 || m.ex < 0) return std::nullopt;
        if (m.et > bound.et || m.eq > bound.eq || m.ex > bound.ex) return std::nullopt;
        if (!mpz_divisible_p(it->second.get_mpz_t(), lead.coeff.get_mpz_t())) return std::nullopt;
        mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lead.coeff.get_mpz_t());
        for (const auto& bt : pb.terms()) {
            Monomial k = bt.mono * m;
            auto [pos, inserted] = rem.try_emplace(k, 0);
            pos->second -= qc * bt.coeff;
            if (pos->second == 0) rem.erase(pos);
        }
        quot.push_back({m, qc});
    }
    Monomial shift{ma.et - mb.et, ma.eq - mb.eq, ma.ex - mb.ex};
    return LaurentPoly::from_terms(std::move(quot)).times(shift);
}

mpq_class eval_rational(const LaurentPoly& p, const mpq_class& t, const mpq_class& q) {
    if (t == 0 || q == 0) throw DomainError("evaluation at zero is undefined for Laurent polynomials");
    mpq_class sum = 0;
    for (const auto& term : p.terms()) {
        if (term.mono.ex != 0) throw DomainError("auxiliary variable present in evaluation");
        sum += mpq_class(term.coeff) * pow_q(t, term.mono.et) * pow_q(q, term.mono.eq);
    }
    return sum;
}

LaurentPoly substitute_units(const LaurentPoly& p, const LaurentPoly& t_image,
                             const LaurentPoly& q_image) {
    if (!t_image.is_unit() || !q_image.is_unit())
        throw DomainError("substitute_units needs +-monomial images");
    std::vector<LaurentPoly::Term> out;
    out.reserve(p.size());
    const auto& ti = t_image.terms().front();
    const auto& qi = q_image.terms().front();
    for (const auto& term : p.terms()) {
        const Monomial& m = term.mono;
        Monomial r{ti.mono.et * m.et + qi.mono.et * m.eq, ti.mono.eq * m.et + qi.mono.eq * m.eq, m.ex};
        bool neg = (ti.coeff < 0 && (m.et % 2 != 0)) != (qi.coeff < 0 && (m.eq % 2 != 0));
        out.push_back({r, neg ? mpz_class(-term.coeff) : term.coeff});
    }
    return LaurentPoly::from_terms(std::move(out));
}

} // namespace braidrep
