#include "heights/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace heights {

std::vector<int> block_degrees(const Ambient& amb, const ExpVec& exps) {
    std::vector<int> deg(static_cast<size_t>(amb.num_blocks()), 0);
    size_t idx = 0;
    for (int b = 0; b < amb.num_blocks(); ++b)
        for (int j = 0; j < amb.block_size(b); ++j, ++idx)
            deg[static_cast<size_t>(b)] += static_cast<int>(exps.at(idx));
    return deg;
}

namespace {

std::string var_name(const Ambient& amb, int block, int index) {
    if (amb.num_blocks() <= 3) {
        static const char letters[] = {'x', 'y', 'z'};
        return std::string(1, letters[block]) + std::to_string(index);
    }
    return "x" + std::to_string(block) + "_" + std::to_string(index);
}

std::string monomial_str(const Ambient& amb, const ExpVec& exps, const Rational& coeff) {
    std::string vars;
    size_t idx = 0;
    for (int b = 0; b < amb.num_blocks(); ++b)
        for (int j = 0; j < amb.block_size(b); ++j, ++idx) {
            unsigned e = exps[idx];
            if (e == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += var_name(amb, b, j);
            if (e > 1) vars += "^" + std::to_string(e);
        }
    if (vars.empty()) return to_string(coeff);
    if (coeff == 1) return vars;
    if (coeff == -1) return "-" + vars;
    return to_string(coeff) + "*" + vars;
}

} // namespace

MultihomogPolynomial MultihomogPolynomial::zero(const Ambient& amb, std::vector<int> deg) {
    if (deg.size() != static_cast<size_t>(amb.num_blocks()))
        throw DegreeMismatch("multidegree needs one entry per factor");
    for (int d : deg)
        if (d < 0) throw DegreeMismatch("multidegree entries must be nonnegative");
    return MultihomogPolynomial(amb, std::move(deg));
}

MultihomogPolynomial MultihomogPolynomial::constant(const Ambient& amb, const Rational& c) {
    auto P = zero(amb, std::vector<int>(static_cast<size_t>(amb.num_blocks()), 0));
    if (c != 0) P.terms_[ExpVec(static_cast<size_t>(amb.total_coords()), 0)] = c;
    return P;
}

MultihomogPolynomial MultihomogPolynomial::variable(const Ambient& amb, int block, int index) {
    ExpVec e(static_cast<size_t>(amb.total_coords()), 0);
    if (block < 0 || block >= amb.num_blocks() || index < 0 || index >= amb.block_size(block))
        throw Error("no coordinate " + std::to_string(index) + " in factor " +
                    std::to_string(block));
    e[static_cast<size_t>(amb.block_offset(block) + index)] = 1;
    return monomial(amb, e, Rational(1));
}

MultihomogPolynomial MultihomogPolynomial::monomial(const Ambient& amb, const ExpVec& exps,
                                                    const Rational& coeff) {
    if (exps.size() != static_cast<size_t>(amb.total_coords()))
        throw Error("exponent vector length does not match the ambient");
    auto P = zero(amb, block_degrees(amb, exps));
    if (coeff != 0) P.terms_[exps] = coeff;
    return P;
}

int MultihomogPolynomial::total_degree() const {
    int t = 0;
    for (int d : multidegree_) t += d;
    return t;
}

MultihomogPolynomial MultihomogPolynomial::operator+(const MultihomogPolynomial& o) const {
    if (ambient_ != o.ambient_) throw AmbientMismatch("adding sections of different ambients");
    if (multidegree_ != o.multidegree_)
        throw DegreeMismatch("adding sections of different multidegrees");
    MultihomogPolynomial out = *this;
    for (const auto& [e, c] : o.terms_) {
        auto it = out.terms_.find(e);
        if (it == out.terms_.end()) {
            out.terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) out.terms_.erase(it);
        }
    }
    return out;
}

MultihomogPolynomial MultihomogPolynomial::operator-(const MultihomogPolynomial& o) const {
    return *this + (-o);
}

MultihomogPolynomial MultihomogPolynomial::operator*(const MultihomogPolynomial& o) const {
    if (ambient_ != o.ambient_)
        throw AmbientMismatch("multiplying sections of different ambients");
    std::vector<int> deg(multidegree_);
    for (size_t i = 0; i < deg.size(); ++i) deg[i] += o.multidegree_[i];
    auto out = zero(ambient_, deg);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            ExpVec e(e1);
            for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            Rational c = c1 * c2;
            auto it = out.terms_.find(e);
            if (it == out.terms_.end()) {
                out.terms_[e] = c;
            } else {
                it->second += c;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    return out;
}

MultihomogPolynomial MultihomogPolynomial::operator*(const Rational& c) const {
    auto out = zero(ambient_, multidegree_);
    if (c == 0) return out;
    for (const auto& [e, t] : terms_) out.terms_[e] = t * c;
    return out;
}

MultihomogPolynomial MultihomogPolynomial::pow(unsigned e) const {
    auto out = constant(ambient_, Rational(1));
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
}

namespace {

template <class T, class FromQ>
T eval_terms(const Ambient& amb, const std::map<ExpVec, Rational>& terms,
             const std::vector<std::vector<T>>& rep, FromQ fromq) {
    if (rep.size() != static_cast<size_t>(amb.num_blocks()))
        throw AmbientMismatch("representative has the wrong number of factors");
    for (int b = 0; b < amb.num_blocks(); ++b)
        if (rep[static_cast<size_t>(b)].size() != static_cast<size_t>(amb.block_size(b)))
            throw AmbientMismatch("representative factor " + std::to_string(b) +
                                  " has the wrong length");
    T acc = fromq(Rational(0));
    for (const auto& [e, c] : terms) {
        T t = fromq(c);
        size_t idx = 0;
        for (int b = 0; b < amb.num_blocks(); ++b)
            for (int j = 0; j < amb.block_size(b); ++j, ++idx)
                for (unsigned k = 0; k < e[idx]; ++k)
                    t = t * rep[static_cast<size_t>(b)][static_cast<size_t>(j)];
        acc = acc + t;
    }
    return acc;
}

} // namespace

Rational MultihomogPolynomial::evaluate(const std::vector<std::vector<Rational>>& rep) const {
    return eval_terms<Rational>(ambient_, terms_, rep, [](const Rational& q) { return q; });
}

QuadElement MultihomogPolynomial::evaluate(const std::vector<std::vector<QuadElement>>& rep) const {
    if (rep.empty() || rep[0].empty())
        throw AmbientMismatch("representative has the wrong number of factors");
    const QuadraticField& F = rep[0][0].field();
    return eval_terms<QuadElement>(ambient_, terms_, rep, [&F](const Rational& q) {
        return QuadElement::from_rational(q, F);
    });
}

std::string MultihomogPolynomial::format_term(const ExpVec& exps) const {
    auto it = terms_.find(exps);
    return monomial_str(ambient_, exps, it == terms_.end() ? Rational(1) : it->second);
}

std::string MultihomogPolynomial::format() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (first) {
            out = monomial_str(ambient_, e, c);
            first = false;
            continue;
        }
        bool neg = c < 0;
        out += neg ? " - " : " + ";
        out += monomial_str(ambient_, e, neg ? Rational(-c) : c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Token {
    enum Kind { Number, Name, Plus, Minus, Star, Slash, Caret, Underscore, LParen, RParen, End };
    Kind kind;
    std::string text;
    size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Number, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (ch == 'x' || ch == 'y' || ch == 'z') {
            out.push_back({Token::Name, std::string(1, ch), i});
            ++i;
            continue;
        }
        Token::Kind k;
        switch (ch) {
            case '+': k = Token::Plus; break;
            case '-': k = Token::Minus; break;
            case '*': k = Token::Star; break;
            case '/': k = Token::Slash; break;
            case '^': k = Token::Caret; break;
            case '_': k = Token::Underscore; break;
            case '(': k = Token::LParen; break;
            case ')': k = Token::RParen; break;
            default:
                throw ParseError("unexpected character '" + std::string(1, ch) +
                                 "' at position " + std::to_string(i));
        }
        out.push_back({k, std::string(1, ch), i});
        ++i;
    }
    out.push_back({Token::End, "", s.size()});
    return out;
}

// Intermediate polynomial before the homogeneity verdict. deg is the common
// multidegree of all syntactic terms seen so far; it stays set after full
// cancellation, and is unset only for (products of) the literal constant 0,
// which is degree-neutral.
struct Raw {
    std::map<ExpVec, Rational> terms;
    std::optional<std::vector<int>> deg;
};

class Parser {
public:
    Parser(const std::string& text, const Ambient& amb)
        : amb_(amb), toks_(tokenize(text)) {}

    Raw run() {
        Raw r = parse_expr();
        expect(Token::End, "end of input");
        return r;
    }

private:
    const Ambient& amb_;
    std::vector<Token> toks_;
    size_t at_ = 0;

    const Token& peek() const { return toks_[at_]; }
    Token next() { return toks_[at_++]; }
    void expect(Token::Kind k, const std::string& what) {
        if (peek().kind != k)
            throw ParseError("expected " + what + " at position " + std::to_string(peek().pos));
        ++at_;
    }

    // A display term for NotHomogeneous messages.
    std::string sample_term(const Raw& r) const {
        if (r.terms.empty()) return "0";
        const auto& [e, c] = *r.terms.begin();
        return monomial_str(amb_, e, c);
    }
    static std::string deg_str(const std::vector<int>& d) {
        std::string s = "(";
        for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
        return s + ")";
    }

    Raw add(Raw a, const Raw& b, int sign) {
        if (a.deg && b.deg && *a.deg != *b.deg)
            throw NotHomogeneous("term " + sample_term(a) + " has multidegree " +
                                 deg_str(*a.deg) + " but term " + sample_term(b) + " has " +
                                 deg_str(*b.deg));
        if (!a.deg) a.deg = b.deg;
        for (const auto& [e, c] : b.terms) {
            Rational v = sign < 0 ? Rational(-c) : c;
            auto it = a.terms.find(e);
            if (it == a.terms.end()) {
                a.terms[e] = v;
            } else {
                it->second += v;
                if (it->second == 0) a.terms.erase(it);
            }
        }
        return a;
    }

    Raw mul(const Raw& a, const Raw& b) {
        Raw out;
        if (a.deg && b.deg) {
            out.deg = *a.deg;
            for (size_t i = 0; i < out.deg->size(); ++i) (*out.deg)[i] += (*b.deg)[i];
        }
        for (const auto& [e1, c1] : a.terms)
            for (const auto& [e2, c2] : b.terms) {
                ExpVec e(e1);
                for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
                Rational c = c1 * c2;
                auto it = out.terms.find(e);
                if (it == out.terms.end()) {
                    out.terms[e] = c;
                } else {
                    it->second += c;
                    if (it->second == 0) out.terms.erase(it);
                }
            }
        return out;
    }

    Raw parse_expr() {
        int sign = 1;
        if (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            sign = next().kind == Token::Minus ? -1 : 1;
        }
        Raw acc = parse_term();
        if (sign < 0) {
            Raw zero;
            acc = add(std::move(zero), acc, -1);
        }
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            int s = next().kind == Token::Minus ? -1 : 1;
            acc = add(std::move(acc), parse_term(), s);
        }
        return acc;
    }

    Raw parse_term() {
        Raw acc = parse_factor();
        while (peek().kind == Token::Star) {
            ++at_;
            acc = mul(acc, parse_factor());
        }
        return acc;
    }

    unsigned parse_nat() {
        if (peek().kind != Token::Number)
            throw ParseError("expected a number at position " + std::to_string(peek().pos));
        return static_cast<unsigned>(std::stoul(next().text));
    }

    Raw parse_factor() {
        const Token& t = peek();
        if (t.kind == Token::Number) {
            Int num(next().text);
            Rational c(num);
            if (peek().kind == Token::Slash) {
                ++at_;
                if (peek().kind != Token::Number)
                    throw ParseError("expected a denominator at position " +
                                     std::to_string(peek().pos));
                Int den(next().text);
                if (den == 0) throw ParseError("zero denominator");
                c = Rational(num) / Rational(den);
            }
            c.canonicalize();
            Raw r;
            if (c != 0) {
                r.deg = std::vector<int>(static_cast<size_t>(amb_.num_blocks()), 0);
                r.terms[ExpVec(static_cast<size_t>(amb_.total_coords()), 0)] = c;
            }
            return r;
        }
        if (t.kind == Token::Name) {
            Token name = next();
            unsigned first = parse_nat();
            int block, index;
            if (name.text == "x" && peek().kind == Token::Underscore) {
                ++at_;
                block = static_cast<int>(first);
                index = static_cast<int>(parse_nat());
            } else {
                block = name.text == "x" ? 0 : name.text == "y" ? 1 : 2;
                index = static_cast<int>(first);
            }
            std::string shown = name.text + std::to_string(first);
            if (block >= amb_.num_blocks())
                throw ParseError("unknown variable " + shown + ": ambient " + amb_.str() +
                                 " has " + std::to_string(amb_.num_blocks()) + " factor(s)");
            if (index >= amb_.block_size(block))
                throw ParseError("unknown variable " + shown + ": factor " +
                                 std::to_string(block) + " has coordinates 0.." +
                                 std::to_string(amb_.block_size(block) - 1));
            unsigned e = 1;
            if (peek().kind == Token::Caret) {
                ++at_;
                e = parse_nat();
            }
            Raw r;
            r.deg = std::vector<int>(static_cast<size_t>(amb_.num_blocks()), 0);
            (*r.deg)[static_cast<size_t>(block)] = static_cast<int>(e);
            ExpVec ev(static_cast<size_t>(amb_.total_coords()), 0);
            ev[static_cast<size_t>(amb_.block_offset(block) + index)] = e;
            if (e == 0) ev.assign(ev.size(), 0);
            r.terms[ev] = 1;
            return r;
        }
        if (t.kind == Token::LParen) {
            ++at_;
            Raw r = parse_expr();
            expect(Token::RParen, "')'");
            return r;
        }
        throw ParseError("expected a coefficient, variable or '(' at position " +
                         std::to_string(t.pos));
    }
};

} // namespace

MultihomogPolynomial parse_polynomial(const std::string& text, const Ambient& amb) {
    Parser parser(text, amb);
    Raw raw = parser.run();
    std::vector<int> deg =
        raw.deg.value_or(std::vector<int>(static_cast<size_t>(amb.num_blocks()), 0));
    auto P = MultihomogPolynomial::zero(amb, deg);
    P.terms_ = std::move(raw.terms);
    return P;
}

namespace {

void monomials_of_block(int size, int deg, ExpVec& prefix, std::vector<ExpVec>& out) {
    if (size == 1) {
        prefix.push_back(static_cast<unsigned>(deg));
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int e = 0; e <= deg; ++e) {
        prefix.push_back(static_cast<unsigned>(e));
        monomials_of_block(size - 1, deg - e, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<MultihomogPolynomial> monomial_basis(const Ambient& amb,
                                                 const std::vector<int>& multidegree) {
    if (multidegree.size() != static_cast<size_t>(amb.num_blocks()))
        throw DegreeMismatch("multidegree needs one entry per factor");
    std::vector<ExpVec> exps{ExpVec{}};
    for (int b = 0; b < amb.num_blocks(); ++b) {
        std::vector<ExpVec> grown;
        for (const auto& prefix : exps) {
            ExpVec p = prefix;
            std::vector<ExpVec> blockpart;
            ExpVec scratch;
            monomials_of_block(amb.block_size(b), multidegree[static_cast<size_t>(b)], scratch,
                               blockpart);
            for (const auto& tail : blockpart) {
                ExpVec full = p;
                full.insert(full.end(), tail.begin(), tail.end());
                grown.push_back(full);
            }
        }
        exps = std::move(grown);
    }
    // x0 y0 before x0 y1 before x1 y0: descending on exponent vectors.
    std::sort(exps.begin(), exps.end(), std::greater<>());
    std::vector<MultihomogPolynomial> out;
    out.reserve(exps.size());
    for (const auto& e : exps) out.push_back(MultihomogPolynomial::monomial(amb, e, Rational(1)));
    return out;
}

} // namespace heights
