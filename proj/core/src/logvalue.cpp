#include "heights/logvalue.hpp"

#include "heights/errors.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

namespace heights {

namespace {

// Internal exact arithmetic in Q(sqrt(d)) for canonicalization certificates.
struct QuadVal {
    Rational a, b;
};

QuadVal mul(const QuadVal& x, const QuadVal& y, const Int& d) {
    return {x.a * y.a + x.b * y.b * Rational(d), x.a * y.b + x.b * y.a};
}

QuadVal inverse(const QuadVal& x, const Int& d) {
    Rational n = x.a * x.a - x.b * x.b * Rational(d);
    if (n == 0) throw Error("internal: zero norm in Q(sqrt(d)) inversion");
    return {x.a / n, -x.b / n};
}

QuadVal pow(QuadVal base, Int e, const Int& d) {
    if (e < 0) {
        base = inverse(base, d);
        e = -e;
    }
    QuadVal acc{1, 0};
    if (!e.fits_slong_p()) throw NumberTooLarge("log-term exponent beyond desk scale");
    long n = e.get_si();
    while (n) {
        if (n & 1) acc = mul(acc, base, d);
        base = mul(base, base, d);
        n >>= 1;
    }
    return acc;
}

Int lcm_int(const Int& a, const Int& b) { return a / gcd(a, b) * b; }

Rational make_frac(const Int& num, const Int& den) {
    Rational q(num);
    q /= Rational(den);
    return q;
}

Int pow_int(const Int& p, const Int& e) {
    if (!e.fits_ulong_p()) throw NumberTooLarge("prime exponent beyond desk scale");
    Int r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e.get_ui());
    return r;
}

} // namespace

LogValue LogValue::infinity() {
    LogValue v;
    v.infinite_ = true;
    return v;
}

LogValue LogValue::log_prime(const Int& p, const Rational& coeff) {
    require_prime(p);
    LogValue v;
    if (coeff != 0) v.finite_[p] = coeff;
    return v;
}

LogValue LogValue::log_magnitude(const Magnitude& m, const Rational& weight) {
    if (m.is_zero()) throw Error("log of a zero magnitude");
    LogValue v;
    if (weight != 0 && !(m.is_rational() && m.rational_part() == 1))
        v.arch_.emplace_back(weight, m);
    return v;
}

LogValue LogValue::operator+(const LogValue& o) const {
    if (infinite_ || o.infinite_) return infinity();
    LogValue out = *this;
    for (const auto& [p, c] : o.finite_) {
        Rational& slot = out.finite_[p];
        slot += c;
        if (slot == 0) out.finite_.erase(p);
    }
    out.arch_.insert(out.arch_.end(), o.arch_.begin(), o.arch_.end());
    return out;
}

LogValue LogValue::operator-() const {
    if (infinite_) throw Error("negating +infinity is not supported");
    LogValue out = *this;
    for (auto& [p, c] : out.finite_) c = -c;
    for (auto& [w, m] : out.arch_) w = -w;
    return out;
}

LogValue LogValue::operator-(const LogValue& o) const {
    if (o.infinite_) throw Error("subtracting +infinity is not supported");
    return *this + (-o);
}

LogValue LogValue::operator*(const Rational& scalar) const {
    if (infinite_) {
        if (scalar <= 0) throw Error("scaling +infinity by a nonpositive rational");
        return infinity();
    }
    if (scalar == 0) return zero();
    LogValue out = *this;
    for (auto& [p, c] : out.finite_) c *= scalar;
    for (auto& [w, m] : out.arch_) w *= scalar;
    return out;
}

void LogValue::add_log_rational(const Rational& weight, const Rational& positive) {
    if (positive <= 0) throw Error("log of a nonpositive rational");
    if (weight == 0 || positive == 1) return;
    for (const auto& [p, e] : factor(positive.get_num())) {
        Rational& slot = finite_[p];
        slot += weight * long(e);
        if (slot == 0) finite_.erase(p);
    }
    for (const auto& [p, e] : factor(positive.get_den())) {
        Rational& slot = finite_[p];
        slot -= weight * long(e);
        if (slot == 0) finite_.erase(p);
    }
}

LogValue LogValue::canonicalized() const {
    if (infinite_) return infinity();
    LogValue out;
    out.finite_ = finite_;
    std::map<Int, std::vector<std::pair<Rational, QuadVal>>> residual;
    for (const auto& [w, m] : arch_) {
        if (w == 0) continue;
        if (m.is_zero()) throw Error("log of a zero magnitude");
        if (m.is_rational()) {
            out.add_log_rational(w, m.rational_part());
        } else if (m.is_pure_radical()) {
            out.add_log_rational(w, m.radical_coeff());
            out.add_log_rational(w / 2, Rational(m.radicand()));
        } else {
            residual[m.radicand()].emplace_back(
                w, QuadVal{m.rational_part(), m.radical_coeff()});
        }
    }
    for (const auto& [d, terms] : residual) {
        Int D = 1;
        for (const auto& [w, val] : terms) D = lcm_int(D, w.get_den());
        QuadVal g{1, 0};
        for (const auto& [w, val] : terms) {
            Rational scaled = w * Rational(D);
            g = mul(g, pow(val, scaled.get_num(), d), d);
        }
        Rational wD = make_frac(1, D);
        if (g.b == 0) {
            out.add_log_rational(wD, g.a);
            continue;
        }
        if (g.a == 0) {
            out.add_log_rational(wD, g.b > 0 ? g.b : Rational(-g.b));
            out.add_log_rational(wD / 2, Rational(d));
            continue;
        }
        // Strip rational content: g = (content) * (A + B sqrt(d)) with
        // coprime integers A, B.
        Int ell = lcm_int(g.a.get_den(), g.b.get_den());
        Rational As = g.a * Rational(ell), Bs = g.b * Rational(ell);
        Int A = As.get_num(), B = Bs.get_num();
        Int content = gcd(A, B);
        A /= content;
        B /= content;
        out.add_log_rational(wD, make_frac(content, ell));
        // The class of g modulo rationals and sqrt(d) has two primitive
        // representatives, (A, B) and the primitive form of sqrt(d)*(A, B);
        // pick the lexicographically smaller so equal numbers canonicalize
        // identically.
        Int A2 = B * d, B2 = A;
        Int c2 = gcd(A2, B2);
        A2 /= c2;
        B2 /= c2;
        auto key = [](const Int& x, const Int& y) {
            return std::tuple<Int, Int, Int, Int>(Int(::abs(x)), Int(::abs(y)), x, y);
        };
        if (key(A2, B2) < key(A, B)) {
            // log g' = log c2 - (1/2) log d + log h2 for the alternative rep.
            out.add_log_rational(wD, Rational(c2));
            out.add_log_rational(-wD / 2, Rational(d));
            out.arch_.emplace_back(wD, Magnitude::abs_quadratic(Rational(A2), Rational(B2), d));
        } else {
            out.arch_.emplace_back(wD, Magnitude::abs_quadratic(Rational(A), Rational(B), d));
        }
    }
    return out;
}

bool LogValue::is_zero() const {
    if (infinite_) return false;
    LogValue c = canonicalized();
    return c.finite_.empty() && c.arch_.empty();
}

int LogValue::signum() const {
    if (infinite_) return 1;
    LogValue c = canonicalized();
    if (c.arch_.size() > 1)
        throw MixedPlaceComparison("sign undecidable across several radical classes");
    Int D = 1;
    for (const auto& [p, coeff] : c.finite_) D = lcm_int(D, coeff.get_den());
    if (!c.arch_.empty()) D = lcm_int(D, c.arch_[0].first.get_den());
    // Certificate: sign of the value equals sign of (prod p^{D c_p}) * g^{D w} - 1.
    Int num = 1, den = 1;
    for (const auto& [p, coeff] : c.finite_) {
        Rational e = coeff * Rational(D);
        if (e > 0)
            num *= pow_int(p, e.get_num());
        else
            den *= pow_int(p, -e.get_num());
    }
    QuadVal g{1, 0};
    Int d = 1;
    if (!c.arch_.empty()) {
        const auto& [w, m] = c.arch_[0];
        d = m.radicand();
        Rational e = w * Rational(D);
        g = pow(QuadVal{m.rational_part(), m.radical_coeff()}, e.get_num(), d);
    }
    return sign_quadratic(Rational(num) * g.a - Rational(den), Rational(num) * g.b, d);
}

int LogValue::compare(const LogValue& a, const LogValue& b) {
    if (a.infinite_ && b.infinite_) return 0;
    if (a.infinite_) return 1;
    if (b.infinite_) return -1;
    return (a - b).signum();
}

LogValue LogValue::abs() const {
    if (infinite_) return *this;
    return signum() < 0 ? -*this : *this;
}

namespace {

enum class Purity { Neutral, FiniteP, Arch };

Purity classify(const LogValue& v, Int& p_out) {
    if (v.is_infinite()) return Purity::Neutral;
    const auto& fin = v.finite_part();
    const auto& arch = v.arch_part();
    if (fin.empty() && arch.empty()) return Purity::Neutral;
    if (arch.empty() && fin.size() == 1) {
        p_out = fin.begin()->first;
        return Purity::FiniteP;
    }
    if (fin.empty()) return Purity::Arch;
    throw MixedPlaceComparison("value is not pure at a single place");
}

const LogValue& extremum(std::span<const LogValue> values, int direction) {
    if (values.empty()) throw Error("min/max of an empty list");
    bool have_tag = false;
    Purity tag = Purity::Neutral;
    Int tag_p = 0;
    for (const LogValue& v : values) {
        Int p;
        Purity c = classify(v, p);
        if (c == Purity::Neutral) continue;
        if (!have_tag) {
            have_tag = true;
            tag = c;
            tag_p = p;
        } else if (tag != c || (c == Purity::FiniteP && p != tag_p)) {
            throw MixedPlaceComparison("min/max across heterogeneous places");
        }
    }
    const LogValue* best = &values[0];
    for (const LogValue& v : values.subspan(1))
        if (direction * LogValue::compare(v, *best) > 0) best = &v;
    return *best;
}

} // namespace

const LogValue& logvalue_min(std::span<const LogValue> values) { return extremum(values, -1); }
const LogValue& logvalue_max(std::span<const LogValue> values) { return extremum(values, +1); }

LogValue log_abs_sum(const Rational& x) {
    if (x == 0) throw InfiniteValuation("log_abs_sum needs a nonzero rational");
    LogValue out;
    for (const Int& p : support({x}))
        out = out + LogValue::log_prime(p, Rational(-valuation(x, p)));
    return out + LogValue::log_magnitude(Magnitude(::abs(x)));
}

namespace {

class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(x_, prec); }
    ~Mpfr() { mpfr_clear(x_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return x_; }

private:
    mpfr_t x_;
};

void accumulate(mpfr_ptr acc, const LogValue& v, mpfr_prec_t prec) {
    Mpfr term(prec), aux(prec);
    mpfr_set_zero(acc, 1);
    for (const auto& [p, coeff] : v.finite_part()) {
        mpfr_set_z(term.get(), p.get_mpz_t(), MPFR_RNDN);
        mpfr_log(term.get(), term.get(), MPFR_RNDN);
        mpfr_mul_q(term.get(), term.get(), coeff.get_mpq_t(), MPFR_RNDN);
        mpfr_add(acc, acc, term.get(), MPFR_RNDN);
    }
    for (const auto& [w, m] : v.arch_part()) {
        mpfr_set_z(aux.get(), m.radicand().get_mpz_t(), MPFR_RNDN);
        mpfr_sqrt(aux.get(), aux.get(), MPFR_RNDN);
        mpfr_mul_q(aux.get(), aux.get(), m.radical_coeff().get_mpq_t(), MPFR_RNDN);
        mpfr_set_q(term.get(), m.rational_part().get_mpq_t(), MPFR_RNDN);
        mpfr_add(term.get(), term.get(), aux.get(), MPFR_RNDN);
        mpfr_log(term.get(), term.get(), MPFR_RNDN);
        mpfr_mul_q(term.get(), term.get(), w.get_mpq_t(), MPFR_RNDN);
        mpfr_add(acc, acc, term.get(), MPFR_RNDN);
    }
}

} // namespace

double to_float(const LogValue& v, unsigned precision_bits) {
    if (v.is_infinite()) return HUGE_VAL;
    mpfr_prec_t prec = std::max(precision_bits, 53u) + 32;
    Mpfr acc(prec);
    accumulate(acc.get(), v, prec);
    return mpfr_get_d(acc.get(), MPFR_RNDN);
}

std::string to_decimal_string(const LogValue& v, unsigned precision_bits) {
    if (v.is_infinite()) return "inf";
    mpfr_prec_t prec = std::max(precision_bits, 53u) + 32;
    Mpfr acc(prec);
    accumulate(acc.get(), v, prec);
    // Digits describe the value *rounded to the requested precision*, so that
    // 53 bits prints exactly the shortest-faithful double (17 digits).
    mpfr_prec_round(acc.get(), std::max(precision_bits, 2u), MPFR_RNDN);
    int digits = static_cast<int>(std::ceil(precision_bits * 0.30103)) + 1;
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, acc.get());
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

namespace {

std::string render(const std::map<Int, Rational>& fin,
                   const std::vector<std::pair<Rational, Magnitude>>& arch) {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Rational& coeff, const std::string& logterm) {
        if (coeff == 0) return;
        Rational a = coeff < 0 ? Rational(-coeff) : coeff;
        if (first) {
            if (coeff < 0) os << "-";
            first = false;
        } else {
            os << (coeff < 0 ? " - " : " + ");
        }
        if (a != 1) os << to_string(a) << "*";
        os << logterm;
    };
    for (const auto& [p, c] : fin) emit(c, "log(" + to_string(p) + ")");
    for (const auto& [w, m] : arch) emit(w, "log(" + m.str() + ")");
    if (first) return "0";
    return os.str();
}

} // namespace

std::string LogValue::str() const {
    if (infinite_) return "inf";
    LogValue c = canonicalized();
    return render(c.finite_, c.arch_);
}

std::string LogValue::str_uncanonicalized() const {
    if (infinite_) return "inf";
    return render(finite_, arch_);
}

double BoundProfile::at(const Place& v) const {
    auto it = entries_.find(v);
    return it == entries_.end() ? 0.0 : it->second;
}

void BoundProfile::record(const Place& v, double value) {
    if (value < 0) throw Error("bound profiles are nonnegative");
    if (value == 0) return;
    double& slot = entries_[v];
    slot = std::max(slot, value);
}

bool BoundProfile::dominated_by(const BoundProfile& other, double tolerance) const {
    for (const auto& [v, val] : entries_)
        if (val > other.at(v) + tolerance) return false;
    return true;
}

std::string BoundProfile::str() const {
    if (entries_.empty()) return "0 everywhere";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, val] : entries_) {
        if (!first) os << ", ";
        first = false;
        os << v.str() << ": " << val;
    }
    return os.str();
}

} // namespace heights
