#ifndef HEIGHTS_QUADRATIC_HPP
#define HEIGHTS_QUADRATIC_HPP

#include "heights/logvalue.hpp"
#include "heights/places.hpp"

#include <optional>
#include <string>
#include <vector>

namespace heights {

// Q(sqrt(d)) for squarefree d not in {0, 1}.
class QuadraticField {
public:
    static QuadraticField make(const Int& d);

    const Int& d() const { return d_; }
    Int discriminant() const;
    bool is_real() const { return d_ > 0; }

    friend bool operator==(const QuadraticField& a, const QuadraticField& b) { return a.d_ == b.d_; }
    std::string str() const { return "Q(sqrt(" + to_string(d_) + "))"; }

private:
    explicit QuadraticField(Int d) : d_(std::move(d)) {}
    Int d_;
};

// a + b*sqrt(d), exact.
class QuadElement {
public:
    QuadElement(Rational a, Rational b, QuadraticField field)
        : a_(std::move(a)), b_(std::move(b)), field_(std::move(field)) {}
    static QuadElement from_rational(const Rational& a, const QuadraticField& F) {
        return {a, Rational(0), F};
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const QuadraticField& field() const { return field_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QuadElement conjugate() const { return {a_, -b_, field_}; }
    Rational norm() const { return a_ * a_ - Rational(field_.d()) * b_ * b_; }
    Rational trace() const { return a_ * 2; }

    QuadElement operator+(const QuadElement& o) const;
    QuadElement operator-(const QuadElement& o) const;
    QuadElement operator*(const QuadElement& o) const;
    QuadElement operator/(const QuadElement& o) const;
    QuadElement operator-() const { return {-a_, -b_, field_}; }
    friend bool operator==(const QuadElement& a, const QuadElement& b) {
        return a.a_ == b.a_ && a.b_ == b.b_ && a.field_ == b.field_;
    }

    std::string str() const;

private:
    Rational a_, b_;
    QuadraticField field_;
    void require_same_field(const QuadElement& o) const;
};

// A place of Q(sqrt(d)) lying over a place of Q. Local degrees sum to 2 over
// every base place. The two split places are ordered by the smaller mod-p
// root; over p = 2 (d = 1 mod 8) the places are told apart by the 2-adic
// root's residue mod 4 and root_seed stores that residue.
class ExtPlace {
public:
    enum class Kind { RealPlus, RealMinus, ComplexPair, Split, Inert, Ramified };

    ExtPlace(Place base, Kind kind, QuadraticField field, Int root_seed = Int(0));

    const Place& base() const { return base_; }
    Kind kind() const { return kind_; }
    const QuadraticField& field() const { return field_; }
    int local_degree() const;
    bool is_archimedean() const { return base_.is_archimedean(); }
    // Mod-p seed of the chosen square root of d (split places only).
    const Int& root_seed() const;

    std::string str() const;
    friend bool operator==(const ExtPlace& a, const ExtPlace& b) {
        return a.base_ == b.base_ && a.kind_ == b.kind_ && a.field_ == b.field_ &&
               a.seed_ == b.seed_;
    }

private:
    Place base_;
    Kind kind_;
    QuadraticField field_;
    Int seed_;
};

// All places of F above v, in canonical order. Degrees always sum to 2.
std::vector<ExtPlace> places_above(const Place& v, const QuadraticField& F);

// Square root of d mod p^k lifting the smaller mod-p root (odd p only;
// p | d or p = 2 raise UnsupportedHensel, non-residues raise NotSplit).
Int hensel_sqrt(const Int& d, const Int& p, unsigned k);

// val extending v_p, normalized so |alpha|_w = p^{-val}. Split places embed
// alpha as a + b*rhat for the Hensel lift rhat and escalate the precision k
// from v_p(norm) + 1 until the valuation is pinned; non-split places read it
// off the norm: val = v_p(N(alpha)) / 2.
Rational ext_valuation(const QuadElement& alpha, const ExtPlace& w);

Magnitude ext_absolute_value(const QuadElement& alpha, const ExtPlace& w);

struct DegreeFormulaReport {
    Place base;
    std::vector<ExtPlace> places;
    int degree_sum = 0;
    bool ok = false;
};
DegreeFormulaReport check_degree_formula(const QuadraticField& F, const Place& v);

struct NormFormulaReport {
    Place base;
    bool ok = false;
    // prod over w|v of |alpha|_w^{[L_w:K_v]} and |N(alpha)|_v, as exact logs.
    LogValue lhs_log;
    LogValue rhs_log;
};
NormFormulaReport check_norm_formula(const QuadElement& alpha, const Place& v);

} // namespace heights

#endif
