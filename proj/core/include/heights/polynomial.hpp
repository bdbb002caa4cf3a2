#ifndef HEIGHTS_POLYNOMIAL_HPP
#define HEIGHTS_POLYNOMIAL_HPP

#include "heights/ambient.hpp"
#include "heights/numeric.hpp"
#include "heights/quadratic.hpp"

#include <map>
#include <string>
#include <vector>

namespace heights {

// One exponent per coordinate of the ambient, blocks flattened in order.
using ExpVec = std::vector<unsigned>;

// A multihomogeneous polynomial with exact rational coefficients, stored
// sparsely as exponent vector -> coefficient. Every term has the same
// per-block degree vector; the zero polynomial carries a declared multidegree
// so that degree bookkeeping survives cancellation.
class MultihomogPolynomial {
public:
    static MultihomogPolynomial zero(const Ambient& amb, std::vector<int> multidegree);
    static MultihomogPolynomial constant(const Ambient& amb, const Rational& c);
    static MultihomogPolynomial variable(const Ambient& amb, int block, int index);
    static MultihomogPolynomial monomial(const Ambient& amb, const ExpVec& exps,
                                         const Rational& coeff);

    const Ambient& ambient() const { return ambient_; }
    const std::vector<int>& multidegree() const { return multidegree_; }
    const std::map<ExpVec, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }
    int total_degree() const;

    MultihomogPolynomial operator+(const MultihomogPolynomial& o) const;
    MultihomogPolynomial operator-(const MultihomogPolynomial& o) const;
    MultihomogPolynomial operator*(const MultihomogPolynomial& o) const;
    MultihomogPolynomial operator*(const Rational& c) const;
    MultihomogPolynomial operator-() const { return *this * Rational(-1); }
    MultihomogPolynomial pow(unsigned e) const;
    friend bool operator==(const MultihomogPolynomial& a, const MultihomogPolynomial& b) {
        return a.ambient_ == b.ambient_ && a.multidegree_ == b.multidegree_ &&
               a.terms_ == b.terms_;
    }

    // Value at a coordinate representative (one tuple per block). The result
    // scales by c^{deg} under rep scaling, so only degree-0 ratios of values
    // are projectively meaningful.
    Rational evaluate(const std::vector<std::vector<Rational>>& rep) const;
    QuadElement evaluate(const std::vector<std::vector<QuadElement>>& rep) const;

    // Canonical rendering; parse_polynomial(format(), ambient()) returns an
    // identical term map. Blocks print as x/y/z when there are at most three,
    // as x<block>_<index> otherwise.
    std::string format() const;
    std::string format_term(const ExpVec& exps) const;

private:
    MultihomogPolynomial(Ambient amb, std::vector<int> deg)
        : ambient_(std::move(amb)), multidegree_(std::move(deg)) {}
    Ambient ambient_;
    std::vector<int> multidegree_;
    std::map<ExpVec, Rational> terms_;
    friend MultihomogPolynomial parse_polynomial(const std::string&, const Ambient&);
    friend std::vector<MultihomogPolynomial> monomial_basis(const Ambient&,
                                                            const std::vector<int>&);
};

// Per-block degree vector of one exponent vector.
std::vector<int> block_degrees(const Ambient& amb, const ExpVec& exps);

// Grammar: expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
// factor := coefficient | variable ('^' nat)? | '(' expr ')';
// coefficient := integer ('/' positive-integer)?;
// variable := [xyz]<nat> (blocks 0/1/2) | x<block>_<index>.
// Whitespace is insignificant; there is no implicit multiplication. A leading
// sign on an expression is accepted as a convenience. Mixed multidegrees
// raise NotHomogeneous naming two offending terms.
MultihomogPolynomial parse_polynomial(const std::string& text, const Ambient& amb);

// All monomials of the given multidegree, highest exponent vector first
// (x0-major), the order format() prints terms in.
std::vector<MultihomogPolynomial> monomial_basis(const Ambient& amb,
                                                 const std::vector<int>& multidegree);

} // namespace heights

#endif
