#include "heights/point.hpp"

#include <sstream>

namespace heights {

namespace {

bool is_zero_q(const Rational& x) { return x == 0; }
bool is_zero_q(const QuadElement& x) { return x.is_zero(); }

template <class T>
void check_some_nonzero(const Ambient& amb, const std::vector<std::vector<T>>& coords) {
    if (coords.size() != static_cast<size_t>(amb.num_blocks()))
        throw InvalidPoint("point has " + std::to_string(coords.size()) + " factor(s), ambient " +
                           amb.str() + " has " + std::to_string(amb.num_blocks()));
    for (int b = 0; b < amb.num_blocks(); ++b) {
        const auto& blk = coords[static_cast<size_t>(b)];
        if (blk.size() != static_cast<size_t>(amb.block_size(b)))
            throw InvalidPoint("factor " + std::to_string(b) + " needs " +
                               std::to_string(amb.block_size(b)) + " coordinates");
        bool nonzero = false;
        for (const auto& c : blk) nonzero = nonzero || !is_zero_q(c);
        if (!nonzero) throw InvalidPoint("factor " + std::to_string(b) + " is identically zero");
    }
}

} // namespace

ProjectivePoint ProjectivePoint::rational(const Ambient& amb, RationalCoords coords) {
    check_some_nonzero(amb, coords);
    return ProjectivePoint(amb, std::nullopt, std::move(coords));
}

ProjectivePoint ProjectivePoint::quadratic(const Ambient& amb, const QuadraticField& F,
                                           QuadCoords coords) {
    check_some_nonzero(amb, coords);
    for (const auto& blk : coords)
        for (const auto& c : blk)
            if (!(c.field() == F))
                throw FieldMismatch("coordinate lives in " + c.field().str() + ", point in " +
                                    F.str());
    return ProjectivePoint(amb, F, std::move(coords));
}

const RationalCoords& ProjectivePoint::rational_coords() const {
    if (!is_rational()) throw FieldMismatch("point has quadratic coordinates");
    return std::get<RationalCoords>(coords_);
}

const QuadCoords& ProjectivePoint::quad_coords() const {
    if (is_rational()) throw FieldMismatch("point has rational coordinates");
    return std::get<QuadCoords>(coords_);
}

QuadCoords ProjectivePoint::coords_in(const QuadraticField& F) const {
    if (!is_rational()) {
        if (!(*field_ == F))
            throw FieldMismatch("cannot move a point of " + field_->str() + " into " + F.str());
        return quad_coords();
    }
    QuadCoords out;
    for (const auto& blk : rational_coords()) {
        std::vector<QuadElement> row;
        row.reserve(blk.size());
        for (const auto& c : blk) row.push_back(QuadElement::from_rational(c, F));
        out.push_back(std::move(row));
    }
    return out;
}

std::string ProjectivePoint::str() const {
    std::ostringstream os;
    auto emit = [&os](const auto& coords, auto render) {
        for (size_t b = 0; b < coords.size(); ++b) {
            if (b) os << " x ";
            os << "(";
            for (size_t j = 0; j < coords[b].size(); ++j) {
                if (j) os << ":";
                os << render(coords[b][j]);
            }
            os << ")";
        }
    };
    if (is_rational())
        emit(std::get<RationalCoords>(coords_), [](const Rational& q) { return to_string(q); });
    else
        emit(std::get<QuadCoords>(coords_), [](const QuadElement& q) { return q.str(); });
    return os.str();
}

ProjectivePoint normalize_point(const ProjectivePoint& pt) {
    if (pt.is_rational()) {
        RationalCoords out;
        for (const auto& blk : pt.rational_coords()) {
            Int den(1), num(0);
            for (const auto& c : blk) den = lcm(den, c.get_den());
            std::vector<Rational> row;
            row.reserve(blk.size());
            for (const auto& c : blk) row.push_back(c * Rational(den));
            for (const auto& c : row) num = gcd(num, c.get_num());
            int sign = 0;
            for (const auto& c : row)
                if (c != 0) { sign = c > 0 ? 1 : -1; break; }
            Rational scale = Rational(sign) / Rational(num);
            for (auto& c : row) c *= scale;
            out.push_back(std::move(row));
        }
        return ProjectivePoint::rational(pt.ambient(), std::move(out));
    }
    const QuadraticField& F = *pt.quad_field();
    QuadCoords out;
    for (const auto& blk : pt.quad_coords()) {
        Int den(1), num(0);
        for (const auto& c : blk) den = lcm(lcm(den, c.a().get_den()), c.b().get_den());
        std::vector<QuadElement> row;
        row.reserve(blk.size());
        Rational d(den);
        for (const auto& c : blk) row.emplace_back(c.a() * d, c.b() * d, F);
        for (const auto& c : row) num = gcd(gcd(num, c.a().get_num()), c.b().get_num());
        int sign = 0;
        for (const auto& c : row) {
            if (c.a() != 0) { sign = c.a() > 0 ? 1 : -1; break; }
            if (c.b() != 0) { sign = c.b() > 0 ? 1 : -1; break; }
        }
        Rational scale = Rational(sign) / Rational(num);
        for (auto& c : row) c = QuadElement(c.a() * scale, c.b() * scale, F);
        out.push_back(std::move(row));
    }
    return ProjectivePoint::quadratic(pt.ambient(), F, std::move(out));
}

namespace {

template <class T>
bool minors_vanish(const std::vector<std::vector<T>>& p, const std::vector<std::vector<T>>& q) {
    for (size_t b = 0; b < p.size(); ++b)
        for (size_t i = 0; i < p[b].size(); ++i)
            for (size_t j = i + 1; j < p[b].size(); ++j)
                if (!is_zero_q(p[b][i] * q[b][j] - p[b][j] * q[b][i])) return false;
    return true;
}

} // namespace

bool points_equal(const ProjectivePoint& p, const ProjectivePoint& q) {
    if (p.ambient() != q.ambient())
        throw AmbientMismatch("comparing points of " + p.ambient().str() + " and " +
                              q.ambient().str());
    if (p.is_rational() && q.is_rational())
        return minors_vanish(p.rational_coords(), q.rational_coords());
    const QuadraticField& F = p.is_rational() ? *q.quad_field() : *p.quad_field();
    return minors_vanish(p.coords_in(F), q.coords_in(F));
}

} // namespace heights
