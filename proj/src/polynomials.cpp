#include "lrc/polynomials.hpp"

#include <algorithm>

namespace lrc {

Polynomial Polynomial::from_codes(const FiniteField& field, std::vector<uint32_t> codes) {
    Polynomial p(field);
    while (!codes.empty() && codes.back() == 0) codes.pop_back();
    p.codes_ = std::move(codes);
    return p;
}

Polynomial Polynomial::constant(const FieldElement& c) {
    return from_codes(c.field(), {c.code()});
}

Polynomial Polynomial::monomial(const FiniteField& field, uint32_t deg, const FieldElement& c) {
    if (&c.field() != &field) raise(ErrorKind::FieldMismatch, "coefficient from another field");
    if (c.is_zero()) return Polynomial(field);
    std::vector<uint32_t> codes(deg + 1, 0);
    codes[deg] = c.code();
    return from_codes(field, std::move(codes));
}

FieldElement Polynomial::leading() const {
    return {*field_, codes_.empty() ? 0 : codes_.back()};
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same(o);
    std::vector<uint32_t> out(std::max(codes_.size(), o.codes_.size()), 0);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = field_->add(coeff_code(i), o.coeff_code(i));
    return from_codes(*field_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_same(o);
    std::vector<uint32_t> out(std::max(codes_.size(), o.codes_.size()), 0);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = field_->sub(coeff_code(i), o.coeff_code(i));
    return from_codes(*field_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same(o);
    if (is_zero() || o.is_zero()) return Polynomial(*field_);
    std::vector<uint32_t> out(codes_.size() + o.codes_.size() - 1, 0);
    for (size_t i = 0; i < codes_.size(); ++i) {
        if (codes_[i] == 0) continue;
        for (size_t j = 0; j < o.codes_.size(); ++j) {
            if (o.codes_[j] == 0) continue;
            out[i + j] = field_->add(out[i + j], field_->mul(codes_[i], o.codes_[j]));
        }
    }
    return from_codes(*field_, std::move(out));
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
    if (&c.field() != field_) raise(ErrorKind::FieldMismatch, "scalar from another field");
    if (c.is_zero()) return Polynomial(*field_);
    std::vector<uint32_t> out(codes_);
    for (uint32_t& v : out) v = field_->mul(v, c.code());
    return from_codes(*field_, std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    check_same(divisor);
    if (divisor.is_zero())
        raise(ErrorKind::DivisionByZeroPolynomial, "division by the zero polynomial");
    if (degree() < divisor.degree()) return {Polynomial(*field_), *this};

    std::vector<uint32_t> rem(codes_);
    std::vector<uint32_t> quot(codes_.size() - divisor.codes_.size() + 1, 0);
    uint32_t lead_inv = field_->inv(divisor.codes_.back());
    size_t dd = divisor.codes_.size() - 1;
    for (size_t i = rem.size(); i-- > dd;) {
        uint32_t c = field_->mul(rem[i], lead_inv);
        if (c == 0) continue;
        quot[i - dd] = c;
        for (size_t j = 0; j <= dd; ++j)
            rem[i - dd + j] = field_->sub(rem[i - dd + j], field_->mul(c, divisor.codes_[j]));
    }
    return {from_codes(*field_, std::move(quot)), from_codes(*field_, std::move(rem))};
}

FieldElement Polynomial::eval(const FieldElement& point) const {
    if (&point.field() != field_) raise(ErrorKind::FieldMismatch, "evaluation point from another field");
    uint32_t acc = 0;
    for (size_t i = codes_.size(); i-- > 0;)
        acc = field_->add(field_->mul(acc, point.code()), codes_[i]);
    return {*field_, acc};
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && !a.is_monic())
        a = a.scaled(a.leading().inverse());
    return a;
}

Polynomial sparse_binomial(uint32_t rho, const FieldElement& c) {
    if (rho == 0) raise(ErrorKind::InvalidParams, "binomial degree must be positive");
    std::vector<uint32_t> codes(rho + 1, 0);
    codes[0] = c.field().neg(c.code());
    codes[rho] = 1;
    return Polynomial::from_codes(c.field(), std::move(codes));
}

bool divides_xn_minus_1(const Polynomial& g, uint32_t n) {
    if (n == 0) raise(ErrorKind::InvalidParams, "length must be positive");
    if (!g.is_monic()) raise(ErrorKind::NonMonicGenerator, "generator must be monic");
    const FiniteField& f = g.field();
    if (g.degree() > int(n)) return false;
    // x^n mod g by repeated squaring keeps this cheap for any n.
    Polynomial x = Polynomial::x(f);
    Polynomial acc = Polynomial::one(f);
    uint32_t e = n;
    Polynomial base = x.divmod(g).second;
    while (e) {
        if (e & 1) acc = (acc * base).divmod(g).second;
        base = (base * base).divmod(g).second;
        e >>= 1;
    }
    return acc == Polynomial::one(f).divmod(g).second;
}

Polynomial descend_coefficients(const Polynomial& g, const SubfieldMap& map) {
    if (&g.field() != &map.ext())
        raise(ErrorKind::FieldMismatch, "polynomial is not over the map's extension field");
    std::vector<uint32_t> out(g.codes().size(), 0);
    for (size_t i = 0; i < g.codes().size(); ++i) {
        std::optional<FieldElement> down = map.descend(g.coeff(i));
        if (!down)
            raise(ErrorKind::CoefficientNotInBaseField,
                  "coefficient of x^" + std::to_string(i) + " lies outside GF(" +
                      std::to_string(map.base().size()) + ")");
        out[i] = down->code();
    }
    return Polynomial::from_codes(map.base(), std::move(out));
}

Polynomial descend_coefficients(const Polynomial& g, uint64_t q) {
    auto split = prime_power_split(q);
    if (!split || split->first != g.field().characteristic())
        raise(ErrorKind::NotASubfield, "q is not a power of the coefficient field's characteristic");
    const FiniteField& base = build_field(split->first, split->second);
    return descend_coefficients(g, SubfieldMap(base, g.field()));
}

Polynomial embed_coefficients(const Polynomial& g, const SubfieldMap& map) {
    if (&g.field() != &map.base())
        raise(ErrorKind::FieldMismatch, "polynomial is not over the map's base field");
    std::vector<uint32_t> out(g.codes().size(), 0);
    for (size_t i = 0; i < g.codes().size(); ++i)
        out[i] = map.embed(g.coeff(i)).code();
    return Polynomial::from_codes(map.ext(), std::move(out));
}

}  // namespace lrc
