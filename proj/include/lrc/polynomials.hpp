#ifndef LRC_POLYNOMIALS_HPP
#define LRC_POLYNOMIALS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "lrc/fields.hpp"
#include "lrc/subfield.hpp"

namespace lrc {

// Dense univariate polynomial over one finite field, coefficients stored
// low degree first as element codes with no trailing zeros. The zero
// polynomial has an empty coefficient vector and degree -1.
class Polynomial {
  public:
    explicit Polynomial(const FiniteField& field) : field_(&field) {}

    static Polynomial from_codes(const FiniteField& field, std::vector<uint32_t> codes);
    static Polynomial constant(const FieldElement& c);
    static Polynomial one(const FiniteField& field) { return from_codes(field, {1}); }
    static Polynomial x(const FiniteField& field) { return from_codes(field, {0, 1}); }
    static Polynomial monomial(const FiniteField& field, uint32_t deg, const FieldElement& c);

    const FiniteField& field() const { return *field_; }
    int degree() const { return int(codes_.size()) - 1; }
    bool is_zero() const { return codes_.empty(); }
    bool is_monic() const { return !codes_.empty() && codes_.back() == 1; }

    const std::vector<uint32_t>& codes() const { return codes_; }
    uint32_t coeff_code(size_t i) const { return i < codes_.size() ? codes_[i] : 0; }
    FieldElement coeff(size_t i) const { return {*field_, coeff_code(i)}; }
    FieldElement leading() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const FieldElement& c) const;

    // Quotient and remainder; errors: DivisionByZeroPolynomial,
    // FieldMismatch.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

    FieldElement eval(const FieldElement& point) const;

    bool operator==(const Polynomial& o) const { return field_ == o.field_ && codes_ == o.codes_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

  private:
    void check_same(const Polynomial& o) const {
        if (field_ != o.field_) raise(ErrorKind::FieldMismatch, "polynomials over different fields");
    }

    const FiniteField* field_;
    std::vector<uint32_t> codes_;
};

// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial poly_gcd(Polynomial a, Polynomial b);

// x^rho - c over the field of c.
Polynomial sparse_binomial(uint32_t rho, const FieldElement& c);

// Whether g divides x^n - 1 over its own field. Errors:
// NonMonicGenerator, InvalidParams when n == 0.
bool divides_xn_minus_1(const Polynomial& g, uint32_t n);

// Re-expresses a polynomial over the extension as one over the base
// field. Errors: CoefficientNotInBaseField when any coefficient lies
// outside the embedded subfield.
Polynomial descend_coefficients(const Polynomial& g, const SubfieldMap& map);

// Convenience overload resolving the subfield from its size.
Polynomial descend_coefficients(const Polynomial& g, uint64_t q);

Polynomial embed_coefficients(const Polynomial& g, const SubfieldMap& map);

}  // namespace lrc

#endif
