#ifndef LRC_FIELDS_HPP
#define LRC_FIELDS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "lrc/errors.hpp"

namespace lrc {

// GF(p^m) in a polynomial basis over GF(p). The modulus is the
// lexicographically smallest monic irreducible of degree m, coefficients
// compared low degree first, so two fields with the same (p, m) are the
// same field. build_field() interns instances; FiniteField pointers are
// stable for the life of the process and field identity is pointer
// identity.
//
// Elements travel as integer codes: the element sum c_i x^i has code
// sum c_i p^i, which for prime fields is just the residue itself. All
// arithmetic lives on the field object; FieldElement is a typed wrapper
// that pins an element to its field.
class FiniteField {
  public:
    uint64_t characteristic() const { return p_; }
    uint32_t degree() const { return m_; }
    uint64_t size() const { return size_; }
    bool is_prime_field() const { return m_ == 1; }

    // Monic irreducible modulus, length m+1, low degree first.
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    uint64_t group_order() const { return size_ - 1; }
    const std::vector<uint64_t>& group_order_prime_factors() const { return group_factors_; }

    // Smallest multiplicative generator in code order.
    uint32_t generator_code() const { return generator_; }

    // Arithmetic on element codes. Codes must be < size(); this is not
    // rechecked on the hot paths.
    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;  // a != 0
    uint32_t pow(uint32_t a, uint64_t e) const;

    std::vector<uint32_t> decode(uint32_t code) const;  // m base-p digits, low first
    uint32_t encode(const std::vector<uint32_t>& digits) const;

    ~FiniteField();
    FiniteField(const FiniteField&) = delete;
    FiniteField& operator=(const FiniteField&) = delete;

  private:
    FiniteField(uint64_t p, uint32_t m);
    friend const FiniteField& build_field(uint64_t p, uint32_t m);

    uint32_t slow_mul(uint32_t a, uint32_t b) const;

    uint64_t p_ = 0;
    uint32_t m_ = 0;
    uint64_t size_ = 0;
    std::vector<uint32_t> modulus_;
    std::vector<uint64_t> group_factors_;
    uint32_t generator_ = 0;
    // Discrete log tables, built for extension fields of moderate size.
    bool tables_ = false;
    std::vector<uint32_t> exp_;
    std::vector<uint32_t> log_;
};

// Returns the interned GF(p^m). Errors: NonPrimeCharacteristic when p is
// not prime, SizeOverflow when p^m exceeds 2^31.
const FiniteField& build_field(uint64_t p, uint32_t m);

class FieldElement {
  public:
    FieldElement(const FiniteField& field, uint32_t code) : field_(&field), code_(code) {}

    static FieldElement zero(const FiniteField& field) { return {field, 0}; }
    static FieldElement one(const FiniteField& field) { return {field, field.size() > 1 ? 1u : 0u}; }
    static FieldElement from_coefficients(const FiniteField& field, const std::vector<uint32_t>& digits) {
        return {field, field.encode(digits)};
    }

    const FiniteField& field() const { return *field_; }
    uint32_t code() const { return code_; }
    bool is_zero() const { return code_ == 0; }
    std::vector<uint32_t> coefficients() const { return field_->decode(code_); }

    FieldElement operator+(const FieldElement& o) const { return {same(o), field_->add(code_, o.code_)}; }
    FieldElement operator-(const FieldElement& o) const { return {same(o), field_->sub(code_, o.code_)}; }
    FieldElement operator*(const FieldElement& o) const { return {same(o), field_->mul(code_, o.code_)}; }
    FieldElement operator-() const { return {*field_, field_->neg(code_)}; }

    FieldElement inverse() const {
        if (code_ == 0) raise(ErrorKind::DivisionByZeroPolynomial, "inverse of zero field element");
        return {*field_, field_->inv(code_)};
    }

    // a^e with e >= 0; negative exponents go through pow_signed.
    FieldElement pow(uint64_t e) const { return {*field_, field_->pow(code_, e)}; }
    FieldElement pow_signed(int64_t e) const;

    bool operator==(const FieldElement& o) const { return field_ == o.field_ && code_ == o.code_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

  private:
    const FiniteField& same(const FieldElement& o) const {
        if (field_ != o.field_)
            raise(ErrorKind::FieldMismatch, "elements of different fields in one operation");
        return *field_;
    }

    const FiniteField* field_;
    uint32_t code_;
};

// Order of q in (Z/nZ)^*. Errors: NotCoprime when gcd(n, q) != 1,
// InvalidParams when n == 0 or q < 2.
uint32_t multiplicative_order(uint64_t q, uint64_t n);

// Element of multiplicative order exactly n, derived from the field's
// canonical generator; deterministic. Errors: NoSuchRoot when n does not
// divide size-1.
FieldElement primitive_nth_root(const FiniteField& field, uint64_t n);

uint64_t gcd_u64(uint64_t a, uint64_t b);

// Distinct prime factors, ascending, by trial division.
std::vector<uint64_t> prime_factors(uint64_t n);

bool is_prime_u64(uint64_t n);

// q = p^t exactly, for p prime; nullopt otherwise.
std::optional<std::pair<uint64_t, uint32_t>> prime_power_split(uint64_t q);

}  // namespace lrc

#endif
