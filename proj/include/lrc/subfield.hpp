#ifndef LRC_SUBFIELD_HPP
#define LRC_SUBFIELD_HPP

#include <optional>
#include <vector>

#include "lrc/fields.hpp"
#include "lrc/matrices.hpp"

namespace lrc {

// Fixes a copy of GF(p^t) inside GF(p^M), t | M, and converts between the
// two views. The extension is spanned over the subfield by the powers
// 1, X, .., X^(S-1) of its own polynomial generator, S = M/t, so every
// extension element has a unique coordinate vector of S subfield elements.
//
// The embedding sends the subfield generator to the smallest root (in
// code order) of the subfield modulus inside the extension, which makes
// the whole map deterministic.
class SubfieldMap {
  public:
    // Errors: NotASubfield when the characteristics differ or t does not
    // divide M.
    SubfieldMap(const FiniteField& base, const FiniteField& ext);

    const FiniteField& base() const { return *base_; }
    const FiniteField& ext() const { return *ext_; }
    uint32_t span() const { return span_; }

    FieldElement embed(const FieldElement& b) const;

    // Coordinates over the base field, length span(), constant term first.
    std::vector<FieldElement> expand(const FieldElement& z) const;

    // Engaged exactly when z lies in the embedded subfield; then it is the
    // preimage. Agrees with the Frobenius fixed-point test z^q = z.
    std::optional<FieldElement> descend(const FieldElement& z) const;

  private:
    const FiniteField* base_;
    const FiniteField* ext_;
    uint32_t span_;
    FieldElement theta_;                  // image of the subfield generator
    std::optional<GFMatrix> coord_map_;   // inverse basis matrix over GF(p)
};

// Frobenius membership test against GF(q) placed inside x's field, with
// the canonical image when it passes. Errors: NotASubfield when q is not
// a power of the characteristic or its degree does not divide the field's.
std::optional<FieldElement> in_base_field(const FieldElement& x, uint64_t q);

}  // namespace lrc

#endif
