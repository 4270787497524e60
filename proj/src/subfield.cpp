#include "lrc/subfield.hpp"

#include <algorithm>

namespace lrc {

SubfieldMap::SubfieldMap(const FiniteField& base, const FiniteField& ext)
    : base_(&base), ext_(&ext), span_(0), theta_(FieldElement::zero(ext)) {
    if (base.characteristic() != ext.characteristic())
        raise(ErrorKind::NotASubfield, "fields have different characteristics");
    if (ext.degree() % base.degree() != 0)
        raise(ErrorKind::NotASubfield, "subfield degree does not divide extension degree");
    span_ = ext.degree() / base.degree();

    if (base.degree() == 1 || span_ == 1) {
        // Prime subfields embed as the constant digit; the identity case
        // needs nothing at all. Both are handled without the basis matrix.
        theta_ = FieldElement(ext, base.degree() == 1 ? 0 : uint32_t(ext.characteristic()));
        return;
    }

    // General tower: locate the smallest root of the subfield modulus.
    uint64_t sub_order = base.group_order();
    FieldElement beta = FieldElement(ext, ext.generator_code()).pow(ext.group_order() / sub_order);
    const std::vector<uint32_t>& mod = base.modulus();
    uint32_t best = 0;
    bool found = false;
    FieldElement cand = FieldElement::one(ext);
    for (uint64_t i = 0; i < sub_order; ++i) {
        // Horner evaluation of the modulus; its coefficients are prime
        // residues, which encode identically in both fields.
        FieldElement acc = FieldElement::zero(ext);
        for (size_t j = mod.size(); j-- > 0;)
            acc = acc * cand + FieldElement(ext, mod[j]);
        if (acc.is_zero() && (!found || cand.code() < best)) {
            best = cand.code();
            found = true;
        }
        cand = cand * beta;
    }
    if (!found)
        raise(ErrorKind::NotASubfield, "subfield modulus has no root in the extension");
    theta_ = FieldElement(ext, best);

    // Products theta^j X^i form a GF(p) basis of the extension; the
    // inverse of their coordinate matrix converts extension elements to
    // tower coordinates.
    const FiniteField& prime = build_field(ext.characteristic(), 1);
    uint32_t m = ext.degree(), t = base.degree();
    GFMatrix basis(prime, m, m);
    FieldElement xgen(ext, uint32_t(ext.characteristic()));  // the class of X
    FieldElement xpow = FieldElement::one(ext);
    for (uint32_t i = 0; i < span_; ++i) {
        FieldElement cell = xpow;
        for (uint32_t j = 0; j < t; ++j) {
            std::vector<uint32_t> digits = cell.coefficients();
            for (uint32_t row = 0; row < m; ++row) basis.at(row, i * t + j) = digits[row];
            cell = cell * theta_;
        }
        xpow = xpow * xgen;
    }
    auto inv = inverse(basis);
    if (!inv)
        raise(ErrorKind::NotASubfield, "tower basis is degenerate");
    coord_map_ = std::move(*inv);
}

FieldElement SubfieldMap::embed(const FieldElement& b) const {
    if (&b.field() != base_) raise(ErrorKind::FieldMismatch, "element not in the subfield");
    if (span_ == 1) return FieldElement(*ext_, b.code());
    if (base_->degree() == 1) return FieldElement(*ext_, b.code());
    FieldElement acc = FieldElement::zero(*ext_);
    std::vector<uint32_t> digits = b.coefficients();
    for (size_t j = digits.size(); j-- > 0;)
        acc = acc * theta_ + FieldElement(*ext_, digits[j]);
    return acc;
}

std::vector<FieldElement> SubfieldMap::expand(const FieldElement& z) const {
    if (&z.field() != ext_) raise(ErrorKind::FieldMismatch, "element not in the extension");
    std::vector<FieldElement> out;
    out.reserve(span_);
    if (span_ == 1) {
        out.emplace_back(*base_, z.code());
        return out;
    }
    if (base_->degree() == 1) {
        for (uint32_t d : z.coefficients()) out.emplace_back(*base_, d);
        return out;
    }
    std::vector<uint32_t> w = mat_vec(*coord_map_, z.coefficients());
    uint32_t t = base_->degree();
    for (uint32_t i = 0; i < span_; ++i) {
        std::vector<uint32_t> block(w.begin() + i * t, w.begin() + (i + 1) * t);
        out.push_back(FieldElement::from_coefficients(*base_, block));
    }
    return out;
}

std::optional<FieldElement> SubfieldMap::descend(const FieldElement& z) const {
    std::vector<FieldElement> coords = expand(z);
    for (size_t i = 1; i < coords.size(); ++i)
        if (!coords[i].is_zero()) return std::nullopt;
    return coords[0];
}

std::optional<FieldElement> in_base_field(const FieldElement& x, uint64_t q) {
    const FiniteField& f = x.field();
    auto split = prime_power_split(q);
    if (!split || split->first != f.characteristic())
        raise(ErrorKind::NotASubfield,
              "q = " + std::to_string(q) + " is not a power of the characteristic");
    if (f.degree() % split->second != 0)
        raise(ErrorKind::NotASubfield, "GF(" + std::to_string(q) + ") does not sit inside this field");

    bool fixed = x.pow(q) == x;
    const FiniteField& base = build_field(split->first, split->second);
    SubfieldMap map(base, f);
    std::optional<FieldElement> image = map.descend(x);
    // The Frobenius fixed-point test and the coordinate test pick out the
    // same set; disagreement would mean the tower map is wrong.
    if (fixed != image.has_value())
        throw std::logic_error("subfield membership tests disagree");
    return image;
}

}  // namespace lrc
