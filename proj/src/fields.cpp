#include "lrc/fields.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace lrc {
namespace {

constexpr uint64_t kFieldSizeCap = uint64_t(1) << 31;
// Discrete log tables are worth their memory up to about this many elements.
constexpr uint64_t kTableCap = uint64_t(1) << 21;

// Plain GF(p)[x] helpers on raw coefficient vectors (low degree first).
// These run before any FiniteField object exists, during modulus search.
using PolyVec = std::vector<uint32_t>;

void trim(PolyVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyVec poly_mul_mod(const PolyVec& a, const PolyVec& b, const PolyVec& mod, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            acc[i + j] = (acc[i + j] + uint64_t(a[i]) * b[j]) % p;
    }
    // Reduce by the monic modulus of degree d.
    size_t d = mod.size() - 1;
    for (size_t i = acc.size(); i-- > d;) {
        uint64_t c = acc[i];
        if (c == 0) continue;
        acc[i] = 0;
        for (size_t j = 0; j < d; ++j) {
            uint64_t sub = c * mod[j] % p;
            acc[i - d + j] = (acc[i - d + j] + p - sub) % p;
        }
    }
    acc.resize(std::min(acc.size(), d));
    PolyVec out(acc.begin(), acc.end());
    trim(out);
    return out;
}

PolyVec poly_pow_mod(PolyVec base, uint64_t e, const PolyVec& mod, uint64_t p) {
    PolyVec result{1};
    while (e > 0) {
        if (e & 1) result = poly_mul_mod(result, base, mod, p);
        base = poly_mul_mod(base, base, mod, p);
        e >>= 1;
    }
    return result;
}

PolyVec poly_mod(PolyVec a, const PolyVec& b, uint64_t p) {
    trim(a);
    size_t db = b.size() - 1;
    uint64_t lead_inv = 1;
    // b is monic everywhere this is called from, but stay general.
    if (b[db] != 1) {
        // Fermat inverse of the leading coefficient.
        uint64_t x = b[db], r = 1, e = p - 2;
        while (e) {
            if (e & 1) r = r * x % p;
            x = x * x % p;
            e >>= 1;
        }
        lead_inv = r;
    }
    while (a.size() > db) {
        uint64_t c = uint64_t(a.back()) * lead_inv % p;
        size_t shift = a.size() - 1 - db;
        if (c != 0)
            for (size_t j = 0; j <= db; ++j) {
                uint64_t sub = c * b[j] % p;
                a[shift + j] = uint32_t((a[shift + j] + p - sub) % p);
            }
        a.pop_back();
        trim(a);
        if (a.size() <= db) break;
    }
    trim(a);
    return a;
}

PolyVec poly_gcd(PolyVec a, PolyVec b, uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PolyVec r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin's criterion: f of degree m is irreducible over GF(p) iff
// x^(p^m) = x mod f and gcd(f, x^(p^(m/t)) - x) = 1 for every prime t | m.
bool is_irreducible(const PolyVec& f, uint64_t p) {
    uint32_t m = uint32_t(f.size() - 1);
    if (m == 1) return true;
    if (f[0] == 0) return false;  // divisible by x
    std::vector<PolyVec> frob(m + 1);  // frob[i] = x^(p^i) mod f
    frob[0] = {0, 1};
    for (uint32_t i = 1; i <= m; ++i) frob[i] = poly_pow_mod(frob[i - 1], p, f, p);
    PolyVec x{0, 1};
    if (frob[m] != x) return false;
    for (uint64_t t : prime_factors(m)) {
        PolyVec diff = frob[m / t];
        diff.resize(std::max<size_t>(diff.size(), 2), 0);
        diff[1] = uint32_t((uint64_t(diff[1]) + p - 1) % p);
        trim(diff);
        PolyVec g = poly_gcd(f, diff, p);
        if (g.size() > 1) return false;
    }
    return true;
}

// First monic irreducible of degree m, scanning constant terms upward
// (the coefficient tuple (c_0, .., c_{m-1}) counted as a base-p integer
// with c_0 most significant gives exactly the low-degree-first
// lexicographic order).
PolyVec canonical_modulus(uint64_t p, uint32_t m) {
    if (m == 1) return {0, 1};  // x itself; the prime field needs no reduction
    PolyVec f(m + 1, 0);
    f[m] = 1;
    std::vector<uint32_t> tuple(m, 0);  // tuple[i] = coefficient of x^i
    while (true) {
        for (uint32_t i = 0; i < m; ++i) f[i] = tuple[i];
        if (is_irreducible(f, p)) return f;
        // Increment the tuple in lexicographic order: bump the highest
        // index first so earlier (lower-degree) positions change slowest.
        int i = int(m) - 1;
        while (i >= 0) {
            if (++tuple[i] < p) break;
            tuple[i] = 0;
            --i;
        }
        if (i < 0) break;  // cannot happen: irreducibles exist for every degree
    }
    raise(ErrorKind::InvalidParams, "no irreducible modulus found");
}

}  // namespace

uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) {
        uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::optional<std::pair<uint64_t, uint32_t>> prime_power_split(uint64_t q) {
    if (q < 2) return std::nullopt;
    for (uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            uint64_t rest = q;
            uint32_t t = 0;
            while (rest % d == 0) {
                rest /= d;
                ++t;
            }
            if (rest != 1) return std::nullopt;
            return std::make_pair(d, t);
        }
    }
    return std::make_pair(q, 1u);  // q itself is prime
}

FiniteField::FiniteField(uint64_t p, uint32_t m) : p_(p), m_(m) {
    size_ = 1;
    for (uint32_t i = 0; i < m; ++i) {
        size_ *= p;
        if (size_ > kFieldSizeCap)
            raise(ErrorKind::SizeOverflow, "field size exceeds 2^31");
    }
    modulus_ = canonical_modulus(p, m);
    group_factors_ = prime_factors(size_ - 1);

    // Smallest generator of the multiplicative group, in code order.
    if (size_ == 2) {
        generator_ = 1;
    } else {
        uint64_t n1 = size_ - 1;
        for (uint32_t c = 2; c < size_; ++c) {
            bool ok = true;
            for (uint64_t f : group_factors_) {
                uint32_t t = 1;
                // pow() would use tables which are not built yet; walk by
                // square and multiply over slow_mul directly.
                uint32_t base = c;
                uint64_t e = n1 / f;
                while (e) {
                    if (e & 1) t = m_ == 1 ? uint32_t(uint64_t(t) * base % p_) : slow_mul(t, base);
                    base = m_ == 1 ? uint32_t(uint64_t(base) * base % p_) : slow_mul(base, base);
                    e >>= 1;
                }
                if (t == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                generator_ = c;
                break;
            }
        }
    }

    if (m_ > 1 && size_ <= kTableCap) {
        exp_.resize(size_ - 1);
        log_.assign(size_, 0);
        uint32_t acc = 1;
        for (uint64_t i = 0; i < size_ - 1; ++i) {
            exp_[i] = acc;
            log_[acc] = uint32_t(i);
            acc = slow_mul(acc, generator_);
        }
        tables_ = true;
    }
}

FiniteField::~FiniteField() = default;

uint32_t FiniteField::add(uint32_t a, uint32_t b) const {
    if (m_ == 1) {
        uint64_t s = uint64_t(a) + b;
        return uint32_t(s >= p_ ? s - p_ : s);
    }
    uint64_t out = 0, place = 1;
    uint64_t x = a, y = b;
    while (x || y) {
        uint64_t s = x % p_ + y % p_;
        if (s >= p_) s -= p_;
        out += s * place;
        place *= p_;
        x /= p_;
        y /= p_;
    }
    return uint32_t(out);
}

uint32_t FiniteField::neg(uint32_t a) const {
    if (m_ == 1) return a == 0 ? 0 : uint32_t(p_ - a);
    uint64_t out = 0, place = 1, x = a;
    while (x) {
        uint64_t d = x % p_;
        out += (d == 0 ? 0 : p_ - d) * place;
        place *= p_;
        x /= p_;
    }
    return uint32_t(out);
}

uint32_t FiniteField::sub(uint32_t a, uint32_t b) const {
    if (m_ == 1) {
        return a >= b ? a - b : uint32_t(a + p_ - b);
    }
    return add(a, neg(b));
}

uint32_t FiniteField::slow_mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    uint32_t da[64], db[64];
    uint64_t acc[128] = {0};
    uint32_t na = 0, nb = 0;
    for (uint64_t x = a; x; x /= p_) da[na++] = uint32_t(x % p_);
    for (uint64_t x = b; x; x /= p_) db[nb++] = uint32_t(x % p_);
    for (uint32_t i = 0; i < na; ++i)
        for (uint32_t j = 0; j < nb; ++j)
            acc[i + j] = (acc[i + j] + uint64_t(da[i]) * db[j]) % p_;
    // Reduce modulo the monic field modulus.
    for (int i = int(na + nb) - 2; i >= int(m_); --i) {
        uint64_t c = acc[i];
        if (c == 0) continue;
        acc[i] = 0;
        for (uint32_t j = 0; j < m_; ++j) {
            uint64_t sub = c * modulus_[j] % p_;
            acc[i - m_ + j] = (acc[i - m_ + j] + p_ - sub) % p_;
        }
    }
    uint64_t out = 0, place = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        out += acc[i] * place;
        place *= p_;
    }
    return uint32_t(out);
}

uint32_t FiniteField::mul(uint32_t a, uint32_t b) const {
    if (m_ == 1) return uint32_t(uint64_t(a) * b % p_);
    if (a == 0 || b == 0) return 0;
    if (tables_) {
        uint64_t s = uint64_t(log_[a]) + log_[b];
        uint64_t n1 = size_ - 1;
        if (s >= n1) s -= n1;
        return exp_[s];
    }
    return slow_mul(a, b);
}

uint32_t FiniteField::inv(uint32_t a) const {
    if (a == 0) raise(ErrorKind::DivisionByZeroPolynomial, "inverse of zero");
    if (m_ == 1) {
        // Extended Euclid on integers.
        int64_t t = 0, nt = 1, r = int64_t(p_), nr = a;
        while (nr) {
            int64_t qq = r / nr;
            int64_t tmp = t - qq * nt;
            t = nt;
            nt = tmp;
            tmp = r - qq * nr;
            r = nr;
            nr = tmp;
        }
        if (t < 0) t += int64_t(p_);
        return uint32_t(t);
    }
    if (tables_) {
        uint32_t l = log_[a];
        return l == 0 ? a /* a == 1 */ : exp_[size_ - 1 - l];
    }
    return pow(a, size_ - 2);
}

uint32_t FiniteField::pow(uint32_t a, uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (tables_ && m_ > 1) {
        uint64_t n1 = size_ - 1;
        uint64_t l = uint64_t(log_[a]) % n1;
        // __int128 keeps l*e exact; l and e can both approach 2^31.
        unsigned __int128 prod = (unsigned __int128)l * (e % n1);
        return exp_[uint64_t(prod % n1)];
    }
    uint32_t result = 1, base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::vector<uint32_t> FiniteField::decode(uint32_t code) const {
    std::vector<uint32_t> digits(m_, 0);
    uint64_t x = code;
    for (uint32_t i = 0; i < m_ && x; ++i) {
        digits[i] = uint32_t(x % p_);
        x /= p_;
    }
    return digits;
}

uint32_t FiniteField::encode(const std::vector<uint32_t>& digits) const {
    if (digits.size() > m_)
        raise(ErrorKind::LengthMismatch, "coefficient vector longer than field degree");
    uint64_t out = 0, place = 1;
    for (uint32_t d : digits) {
        if (d >= p_) raise(ErrorKind::InvalidParams, "coefficient not reduced mod p");
        out += uint64_t(d) * place;
        place *= p_;
    }
    return uint32_t(out);
}

const FiniteField& build_field(uint64_t p, uint32_t m) {
    if (!is_prime_u64(p))
        raise(ErrorKind::NonPrimeCharacteristic, "characteristic " + std::to_string(p) + " is not prime");
    if (m == 0) raise(ErrorKind::InvalidParams, "extension degree must be at least 1");

    static std::mutex mu;
    static std::map<std::pair<uint64_t, uint32_t>, std::unique_ptr<FiniteField>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, m);
    auto it = registry.find(key);
    if (it == registry.end())
        it = registry.emplace(key, std::unique_ptr<FiniteField>(new FiniteField(p, m))).first;
    return *it->second;
}

FieldElement FieldElement::pow_signed(int64_t e) const {
    if (e >= 0) return pow(uint64_t(e));
    uint64_t order = field_->group_order();
    uint64_t red = uint64_t(-(e % int64_t(order)));
    return pow(order - red);
}

uint32_t multiplicative_order(uint64_t q, uint64_t n) {
    if (n == 0 || q < 2) raise(ErrorKind::InvalidParams, "order requires n >= 1 and q >= 2");
    if (gcd_u64(q, n) != 1)
        raise(ErrorKind::NotCoprime, "gcd(" + std::to_string(n) + ", " + std::to_string(q) + ") != 1");
    if (n == 1) return 1;
    uint64_t t = q % n;
    uint32_t s = 1;
    while (t != 1) {
        t = t * (q % n) % n;
        ++s;
    }
    return s;
}

FieldElement primitive_nth_root(const FiniteField& field, uint64_t n) {
    if (n == 0) raise(ErrorKind::InvalidParams, "root order must be positive");
    uint64_t group = field.group_order();
    if (group % n != 0)
        raise(ErrorKind::NoSuchRoot,
              "no element of order " + std::to_string(n) + " in field of size " + std::to_string(field.size()));
    return FieldElement(field, field.pow(field.generator_code(), group / n));
}

}  // namespace lrc
