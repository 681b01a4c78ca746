#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace batchlab {

class FieldElement;

// Prime field GF(p), 2 <= p <= 251, so every element fits in one byte.
// All values are canonical representatives in [0, p). Field objects are
// immutable values; two fields are interchangeable iff their moduli agree.
class Field {
public:
    explicit Field(int p) : p_(static_cast<std::uint16_t>(p)) {
        if (p < 2 || p > 251 || !is_prime(p))
            throw std::invalid_argument("Field: modulus must be a prime in [2, 251], got " +
                                        std::to_string(p));
    }

    int modulus() const { return p_; }

    // Canonical representative of an arbitrary integer.
    std::uint8_t canon(long long v) const {
        long long r = v % p_;
        if (r < 0) r += p_;
        return static_cast<std::uint8_t>(r);
    }

    std::uint8_t add(std::uint8_t a, std::uint8_t b) const {
        return static_cast<std::uint8_t>((a + b) % p_);
    }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const {
        return static_cast<std::uint8_t>((a + p_ - b) % p_);
    }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
        return static_cast<std::uint8_t>(a * b % p_);
    }
    std::uint8_t neg(std::uint8_t a) const {
        return static_cast<std::uint8_t>(a == 0 ? 0 : p_ - a);
    }
    std::uint8_t inv(std::uint8_t a) const {
        if (a == 0) throw std::domain_error("Field: zero has no inverse");
        // extended Euclid on (a, p)
        int r0 = a, r1 = p_, s0 = 1, s1 = 0;
        while (r1 != 0) {
            int q = r0 / r1;
            int r2 = r0 - q * r1;
            int s2 = s0 - q * s1;
            r0 = r1;
            r1 = r2;
            s0 = s1;
            s1 = s2;
        }
        return canon(s0);
    }
    std::uint8_t div(std::uint8_t a, std::uint8_t b) const { return mul(a, inv(b)); }

    FieldElement element(long long v) const;
    FieldElement zero() const;
    FieldElement one() const;

    friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

private:
    static bool is_prime(int p) {
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return p >= 2;
    }
    std::uint16_t p_;
};

// A single field element: canonical value plus its field. Mixing elements of
// different fields is rejected.
class FieldElement {
public:
    FieldElement(const Field& field, long long value) : field_(field), value_(field.canon(value)) {}

    int value() const { return value_; }
    const Field& field() const { return field_; }

    FieldElement operator+(const FieldElement& o) const {
        return make(field_.add(value_, same(o).value_));
    }
    FieldElement operator-(const FieldElement& o) const {
        return make(field_.sub(value_, same(o).value_));
    }
    FieldElement operator*(const FieldElement& o) const {
        return make(field_.mul(value_, same(o).value_));
    }
    FieldElement operator/(const FieldElement& o) const {
        return make(field_.div(value_, same(o).value_));
    }
    FieldElement operator-() const { return make(field_.neg(value_)); }
    FieldElement inverse() const { return make(field_.inv(value_)); }
    bool is_zero() const { return value_ == 0; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
        return os << static_cast<int>(e.value_);
    }

private:
    FieldElement make(std::uint8_t v) const { return FieldElement(field_, v); }
    const FieldElement& same(const FieldElement& o) const {
        if (field_ != o.field_)
            throw std::invalid_argument("FieldElement: operands live in different fields (GF(" +
                                        std::to_string(field_.modulus()) + ") vs GF(" +
                                        std::to_string(o.field_.modulus()) + "))");
        return o;
    }
    Field field_;
    std::uint8_t value_;
};

inline FieldElement Field::element(long long v) const { return FieldElement(*this, v); }
inline FieldElement Field::zero() const { return FieldElement(*this, 0); }
inline FieldElement Field::one() const { return FieldElement(*this, 1); }

}  // namespace batchlab
