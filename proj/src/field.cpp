#include "hbx/field.hpp"

#include <numeric>

namespace hbx {

bool is_prime_u32(uint32_t n) {
    if (n < 2)
        return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

FieldSpec FieldSpec::prime(uint32_t p) {
    if (!is_prime_u32(p))
        throw precondition_error("InvalidPrime", "modulus " + std::to_string(p) + " is not prime");
    if (p >= (uint32_t{1} << 31))
        throw precondition_error("InvalidPrime", "modulus too large (must be < 2^31)");
    return FieldSpec{Kind::prime, p};
}

std::string FieldSpec::str() const {
    return is_prime_field() ? "F" + std::to_string(p) : "Q";
}

namespace {

int64_t checked_i64(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw overflow_error("rational arithmetic exceeded 64-bit range");
    return static_cast<int64_t>(v);
}

uint64_t mod_reduce(__int128 v, uint32_t p) {
    __int128 r = v % p;
    if (r < 0)
        r += p;
    return static_cast<uint64_t>(r);
}

// residue^(p-2) mod p
uint64_t mod_inverse(uint64_t a, uint32_t p) {
    if (a == 0)
        throw div_by_zero("inverse of 0 in F" + std::to_string(p));
    uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1)
            result = (unsigned __int128)result * base % p;
        base = (unsigned __int128)base * base % p;
        e >>= 1;
    }
    return result;
}

}  // namespace

Scalar Scalar::make_rational(__int128 num, __int128 den, const FieldSpec& f) {
    if (den == 0)
        throw div_by_zero("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 a = num < 0 ? -num : num, b = den;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    Scalar s;
    s.num_ = checked_i64(num);
    s.den_ = checked_i64(den);
    s.field_ = f;
    return s;
}

Scalar Scalar::of_int(int64_t n, const FieldSpec& f) {
    Scalar s;
    s.field_ = f;
    if (f.is_prime_field()) {
        s.num_ = static_cast<int64_t>(mod_reduce(n, f.p));
        s.den_ = 1;
    } else {
        s.num_ = n;
        s.den_ = 1;
    }
    return s;
}

Scalar Scalar::of_fraction(int64_t num, int64_t den, const FieldSpec& f) {
    if (f.is_prime_field()) {
        if (den % f.p == 0)
            throw div_by_zero("denominator divisible by " + std::to_string(f.p));
        uint64_t d = mod_reduce(den, f.p);
        uint64_t n = mod_reduce(num, f.p);
        Scalar s;
        s.num_ = static_cast<int64_t>((unsigned __int128)n * mod_inverse(d, f.p) % f.p);
        s.den_ = 1;
        s.field_ = f;
        return s;
    }
    return make_rational(num, den, f);
}

Scalar Scalar::parse(const std::string& text, const FieldSpec& f) {
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return of_int(std::stoll(text), f);
        int64_t num = std::stoll(text.substr(0, slash));
        int64_t den = std::stoll(text.substr(slash + 1));
        return of_fraction(num, den, f);
    } catch (const std::invalid_argument&) {
        throw error("malformed scalar '" + text + "'");
    } catch (const std::out_of_range&) {
        throw overflow_error("scalar '" + text + "' out of 64-bit range");
    }
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw field_error("mixed fields " + field_.str() + " and " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_prime_field()) {
        Scalar s = *this;
        s.num_ = static_cast<int64_t>(mod_reduce((__int128)num_ + o.num_, field_.p));
        return s;
    }
    return make_rational((__int128)num_ * o.den_ + (__int128)o.num_ * den_,
                         (__int128)den_ * o.den_, field_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_prime_field()) {
        Scalar s = *this;
        s.num_ = static_cast<int64_t>(mod_reduce((__int128)num_ * o.num_, field_.p));
        return s;
    }
    return make_rational((__int128)num_ * o.num_, (__int128)den_ * o.den_, field_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (field_.is_prime_field())
        s.num_ = num_ == 0 ? 0 : field_.p - num_;
    else
        s.num_ = checked_i64(-(__int128)num_);
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw div_by_zero("inverse of zero");
    if (field_.is_prime_field()) {
        Scalar s = *this;
        s.num_ = static_cast<int64_t>(mod_inverse(num_, field_.p));
        return s;
    }
    return make_rational(den_, num_, field_);
}

Scalar Scalar::pow(uint64_t e) const {
    Scalar result = one(field_), base = *this;
    while (e) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

bool Scalar::operator==(const Scalar& o) const {
    return field_ == o.field_ && num_ == o.num_ && den_ == o.den_;
}

std::string Scalar::str() const {
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace hbx
