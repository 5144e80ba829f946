#ifndef HBX_FIELD_HPP
#define HBX_FIELD_HPP

#include <cstdint>
#include <string>

#include "hbx/errors.hpp"

namespace hbx {

/* Base field of the ambient category: the rationals or a prime field F_p.
 * All arithmetic in the workbench is exact; there is no floating point. */
struct FieldSpec {
    enum class Kind { rationals, prime };

    Kind kind = Kind::rationals;
    uint32_t p = 0;  // modulus, prime kind only

    static FieldSpec rationals() { return FieldSpec{Kind::rationals, 0}; }
    static FieldSpec prime(uint32_t p);

    bool is_prime_field() const { return kind == Kind::prime; }
    uint32_t characteristic() const { return is_prime_field() ? p : 0; }

    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string str() const;
};

/* One exact field element, tagged by its field.
 *
 * Rationals are kept in lowest terms with positive denominator on int64
 * limbs; every operation reduces and range-checks through 128-bit
 * intermediates, raising overflow_error instead of wrapping. Residues mod p
 * live in [0, p). */
class Scalar {
  public:
    Scalar() = default;  // zero over Q

    static Scalar zero(const FieldSpec& f) { return of_int(0, f); }
    static Scalar one(const FieldSpec& f) { return of_int(1, f); }
    static Scalar of_int(int64_t n, const FieldSpec& f);
    static Scalar of_fraction(int64_t num, int64_t den, const FieldSpec& f);
    // Accepts "n" or "n/d" (d != 0); used by the file formats.
    static Scalar parse(const std::string& text, const FieldSpec& f);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    // Lowest-terms view; for prime fields den() is always 1.
    int64_t num() const { return num_; }
    int64_t den() const { return den_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // div_by_zero on zero divisor
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(uint64_t e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;  // "n" or "n/d"; residue digits for F_p

  private:
    int64_t num_ = 0;
    int64_t den_ = 1;
    FieldSpec field_ = FieldSpec::rationals();

    void check_same_field(const Scalar& o) const;
    static Scalar make_rational(__int128 num, __int128 den, const FieldSpec& f);
};

bool is_prime_u32(uint32_t n);

}  // namespace hbx

#endif
