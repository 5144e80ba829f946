#ifndef HBX_OBJECT_HPP
#define HBX_OBJECT_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hbx/field.hpp"

namespace hbx {

/* Braiding backend for the ambient category.
 *
 * Swap is the plain flip. A bicharacter braiding flips basis vectors with a
 * scalar q^(deg_i * deg_j) read off the grading; sign is the bicharacter
 * instance (N=2, q=-1). Constructors normalize so that equality can compare
 * (modulus, q) directly. */
class BraidSpec {
  public:
    enum class Kind { swap, sign, bicharacter };

    static BraidSpec swap(const FieldSpec& f);
    static BraidSpec sign(const FieldSpec& f);
    // Requires q^N = 1 in the field.
    static BraidSpec bicharacter(uint32_t modulus, const Scalar& q);

    Kind kind() const { return kind_; }
    // Grading modulus: 1 for swap, 2 for sign, N otherwise.
    uint32_t modulus() const { return modulus_; }
    const Scalar& q() const { return q_; }
    const FieldSpec& field() const { return q_.field(); }

    // q^(di*dj); di, dj are residues mod modulus().
    Scalar coefficient(uint32_t di, uint32_t dj) const;

    // True iff c composed with itself is the identity on every pair of
    // objects, i.e. swap, or q^2 = 1.
    bool symmetric() const;

    bool operator==(const BraidSpec& o) const;
    bool operator!=(const BraidSpec& o) const { return !(*this == o); }

    std::string str() const;

  private:
    BraidSpec(Kind k, uint32_t modulus, Scalar q) : kind_(k), modulus_(modulus), q_(q) {}

    Kind kind_ = Kind::swap;
    uint32_t modulus_ = 1;
    Scalar q_;
};

/* A finite-dimensional based object: a dimension, one degree per basis
 * vector, and the braiding backend it lives in. The monoidal structure is
 * strict on the nose: tensoring concatenates index ranges row-major and adds
 * degrees, so K tensor X equals X as a value. */
class FinObject {
  public:
    FinObject(size_t dim, std::vector<uint32_t> grading, BraidSpec braid);
    // Trivially graded object of the given dimension.
    FinObject(size_t dim, BraidSpec braid);

    // The unit object K: dimension 1, degree 0.
    static FinObject unit(const BraidSpec& braid);

    size_t dim() const { return dim_; }
    uint32_t degree(size_t i) const { return grading_[i]; }
    const std::vector<uint32_t>& grading() const { return grading_; }
    const BraidSpec& braid() const { return braid_; }
    const FieldSpec& field() const { return braid_.field(); }

    bool operator==(const FinObject& o) const;
    bool operator!=(const FinObject& o) const { return !(*this == o); }

  private:
    size_t dim_;
    std::vector<uint32_t> grading_;
    BraidSpec braid_;
};

// Strict tensor product of objects: dims multiply, degrees add mod N,
// index (i, j) -> i * b.dim() + j.
FinObject tensor(const FinObject& a, const FinObject& b);

}  // namespace hbx

#endif
