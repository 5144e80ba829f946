#ifndef HBX_MORPHISM_HPP
#define HBX_MORPHISM_HPP

#include <vector>

#include "hbx/object.hpp"

namespace hbx {

/* An exact matrix between based objects; every structure map in the
 * workbench is one of these. Entries are stored dense, row-major,
 * dst.dim() x src.dim(). Values are immutable once constructed.
 *
 * Morphisms must be degree-preserving: a nonzero entry may only connect
 * basis vectors of equal degree. This is what makes the bicharacter braiding
 * natural, and the constructor rejects violations outright. */
class Morphism {
  public:
    Morphism(FinObject dst, FinObject src, std::vector<Scalar> entries);

    static Morphism zero(const FinObject& dst, const FinObject& src);

    const FinObject& src() const { return src_; }
    const FinObject& dst() const { return dst_; }
    size_t rows() const { return dst_.dim(); }
    size_t cols() const { return src_.dim(); }
    const Scalar& at(size_t row, size_t col) const { return m_[row * cols() + col]; }
    const std::vector<Scalar>& entries() const { return m_; }

    bool operator==(const Morphism& o) const;
    bool operator!=(const Morphism& o) const { return !(*this == o); }

  private:
    FinObject dst_;
    FinObject src_;
    std::vector<Scalar> m_;
};

// Convenience for building entry tables before wrapping them in a Morphism.
class MatrixBuilder {
  public:
    MatrixBuilder(const FinObject& dst, const FinObject& src)
        : rows_(dst.dim()),
          cols_(src.dim()),
          m_(dst.dim() * src.dim(), Scalar::zero(src.field())) {}

    Scalar& at(size_t row, size_t col) { return m_[row * cols_ + col]; }
    std::vector<Scalar> take() { return std::move(m_); }

  private:
    size_t rows_, cols_;
    std::vector<Scalar> m_;
};

Morphism identity(const FinObject& x);

// g after f; requires f.dst == g.src as objects.
Morphism compose(const Morphism& g, const Morphism& f);

// Kronecker product with the row-major index convention
// (i, j) -> i * dim2 + j on both sides.
Morphism tensor(const Morphism& f, const Morphism& g);

// c_{M,N}: M (x) N -> N (x) M, e_i (x) e_j -> kappa(i,j) e_j (x) e_i with
// kappa = q^(deg i * deg j) (1 under swap).
Morphism braiding(const FinObject& m, const FinObject& n);

bool is_symmetric(const BraidSpec& braid);

// Gauss-Jordan inverse over the exact field; precondition_error("Singular")
// if not invertible.
Morphism inverse(const Morphism& f);

// fT: dst -> src with fT[j][i] = f[i][j]; degree-preserving maps stay so.
Morphism transpose(const Morphism& f);

Morphism operator+(const Morphism& a, const Morphism& b);
Morphism operator-(const Morphism& a, const Morphism& b);
Morphism operator*(const Scalar& s, const Morphism& f);

}  // namespace hbx

#endif
