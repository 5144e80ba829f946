#include "hbx/morphism.hpp"

namespace hbx {

Morphism::Morphism(FinObject dst, FinObject src, std::vector<Scalar> entries)
    : dst_(std::move(dst)), src_(std::move(src)), m_(std::move(entries)) {
    if (src_.field() != dst_.field())
        throw field_error("morphism endpoints over different fields");
    if (src_.braid() != dst_.braid())
        throw braid_error("morphism endpoints over different braidings");
    if (m_.size() != rows() * cols())
        throw shape_error("entry table is " + std::to_string(m_.size()) + ", expected " +
                          std::to_string(rows() * cols()));
    for (size_t i = 0; i < rows(); ++i) {
        for (size_t j = 0; j < cols(); ++j) {
            const Scalar& v = m_[i * cols() + j];
            if (v.field() != src_.field())
                throw field_error("entry field does not match object field");
            if (!v.is_zero() && dst_.degree(i) != src_.degree(j))
                throw degree_error("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") connects degrees " + std::to_string(dst_.degree(i)) +
                                   " and " + std::to_string(src_.degree(j)));
        }
    }
}

Morphism Morphism::zero(const FinObject& dst, const FinObject& src) {
    return Morphism(dst, src,
                    std::vector<Scalar>(dst.dim() * src.dim(), Scalar::zero(src.field())));
}

bool Morphism::operator==(const Morphism& o) const {
    return src_ == o.src_ && dst_ == o.dst_ && m_ == o.m_;
}

Morphism identity(const FinObject& x) {
    MatrixBuilder b(x, x);
    for (size_t i = 0; i < x.dim(); ++i)
        b.at(i, i) = Scalar::one(x.field());
    return Morphism(x, x, b.take());
}

Morphism compose(const Morphism& g, const Morphism& f) {
    if (f.src().field() != g.src().field())
        throw field_error("composing morphisms over different fields");
    if (f.dst() != g.src())
        throw shape_error("compose: inner objects differ (" + std::to_string(f.rows()) +
                          " vs " + std::to_string(g.cols()) + ")");
    MatrixBuilder b(g.dst(), f.src());
    for (size_t i = 0; i < g.rows(); ++i) {
        for (size_t k = 0; k < g.cols(); ++k) {
            const Scalar& gik = g.at(i, k);
            if (gik.is_zero())
                continue;
            for (size_t j = 0; j < f.cols(); ++j) {
                const Scalar& fkj = f.at(k, j);
                if (!fkj.is_zero())
                    b.at(i, j) = b.at(i, j) + gik * fkj;
            }
        }
    }
    return Morphism(g.dst(), f.src(), b.take());
}

Morphism tensor(const Morphism& f, const Morphism& g) {
    if (f.src().field() != g.src().field())
        throw field_error("tensoring morphisms over different fields");
    if (f.src().braid() != g.src().braid())
        throw braid_error("tensoring morphisms over different braidings");
    FinObject dst = tensor(f.dst(), g.dst());
    FinObject src = tensor(f.src(), g.src());
    MatrixBuilder b(dst, src);
    for (size_t i1 = 0; i1 < f.rows(); ++i1)
        for (size_t j1 = 0; j1 < f.cols(); ++j1) {
            const Scalar& fv = f.at(i1, j1);
            if (fv.is_zero())
                continue;
            for (size_t i2 = 0; i2 < g.rows(); ++i2)
                for (size_t j2 = 0; j2 < g.cols(); ++j2) {
                    const Scalar& gv = g.at(i2, j2);
                    if (!gv.is_zero())
                        b.at(i1 * g.rows() + i2, j1 * g.cols() + j2) = fv * gv;
                }
        }
    return Morphism(dst, src, b.take());
}

Morphism braiding(const FinObject& m, const FinObject& n) {
    if (m.braid() != n.braid())
        throw braid_error("braiding of objects over different braidings");
    if (m.field() != n.field())
        throw field_error("braiding of objects over different fields");
    FinObject dst = tensor(n, m);
    FinObject src = tensor(m, n);
    MatrixBuilder b(dst, src);
    for (size_t i = 0; i < m.dim(); ++i)
        for (size_t j = 0; j < n.dim(); ++j)
            b.at(j * m.dim() + i, i * n.dim() + j) =
                m.braid().coefficient(m.degree(i), n.degree(j));
    return Morphism(dst, src, b.take());
}

bool is_symmetric(const BraidSpec& braid) { return braid.symmetric(); }

Morphism inverse(const Morphism& f) {
    if (f.rows() != f.cols())
        throw shape_error("inverse of a non-square morphism");
    size_t n = f.rows();
    const FieldSpec& field = f.src().field();
    // augmented [A | I], reduced in place
    std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(2 * n, Scalar::zero(field)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j)
            a[i][j] = f.at(i, j);
        a[i][n + i] = Scalar::one(field);
    }
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero())
            ++pivot;
        if (pivot == n)
            throw precondition_error("Singular", "morphism is not invertible");
        std::swap(a[col], a[pivot]);
        Scalar inv = a[col][col].inverse();
        for (size_t j = 0; j < 2 * n; ++j)
            a[col][j] = a[col][j] * inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero())
                continue;
            Scalar factor = a[i][col];
            for (size_t j = 0; j < 2 * n; ++j)
                a[i][j] = a[i][j] - factor * a[col][j];
        }
    }
    MatrixBuilder b(f.src(), f.dst());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            b.at(i, j) = a[i][n + j];
    return Morphism(f.src(), f.dst(), b.take());
}

Morphism transpose(const Morphism& f) {
    MatrixBuilder b(f.src(), f.dst());
    for (size_t i = 0; i < f.rows(); ++i)
        for (size_t j = 0; j < f.cols(); ++j)
            b.at(j, i) = f.at(i, j);
    return Morphism(f.src(), f.dst(), b.take());
}

Morphism operator+(const Morphism& a, const Morphism& b) {
    if (a.src() != b.src() || a.dst() != b.dst())
        throw shape_error("adding morphisms with different endpoints");
    std::vector<Scalar> m(a.entries());
    for (size_t k = 0; k < m.size(); ++k)
        m[k] = m[k] + b.entries()[k];
    return Morphism(a.dst(), a.src(), std::move(m));
}

Morphism operator-(const Morphism& a, const Morphism& b) {
    if (a.src() != b.src() || a.dst() != b.dst())
        throw shape_error("subtracting morphisms with different endpoints");
    std::vector<Scalar> m(a.entries());
    for (size_t k = 0; k < m.size(); ++k)
        m[k] = m[k] - b.entries()[k];
    return Morphism(a.dst(), a.src(), std::move(m));
}

Morphism operator*(const Scalar& s, const Morphism& f) {
    std::vector<Scalar> m(f.entries());
    for (auto& v : m)
        v = s * v;
    return Morphism(f.dst(), f.src(), std::move(m));
}

}  // namespace hbx
