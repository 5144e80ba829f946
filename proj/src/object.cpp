#include "hbx/object.hpp"

namespace hbx {

BraidSpec BraidSpec::swap(const FieldSpec& f) {
    return BraidSpec(Kind::swap, 1, Scalar::one(f));
}

BraidSpec BraidSpec::sign(const FieldSpec& f) {
    if (f.characteristic() == 2)
        throw precondition_error("CharTwo", "sign braiding degenerates in characteristic 2");
    return BraidSpec(Kind::sign, 2, -Scalar::one(f));
}

BraidSpec BraidSpec::bicharacter(uint32_t modulus, const Scalar& q) {
    if (modulus == 0)
        throw braid_error("bicharacter modulus must be positive");
    if (!(q.pow(modulus) == Scalar::one(q.field())))
        throw braid_error("q^" + std::to_string(modulus) + " != 1 in " + q.field().str());
    return BraidSpec(Kind::bicharacter, modulus, q);
}

Scalar BraidSpec::coefficient(uint32_t di, uint32_t dj) const {
    if (kind_ == Kind::swap)
        return Scalar::one(field());
    return q_.pow(uint64_t(di) * dj);
}

bool BraidSpec::symmetric() const {
    if (kind_ == Kind::swap)
        return true;
    return q_ * q_ == Scalar::one(field());
}

bool BraidSpec::operator==(const BraidSpec& o) const {
    return modulus_ == o.modulus_ && q_ == o.q_;
}

std::string BraidSpec::str() const {
    switch (kind_) {
        case Kind::swap:
            return "swap";
        case Kind::sign:
            return "sign";
        default:
            return "bicharacter(" + std::to_string(modulus_) + "," + q_.str() + ")";
    }
}

FinObject::FinObject(size_t dim, std::vector<uint32_t> grading, BraidSpec braid)
    : dim_(dim), grading_(std::move(grading)), braid_(braid) {
    if (dim_ == 0)
        throw shape_error("object dimension must be positive");
    if (grading_.size() != dim_)
        throw shape_error("grading length " + std::to_string(grading_.size()) +
                          " != dimension " + std::to_string(dim_));
    for (uint32_t d : grading_) {
        if (d >= braid_.modulus())
            throw shape_error("degree " + std::to_string(d) + " outside [0, " +
                              std::to_string(braid_.modulus()) + ")");
    }
}

FinObject::FinObject(size_t dim, BraidSpec braid)
    : FinObject(dim, std::vector<uint32_t>(dim, 0), braid) {}

FinObject FinObject::unit(const BraidSpec& braid) { return FinObject(1, braid); }

bool FinObject::operator==(const FinObject& o) const {
    return dim_ == o.dim_ && grading_ == o.grading_ && braid_ == o.braid_;
}

FinObject tensor(const FinObject& a, const FinObject& b) {
    if (a.braid() != b.braid())
        throw braid_error("tensor of objects over different braidings");
    if (a.field() != b.field())
        throw field_error("tensor of objects over different fields");
    std::vector<uint32_t> grading(a.dim() * b.dim());
    uint32_t n = a.braid().modulus();
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < b.dim(); ++j)
            grading[i * b.dim() + j] = (a.degree(i) + b.degree(j)) % n;
    return FinObject(a.dim() * b.dim(), std::move(grading), a.braid());
}

}  // namespace hbx
