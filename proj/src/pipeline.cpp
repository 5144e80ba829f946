#include "hbx/pipeline.hpp"

#include <algorithm>

namespace hbx {

Pipeline::Pipeline(size_t source_dim) : source_dim_(source_dim), dim_(source_dim) {
    if (source_dim == 0)
        throw shape_error("pipeline source dimension must be positive");
}

Pipeline& Pipeline::then(size_t left, const Morphism& f, size_t right) {
    if (left == 0 || right == 0)
        throw shape_error("pipeline link padding must be positive");
    if (left * f.cols() * right != dim_)
        throw shape_error("pipeline link expects dimension " +
                          std::to_string(left * f.cols() * right) + ", chain is at " +
                          std::to_string(dim_));
    dim_ = left * f.rows() * right;
    links_.push_back(Link{left, right, f});
    return *this;
}

namespace {

// column-sparse view of a morphism's entries
struct ColSparse {
    std::vector<size_t> offsets;  // cols + 1
    std::vector<std::pair<size_t, Scalar>> nz;

    explicit ColSparse(const Morphism& f) {
        offsets.assign(f.cols() + 1, 0);
        for (size_t j = 0; j < f.cols(); ++j) {
            for (size_t i = 0; i < f.rows(); ++i)
                if (!f.at(i, j).is_zero())
                    nz.emplace_back(i, f.at(i, j));
            offsets[j + 1] = nz.size();
        }
    }
};

}  // namespace

Morphism Pipeline::materialize(const FinObject& dst, const FinObject& src) const {
    if (src.dim() != source_dim_)
        throw shape_error("pipeline source is " + std::to_string(source_dim_) +
                          ", object has dimension " + std::to_string(src.dim()));
    if (dst.dim() != dim_)
        throw shape_error("pipeline output is " + std::to_string(dim_) +
                          ", object has dimension " + std::to_string(dst.dim()));

    const FieldSpec& field = src.field();
    std::vector<ColSparse> sparse;
    sparse.reserve(links_.size());
    size_t max_dim = std::max(source_dim_, dim_);
    for (size_t k = 0; k < links_.size(); ++k) {
        sparse.emplace_back(links_[k].f);
        size_t out = links_[k].left * links_[k].f.rows() * links_[k].right;
        max_dim = std::max(max_dim, out);
    }

    // epoch-stamped scatter buffer shared across columns
    std::vector<Scalar> buf(max_dim, Scalar::zero(field));
    std::vector<uint64_t> stamp(max_dim, 0);
    uint64_t epoch = 0;

    MatrixBuilder out(dst, src);
    std::vector<std::pair<size_t, Scalar>> cur, next;
    for (size_t col = 0; col < source_dim_; ++col) {
        cur.assign(1, {col, Scalar::one(field)});
        for (size_t k = 0; k < links_.size() && !cur.empty(); ++k) {
            const Link& link = links_[k];
            const ColSparse& cs = sparse[k];
            size_t fc = link.f.cols(), fr = link.f.rows(), r = link.right;
            ++epoch;
            next.clear();
            for (const auto& [idx, val] : cur) {
                size_t b = idx % r;
                size_t rest = idx / r;
                size_t i = rest % fc;
                size_t a = rest / fc;
                for (size_t t = cs.offsets[i]; t < cs.offsets[i + 1]; ++t) {
                    size_t j = cs.nz[t].first;
                    size_t out_idx = (a * fr + j) * r + b;
                    Scalar term = cs.nz[t].second * val;
                    if (stamp[out_idx] != epoch) {
                        stamp[out_idx] = epoch;
                        buf[out_idx] = term;
                        next.emplace_back(out_idx, Scalar());
                    } else {
                        buf[out_idx] = buf[out_idx] + term;
                    }
                }
            }
            std::sort(next.begin(), next.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            cur.clear();
            for (auto& [idx, unused] : next) {
                (void)unused;
                if (!buf[idx].is_zero())
                    cur.emplace_back(idx, buf[idx]);
            }
        }
        for (const auto& [idx, val] : cur)
            out.at(idx, col) = val;
    }
    return Morphism(dst, src, out.take());
}

}  // namespace hbx
