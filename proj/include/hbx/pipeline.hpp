#ifndef HBX_PIPELINE_HPP
#define HBX_PIPELINE_HPP

#include <vector>

#include "hbx/morphism.hpp"

namespace hbx {

/* Streamed evaluator for composites of the form
 *
 *   (id_l1 (x) f1 (x) id_r1) then (id_l2 (x) f2 (x) id_r2) then ...
 *
 * which is what every structure-map equation in the workbench reduces to
 * (a stage with several non-identity factors splits into one link per
 * factor, since disjoint legs commute).
 *
 * Materializing such a chain through compose(tensor(...)) would build the
 * padded stage operators dense — quadratic in the padded dimension, which
 * gets out of hand on four-factor tensor products. The pipeline instead
 * pushes one source basis column at a time through the links, touching only
 * nonzero coordinates, and never allocates anything larger than the result
 * plus one working column. Equivalence with the reference compose/tensor
 * path is part of the unit-test suite. */
class Pipeline {
  public:
    explicit Pipeline(size_t source_dim);

    // Appends the link id_left (x) f (x) id_right; the current dimension
    // must equal left * f.cols() * right.
    Pipeline& then(size_t left, const Morphism& f, size_t right);
    // Shorthand for a full-width stage (left = right = 1).
    Pipeline& then(const Morphism& f) { return then(1, f, 1); }

    size_t source_dim() const { return source_dim_; }
    size_t dim() const { return dim_; }  // current output dimension

    // Evaluates the chain into a dense morphism with the given endpoints;
    // src.dim()/dst.dim() must match source_dim()/dim().
    Morphism materialize(const FinObject& dst, const FinObject& src) const;

  private:
    struct Link {
        size_t left, right;
        Morphism f;
    };

    size_t source_dim_;
    size_t dim_;
    std::vector<Link> links_;
};

}  // namespace hbx

#endif
