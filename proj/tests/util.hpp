#ifndef HBX_TESTS_UTIL_HPP
#define HBX_TESTS_UTIL_HPP

#include <random>

#include "hbx/morphism.hpp"

namespace hbx::testutil {

// deterministic generators for property-style tests

inline std::mt19937& rng() {
    static std::mt19937 gen(0x5eed);
    return gen;
}

inline Scalar random_scalar(const FieldSpec& field, int bound = 3) {
    std::uniform_int_distribution<int> d(-bound, bound);
    return Scalar::of_int(d(rng()), field);
}

inline Scalar random_nonzero_scalar(const FieldSpec& field, int bound = 3) {
    Scalar s = random_scalar(field, bound);
    while (s.is_zero())
        s = random_scalar(field, bound);
    return s;
}

// dense random matrix, zero wherever degrees disagree
inline Morphism random_morphism(const FinObject& dst, const FinObject& src, int bound = 3) {
    MatrixBuilder b(dst, src);
    for (size_t i = 0; i < dst.dim(); ++i)
        for (size_t j = 0; j < src.dim(); ++j)
            if (dst.degree(i) == src.degree(j))
                b.at(i, j) = random_scalar(src.field(), bound);
    return Morphism(dst, src, b.take());
}

inline Morphism random_invertible(const FinObject& x) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Morphism f = random_morphism(x, x);
        try {
            inverse(f);
            return f;
        } catch (const precondition_error&) {
        }
    }
    return identity(x);
}

}  // namespace hbx::testutil

#endif
