#pragma once

// Even integral lattices: the bilinear form K on Z^n with cached
// determinant, signature and Smith data.

#include <cstddef>
#include <vector>

#include "toral/intmath.hpp"

namespace toral {

class EvenLattice {
public:
    const IntMat& gram() const { return gram_; }
    std::size_t rank() const { return gram_.rows(); }
    const Int& det() const { return det_; }
    int signature() const { return signature_; }
    const SmithData& smith() const { return smith_; }

    Int abs_det() const { return abs(det_); }

    friend EvenLattice validate_even_lattice(const IntMat& gram);

private:
    IntMat gram_;
    Int det_;
    int signature_ = 0;
    SmithData smith_;
};

inline EvenLattice validate_even_lattice(const IntMat& gram) {
    if (gram.rows() != gram.cols() || gram.rows() == 0)
        throw InputError("validate_even_lattice: need a nonempty square matrix");
    if (!gram.is_symmetric())
        throw NotSymmetric("validate_even_lattice: Gram matrix is not symmetric");
    for (std::size_t i = 0; i < gram.rows(); ++i)
        if (mod_floor(gram(i, i), 2) != 0)
            throw NotEven("validate_even_lattice: odd diagonal entry at index " +
                          std::to_string(i));
    EvenLattice l;
    l.gram_ = gram;
    l.det_ = det(gram);
    if (l.det_ == 0)
        throw Degenerate("validate_even_lattice: Gram matrix is degenerate");
    l.signature_ = signature(gram);
    l.smith_ = smith_normal_form(gram);
    return l;
}

} // namespace toral
