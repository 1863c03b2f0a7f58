#pragma once

#include "symplt/cholesky.h"
#include "symplt/matrix.h"

namespace symplt {

/// The 2n x 2n block lower-triangular factor
///
///     L = [ L11   0  ]
///         [ L21  L22 ]
///
/// with L11 lower and L22 upper triangular.
struct BlockFactor {
    BlockFactor() = default;
    BlockFactor(TriangularFactor l11, Matrix l21, TriangularFactor l22);

    Index n() const noexcept { return l11.size(); }
    /// Full matrix; the (1,2) block is exactly zero.
    Matrix assemble() const;

    TriangularFactor l11;
    Matrix l21;
    TriangularFactor l22;
};

}  // namespace symplt
