#pragma once

#include "blockcheck/block.hpp"

namespace blockcheck {

/// Block of the direct product of the two underlying groups: degrees are the
/// pairwise products, the Cartan/decomposition matrices Kronecker products,
/// and defect/group orders multiply. Every list and matrix is indexed
/// lexicographically by (index in b1, index in b2), matching the Kronecker
/// convention, so degrees and matrices stay aligned. Optional fields are
/// carried over only when both factors have them.
BlockRecord block_product(const BlockRecord& b1, const BlockRecord& b2);

/// n-fold product of a block with itself (n >= 1).
BlockRecord tensor_power(const BlockRecord& b, unsigned n);

}  // namespace blockcheck
