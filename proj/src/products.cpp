#include "blockcheck/products.hpp"

namespace blockcheck {

namespace {

Vec degree_products(const Vec& a, const Vec& b) {
    Vec out;
    out.reserve(a.size() * b.size());
    for (const Int& x : a)
        for (const Int& y : b) out.push_back(x * y);
    return out;
}

}  // namespace

BlockRecord block_product(const BlockRecord& b1, const BlockRecord& b2) {
    if (b1.p != b2.p)
        throw Error(Error::Kind::BadParameters,
                    "prime mismatch: " + b1.p.get_str() + " vs " + b2.p.get_str());

    BlockRecord out;
    out.name = b1.name + " (x) " + b2.name;
    out.p = b1.p;
    out.defect_group_order = b1.defect_group_order * b2.defect_group_order;
    out.brauer_degrees = degree_products(b1.brauer_degrees, b2.brauer_degrees);

    if (b1.ordinary_degrees && b2.ordinary_degrees)
        out.ordinary_degrees = degree_products(*b1.ordinary_degrees, *b2.ordinary_degrees);
    if (b1.cartan && b2.cartan) out.cartan = kronecker(*b1.cartan, *b2.cartan);
    if (b1.decomposition && b2.decomposition) {
        std::vector<Vec> rows;
        rows.reserve(b1.decomposition->size() * b2.decomposition->size());
        for (const Vec& r1 : *b1.decomposition)
            for (const Vec& r2 : *b2.decomposition) rows.push_back(degree_products(r1, r2));
        out.decomposition = std::move(rows);
    }
    if (b1.group_p_part && b2.group_p_part)
        out.group_p_part = *b1.group_p_part * *b2.group_p_part;
    if (b1.group_order && b2.group_order) out.group_order = *b1.group_order * *b2.group_order;
    return out;
}

BlockRecord tensor_power(const BlockRecord& b, unsigned n) {
    if (n < 1) throw Error(Error::Kind::BadParameters, "tensor power exponent must be at least 1");
    BlockRecord out = b;
    for (unsigned i = 2; i <= n; ++i) out = block_product(out, b);
    out.name = b.name + "^(x)" + std::to_string(n);
    return out;
}

}  // namespace blockcheck
