#include "blockcheck/block.hpp"

#include "blockcheck/linalg.hpp"

namespace blockcheck {

namespace {

bool all_positive(const Vec& v) {
    for (const Int& x : v)
        if (x <= 0) return false;
    return true;
}

std::optional<IntMatrix> gram_of_decomposition(const BlockRecord& b) {
    if (!b.decomposition) return std::nullopt;
    const auto& rows = *b.decomposition;
    if (rows.empty()) return std::nullopt;
    for (const Vec& r : rows)
        if (r.size() != b.l()) return std::nullopt;
    return gram_matrix(rows);
}

}  // namespace

std::vector<std::string> validate(const BlockRecord& b) {
    std::vector<std::string> out;
    if (!is_prime(b.p)) out.push_back("p is not prime");
    if (b.defect_group_order < 1 || (is_prime(b.p) && !is_power_of(b.defect_group_order, b.p)))
        out.push_back("defect_group_order not a power of p");
    if (b.brauer_degrees.empty())
        out.push_back("brauer_degrees empty");
    else if (!all_positive(b.brauer_degrees))
        out.push_back("brauer_degrees contains a non-positive entry");

    if (b.ordinary_degrees) {
        if (b.ordinary_degrees->empty())
            out.push_back("ordinary_degrees empty");
        else if (!all_positive(*b.ordinary_degrees))
            out.push_back("ordinary_degrees contains a non-positive entry");
        if (b.ordinary_degrees->size() < b.brauer_degrees.size())
            out.push_back("fewer ordinary characters than Brauer characters (k(B) < l(B))");
    }

    bool cartan_usable = false;
    if (b.cartan) {
        if (b.cartan->size() != b.l()) {
            out.push_back("cartan size does not match brauer_degrees");
        } else if (!is_symmetric(*b.cartan)) {
            out.push_back("cartan not symmetric");
        } else if (!is_positive_definite(*b.cartan)) {
            out.push_back("cartan not positive definite");
        } else {
            cartan_usable = true;
        }
    }

    if (b.decomposition) {
        const auto& rows = *b.decomposition;
        bool shape_ok = !rows.empty();
        bool has_negative = false;
        for (const Vec& r : rows) {
            if (r.size() != b.l()) shape_ok = false;
            for (const Int& x : r)
                if (x < 0) has_negative = true;
        }
        if (has_negative) out.push_back("decomposition has a negative entry");
        if (!shape_ok)
            out.push_back("decomposition rows must be nonempty with one column per Brauer character");
        if (b.ordinary_degrees && rows.size() != b.ordinary_degrees->size())
            out.push_back("decomposition row count does not match ordinary_degrees");
        if (shape_ok && b.cartan && b.cartan->size() == b.l()) {
            auto gram = gram_of_decomposition(b);
            if (gram && !(*gram == *b.cartan))
                out.push_back("cartan does not equal decomposition^T * decomposition");
        }
    }

    if (cartan_usable && b.ordinary_degrees && !b.ordinary_degrees->empty() &&
        all_positive(*b.ordinary_degrees) && all_positive(b.brauer_degrees)) {
        Int via_cartan = quad_form(*b.cartan, b.brauer_degrees);
        Int via_ordinary = 0;
        for (const Int& chi : *b.ordinary_degrees) via_ordinary += chi * chi;
        if (via_cartan != via_ordinary)
            out.push_back("cartan and ordinary_degrees give different block dimensions");
    }

    if (b.group_p_part) {
        if (*b.group_p_part < 1 || (is_prime(b.p) && !is_power_of(*b.group_p_part, b.p)))
            out.push_back("group_p_part not a power of p");
        else if (b.defect_group_order >= 1 && *b.group_p_part % b.defect_group_order != 0)
            out.push_back("defect_group_order does not divide group_p_part");
    }
    if (b.group_order) {
        if (*b.group_order < 1)
            out.push_back("group_order not positive");
        else if (b.group_p_part && is_prime(b.p) &&
                 p_part(*b.group_order, b.p) != *b.group_p_part)
            out.push_back("group_p_part does not match the p-part of group_order");
    }
    return out;
}

std::vector<std::string> validate(const GroupRecord& g) {
    std::vector<std::string> out;
    if (!is_prime(g.p)) out.push_back("p is not prime");
    if (g.group_order < 1) out.push_back("group_order not positive");
    if (g.blocks.empty()) out.push_back("blocks empty");
    for (std::size_t i = 0; i < g.blocks.size(); ++i) {
        const std::string prefix = "blocks[" + std::to_string(i) + "]: ";
        const BlockRecord& b = g.blocks[i];
        if (b.p != g.p) out.push_back(prefix + "p differs from the group's p");
        if (b.group_p_part && g.group_order >= 1 && is_prime(g.p) &&
            *b.group_p_part != p_part(g.group_order, g.p))
            out.push_back(prefix + "group_p_part does not match the group order");
        if (b.group_order && *b.group_order != g.group_order)
            out.push_back(prefix + "group_order differs from the group's order");
        for (const std::string& v : validate(b)) out.push_back(prefix + v);
    }
    return out;
}

Int dim_b(const BlockRecord& b) {
    std::optional<Int> via_cartan;
    if (b.cartan) {
        if (b.cartan->size() != b.l())
            throw Error(Error::Kind::DimensionMismatch, "cartan size does not match brauer_degrees");
        via_cartan = quad_form(*b.cartan, b.brauer_degrees);
    }
    std::optional<Int> via_ordinary;
    if (b.ordinary_degrees) {
        Int s = 0;
        for (const Int& chi : *b.ordinary_degrees) s += chi * chi;
        via_ordinary = s;
    }
    if (via_cartan && via_ordinary && *via_cartan != *via_ordinary)
        throw Error(Error::Kind::InconsistentData,
                    "inconsistent data: phi^T C phi = " + via_cartan->get_str() +
                        " but sum of squared ordinary degrees = " + via_ordinary->get_str());
    if (via_cartan) return *via_cartan;
    if (via_ordinary) return *via_ordinary;
    throw Error(Error::Kind::InsufficientData,
                "insufficient data: dim B needs a cartan matrix or ordinary degrees");
}

Vec projective_degrees(const BlockRecord& b) {
    if (!b.cartan)
        throw Error(Error::Kind::InsufficientData,
                    "insufficient data: projective degrees need a cartan matrix");
    if (b.cartan->size() != b.l())
        throw Error(Error::Kind::DimensionMismatch, "cartan size does not match brauer_degrees");
    return mat_vec(*b.cartan, b.brauer_degrees);
}

Int sum_phi_squared(const BlockRecord& b) {
    Int s = 0;
    for (const Int& phi : b.brauer_degrees) s += phi * phi;
    return s;
}

Int max_phi_squared(const BlockRecord& b) {
    Int m = 0;
    for (const Int& phi : b.brauer_degrees)
        if (phi * phi > m) m = phi * phi;
    return m;
}

}  // namespace blockcheck
