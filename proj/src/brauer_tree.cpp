#include "blockcheck/brauer_tree.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace blockcheck {

namespace {

Int vertex_multiplicity(const BrauerTree& t, const std::string& v) {
    if (t.multiplicity >= 2 && t.exceptional && *t.exceptional == v) return t.multiplicity;
    return 1;
}

// endpoints of edge i as a pair of vertex names
const std::pair<std::string, std::string>& edge_at(const BrauerTree& t, std::size_t i) {
    return t.edges[i];
}

bool connected_tree(const BrauerTree& t) {
    if (t.vertices.empty()) return false;
    if (t.edges.size() + 1 != t.vertices.size()) return false;
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& e : t.edges) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    std::set<std::string> seen;
    std::vector<std::string> stack{t.vertices.front()};
    while (!stack.empty()) {
        std::string v = stack.back();
        stack.pop_back();
        if (!seen.insert(v).second) continue;
        for (const auto& w : adj[v]) stack.push_back(w);
    }
    return seen.size() == t.vertices.size();
}

}  // namespace

std::vector<std::string> validate(const BrauerTree& t, const std::optional<Int>& p) {
    std::vector<std::string> out;
    if (t.vertices.empty()) out.push_back("vertex list empty");
    std::set<std::string> names(t.vertices.begin(), t.vertices.end());
    if (names.size() != t.vertices.size()) out.push_back("duplicate vertex names");
    if (t.edges.empty()) out.push_back("tree needs at least one edge");

    std::set<std::pair<std::string, std::string>> seen_edges;
    for (const auto& e : t.edges) {
        if (!names.count(e.first) || !names.count(e.second)) {
            out.push_back("edge [" + e.first + ", " + e.second + "] references an unknown vertex");
            continue;
        }
        if (e.first == e.second)
            out.push_back("edge joins vertex " + e.first + " to itself");
        std::pair<std::string, std::string> key = std::minmax(e.first, e.second);
        if (!seen_edges.insert(key).second)
            out.push_back("duplicate edge [" + key.first + ", " + key.second + "]");
    }
    if (out.empty() && !connected_tree(t))
        out.push_back("edges do not form a tree (disconnected or cyclic)");

    if (t.multiplicity < 1) out.push_back("multiplicity must be at least 1");
    if (t.multiplicity >= 2 && !t.exceptional)
        out.push_back("multiplicity of at least 2 requires an exceptional vertex");
    if (t.exceptional && !names.count(*t.exceptional))
        out.push_back("exceptional vertex " + *t.exceptional + " not in the vertex list");

    if (p && out.empty()) {
        Int d = t.defect_order();
        if (!is_power_of(d, *p))
            out.push_back("defect order e*m+1 = " + d.get_str() + " is not a power of p = " +
                          p->get_str());
    }
    return out;
}

BrauerTree normalized(const BrauerTree& t, std::vector<std::string>& notes) {
    BrauerTree n = t;
    if (n.multiplicity == 1 && n.exceptional) {
        notes.push_back("multiplicity 1: exceptional marker on " + *n.exceptional + " dropped");
        n.exceptional.reset();
    }
    return n;
}

IntMatrix cartan_from_tree(const BrauerTree& t) {
    auto violations = validate(t);
    if (!violations.empty()) throw Error(Error::Kind::BadInput, violations.front());

    const std::size_t e = t.edge_count();
    IntMatrix c(e);
    for (std::size_t i = 0; i < e; ++i) {
        const auto& [u, v] = edge_at(t, i);
        c.at(i, i) = vertex_multiplicity(t, u) + vertex_multiplicity(t, v);
        for (std::size_t j = i + 1; j < e; ++j) {
            const auto& [x, y] = edge_at(t, j);
            Int entry = 0;
            if (u == x || u == y) entry = vertex_multiplicity(t, u);
            else if (v == x || v == y) entry = vertex_multiplicity(t, v);
            c.at(i, j) = entry;
            c.at(j, i) = entry;
        }
    }
    return c;
}

bool is_star(const BrauerTree& t) {
    if (t.edges.empty()) return false;
    // candidate centers: vertices lying on every edge
    std::vector<std::string> centers{t.edges.front().first, t.edges.front().second};
    for (const auto& e : t.edges) {
        std::vector<std::string> next;
        for (const auto& c : centers)
            if (c == e.first || c == e.second) next.push_back(c);
        centers = next;
        if (centers.empty()) return false;
    }
    if (t.multiplicity >= 2) {
        if (!t.exceptional) return false;
        return std::find(centers.begin(), centers.end(), *t.exceptional) != centers.end();
    }
    return true;
}

Verdict star_dominance_check(const BrauerTree& t) {
    IntMatrix c = cartan_from_tree(t);
    const Int m = t.multiplicity;
    const std::size_t e = c.size();
    // worst violation of 0 <= c_ij <= star_ij, as a signed excess
    Int worst = c.at(0, 0) - (m + 1);
    bool nonneg = true;
    for (std::size_t i = 0; i < e; ++i)
        for (std::size_t j = 0; j < e; ++j) {
            Int star = (i == j) ? m + 1 : m;
            worst = std::max(worst, Int(c.at(i, j) - star));
            worst = std::max(worst, Int(-c.at(i, j)));
            if (c.at(i, j) < 0) nonneg = false;
        }
    std::vector<std::string> notes{
        "star bound: diagonal " + Int(m + 1).get_str() + ", off-diagonal " + m.get_str(),
        nonneg ? "all entries nonnegative" : "negative entry found"};
    return Verdict::compare("star_dominance", to_rat(worst), Rat(0), std::move(notes));
}

Verdict cyclic_inequality(const BrauerTree& t, const Vec& degrees) {
    IntMatrix c = cartan_from_tree(t);
    if (degrees.size() != c.size())
        throw Error(Error::Kind::DimensionMismatch, "degrees length must equal the edge count");
    for (const Int& d : degrees)
        if (d <= 0) throw Error(Error::Kind::BadInput, "degrees must be positive");

    Int dim = quad_form(c, degrees);
    Int defect = t.defect_order();
    Int sum_sq = 0;
    for (const Int& d : degrees) sum_sq += d * d;

    bool star = is_star(t);
    bool constant = std::all_of(degrees.begin(), degrees.end(),
                                [&](const Int& d) { return d == degrees.front(); });
    std::vector<std::string> notes{"dim B = " + dim.get_str(),
                                   "|D| = e*m+1 = " + defect.get_str(),
                                   std::string("tree is a star: ") + (star ? "yes" : "no"),
                                   std::string("degrees constant: ") + (constant ? "yes" : "no")};
    Verdict v = Verdict::compare("cyclic_inequality", ratio(dim, defect), to_rat(sum_sq),
                                 std::move(notes));
    if (v.equality && !(star && constant))
        v.notes.push_back("unexpected: equality without a star tree and constant degrees");
    if (star && constant && !v.equality)
        v.notes.push_back("unexpected: star tree with constant degrees but no equality");
    return v;
}

BrauerTree star_tree(std::size_t e, const Int& m) {
    BrauerTree t;
    t.multiplicity = m;
    t.vertices.push_back("c");
    for (std::size_t i = 1; i <= e; ++i) {
        t.vertices.push_back("v" + std::to_string(i));
        t.edges.emplace_back("c", "v" + std::to_string(i));
    }
    if (m >= 2) t.exceptional = "c";
    return t;
}

}  // namespace blockcheck
