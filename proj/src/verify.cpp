#include "mptg/verify.hpp"

#include <string>

#include "mptg/errors.hpp"

namespace mptg {

void ToleranceRep::validate() const {
    for (int v = 0; v < size(); ++v) {
        const TolVertex& tv = vertices[static_cast<std::size_t>(v)];
        if (!(tv.a < tv.b))
            throw ContractError("vertex " + std::to_string(v + 1) + " breaks a < b");
        if (!(tv.t > 0))
            throw ContractError("vertex " + std::to_string(v + 1) +
                                " needs a positive tolerance");
    }
}

std::vector<int> ToleranceRep::tolerance_warnings() const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v) {
        const TolVertex& tv = vertices[static_cast<std::size_t>(v)];
        if (tv.t > tv.b - tv.a) out.push_back(v);
    }
    return out;
}

Graph induced_mptg(const IntervalPointRep& rep) {
    rep.validate();
    const int n = rep.size();
    Graph g(n);
    auto inside = [&](const Rat& x, int v) {
        const RepVertex& rv = rep.vertices[static_cast<std::size_t>(v)];
        return rv.a <= x && x <= rv.b;
    };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const Rat& pu = rep.vertices[static_cast<std::size_t>(u)].p;
            const Rat& pv = rep.vertices[static_cast<std::size_t>(v)].p;
            if (inside(pu, u) && inside(pu, v) && inside(pv, u) && inside(pv, v))
                g.add_edge(u, v);
        }
    return g;
}

Graph induced_maxtol(const ToleranceRep& rep) {
    rep.validate();
    const int n = rep.size();
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const TolVertex& ru = rep.vertices[static_cast<std::size_t>(u)];
            const TolVertex& rv = rep.vertices[static_cast<std::size_t>(v)];
            const Rat lo = ru.a > rv.a ? ru.a : rv.a;
            const Rat hi = ru.b < rv.b ? ru.b : rv.b;
            if (lo > hi) continue;  // disjoint, no intersection at all
            const Rat needed = ru.t > rv.t ? ru.t : rv.t;
            if (hi - lo >= needed) g.add_edge(u, v);
        }
    return g;
}

namespace {

template <typename Rep>
std::optional<ContainmentWitness> proper_check(const Rep& rep) {
    const int n = rep.size();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            const auto& iu = rep.vertices[static_cast<std::size_t>(u)];
            const auto& iv = rep.vertices[static_cast<std::size_t>(v)];
            const bool nested = iv.a <= iu.a && iu.b <= iv.b;
            const bool strict = iv.a < iu.a || iu.b < iv.b;
            if (nested && strict) return ContainmentWitness{u, v};
        }
    return std::nullopt;
}

template <typename Rep, typename Induce>
std::vector<EdgeMismatch> certify_impl(const Rep& rep, const Graph& g, Induce induce) {
    if (rep.size() != g.size())
        throw ContractError("representation has " + std::to_string(rep.size()) +
                            " vertices, graph has " + std::to_string(g.size()));
    const Graph induced = induce(rep);
    std::vector<EdgeMismatch> out;
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (induced.adjacent(u, v) != g.adjacent(u, v))
                out.push_back({u, v, g.adjacent(u, v)});
    return out;
}

}  // namespace

std::optional<ContainmentWitness> is_proper(const IntervalPointRep& rep) {
    return proper_check(rep);
}

std::optional<ContainmentWitness> is_proper(const ToleranceRep& rep) {
    return proper_check(rep);
}

std::optional<LengthMismatch> is_unit(const IntervalPointRep& rep) {
    const int n = rep.size();
    if (n <= 1) return std::nullopt;
    const Rat len0 = rep.vertices[0].b - rep.vertices[0].a;
    for (int v = 1; v < n; ++v) {
        const Rat len = rep.vertices[static_cast<std::size_t>(v)].b -
                        rep.vertices[static_cast<std::size_t>(v)].a;
        if (len != len0) return LengthMismatch{0, v, len0, len};
    }
    return std::nullopt;
}

std::vector<EdgeMismatch> certify(const IntervalPointRep& rep, const Graph& g) {
    return certify_impl(rep, g, [](const IntervalPointRep& r) { return induced_mptg(r); });
}

std::vector<EdgeMismatch> certify(const ToleranceRep& rep, const Graph& g) {
    return certify_impl(rep, g, [](const ToleranceRep& r) { return induced_maxtol(r); });
}

}  // namespace mptg
