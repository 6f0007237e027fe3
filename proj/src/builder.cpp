#include "mptg/builder.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "mptg/errors.hpp"
#include "mptg/orderings.hpp"

namespace mptg {

int CanonicalSequence::position_of(TagKind kind, int vertex) const {
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i].kind == kind && entries[i].vertex == vertex) return static_cast<int>(i);
    throw ContractError("tag not present in sequence");
}

std::string CanonicalSequence::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out << ' ';
        switch (entries[i].kind) {
            case TagKind::A: out << 'a'; break;
            case TagKind::P: out << 'p'; break;
            case TagKind::B: out << 'b'; break;
        }
        out << entries[i].vertex + 1;
    }
    return out.str();
}

PrecedenceRelation::PrecedenceRelation(int n) : n_(n) {
    pairs_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), PairDerivation{});
}

std::size_t PrecedenceRelation::index(int i, int j) const {
    if (i < 0 || j <= i || j >= n_) throw ContractError("pair requires 0 <= i < j < n");
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
}

bool PrecedenceRelation::b_precedes(int x, int y) const {
    if (x == y) return false;
    if (x < y) return !pairs_[index(x, y)].reversed();
    return pairs_[index(y, x)].reversed();
}

const PairDerivation& PrecedenceRelation::derivation(int i, int j) const {
    return pairs_[index(i, j)];
}

void PrecedenceRelation::set_derivation(int i, int j, PairDerivation d) {
    pairs_[index(i, j)] = d;
}

std::vector<int> PrecedenceRelation::b_order() const {
    std::vector<int> order(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) { return b_precedes(x, y); });
    return order;
}

namespace {

bool r1_unchecked(const AugmentedMatrix& a, int i, int j) {
    for (int k2 = j + 1; k2 < a.size(); ++k2)
        if (!a.at(j, k2) && a.at(i, k2)) return true;
    return false;
}

bool r2_unchecked(const AugmentedMatrix& a, int i, int j) {
    for (int k1 = 0; k1 < i; ++k1)
        if (!a.at(k1, i) && a.at(k1, j)) return true;
    return false;
}

void require_relation_args(const AugmentedMatrix& a, int i, int j) {
    if (!(0 <= i && i < j && j < a.size()))
        throw ContractError("relation requires positions 0 <= i < j < n");
    if (!is_mptg_ordering(a))
        throw ContractError("endpoint relations are defined on MPTG orderings only");
}

}  // namespace

bool relation_R1(const AugmentedMatrix& a, int i, int j) {
    require_relation_args(a, i, j);
    return r1_unchecked(a, i, j);
}

bool relation_R2(const AugmentedMatrix& a, int i, int j) {
    require_relation_args(a, i, j);
    return r2_unchecked(a, i, j);
}

PrecedenceRelation precedes(const AugmentedMatrix& a) {
    if (!is_mptg_ordering(a))
        throw ContractError("precedence is defined on MPTG orderings only");
    const int n = a.size();
    PrecedenceRelation rel(n);

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            PairDerivation d;
            d.r1 = r1_unchecked(a, i, j);
            d.r2 = r2_unchecked(a, i, j);
            for (int k = i + 1; k < j && !d.composite; ++k)
                if (r1_unchecked(a, k, j) && r2_unchecked(a, i, k)) d.composite = true;
            rel.set_derivation(i, j, d);
        }

    // Sanity: a zero above the diagonal keeps the default direction.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!a.at(i, j) && rel.derivation(i, j).reversed())
                throw PrecedenceInconsistency(
                    "precedence reverses a non-adjacent pair at positions (" +
                        std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                        "); the ordering is not a proper MPTG ordering",
                    {i, j, -1});

    // Totality: the tournament must be transitive, i.e. free of 3-cycles.
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z) {
                const bool xy = rel.b_precedes(x, y);
                const bool yz = rel.b_precedes(y, z);
                const bool xz = rel.b_precedes(x, z);
                if (xy == yz && xz != xy)
                    throw PrecedenceInconsistency(
                        "precedence contains a 3-cycle at positions (" + std::to_string(x + 1) +
                            ", " + std::to_string(y + 1) + ", " + std::to_string(z + 1) +
                            "); the ordering is not a proper MPTG ordering",
                        {x, y, z});
            }
    return rel;
}

CanonicalSequence canonical_sequence(const AugmentedMatrix& a, const PrecedenceRelation& prec) {
    const int n = a.size();
    if (prec.size() != n) throw ContractError("matrix and precedence sizes differ");

    CanonicalSequence seq;
    seq.n = n;
    if (n == 0) return seq;

    const std::vector<int> alpha = prec.b_order();
    std::vector<int> first1(static_cast<std::size_t>(n)), last1(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        first1[static_cast<std::size_t>(r)] = a.first_one(r);
        last1[static_cast<std::size_t>(r)] = a.last_one(r);
    }

    // gap g sits immediately before point g (gap n is after the last point)
    std::vector<int> gap_a(static_cast<std::size_t>(n)), gap_b(static_cast<std::size_t>(n));
    // a's walk the precedence order backwards: each a wants the gap of its
    // first-one column but must not land after its successor in the order.
    // The successor's assigned gap can already sit left of that column when
    // chains drag it along, so the clamp compares assigned gaps, not columns.
    gap_a[static_cast<std::size_t>(alpha[static_cast<std::size_t>(n - 1)])] =
        first1[static_cast<std::size_t>(alpha[static_cast<std::size_t>(n - 1)])];
    for (int k = n - 2; k >= 0; --k) {
        const int cur = alpha[static_cast<std::size_t>(k)];
        const int next = alpha[static_cast<std::size_t>(k + 1)];
        gap_a[static_cast<std::size_t>(cur)] =
            std::min(first1[static_cast<std::size_t>(cur)],
                     gap_a[static_cast<std::size_t>(next)]);
    }
    // b's walk forwards: each b wants the gap just past its last-one column
    // and must not land before its predecessor, symmetrically.
    gap_b[static_cast<std::size_t>(alpha[0])] = last1[static_cast<std::size_t>(alpha[0])] + 1;
    for (int k = 1; k < n; ++k) {
        const int cur = alpha[static_cast<std::size_t>(k)];
        const int prev = alpha[static_cast<std::size_t>(k - 1)];
        gap_b[static_cast<std::size_t>(cur)] =
            std::max(last1[static_cast<std::size_t>(cur)] + 1,
                     gap_b[static_cast<std::size_t>(prev)]);
    }

    seq.entries.reserve(static_cast<std::size_t>(3 * n));
    for (int g = 0; g <= n; ++g) {
        // closing endpoints first inside a shared gap
        for (int k = 0; k < n; ++k) {
            const int v = alpha[static_cast<std::size_t>(k)];
            if (gap_b[static_cast<std::size_t>(v)] == g)
                seq.entries.push_back({TagKind::B, v});
        }
        for (int k = 0; k < n; ++k) {
            const int v = alpha[static_cast<std::size_t>(k)];
            if (gap_a[static_cast<std::size_t>(v)] == g)
                seq.entries.push_back({TagKind::A, v});
        }
        if (g < n) seq.entries.push_back({TagKind::P, g});
    }

    // Construction invariants; a failure here means the input ordering was
    // not a proper MPTG ordering even though the precedence stayed total.
    std::vector<int> a_restriction, b_restriction;
    for (const EndpointTag& tag : seq.entries) {
        if (tag.kind == TagKind::A) a_restriction.push_back(tag.vertex);
        if (tag.kind == TagKind::B) b_restriction.push_back(tag.vertex);
    }
    if (a_restriction != alpha || b_restriction != alpha)
        throw ContractError("canonical sequence would break the precedence order; "
                            "the ordering is not a proper MPTG ordering");
    for (int v = 0; v < n; ++v)
        if (!(seq.position_of(TagKind::A, v) < seq.position_of(TagKind::P, v) &&
              seq.position_of(TagKind::P, v) < seq.position_of(TagKind::B, v)))
            throw ContractError("canonical sequence would break an interval; "
                                "the ordering is not a proper MPTG ordering");
    return seq;
}

void IntervalPointRep::validate() const {
    for (int v = 0; v < size(); ++v) {
        const RepVertex& rv = vertices[static_cast<std::size_t>(v)];
        if (!(rv.a <= rv.p && rv.p <= rv.b))
            throw ContractError("vertex " + std::to_string(v + 1) +
                                " breaks a <= p <= b");
    }
}

IntervalPointRep realize_integer(const CanonicalSequence& seq) {
    IntervalPointRep rep;
    rep.vertices.resize(static_cast<std::size_t>(seq.n));
    for (std::size_t i = 0; i < seq.entries.size(); ++i) {
        const EndpointTag& tag = seq.entries[i];
        Rat value(static_cast<int>(i) + 1);
        RepVertex& rv = rep.vertices[static_cast<std::size_t>(tag.vertex)];
        switch (tag.kind) {
            case TagKind::A: rv.a = value; break;
            case TagKind::P: rv.p = value; break;
            case TagKind::B: rv.b = value; break;
        }
    }
    return rep;
}

IntervalPointRep realize_unit(const CanonicalSequence& seq, const Rat& len) {
    if (len <= 0) throw ContractError("interval length must be positive");
    const int n = seq.n;
    IntervalPointRep rep;
    rep.vertices.resize(static_cast<std::size_t>(n));
    if (n == 0) return rep;

    std::vector<int> order;  // vertices by B tag position == precedence order
    order.reserve(static_cast<std::size_t>(n));
    std::vector<int> apos(static_cast<std::size_t>(n)), bpos(static_cast<std::size_t>(n)),
        ppos(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < seq.entries.size(); ++i) {
        const EndpointTag& tag = seq.entries[i];
        switch (tag.kind) {
            case TagKind::A: apos[static_cast<std::size_t>(tag.vertex)] = static_cast<int>(i); break;
            case TagKind::P: ppos[static_cast<std::size_t>(tag.vertex)] = static_cast<int>(i); break;
            case TagKind::B:
                bpos[static_cast<std::size_t>(tag.vertex)] = static_cast<int>(i);
                order.push_back(tag.vertex);
                break;
        }
    }

    std::vector<Rat> left(static_cast<std::size_t>(n));
    left[static_cast<std::size_t>(order[0])] = 0;
    for (int i = 1; i < n; ++i) {
        const int v = order[static_cast<std::size_t>(i)];
        Rat lower = left[static_cast<std::size_t>(order[static_cast<std::size_t>(i - 1)])];
        std::optional<Rat> upper;
        for (int j = 0; j < i; ++j) {
            const int u = order[static_cast<std::size_t>(j)];
            const Rat cand = left[static_cast<std::size_t>(u)] + len;
            if (bpos[static_cast<std::size_t>(u)] < apos[static_cast<std::size_t>(v)]) {
                if (cand > lower) lower = cand;
            } else if (!upper || cand < *upper) {
                upper = cand;
            }
        }
        if (upper && lower >= *upper)
            throw UnitInfeasible(i, "empty placement window at step " + std::to_string(i + 1) +
                                        " of the precedence order");
        left[static_cast<std::size_t>(v)] =
            upper ? Rat((lower + *upper) / 2) : Rat(lower + len / 2);
    }

    // endpoint values along the sequence, then points spread evenly in gaps
    std::vector<std::optional<Rat>> value(seq.entries.size());
    for (std::size_t i = 0; i < seq.entries.size(); ++i) {
        const EndpointTag& tag = seq.entries[i];
        if (tag.kind == TagKind::A) value[i] = left[static_cast<std::size_t>(tag.vertex)];
        if (tag.kind == TagKind::B) value[i] = left[static_cast<std::size_t>(tag.vertex)] + len;
    }
    std::size_t i = 0;
    while (i < value.size()) {
        if (value[i]) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < value.size() && !value[j]) ++j;
        if (i == 0 || j == value.size())
            throw UnitInfeasible(-1, "sequence does not start with an endpoint");
        const Rat lo = *value[i - 1];
        const Rat hi = *value[j];
        const int count = static_cast<int>(j - i);
        for (int t = 0; t < count; ++t)
            value[i + static_cast<std::size_t>(t)] = lo + (hi - lo) * (t + 1) / (count + 1);
        i = j;
    }
    for (std::size_t k = 1; k < value.size(); ++k)
        if (!(*value[k - 1] < *value[k]))
            throw UnitInfeasible(-1, "assigned values do not increase along the sequence");

    for (int v = 0; v < n; ++v) {
        RepVertex& rv = rep.vertices[static_cast<std::size_t>(v)];
        rv.a = left[static_cast<std::size_t>(v)];
        rv.b = left[static_cast<std::size_t>(v)] + len;
        rv.p = *value[static_cast<std::size_t>(ppos[static_cast<std::size_t>(v)])];
    }
    return rep;
}

IntervalPointRep apply_ordering(const IntervalPointRep& position_rep,
                                const VertexOrdering& sigma) {
    sigma.validate(position_rep.size());
    IntervalPointRep rep;
    rep.vertices.resize(position_rep.vertices.size());
    for (std::size_t i = 0; i < position_rep.vertices.size(); ++i)
        rep.vertices[static_cast<std::size_t>(sigma.perm[i])] = position_rep.vertices[i];
    return rep;
}

IntervalPointRep normalize_distinct_points(const IntervalPointRep& rep) {
    rep.validate();
    IntervalPointRep out = rep;
    const int n = out.size();

    for (;;) {
        // smallest point value shared by at least two vertices
        std::map<Rat, std::vector<int>> groups;
        for (int v = 0; v < n; ++v) groups[out.vertices[static_cast<std::size_t>(v)].p].push_back(v);
        std::optional<Rat> shared;
        for (const auto& [val, members] : groups)
            if (members.size() >= 2) {
                shared = val;
                break;
            }
        if (!shared) break;
        const Rat v0 = *shared;
        const std::vector<int>& group = groups[v0];

        // nearest landmark strictly to the right bounds epsilon
        std::optional<Rat> dist;
        auto consider = [&](const Rat& c) {
            if (c > v0 && (!dist || c - v0 < *dist)) dist = c - v0;
        };
        for (int u = 0; u < n; ++u) {
            const RepVertex& ru = out.vertices[static_cast<std::size_t>(u)];
            consider(ru.p);
            consider(ru.a);
            consider(ru.b);
        }
        const Rat eps = dist ? *dist / 2 : Rat(1);

        // right endpoints sitting on the shared value move just past the
        // spread; left endpoints there stay put
        for (int u = 0; u < n; ++u) {
            RepVertex& ru = out.vertices[static_cast<std::size_t>(u)];
            if (ru.b == v0) ru.b = v0 + eps;
        }
        const int g = static_cast<int>(group.size());
        for (int t = 0; t < g; ++t)
            out.vertices[static_cast<std::size_t>(group[static_cast<std::size_t>(t)])].p =
                v0 + eps / (g - t + 1);
    }
    return out;
}

}  // namespace mptg
