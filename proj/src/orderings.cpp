#include "mptg/orderings.hpp"

#include <sstream>

namespace mptg {

std::string condition_name(Condition c) {
    switch (c) {
        case Condition::FourPoint: return "4-point";
        case Condition::NonEdge: return "non-edge";
        case Condition::MatrixZero: return "matrix-zero";
        case Condition::ThreePoint: return "3-point";
        case Condition::FivePointOne: return "5-point-1";
        case Condition::FivePointTwo: return "5-point-2";
        case Condition::SixPoint: return "6-point";
        case Condition::ProperMaxTol: return "proper-maxtol";
    }
    return "?";
}

namespace {

bool in_range(const AugmentedMatrix& a, const std::vector<int>& pos) {
    for (int p : pos)
        if (p < 0 || p >= a.size()) return false;
    return true;
}

bool strictly_increasing(const std::vector<int>& pos) {
    for (std::size_t i = 1; i < pos.size(); ++i)
        if (pos[i - 1] >= pos[i]) return false;
    return true;
}

// Antecedent of the 6-point condition for one (vj, vk) role assignment.
bool sixpoint_antecedent(const AugmentedMatrix& a, int t1, int t2, int vj, int vk, int t5,
                         int t6) {
    return a.at(t1, vj) && a.at(vj, t5) && a.at(t2, vk) && a.at(vk, t6);
}

}  // namespace

CheckResult check_4point(const AugmentedMatrix& a) {
    const int n = a.size();
    for (int x = 0; x < n; ++x)
        for (int u = x + 1; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (a.at(u, v) || !a.at(x, v)) continue;
                for (int y = v + 1; y < n; ++y)
                    if (a.at(u, y))
                        return ViolationWitness{Condition::FourPoint, {x, u, v, y}, std::nullopt};
            }
    return std::nullopt;
}

CheckResult check_nonedge_condition(const AugmentedMatrix& a) {
    const int n = a.size();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (a.at(u, v)) continue;
            int w1 = -1;
            for (int w = v + 1; w < n; ++w)
                if (a.at(u, w)) {
                    w1 = w;
                    break;
                }
            if (w1 < 0) continue;
            int w2 = -1;
            for (int w = 0; w < u; ++w)
                if (a.at(w, v)) {
                    w2 = w;
                    break;
                }
            if (w2 < 0) continue;
            return ViolationWitness{Condition::NonEdge, {u, v, w1, w2}, std::nullopt};
        }
    return std::nullopt;
}

CheckResult check_matrix_zero_condition(const AugmentedMatrix& a) {
    const int n = a.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (a.at(i, j)) continue;
            int right = -1;
            for (int k = j + 1; k < n; ++k)
                if (a.at(i, k)) {
                    right = k;
                    break;
                }
            if (right < 0) continue;  // right open
            int up = -1;
            for (int k = 0; k < i; ++k)
                if (a.at(k, j)) {
                    up = k;
                    break;
                }
            if (up < 0) continue;  // up open
            return ViolationWitness{Condition::MatrixZero, {i, j, right, up},
                                    std::make_pair(i, j)};
        }
    return std::nullopt;
}

CheckResult check_3point(const AugmentedMatrix& a) {
    const int n = a.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (a.at(i, k) && !a.at(i, j) && !a.at(j, k))
                    return ViolationWitness{Condition::ThreePoint, {i, j, k}, std::nullopt};
    return std::nullopt;
}

CheckResult check_5point_1(const AugmentedMatrix& a) {
    const int n = a.size();
    for (int t1 = 0; t1 < n; ++t1)
        for (int t2 = t1 + 1; t2 < n; ++t2)
            for (int t3 = t2 + 1; t3 < n; ++t3)
                for (int t4 = t3 + 1; t4 < n; ++t4) {
                    if (!a.at(t1, t4)) continue;
                    for (int t5 = t4 + 1; t5 < n; ++t5) {
                        if (!a.at(t2, t5)) continue;
                        if (!(a.at(t1, t2) || a.at(t4, t5))) continue;
                        if (!a.at(t1, t3) && !a.at(t3, t5))
                            return ViolationWitness{Condition::FivePointOne,
                                                    {t1, t2, t3, t4, t5},
                                                    std::nullopt};
                    }
                }
    return std::nullopt;
}

CheckResult check_5point_2(const AugmentedMatrix& a) {
    const int n = a.size();
    for (int t1 = 0; t1 < n; ++t1)
        for (int t2 = t1 + 1; t2 < n; ++t2)
            for (int t3 = t2 + 1; t3 < n; ++t3) {
                if (!a.at(t1, t3) || a.at(t1, t2)) continue;
                for (int t4 = t3 + 1; t4 < n; ++t4) {
                    if (a.at(t2, t4)) continue;
                    for (int t5 = t4 + 1; t5 < n; ++t5)
                        if (a.at(t3, t5) && !a.at(t4, t5))
                            return ViolationWitness{Condition::FivePointTwo,
                                                    {t1, t2, t3, t4, t5},
                                                    std::nullopt};
                }
            }
    return std::nullopt;
}

CheckResult check_6point(const AugmentedMatrix& a) {
    const int n = a.size();
    for (int t1 = 0; t1 < n; ++t1)
        for (int t2 = t1 + 1; t2 < n; ++t2)
            for (int t3 = t2 + 1; t3 < n; ++t3)
                for (int t4 = t3 + 1; t4 < n; ++t4)
                    for (int t5 = t4 + 1; t5 < n; ++t5)
                        for (int t6 = t5 + 1; t6 < n; ++t6) {
                            if (a.at(t1, t2) || a.at(t2, t5) || a.at(t5, t6)) continue;
                            if (sixpoint_antecedent(a, t1, t2, t3, t4, t5, t6) ||
                                sixpoint_antecedent(a, t1, t2, t4, t3, t5, t6))
                                return ViolationWitness{Condition::SixPoint,
                                                        {t1, t2, t3, t4, t5, t6},
                                                        std::nullopt};
                        }
    return std::nullopt;
}

CheckResult check_proper_maxtol_ordering(const AugmentedMatrix& a) {
    const int n = a.size();
    for (int t1 = 0; t1 < n; ++t1)
        for (int t2 = t1 + 1; t2 < n; ++t2)
            for (int t3 = t2 + 1; t3 < n; ++t3) {
                if (!a.at(t1, t3)) continue;
                for (int t4 = t3 + 1; t4 < n; ++t4) {
                    if (!a.at(t2, t4)) continue;
                    if (!(a.at(t2, t3) && (a.at(t1, t2) || a.at(t3, t4))))
                        return ViolationWitness{Condition::ProperMaxTol,
                                                {t1, t2, t3, t4},
                                                std::nullopt};
                }
            }
    return std::nullopt;
}

bool ViolationWitness::replay(const AugmentedMatrix& a) const {
    if (!in_range(a, positions)) return false;
    const auto& t = positions;
    switch (condition) {
        case Condition::FourPoint:
            return t.size() == 4 && strictly_increasing(t) && a.at(t[0], t[2]) &&
                   a.at(t[1], t[3]) && !a.at(t[1], t[2]);
        case Condition::NonEdge:
            return t.size() == 4 && t[0] < t[1] && !a.at(t[0], t[1]) && t[2] > t[1] &&
                   a.at(t[0], t[2]) && t[3] < t[0] && a.at(t[3], t[1]);
        case Condition::MatrixZero:
            return t.size() == 4 && t[0] < t[1] && !a.at(t[0], t[1]) && t[2] > t[1] &&
                   a.at(t[0], t[2]) && t[3] < t[0] && a.at(t[3], t[1]) && cell &&
                   cell->first == t[0] && cell->second == t[1];
        case Condition::ThreePoint:
            return t.size() == 3 && strictly_increasing(t) && a.at(t[0], t[2]) &&
                   !a.at(t[0], t[1]) && !a.at(t[1], t[2]);
        case Condition::FivePointOne:
            return t.size() == 5 && strictly_increasing(t) && a.at(t[0], t[3]) &&
                   a.at(t[1], t[4]) && (a.at(t[0], t[1]) || a.at(t[3], t[4])) &&
                   !a.at(t[0], t[2]) && !a.at(t[2], t[4]);
        case Condition::FivePointTwo:
            return t.size() == 5 && strictly_increasing(t) && a.at(t[0], t[2]) &&
                   a.at(t[2], t[4]) && !a.at(t[0], t[1]) && !a.at(t[1], t[3]) &&
                   !a.at(t[3], t[4]);
        case Condition::SixPoint:
            return t.size() == 6 && strictly_increasing(t) &&
                   !(a.at(t[0], t[1]) || a.at(t[1], t[4]) || a.at(t[4], t[5])) &&
                   (sixpoint_antecedent(a, t[0], t[1], t[2], t[3], t[4], t[5]) ||
                    sixpoint_antecedent(a, t[0], t[1], t[3], t[2], t[4], t[5]));
        case Condition::ProperMaxTol:
            return t.size() == 4 && strictly_increasing(t) && a.at(t[0], t[2]) &&
                   a.at(t[1], t[3]) &&
                   !(a.at(t[1], t[2]) && (a.at(t[0], t[1]) || a.at(t[2], t[3])));
    }
    return false;
}

std::string ViolationWitness::describe() const {
    std::ostringstream out;
    out << condition_name(condition) << " condition violated at positions (";
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (i) out << ", ";
        out << positions[i] + 1;
    }
    out << ")";
    if (cell) out << ", stuck zero at cell (" << cell->first + 1 << ", " << cell->second + 1 << ")";
    return out.str();
}

bool is_mptg_ordering(const AugmentedMatrix& a) { return !check_4point(a).has_value(); }

CheckResult check_proper_mptg_ordering(const AugmentedMatrix& a) {
    if (auto w = check_4point(a)) return w;
    if (auto w = check_3point(a)) return w;
    if (auto w = check_5point_1(a)) return w;
    if (auto w = check_5point_2(a)) return w;
    if (auto w = check_6point(a)) return w;
    return std::nullopt;
}

bool is_proper_mptg_ordering(const AugmentedMatrix& a) {
    return !check_proper_mptg_ordering(a).has_value();
}

}  // namespace mptg
