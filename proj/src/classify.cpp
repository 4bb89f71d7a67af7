#include "klrel/classify.hpp"

#include <algorithm>
#include <deque>

namespace klrel {

namespace {

// Packed tuple key; component order is significance order, so numeric key
// order equals lexicographic tuple order.
std::uint32_t pack3(int x0, int x1, int x2) {
    return (static_cast<std::uint32_t>(x0) << 12) |
           (static_cast<std::uint32_t>(x1) << 6) | static_cast<std::uint32_t>(x2);
}

struct Unpacked {
    int x0, x1, x2;
};
Unpacked unpack3(std::uint32_t key) {
    return {static_cast<int>(key >> 12), static_cast<int>((key >> 6) & 63),
            static_cast<int>(key & 63)};
}

int flat_act(const GroupTables& t, int gi, int flat) {
    if (flat < 32) return t.k_act[static_cast<std::size_t>(gi)][static_cast<std::size_t>(flat)];
    return 32 + t.l_act[static_cast<std::size_t>(gi)][static_cast<std::size_t>(flat - 32)];
}

} // namespace

int hamming_distance(int k1, int k2) {
    if (k1 == k2) return 0;
    const bool fam1 = k1 >= 16, fam2 = k2 >= 16;
    const int q1 = (k1 % 16) / 4, r1 = k1 % 4;
    const int q2 = (k2 % 16) / 4, r2 = k2 % 4;
    const int agree = (q1 == q2 ? 1 : 0) + (r1 == r2 ? 1 : 0);
    return fam1 == fam2 ? 4 - 2 * agree : 2 + 2 * agree;
}

bool is_opposite(const GroupTables& t, const CosetId& a, const CosetId& b) {
    if (a.side == Side::K && b.side == Side::K)
        return a.index == (b.index + 16) % 32;
    if (a.side == Side::L && b.side == Side::L)
        return a == bar_partner(b);
    const CosetId& k = a.side == Side::K ? a : b;
    const CosetId& l = a.side == Side::K ? b : a;
    return t.kl_meet[static_cast<std::size_t>(k.index)]
                    [static_cast<std::size_t>(bar_partner(l).index)];
}

int label_distance(const GroupTables& t, const CosetId& a, const CosetId& b) {
    if (a == b) return 0;
    if (a.side == Side::K && b.side == Side::K)
        return hamming_distance(a.index, b.index);
    return is_opposite(t, a, b) ? 4 : 2;
}

int triple_type(const GroupTables& t, const std::array<CosetId, 3>& triple) {
    std::array<int, 3> d = {label_distance(t, triple[0], triple[1]),
                            label_distance(t, triple[0], triple[2]),
                            label_distance(t, triple[1], triple[2])};
    std::sort(d.begin(), d.end());
    return 100 * d[0] + 10 * d[1] + d[2];
}

bool is_coherent_l_triple(const CosetId& a, const CosetId& b, const CosetId& c) {
    return !(a == bar_partner(b) || a == bar_partner(c) || b == bar_partner(c));
}

std::string family_name(TupleFamily f) {
    switch (f) {
    case TupleFamily::K3: return "SK3";
    case TupleFamily::L3: return "SL3";
    case TupleFamily::KL2: return "SKL2";
    case TupleFamily::LK2: return "SLK2";
    case TupleFamily::T3: return "T3";
    }
    return "?";
}

TupleFamily family_from_name(const std::string& s) {
    if (s == "SK3") return TupleFamily::K3;
    if (s == "SL3") return TupleFamily::L3;
    if (s == "SKL2") return TupleFamily::KL2;
    if (s == "SLK2") return TupleFamily::LK2;
    if (s == "T3") return TupleFamily::T3;
    throw LabelingMismatch("unknown tuple family: " + s);
}

namespace {

// Enumerates all packed tuples of a family in increasing (lexicographic) key
// order.
std::vector<std::uint32_t> enumerate_family(TupleFamily f) {
    std::vector<std::uint32_t> keys;
    const auto all_triples = [&keys](int n) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) keys.push_back(pack3(i, j, k));
    };
    switch (f) {
    case TupleFamily::K3: all_triples(32); break;
    case TupleFamily::L3: all_triples(12); break;
    case TupleFamily::T3: all_triples(44); break;
    case TupleFamily::KL2:
        for (int k = 0; k < 32; ++k)
            for (int i = 0; i < 12; ++i)
                for (int j = i + 1; j < 12; ++j) keys.push_back(pack3(k, i, j));
        break;
    case TupleFamily::LK2:
        for (int l = 0; l < 12; ++l)
            for (int i = 0; i < 32; ++i)
                for (int j = i + 1; j < 32; ++j) keys.push_back(pack3(l, i, j));
        break;
    }
    return keys;
}

std::uint32_t act_on_key(const GroupTables& t, TupleFamily f, int gi, std::uint32_t key) {
    const Unpacked u = unpack3(key);
    switch (f) {
    case TupleFamily::K3: {
        int a = t.k_act[static_cast<std::size_t>(gi)][static_cast<std::size_t>(u.x0)];
        int b = t.k_act[static_cast<std::size_t>(gi)][static_cast<std::size_t>(u.x1)];
        int c = t.k_act[static_cast<std::size_t>(gi)][static_cast<std::size_t>(u.x2)];
        std::array<int, 3> v{a, b, c};
        std::sort(v.begin(), v.end());
        return pack3(v[0], v[1], v[2]);
    }
    case TupleFamily::L3: {
        int a = t.l_act[static_cast<std::size_t>(gi)][static_cast<std::size_t>(u.x0)];
        int b = t.l_act[static_cast<std::size_t>(gi)][static_cast<std::size_t>(u.x1)];
        int c = t.l_act[static_cast<std::size_t>(gi)][static_cast<std::size_t>(u.x2)];
        std::array<int, 3> v{a, b, c};
        std::sort(v.begin(), v.end());
        return pack3(v[0], v[1], v[2]);
    }
    case TupleFamily::T3: {
        std::array<int, 3> v{flat_act(t, gi, u.x0), flat_act(t, gi, u.x1),
                             flat_act(t, gi, u.x2)};
        std::sort(v.begin(), v.end());
        return pack3(v[0], v[1], v[2]);
    }
    case TupleFamily::KL2: {
        const int k = t.k_act[static_cast<std::size_t>(gi)][static_cast<std::size_t>(u.x0)];
        int i = t.l_act[static_cast<std::size_t>(gi)][static_cast<std::size_t>(u.x1)];
        int j = t.l_act[static_cast<std::size_t>(gi)][static_cast<std::size_t>(u.x2)];
        if (i > j) std::swap(i, j);
        return pack3(k, i, j);
    }
    case TupleFamily::LK2: {
        const int l = t.l_act[static_cast<std::size_t>(gi)][static_cast<std::size_t>(u.x0)];
        int i = t.k_act[static_cast<std::size_t>(gi)][static_cast<std::size_t>(u.x1)];
        int j = t.k_act[static_cast<std::size_t>(gi)][static_cast<std::size_t>(u.x2)];
        if (i > j) std::swap(i, j);
        return pack3(l, i, j);
    }
    }
    throw LabelingMismatch("bad tuple family");
}

std::vector<CosetId> tuple_from_key(TupleFamily f, std::uint32_t key) {
    const Unpacked u = unpack3(key);
    switch (f) {
    case TupleFamily::K3:
        return {{Side::K, u.x0}, {Side::K, u.x1}, {Side::K, u.x2}};
    case TupleFamily::L3:
        return {{Side::L, u.x0}, {Side::L, u.x1}, {Side::L, u.x2}};
    case TupleFamily::T3:
        return {coset_from_flat(u.x0), coset_from_flat(u.x1), coset_from_flat(u.x2)};
    case TupleFamily::KL2:
        return {{Side::K, u.x0}, {Side::L, u.x1}, {Side::L, u.x2}};
    case TupleFamily::LK2:
        return {{Side::L, u.x0}, {Side::K, u.x1}, {Side::K, u.x2}};
    }
    throw LabelingMismatch("bad tuple family");
}

std::uint32_t key_from_tuple(TupleFamily f, const std::vector<CosetId>& tuple) {
    if (tuple.size() != 3) throw LabelingMismatch("tuple must have three labels");
    const auto flat_sorted = [&tuple] {
        std::array<int, 3> v{tuple[0].flat(), tuple[1].flat(), tuple[2].flat()};
        std::sort(v.begin(), v.end());
        return v;
    };
    switch (f) {
    case TupleFamily::K3: {
        for (const auto& id : tuple)
            if (id.side != Side::K) throw LabelingMismatch("K3 tuple needs K labels");
        const auto v = flat_sorted();
        return pack3(v[0], v[1], v[2]);
    }
    case TupleFamily::L3: {
        for (const auto& id : tuple)
            if (id.side != Side::L) throw LabelingMismatch("L3 tuple needs L labels");
        std::array<int, 3> v{tuple[0].index, tuple[1].index, tuple[2].index};
        std::sort(v.begin(), v.end());
        return pack3(v[0], v[1], v[2]);
    }
    case TupleFamily::T3: {
        const auto v = flat_sorted();
        return pack3(v[0], v[1], v[2]);
    }
    case TupleFamily::KL2: {
        if (tuple[0].side != Side::K || tuple[1].side != Side::L ||
            tuple[2].side != Side::L)
            throw LabelingMismatch("KL2 tuple is (K, L, L)");
        int i = tuple[1].index, j = tuple[2].index;
        if (i > j) std::swap(i, j);
        return pack3(tuple[0].index, i, j);
    }
    case TupleFamily::LK2: {
        if (tuple[0].side != Side::L || tuple[1].side != Side::K ||
            tuple[2].side != Side::K)
            throw LabelingMismatch("LK2 tuple is (L, K, K)");
        int i = tuple[1].index, j = tuple[2].index;
        if (i > j) std::swap(i, j);
        return pack3(tuple[0].index, i, j);
    }
    }
    throw LabelingMismatch("bad tuple family");
}

} // namespace

int FamilyClassification::orbit_of(const std::vector<CosetId>& tuple) const {
    const auto it = orbit_index.find(key_from_tuple(family, tuple));
    return it == orbit_index.end() ? -1 : it->second;
}

FamilyClassification classify_family(const GroupTables& t, TupleFamily f) {
    FamilyClassification out;
    out.family = f;
    const std::vector<std::uint32_t> keys = enumerate_family(f);
    out.total = static_cast<long>(keys.size());
    out.orbit_index.reserve(keys.size() * 2);

    for (const std::uint32_t start : keys) {
        if (out.orbit_index.count(start)) continue;
        const int oid = static_cast<int>(out.orbits.size());
        long size = 0;
        std::deque<std::uint32_t> queue{start};
        out.orbit_index.emplace(start, oid);
        while (!queue.empty()) {
            const std::uint32_t cur = queue.front();
            queue.pop_front();
            ++size;
            for (int gi = 0; gi < 6; ++gi) {
                const std::uint32_t nxt = act_on_key(t, f, gi, cur);
                if (out.orbit_index.emplace(nxt, oid).second) queue.push_back(nxt);
            }
        }
        // The sweep visits keys in increasing order, so the start key is the
        // lexicographically minimal member of its orbit.
        out.orbits.push_back({tuple_from_key(f, start), size});
    }
    return out;
}

} // namespace klrel
