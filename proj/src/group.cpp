#include "klrel/group.hpp"

#include <deque>
#include <string>

namespace klrel {

namespace {

PointMap pm_from_rows(const std::array<AffineForm, 7>& rows) {
    PointMap m;
    for (int i = 0; i < 7; ++i) {
        m.shift[i] = rows[i].constant;
        m.mat.row(i) = rows[i].coeffs.transpose();
    }
    return m;
}

// BFS closure of a generating set inside an already enumerated group.
std::vector<int> closure_in(const GroupTables& t, const std::vector<int>& gens) {
    std::vector<char> seen(t.elements.size(), 0);
    std::deque<int> queue{t.identity};
    seen[t.identity] = 1;
    std::vector<int> out;
    while (!queue.empty()) {
        const int cur = queue.front();
        queue.pop_front();
        out.push_back(cur);
        for (int g : gens) {
            const int nxt = t.mul(cur, g);
            if (!seen[nxt]) {
                seen[nxt] = 1;
                queue.push_back(nxt);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

MatKey mat_key(const Mat7i& m) {
    MatKey k;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            k[static_cast<std::size_t>(7 * i + j)] = static_cast<std::int8_t>(m(i, j));
    return k;
}

Mat7i transposition(int i, int j) {
    Mat7i m = Mat7i::Identity();
    m.row(i - 1).swap(m.row(j - 1));
    return m;
}

Mat7i four_three_cycle() {
    // Parameter rotation (abcd)(efg): component sigma(i) of the image is
    // component i of the input.
    Mat7i m = Mat7i::Zero();
    const int sigma[7] = {1, 2, 3, 0, 5, 6, 4}; // zero-based images
    for (int i = 0; i < 7; ++i) m(sigma[i], i) = 1;
    return m;
}

Mat7i mixing_matrix() {
    Mat7i m = Mat7i::Zero();
    m(0, 0) = 1;                          // a
    m(1, 1) = 1;                          // b
    m(2, 2) = -1; m(2, 6) = 1;            // g - c
    m(3, 3) = -1; m(3, 6) = 1;            // g - d
    m(4, 2) = -1; m(4, 3) = -1; m(4, 4) = 1; m(4, 6) = 1; // e+g-c-d
    m(5, 2) = -1; m(5, 3) = -1; m(5, 5) = 1; m(5, 6) = 1; // f+g-c-d
    m(6, 6) = 1;                          // g
    return m;
}

Mat7i checked_mul(const Mat7i& a, const Mat7i& b) {
    Mat7i out;
    for (int i = 0; i < 7; ++i) {
        for (int j = 0; j < 7; ++j) {
            long long v = 0;
            for (int k = 0; k < 7; ++k)
                v += static_cast<long long>(a(i, k)) * b(k, j);
            if (v < -127 || v > 127)
                throw LabelingMismatch("matrix product left the int8 range");
            out(i, j) = static_cast<int>(v);
        }
    }
    return out;
}

int GroupTables::find(const Mat7i& m) const {
    const auto it = index.find(mat_key(m));
    return it == index.end() ? -1 : it->second;
}

int GroupTables::mul(int i, int j) const {
    const int r = find(checked_mul(elements[static_cast<std::size_t>(i)],
                                   elements[static_cast<std::size_t>(j)]));
    if (r < 0) throw LabelingMismatch("product escaped the enumerated group");
    return r;
}

int GroupTables::inverse(int i) const {
    // Orders are small; walk powers until the identity reappears.
    int prev = identity, cur = i;
    while (cur != identity) {
        prev = cur;
        cur = mul(cur, i);
    }
    return i == identity ? identity : prev;
}

int GroupTables::k_label_after(int label, int elem) const {
    return k_label[static_cast<std::size_t>(mul(k_rep[static_cast<std::size_t>(label)], elem))];
}

int GroupTables::l_label_after(int label, int elem) const {
    return l_label[static_cast<std::size_t>(mul(l_rep[static_cast<std::size_t>(label)], elem))];
}

CosetId GroupTables::coset_after(const CosetId& id, int elem) const {
    if (id.side == Side::K) return {Side::K, k_label_after(id.index, elem)};
    return {Side::L, l_label_after(id.index, elem)};
}

const Mat7i& GroupTables::rep_matrix(const CosetId& id) const {
    const int r = id.side == Side::K ? k_rep[static_cast<std::size_t>(id.index)]
                                     : l_rep[static_cast<std::size_t>(id.index)];
    return elements[static_cast<std::size_t>(r)];
}

PointMap negation_display() {
    PointMap m;
    m.mat = -Mat7i::Identity();
    m.shift << 1, 1, 1, 1, 2, 2, 2;
    return m;
}

PointMap k_coset_display(int idx) {
    const bool lower_family = idx >= 16; // n-labels
    const int k = idx % 16, q = k / 4, r = k % 4;
    const AffineForm one = af_const(1);
    const std::array<AffineForm, 4> abcd = {af_coord(0), af_coord(1), af_coord(2),
                                            af_coord(3)};
    // The rotation acts on the list (1,e,f,g), constant first.
    const std::array<AffineForm, 4> unit_efg = {one, af_coord(4), af_coord(5),
                                                af_coord(6)};
    const AffineForm unit_q = unit_efg[static_cast<std::size_t>(q)];
    std::array<AffineForm, 7> rows;
    for (int i = 0; i < 4; ++i) {
        const AffineForm& upper = abcd[static_cast<std::size_t>((i + r) % 4)];
        rows[static_cast<std::size_t>(i)] =
            lower_family ? unit_q - upper : one + upper - unit_q;
    }
    for (int i = 0; i < 3; ++i) {
        const AffineForm& lower = unit_efg[static_cast<std::size_t>((i + 1 + q) % 4)];
        rows[static_cast<std::size_t>(4 + i)] =
            lower_family ? one + unit_q - lower : one + lower - unit_q;
    }
    return pm_from_rows(rows);
}

PointMap l_coset_display(int idx) {
    if (idx >= 6) return negation_display().after(l_coset_display(idx - 6));
    const AffineForm a = af_coord(0), b = af_coord(1), c = af_coord(2), d = af_coord(3),
                     e = af_coord(4), f = af_coord(5), g = af_coord(6);
    const AffineForm one = af_const(1);
    std::array<AffineForm, 7> rows;
    switch (idx) {
    case 5: rows = {a, b, c, d, e, f, g}; break;                                   // L6
    case 4: rows = {a, b, c, d, f, e, g}; break;                                   // L5
    case 3: rows = {a, b, c, d, g, f, e}; break;                                   // L4
    case 2:                                                                        // L3
        rows = {a, one + a - e, one + a - f, one + a - g,
                one + a - b, one + a - c, one + a - d};
        break;
    case 1:                                                                        // L2
        rows = {a, one + a - e, one + a - f, one + a - g,
                one + a - c, one + a - b, one + a - d};
        break;
    default:                                                                       // L1
        rows = {a, one + a - e, one + a - f, one + a - g,
                one + a - d, one + a - c, one + a - b};
        break;
    }
    return pm_from_rows(rows);
}

GroupTables build_group_tables() {
    constexpr int kClosureBudget = 30000;
    GroupTables t;

    const std::array<Mat7i, 6> gens = {
        transposition(1, 2), transposition(2, 3), transposition(3, 4),
        transposition(5, 6), transposition(6, 7), mixing_matrix(),
    };

    t.elements.push_back(Mat7i::Identity());
    t.index.emplace(mat_key(t.elements[0]), 0);
    for (std::size_t head = 0; head < t.elements.size(); ++head) {
        for (const Mat7i& g : gens) {
            const Mat7i prod = checked_mul(t.elements[head], g);
            const MatKey key = mat_key(prod);
            if (t.index.emplace(key, static_cast<int>(t.elements.size())).second) {
                t.elements.push_back(prod);
                if (static_cast<int>(t.elements.size()) > kClosureBudget)
                    throw ClosureBudgetExceeded("group closure exceeded " +
                                                std::to_string(kClosureBudget) +
                                                " elements");
            }
        }
    }

    for (int i = 0; i < 6; ++i) t.defining_gens[static_cast<std::size_t>(i)] = t.find(gens[static_cast<std::size_t>(i)]);

    // Coxeter generators s1', s1, s2, s3, s4, s5 in diagram order: the fork
    // vertex is s2, with tails s1' and s1 and the chain s3, s4, s5 renumbered
    // as vertices (1',1,2,3,4,5).
    const Mat7i s1p = gens[0];                        // (12)
    const Mat7i s1 = gens[2];                         // (34)
    const Mat7i s2 = gens[1];                         // (23)
    const Mat7i s3 = checked_mul(gens[2], gens[5]);   // (34) * mixing
    const Mat7i s4 = gens[4];                         // (67)
    const Mat7i s5 = gens[3];                         // (56)
    const std::array<Mat7i, 6> cox = {s1p, s1, s2, s3, s4, s5};
    for (int i = 0; i < 6; ++i) {
        const int id = t.find(cox[static_cast<std::size_t>(i)]);
        if (id < 0) throw LabelingMismatch("Coxeter generator not in the closure");
        t.coxeter_gens[static_cast<std::size_t>(i)] = id;
    }

    t.w0 = t.find(linearize_on_hyperplane(negation_display()));
    if (t.w0 < 0) throw LabelingMismatch("central involution not in the closure");

    t.gk_elements = closure_in(
        t, {t.defining_gens[1], t.defining_gens[2], t.defining_gens[3],
            t.defining_gens[4], t.defining_gens[5]});
    t.gl_elements = closure_in(
        t, {t.defining_gens[0], t.defining_gens[1], t.defining_gens[2],
            t.defining_gens[4], t.defining_gens[5]});

    // Right cosets: the coset of a representative rho is { h*rho : h in H }.
    const auto assign_labels = [&](std::vector<std::int8_t>& out, int n_labels,
                                   auto display, const std::vector<int>& subgroup,
                                   auto& reps) {
        out.assign(t.elements.size(), -1);
        for (int lbl = 0; lbl < n_labels; ++lbl) {
            const Mat7i rep = linearize_on_hyperplane(display(lbl));
            const int rid = t.find(rep);
            if (rid < 0)
                throw LabelingMismatch("coset display " + std::to_string(lbl) +
                                       " is not a group element");
            reps[static_cast<std::size_t>(lbl)] = rid;
            for (int h : subgroup) {
                const int m = t.mul(h, rid);
                if (out[static_cast<std::size_t>(m)] != -1)
                    throw LabelingMismatch("coset displays overlap at label " +
                                           std::to_string(lbl));
                out[static_cast<std::size_t>(m)] = static_cast<std::int8_t>(lbl);
            }
        }
        for (const std::int8_t v : out)
            if (v < 0) throw LabelingMismatch("coset displays do not cover the group");
    };
    assign_labels(t.k_label, 32, k_coset_display, t.gk_elements, t.k_rep);
    assign_labels(t.l_label, 12, l_coset_display, t.gl_elements, t.l_rep);

    for (auto& row : t.kl_meet) row.fill(false);
    for (std::size_t m = 0; m < t.elements.size(); ++m)
        t.kl_meet[static_cast<std::size_t>(t.k_label[m])]
                 [static_cast<std::size_t>(t.l_label[m])] = true;

    for (int gi = 0; gi < 6; ++gi) {
        for (int lbl = 0; lbl < 32; ++lbl)
            t.k_act[static_cast<std::size_t>(gi)][static_cast<std::size_t>(lbl)] =
                static_cast<std::int8_t>(
                    t.k_label_after(lbl, t.coxeter_gens[static_cast<std::size_t>(gi)]));
        for (int lbl = 0; lbl < 12; ++lbl)
            t.l_act[static_cast<std::size_t>(gi)][static_cast<std::size_t>(lbl)] =
                static_cast<std::int8_t>(
                    t.l_label_after(lbl, t.coxeter_gens[static_cast<std::size_t>(gi)]));
    }

    return t;
}

const GroupTables& group_tables() {
    static const GroupTables t = build_group_tables();
    return t;
}

std::array<std::int8_t, 12> phi_image(const GroupTables& t, int elem) {
    std::array<std::int8_t, 12> img{};
    for (int lbl = 0; lbl < 12; ++lbl)
        img[static_cast<std::size_t>(lbl)] =
            static_cast<std::int8_t>(t.l_label_after(lbl, elem));
    return img;
}

CosetId parse_label(const std::string& s) {
    const auto bad = [&] { return LabelingMismatch("unrecognized coset label: " + s); };
    if (s.size() >= 2 && (s[0] == 'p' || s[0] == 'n')) {
        int v = -1;
        try {
            v = std::stoi(s.substr(1));
        } catch (...) {
            throw bad();
        }
        if (v < 0 || v > 15 || s != (s.substr(0, 1) + std::to_string(v))) throw bad();
        return {Side::K, (s[0] == 'p' ? 0 : 16) + v};
    }
    if (s.size() >= 2 && s[0] == 'L') {
        const bool bar = s.size() > 2 && s.substr(2) == "bar";
        if (!bar && s.size() != 2) throw bad();
        const int i = s[1] - '0';
        if (i < 1 || i > 6) throw bad();
        return l_label(i, bar);
    }
    throw bad();
}

} // namespace klrel
