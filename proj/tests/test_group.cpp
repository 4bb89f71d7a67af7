#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "klrel/group.hpp"

using namespace klrel;

namespace {

int element_order(const GroupTables& t, int e) {
    int cur = e, n = 1;
    while (cur != t.identity) {
        cur = t.mul(cur, e);
        ++n;
    }
    return n;
}

Mat7i word(const GroupTables& t, const std::vector<int>& gen_indices) {
    Mat7i m = Mat7i::Identity();
    for (int gi : gen_indices)
        m = checked_mul(m, t.elements[static_cast<std::size_t>(
                               t.coxeter_gens[static_cast<std::size_t>(gi)])]);
    return m;
}

} // namespace

TEST_CASE("group order and subgroup orders") {
    const GroupTables& t = group_tables();
    CHECK(t.order() == 23040);
    CHECK(t.gk_elements.size() == 720);
    CHECK(t.gl_elements.size() == 1920);

    int max_entry = 0;
    for (const Mat7i& m : t.elements)
        max_entry = std::max(max_entry, m.cwiseAbs().maxCoeff());
    CHECK(max_entry <= 3); // documented entry bound
    CHECK(max_entry == 2); // observed sharp value for this group

}

TEST_CASE("central involution") {
    const GroupTables& t = group_tables();
    REQUIRE(t.w0 >= 0);
    CHECK(t.w0 != t.identity);
    CHECK(t.mul(t.w0, t.w0) == t.identity);
    for (int g : t.defining_gens)
        CHECK(t.mul(t.w0, g) == t.mul(g, t.w0));

    // The defining word (12)(34)[[(abcd)(efg)]^2 mixing]^4, multiplied left
    // to right, lands on the same element.
    const Mat7i c = four_three_cycle();
    const Mat7i q = checked_mul(checked_mul(c, c), mixing_matrix());
    Mat7i w = checked_mul(transposition(1, 2), transposition(3, 4));
    for (int i = 0; i < 4; ++i) w = checked_mul(w, q);
    CHECK(t.find(w) == t.w0);
}

TEST_CASE("Coxeter presentation of type D6") {
    const GroupTables& t = group_tables();
    // Vertices in array order: 1', 1, 2, 3, 4, 5. Edges of the D6 diagram:
    // the fork 1'-2, 1-2 and the chain 2-3-4-5.
    const std::set<std::pair<int, int>> edges = {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
    for (int i = 0; i < 6; ++i) {
        CHECK(element_order(t, t.coxeter_gens[static_cast<std::size_t>(i)]) == 2);
        for (int j = i + 1; j < 6; ++j) {
            const int m_expected = edges.count({i, j}) ? 3 : 2;
            const int prod = t.mul(t.coxeter_gens[static_cast<std::size_t>(i)],
                                   t.coxeter_gens[static_cast<std::size_t>(j)]);
            CHECK(element_order(t, prod) == m_expected);
        }
    }
}

TEST_CASE("coset labels anchor the identity and the involution") {
    const GroupTables& t = group_tables();
    CHECK(t.k_label[static_cast<std::size_t>(t.identity)] == 0);  // p0
    CHECK(t.k_label[static_cast<std::size_t>(t.w0)] == 16);       // n0
    CHECK(t.l_label[static_cast<std::size_t>(t.identity)] == 5);  // L6
    CHECK(t.l_label[static_cast<std::size_t>(t.w0)] == 11);       // L6bar

    // Left multiplication by w0 exchanges p_k with n_k and L_i with L_ibar.
    for (int lbl = 0; lbl < 32; ++lbl) {
        const int moved = t.k_label[static_cast<std::size_t>(
            t.mul(t.w0, t.k_rep[static_cast<std::size_t>(lbl)]))];
        CHECK(moved == (lbl + 16) % 32);
    }
    for (int lbl = 0; lbl < 12; ++lbl) {
        const int moved = t.l_label[static_cast<std::size_t>(
            t.mul(t.w0, t.l_rep[static_cast<std::size_t>(lbl)]))];
        CHECK(moved == (lbl + 6) % 12);
    }
}

TEST_CASE("coset incidence at the identity labels") {
    const GroupTables& t = group_tables();
    CHECK(t.kl_meet[0][5]);   // identity lies in p0 and L6
    CHECK(t.kl_meet[0][0]);   // p0 also meets L1
    CHECK(t.kl_meet[16][11]); // w0 lies in n0 and L6bar
}

TEST_CASE("label action is a genuine right action") {
    const GroupTables& t = group_tables();
    const int g1 = t.coxeter_gens[3], g2 = t.defining_gens[5];
    const int g12 = t.mul(g1, g2);
    for (int lbl = 0; lbl < 32; ++lbl)
        CHECK(t.k_label_after(t.k_label_after(lbl, g1), g2) == t.k_label_after(lbl, g12));
    for (int lbl = 0; lbl < 12; ++lbl)
        CHECK(t.l_label_after(t.l_label_after(lbl, g1), g2) == t.l_label_after(lbl, g12));
}

TEST_CASE("permutation representation has the documented generator images") {
    const GroupTables& t = group_tables();
    const auto expect_swap = [&](int cox_idx, int ua, int ub) {
        const auto img = phi_image(t, t.coxeter_gens[static_cast<std::size_t>(cox_idx)]);
        for (int i = 0; i < 12; ++i) {
            int want = i;
            if (i == ua) want = ub;
            if (i == ub) want = ua;
            if (i == ua + 6) want = ub + 6;
            if (i == ub + 6) want = ua + 6;
            CHECK(img[static_cast<std::size_t>(i)] == want);
        }
    };
    expect_swap(1, 0, 1); // s1: L1 <-> L2
    expect_swap(2, 1, 2); // s2: L2 <-> L3
    expect_swap(3, 2, 3); // s3: L3 <-> L4
    expect_swap(4, 3, 4); // s4: L4 <-> L5
    expect_swap(5, 4, 5); // s5: L5 <-> L6

    // s1' maps L1 -> L2bar and L2 -> L1bar, fixing the rest.
    const auto img = phi_image(t, t.coxeter_gens[0]);
    const std::array<int, 12> want = {7, 6, 2, 3, 4, 5, 1, 0, 8, 9, 10, 11};
    for (int i = 0; i < 12; ++i) CHECK(img[static_cast<std::size_t>(i)] == want[static_cast<std::size_t>(i)]);
}

TEST_CASE("permutation representation is faithful with even bar count") {
    const GroupTables& t = group_tables();
    std::set<std::array<std::int8_t, 12>> images;
    for (int e = 0; e < t.order(); ++e) {
        const auto img = phi_image(t, e);
        // Barred labels map consistently: img[i+6] = bar(img[i]).
        int bars = 0;
        for (int i = 0; i < 6; ++i) {
            CHECK(img[static_cast<std::size_t>(i + 6)] ==
                  (img[static_cast<std::size_t>(i)] + 6) % 12);
            if (img[static_cast<std::size_t>(i)] >= 6) ++bars;
        }
        CHECK(bars % 2 == 0);
        images.insert(img);
    }
    CHECK(static_cast<int>(images.size()) == t.order());
}

TEST_CASE("documented stabilizer words act as displayed") {
    const GroupTables& t = group_tables();

    // First word: palindrome in s4,s5,s3 sending x to
    // (a, b, e-d, e-c, e, 1+a+b-g, 1+a+b-f).
    const Mat7i lam1 = word(t, {4, 5, 4, 3, 4, 5, 4});
    PointMap disp1;
    disp1.mat << 1, 0, 0, 0, 0, 0, 0,
                 0, 1, 0, 0, 0, 0, 0,
                 0, 0, 0, -1, 1, 0, 0,
                 0, 0, -1, 0, 1, 0, 0,
                 0, 0, 0, 0, 1, 0, 0,
                 1, 1, 0, 0, 0, 0, -1,
                 1, 1, 0, 0, 0, -1, 0;
    disp1.shift << 0, 0, 0, 0, 0, 1, 1;
    CHECK(t.find(lam1) == t.find(linearize_on_hyperplane(disp1)));
    const auto img1 = phi_image(t, t.find(lam1));
    const std::array<int, 12> want1 = {0, 1, 5, 3, 4, 2, 6, 7, 11, 9, 10, 8};
    for (int i = 0; i < 12; ++i)
        CHECK(img1[static_cast<std::size_t>(i)] == want1[static_cast<std::size_t>(i)]);

    // Second word sends x to (e-a, e-b, e-c, e-d, e, 1+e-f, 1+e-g).
    const Mat7i lam2 = word(t, {1, 2, 1, 0, 2, 1, 5, 4, 3, 2, 1, 0, 2, 3, 4, 5, 4});
    PointMap disp2;
    disp2.mat << -1, 0, 0, 0, 1, 0, 0,
                 0, -1, 0, 0, 1, 0, 0,
                 0, 0, -1, 0, 1, 0, 0,
                 0, 0, 0, -1, 1, 0, 0,
                 0, 0, 0, 0, 1, 0, 0,
                 0, 0, 0, 0, 1, -1, 0,
                 0, 0, 0, 0, 1, 0, -1;
    disp2.shift << 0, 0, 0, 0, 0, 1, 1;
    CHECK(t.find(lam2) == t.find(linearize_on_hyperplane(disp2)));
    const auto img2 = phi_image(t, t.find(lam2));
    const std::array<int, 12> want2 = {6, 7, 8, 4, 3, 11, 0, 1, 2, 10, 9, 5};
    for (int i = 0; i < 12; ++i)
        CHECK(img2[static_cast<std::size_t>(i)] == want2[static_cast<std::size_t>(i)]);

    // Both fix the unordered pair {p0, n4} of K-labels.
    for (const Mat7i& lam : {lam1, lam2}) {
        const int e = t.find(lam);
        const int a = t.k_label_after(0, e), b = t.k_label_after(20, e);
        CHECK(((a == 0 && b == 20) || (a == 20 && b == 0)));
    }
}

TEST_CASE("display maps are affine only through the hyperplane constant") {
    // Spot checks of the display tables themselves.
    const PointMap p4 = k_coset_display(4);
    CHECK(p4.row(0) == af_const(1) + af_coord(0) - af_coord(4));  // 1+a-e
    CHECK(p4.row(6) == af_const(2) - af_coord(4));                // 2-e
    const PointMap n0 = k_coset_display(16);
    CHECK(n0.row(0) == af_const(1) - af_coord(0));                // 1-a
    CHECK(n0.row(4) == af_const(2) - af_coord(4));                // 2-e
    const PointMap l3 = l_coset_display(2);
    CHECK(l3.row(4) == af_const(1) + af_coord(0) - af_coord(1));  // 1+a-b
    const PointMap l1bar = l_coset_display(6);
    CHECK(l1bar.row(0) == af_const(1) - af_coord(0));             // 1-a
    CHECK(l1bar.row(4) == af_const(1) + af_coord(3) - af_coord(0)); // 1+d-a
}

TEST_CASE("inverse and label parsing round trips") {
    const GroupTables& t = group_tables();
    for (int e : {1, 7, 100, 2222, 15000}) {
        CHECK(t.mul(e, t.inverse(e)) == t.identity);
        CHECK(t.mul(t.inverse(e), e) == t.identity);
    }
    for (int i = 0; i < 32; ++i) {
        const CosetId id{Side::K, i};
        CHECK(parse_label(label_string(id)) == id);
    }
    for (int i = 0; i < 12; ++i) {
        const CosetId id{Side::L, i};
        CHECK(parse_label(label_string(id)) == id);
    }
    CHECK_THROWS_AS(parse_label("p16"), LabelingMismatch);
    CHECK_THROWS_AS(parse_label("L7"), LabelingMismatch);
    CHECK_THROWS_AS(parse_label("q3"), LabelingMismatch);
}
