#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "klrel/functions.hpp"
#include "test_util.hpp"

using namespace klrel;
using klrel::testing::check_close;

namespace {

double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Cx random_cx(std::mt19937_64& rng, double re_lo, double re_hi, double im_half) {
    const double re = re_lo + (re_hi - re_lo) * unit_draw(rng);
    const double im = -im_half + 2.0 * im_half * unit_draw(rng);
    return {re, im};
}

Vec7 random_v_point(std::mt19937_64& rng) {
    Vec6 t;
    for (int i = 0; i < 6; ++i) t[i] = random_cx(rng, 0.15, 0.85, 0.3);
    return from_free_coords(t);
}

Vec7 apply_mat(const Mat7i& m, const Vec7& x) {
    PointMap pm;
    pm.mat = m;
    return pm.apply(x);
}

// Redraws hyperplane points until every guard form clears the integers by the
// given margin, so evaluations stay away from all pole guards.
template <class DrawFn>
Vec7 sample_clear_point(std::mt19937_64& rng, const std::vector<AffineForm>& guards,
                        DrawFn draw, double margin = 0.05) {
    for (int attempt = 0; attempt < 4000; ++attempt) {
        const Vec7 x = draw(rng);
        bool ok = true;
        for (const AffineForm& f : guards) {
            if (integer_distance(f.eval(x)) < margin) {
                ok = false;
                break;
            }
        }
        if (ok) return x;
    }
    throw RejectionBudgetExceeded("test sampler exhausted its redraw budget");
}

// Guard forms for evaluating the given family after each of the given group
// elements (identity always included).
std::vector<AffineForm> guards_after(const GroupTables& t, Side side,
                                     const std::vector<int>& elems) {
    const std::vector<AffineForm> base =
        side == Side::K ? k_eval_guard_forms() : l_eval_guard_forms();
    std::vector<AffineForm> out = base;
    for (int e : elems) {
        PointMap pm;
        pm.mat = t.elements[static_cast<std::size_t>(e)];
        for (const AffineForm& f : base) out.push_back(compose(f, pm));
    }
    return out;
}

} // namespace

TEST_CASE("double evaluation tracks the extended-precision evaluation") {
    // Fixed real point on the hyperplane.
    Vec7 x;
    x << Cx(0.21, 0.0), Cx(0.33, 0.0), Cx(0.47, 0.0), Cx(0.59, 0.0), Cx(1.13, 0.0),
        Cx(1.27, 0.0), Cx(0.20, 0.0);

    Vec7T<long double> xl;
    for (int i = 0; i < 7; ++i)
        xl[i] = std::complex<long double>(x[i].real(), x[i].imag());

    const KlValue kd = eval_K_full(x);
    const auto kl = eval_K_impl<long double>(xl);
    CHECK(kd.tail_bound < 1e-9 * std::abs(kd.value));
    CHECK(std::abs(kd.value - Cx(static_cast<double>(kl.value.real()),
                                 static_cast<double>(kl.value.imag()))) <=
          kd.tail_bound + static_cast<double>(kl.tail_bound) + 1e-11 * std::abs(kd.value));

    const KlValue ld = eval_L_full(x);
    const auto ll = eval_L_impl<long double>(xl);
    CHECK(ld.tail_bound < 1e-9 * std::abs(ld.value));
    CHECK(std::abs(ld.value - Cx(static_cast<double>(ll.value.real()),
                                 static_cast<double>(ll.value.imag()))) <=
          ld.tail_bound + static_cast<double>(ll.tail_bound) + 1e-11 * std::abs(ld.value));
}

TEST_CASE("K is invariant under its six stabilizer generators") {
    const GroupTables& t = group_tables();
    const auto gens = k_stabilizer_generators(t);
    const std::vector<AffineForm> guards =
        guards_after(t, Side::K, {gens.begin(), gens.end()});

    std::mt19937_64 rng(521);
    for (int pt = 0; pt < 6; ++pt) {
        const Vec7 x = sample_clear_point(rng, guards, random_v_point);
        const Cx base = eval_K(x, 30000);
        for (int g : gens) {
            const Vec7 y = apply_mat(t.elements[static_cast<std::size_t>(g)], x);
            INFO("point ", pt, ", generator element ", g);
            check_close(eval_K(y, 30000), base, 1e-8);
        }
    }
}

TEST_CASE("L is invariant under its six stabilizer generators") {
    const GroupTables& t = group_tables();
    const auto gens = l_stabilizer_generators(t);
    const std::vector<AffineForm> guards =
        guards_after(t, Side::L, {gens.begin(), gens.end()});

    std::mt19937_64 rng(522);
    for (int pt = 0; pt < 6; ++pt) {
        const Vec7 x = sample_clear_point(rng, guards, random_v_point);
        const Cx base = eval_L(x, 30000);
        for (int g : gens) {
            const Vec7 y = apply_mat(t.elements[static_cast<std::size_t>(g)], x);
            INFO("point ", pt, ", generator element ", g);
            check_close(eval_L(y, 30000), base, 1e-8);
        }
    }
}

TEST_CASE("L agrees with its very-well-poised 7F6 representation") {
    // Extra guard forms for the 7F6 prefactor, in base coordinates.
    const AffineForm a = af_coord(0), b = af_coord(1), c = af_coord(2), d = af_coord(3),
                     e = af_coord(4), f = af_coord(5), g = af_coord(6);
    const AffineForm one = af_const(1);
    std::vector<AffineForm> guards = l_eval_guard_forms();
    for (const AffineForm& extra :
         {d + g - e, one + d + g - e, one + a + d - e, one + b + d - e, one + c + d - e,
          one + g - e, f - d})
        guards.push_back(extra);

    // Re(f-d) > 0 with margin: d small, f large.
    const auto draw = [](std::mt19937_64& rng) {
        Vec6 t;
        t[0] = random_cx(rng, 0.15, 0.85, 0.25); // a
        t[1] = random_cx(rng, 0.15, 0.85, 0.25); // b
        t[2] = random_cx(rng, 0.15, 0.85, 0.25); // c
        t[3] = random_cx(rng, 0.15, 0.40, 0.25); // d
        t[4] = random_cx(rng, 0.60, 1.20, 0.25); // e
        t[5] = random_cx(rng, 0.75, 1.20, 0.25); // f
        return from_free_coords(t);
    };

    std::mt19937_64 rng(523);
    for (int pt = 0; pt < 10; ++pt) {
        const Vec7 x = sample_clear_point(rng, guards, draw);
        REQUIRE(x[5].real() - x[3].real() > 0.3);
        const Cx direct = eval_L(x);
        const Cx via = eval_L_via_7f6(x);
        INFO("point ", pt);
        check_close(via, direct, 1e-6);
    }
}

TEST_CASE("coset evaluation does not depend on the representative") {
    const GroupTables& t = group_tables();
    std::mt19937_64 rng(524);

    const auto pick = [&](const std::vector<int>& pool) {
        return pool[static_cast<std::size_t>(rng() % pool.size())];
    };

    for (const CosetId id : {CosetId{Side::K, 3}, CosetId{Side::K, 21}, CosetId{Side::L, 2},
                             CosetId{Side::L, 8}}) {
        const int rep =
            id.side == Side::K ? t.k_rep[static_cast<std::size_t>(id.index)]
                               : t.l_rep[static_cast<std::size_t>(id.index)];
        const std::vector<int>& stab = id.side == Side::K ? t.gk_elements : t.gl_elements;
        const int other = t.mul(pick(stab), rep);
        REQUIRE(other != rep);
        if (id.side == Side::K)
            REQUIRE(t.k_label[static_cast<std::size_t>(other)] == id.index);
        else
            REQUIRE(t.l_label[static_cast<std::size_t>(other)] == id.index);

        const std::vector<AffineForm> guards = guards_after(t, id.side, {rep, other});
        for (int pt = 0; pt < 3; ++pt) {
            const Vec7 x = sample_clear_point(rng, guards, random_v_point);
            const Vec7 y1 = apply_mat(t.elements[static_cast<std::size_t>(rep)], x);
            const Vec7 y2 = apply_mat(t.elements[static_cast<std::size_t>(other)], x);
            const Cx v1 = id.side == Side::K ? eval_K(y1, 30000) : eval_L(y1, 30000);
            const Cx v2 = id.side == Side::K ? eval_K(y2, 30000) : eval_L(y2, 30000);
            INFO(label_string(id), ", point ", pt);
            check_close(v2, v1, 1e-8);
        }
    }
}

TEST_CASE("coset-indexed evaluation anchors") {
    const GroupTables& t = group_tables();
    std::mt19937_64 rng(525);

    std::vector<AffineForm> guards = k_eval_guard_forms();
    {
        PointMap neg = negation_display();
        for (const AffineForm& f : k_eval_guard_forms()) guards.push_back(compose(f, neg));
        for (const AffineForm& f : l_eval_guard_forms()) guards.push_back(f);
    }
    const Vec7 x = sample_clear_point(rng, guards, random_v_point);

    // p0 and L6 contain the identity.
    check_close(eval_J(t, CosetId{Side::K, 0}, x), eval_K(x), 1e-14);
    check_close(eval_J(t, CosetId{Side::L, 5}, x), eval_L(x), 1e-14);

    // n0 contains the central involution, acting as x -> (1-a,...,2-g).
    const Vec7 wx = negation_display().apply(x);
    check_close(eval_J(t, CosetId{Side::K, 16}, x), eval_K(wx), 1e-10);
}

TEST_CASE("twiddle reparameterization") {
    std::mt19937_64 rng(526);

    // The induced point always satisfies the hyperplane constraint.
    for (int trial = 0; trial < 20; ++trial) {
        TwiddleParams t;
        for (auto& z : t.x) z = random_cx(rng, -1.0, 1.0, 0.5);
        CHECK(on_hyperplane(twiddle_point(t), 1e-12));
    }

    // Redraws parameters until the induced points of every listed variant
    // clear the guard forms of the family being evaluated.
    using Variant = TwiddleParams (*)(const TwiddleParams&);
    const auto clear_params = [&rng](const std::vector<AffineForm>& guards,
                                     const std::vector<Variant>& variants) {
        for (int attempt = 0; attempt < 2000; ++attempt) {
            TwiddleParams t;
            for (auto& z : t.x) z = random_cx(rng, 0.02, 0.10, 0.05);
            bool ok = true;
            for (const Variant v : variants) {
                const Vec7 p = twiddle_point(v(t));
                for (const AffineForm& f : guards)
                    if (integer_distance(f.eval(p)) < 0.05) ok = false;
            }
            if (ok) return t;
        }
        throw RejectionBudgetExceeded("twiddle sampler exhausted its redraw budget");
    };

    const Variant keep = [](const TwiddleParams& t) { return t; };

    SUBCASE("matches the direct evaluation at the induced point") {
        const TwiddleParams t = clear_params(k_eval_guard_forms(), {keep});
        check_close(eval_K_tilde(t, 30000), eval_K(twiddle_point(t), 30000), 1e-14);
    }

    SUBCASE("K is symmetric in all six twiddle coordinates") {
        const Variant swap03 = [](const TwiddleParams& t) {
            TwiddleParams s = t;
            std::swap(s.x[0], s.x[3]);
            return s;
        };
        const Variant rotate = [](const TwiddleParams& t) {
            TwiddleParams s;
            for (int i = 0; i < 6; ++i) s.x[static_cast<std::size_t>(i)] = t.x[(i + 1) % 6];
            return s;
        };
        const TwiddleParams t = clear_params(k_eval_guard_forms(), {keep, swap03, rotate});
        const Cx base = eval_K_tilde(t, 30000);
        check_close(eval_K_tilde(swap03(t), 30000), base, 1e-8);
        check_close(eval_K_tilde(rotate(t), 30000), base, 1e-8);
    }

    SUBCASE("L is symmetric in the last five coordinates with even sign flips") {
        const Variant swap14 = [](const TwiddleParams& t) {
            TwiddleParams s = t;
            std::swap(s.x[1], s.x[4]);
            return s;
        };
        const Variant flip25 = [](const TwiddleParams& t) {
            TwiddleParams s = t;
            s.x[2] = -s.x[2];
            s.x[5] = -s.x[5];
            return s;
        };
        const Variant mixed = [](const TwiddleParams& t) {
            TwiddleParams s = t;
            std::swap(s.x[3], s.x[5]);
            s.x[1] = -s.x[1];
            s.x[3] = -s.x[3];
            return s;
        };
        const TwiddleParams t =
            clear_params(l_eval_guard_forms(), {keep, swap14, flip25, mixed});
        const Cx base = eval_L_tilde(t, 30000);
        check_close(eval_L_tilde(swap14(t), 30000), base, 1e-8);
        check_close(eval_L_tilde(flip25(t), 30000), base, 1e-8);
        check_close(eval_L_tilde(mixed(t), 30000), base, 1e-8);
    }
}

TEST_CASE("pole guards and domain errors") {
    // Off the hyperplane.
    Vec7 bad;
    bad << Cx(0.2, 0), Cx(0.3, 0), Cx(0.4, 0), Cx(0.5, 0), Cx(1.1, 0), Cx(1.2, 0),
        Cx(0.4, 0);
    CHECK_THROWS_AS(eval_K(bad), NotOnHyperplane);
    CHECK_THROWS_AS(eval_L(bad), NotOnHyperplane);
    CHECK_THROWS_AS(eval_L_via_7f6(bad), NotOnHyperplane);

    const auto v_point = [](Cx a, Cx b, Cx c, Cx d, Cx e, Cx f) {
        Vec7 x;
        x << a, b, c, d, e, f, Cx(1, 0) + a + b + c + d - e - f;
        return x;
    };

    // sin(pi a) zero in the K prefactor (a near any integer).
    CHECK_THROWS_AS(eval_K(v_point(Cx(1.0 + 1e-8, 0), Cx(0.3, 0), Cx(0.4, 0), Cx(0.5, 0),
                                   Cx(1.1, 0), Cx(1.2, 0))),
                    PrefactorPole);
    // Gamma pole in the K prefactor: 1+a-e near 0.
    CHECK_THROWS_AS(eval_K(v_point(Cx(0.4, 0), Cx(0.3, 0), Cx(0.5, 0), Cx(0.6, 0),
                                   Cx(1.4 - 1e-9, 0), Cx(1.2, 0))),
                    PrefactorPole);
    // sin(pi e) zero in the L prefactor.
    CHECK_THROWS_AS(eval_L(v_point(Cx(0.4, 0), Cx(0.3, 0), Cx(0.5, 0), Cx(0.6, 0),
                                   Cx(2.0 - 1e-8, 0), Cx(1.2, 0))),
                    PrefactorPole);
    // Gamma pole in the L prefactor: 1+b-e near 0.
    CHECK_THROWS_AS(eval_L(v_point(Cx(0.4, 0), Cx(0.3, 0), Cx(0.5, 0), Cx(0.6, 0),
                                   Cx(1.3 + 1e-9, 0), Cx(1.2, 0))),
                    PrefactorPole);

    // 7F6 representation outside its convergence half-space: Re(f-d) < 0.
    CHECK_THROWS_AS(eval_L_via_7f6(v_point(Cx(0.4, 0), Cx(0.3, 0), Cx(0.5, 0), Cx(0.9, 0),
                                           Cx(1.1, 0), Cx(0.5, 0))),
                    ConvergenceConditionViolated);
}
