#include "klrel/relations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace klrel {

namespace {

using namespace vars;

CoeffAtom S1(const AffineForm& u) { return sine_atom({u}); }

CoeffAtom A4(const AffineForm& u1, const AffineForm& u2, const AffineForm& u3,
             const AffineForm& u4) {
    return gamma_recip_atom(u1, u2, u3, u4);
}

CoeffAtom Bk(int k, const PointMap& arg = PointMap{}) {
    static constexpr AtomKind kinds[5] = {AtomKind::B1, AtomKind::B2, AtomKind::B3,
                                          AtomKind::B4, AtomKind::B5};
    return block_atom(kinds[k - 1], arg);
}

CoeffExpr pos(std::vector<CoeffAtom> atoms) { return CoeffExpr{+1, std::move(atoms)}; }
CoeffExpr neg(std::vector<CoeffAtom> atoms) { return CoeffExpr{-1, std::move(atoms)}; }

PointMap swap_map(int i, int j) {
    PointMap m;
    m.mat = transposition(i, j);
    return m;
}

std::vector<Relation> build_catalog() {
    const AffineForm one = n(1);
    std::vector<Relation> rels;
    rels.reserve(18);

    // --- type 222 ---

    rels.push_back(
        {"Orbit1_LKK",
         {{{k_label_p(0), pos({S1(a), A4(b, one + b - e, one + b - f, one + b - g)})},
           {k_label_p(1), neg({S1(b), A4(a, one + a - e, one + a - f, one + a - g)})},
           {l_label(3, false), neg({S1(b - a), A4(a, b, c, d)})}}},
         222});

    rels.push_back({"Orbit1_KLL",
                    {{{k_label_p(0), pos({S1(f - e), A4(one - a, e - a, f - a, g - a)})},
                      {l_label(6, false), pos({S1(f - a), A4(e - a, e - b, e - c, e - d)})},
                      {l_label(5, false), neg({S1(e - a), A4(f - a, f - b, f - c, f - d)})}}},
                    222});

    rels.push_back({"KKK_222",
                    {{{k_label_p(0), pos({S1(c - b), A4(one - a, e - a, f - a, g - a)})},
                      {k_label_p(1), pos({S1(a - c), A4(one - b, e - b, f - b, g - b)})},
                      {k_label_p(2), pos({S1(b - a), A4(one - c, e - c, f - c, g - c)})}}},
                    222});

    rels.push_back({"coherent_LLL",
                    {{{l_label(6, false), pos({S1(f - g), A4(e - a, e - b, e - c, e - d)})},
                      {l_label(5, false), pos({S1(g - e), A4(f - a, f - b, f - c, f - d)})},
                      {l_label(4, false), pos({S1(e - f), A4(g - a, g - b, g - c, g - d)})}}},
                    222});

    // --- type 224 ---

    rels.push_back(
        {"Orbit3_LKK",
         {{{k_label_p(0), pos({S1(c), A4(one - a, e - a, f - a, g - a),
                               A4(b, one + b - e, one + b - f, one + b - g)})},
           {l_label(1, true),
            neg({S1(b - a), A4(a, b, c, d), A4(one - c, e - c, f - c, g - c)})},
           {k_label_p(1), neg({Bk(1)})}}},
         224});

    rels.push_back(
        {"Orbit4_LKK",
         {{{k_label_p(0), pos({S1(f - a), A4(one - a, e - a, f - a, g - a),
                               A4(one + a - g, one + b - g, one + c - g, one + d - g)})},
           {k_label_n(4), neg({S1(g - a), A4(f - a, f - b, f - c, f - d),
                               A4(a, one + a - e, one + a - f, one + a - g)})},
           {l_label(4, false), neg({Bk(2)})}}},
         224});

    rels.push_back(
        {"incoherent_LLL",
         {{{l_label(6, false),
            pos({S1(g), A4(one + a - f, one + b - f, one + c - f, one + d - f),
                 A4(e - a, e - b, e - c, e - d)})},
           {l_label(6, true),
            pos({S1(e - f), A4(a, b, c, d), A4(g - a, g - b, g - c, g - d)})},
           {l_label(5, false), neg({Bk(3)})}}},
         224});

    rels.push_back(
        {"Orbit2_KLL",
         {{{k_label_p(0),
            pos({S1(g), A4(one + a - f, one + b - f, one + c - f, one + d - f),
                 A4(one - a, e - a, f - a, g - a)})},
           {l_label(6, true),
            pos({S1(f - a), A4(a, b, c, d), A4(g - a, g - b, g - c, g - d)})},
           {l_label(5, false), neg({Bk(4)})}}},
         224});

    rels.push_back(
        {"KKK_224",
         {{{k_label_p(0), pos({S1(e - a - b), A4(one - a, e - a, f - a, g - a),
                               A4(b, one + b - e, one + b - f, one + b - g)})},
           {k_label_n(4), pos({S1(b - a), A4(one + a - e, one + b - e, g - c, g - d),
                               A4(a, b, f - c, f - d)})},
           {k_label_p(1), neg({Bk(5)})}}},
         224});

    // --- type 244 ---

    rels.push_back(
        {"Orbit3_KLL",
         {{{k_label_p(0), pos({A4(one - a, e - a, f - a, g - a), Bk(3)})},
           {l_label(6, true),
            pos({S1(e - a), A4(f - a, f - b, f - c, f - d), A4(g - a, g - b, g - c, g - d),
                 A4(a, b, c, d)})},
           {l_label(6, false), neg({A4(e - a, e - b, e - c, e - d), Bk(4)})}}},
         244});

    rels.push_back(
        {"Orbit4_KLL",
         {{{k_label_p(0),
            pos({S1(d - c), A4(one - a, e - a, f - a, g - a),
                 A4(one - a, one - b, one - c, one - d),
                 A4(b, one + b - e, one + b - f, one + b - g)})},
           {l_label(1, true), neg({A4(one - c, e - c, f - c, g - c), Bk(1, swap_map(3, 4))})},
           {l_label(2, true), pos({A4(one - d, e - d, f - d, g - d), Bk(1)})}}},
         244});

    rels.push_back(
        {"Orbit2_LKK",
         {{{k_label_p(0), pos({A4(one - a, e - a, f - a, g - a), Bk(4, swap_map(1, 2))})},
           {k_label_p(1), neg({A4(one - b, e - b, f - b, g - b), Bk(4)})},
           {l_label(6, true),
            neg({S1(b - a), A4(f - a, f - b, f - c, f - d), A4(g - a, g - b, g - c, g - d),
                 A4(a, b, c, d)})}}},
         244});

    rels.push_back(
        {"Orbit6_LKK",
         {{{k_label_p(0),
            pos({S1(a), A4(one + a - f, one + b - f, one + c - f, one + d - f),
                 A4(one + a - g, one + b - g, one + c - g, one + d - g),
                 A4(one - a, e - a, f - a, g - a)})},
           {k_label_n(4), neg({A4(a, one + a - e, one + a - f, one + a - g), Bk(4)})},
           {l_label(6, true), neg({A4(a, b, c, d), Bk(2)})}}},
         244});

    rels.push_back(
        {"KKK_244",
         {{{k_label_p(0),
            pos({S1(f - e), A4(one - a, one - b, one + c - g, one + d - g),
                 A4(b, one + b - e, one + b - f, one + b - g),
                 A4(one - a, e - a, f - a, g - a)})},
           {k_label_n(4),
            neg({A4(one + a - e, one + b - e, f - c, f - d), Bk(5, swap_map(5, 6))})},
           {k_label_n(8), pos({A4(one + a - f, one + b - f, e - c, e - d), Bk(5)})}}},
         244});

    // --- type 246 ---

    rels.push_back(
        {"Orbit7_LKK",
         {{{k_label_p(0), pos({A4(one + a - e, one + b - e, one + c - e, one + d - e),
                               A4(one - a, e - a, f - a, g - a), Bk(4)})},
           {k_label_n(0),
            neg({S1(e - a), A4(f - a, f - b, f - c, f - d), A4(g - a, g - b, g - c, g - d),
                 A4(a, b, c, d), A4(a, one + a - e, one + a - f, one + a - g)})},
           {l_label(6, false), neg({block_atom(AtomKind::C)})}}},
         246});

    rels.push_back(
        {"KKK_246",
         {{{k_label_p(0), pos({A4(one - a, one - b, one - c, one - d),
                               A4(one + a - e, one + b - e, one + c - e, one + d - e),
                               Bk(2)})},
           {k_label_n(0),
            pos({S1(e), A4(f - a, f - b, f - c, f - d), A4(g - a, g - b, g - c, g - d),
                 A4(a, one + a - e, one + a - f, one + a - g),
                 A4(a, one + a - e, one + a - f, one + a - g)})},
           {k_label_p(4), neg({block_atom(AtomKind::C)})}}},
         246});

    // --- type 444 ---

    rels.push_back(
        {"Orbit5_LKK",
         {{{k_label_p(0),
            pos({A4(one - a, e - a, f - a, g - a),
                 A4(one + a - f, one + b - f, one + c - f, one + d - f),
                 Bk(4, point_map_from_rows({e - a, e - b, e - c, e - d, one + e - f, e,
                                            one + e - g}))})},
           {k_label_n(4), neg({A4(g - a, g - b, g - c, g - d),
                               A4(a, one + a - e, one + a - f, one + a - g),
                               Bk(4, swap_map(5, 7))})},
           {l_label(4, true),
            neg({A4(a, b, c, d), A4(e - a, e - b, e - c, e - d), Bk(2)})}}},
         444});

    rels.push_back(
        {"KKK_444",
         {{{k_label_p(0),
            pos({A4(one - a, e - a, f - a, g - a),
                 A4(b, one + b - e, one + b - f, one + b - g),
                 Bk(5, point_map_from_rows({e - a, b, one + b - f, g - a, one + b - a,
                                            one + b + c - f, one + b + d - f}))})},
           {k_label_n(4),
            pos({A4(a, one + a - e, f - d, g - d), A4(b, one + b - e, f - c, g - c),
                 Bk(5, point_map_from_rows({one + b - e, b, f - c, g - c, one + a + b - e,
                                            one + b - c, one + b + d - e}))})},
           {k_label_p(5),
            pos({A4(a, b, c, d), A4(e - a, e - b, e - c, e - d), Bk(5)})}}},
         444});

    return rels;
}

// Deduplication key: the constant plus the seven coefficients.
std::array<int, 8> form_key(const AffineForm& f) {
    std::array<int, 8> k{};
    k[0] = f.constant;
    for (int i = 0; i < 7; ++i) k[static_cast<std::size_t>(i + 1)] = f.coeffs[i];
    return k;
}

void dedupe_forms(std::vector<AffineForm>& forms) {
    std::sort(forms.begin(), forms.end(), [](const AffineForm& l, const AffineForm& r) {
        return form_key(l) < form_key(r);
    });
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (char ch : s) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ull;
    }
    return h;
}

const std::vector<AffineForm>& catalog_guard_forms() {
    static const std::vector<AffineForm> forms = [] {
        const GroupTables& t = group_tables();
        std::vector<AffineForm> out;
        for (const Relation& r : relation_catalog()) {
            const std::vector<AffineForm> forms_r = relation_guard_forms(t, r);
            out.insert(out.end(), forms_r.begin(), forms_r.end());
        }
        dedupe_forms(out);
        return out;
    }();
    return forms;
}

bool point_clears_guards(const Vec7& x, const std::vector<AffineForm>& guards) {
    for (const AffineForm& f : guards)
        if (near_integer_guard(f.eval(x))) return false;
    return std::abs(sinpi(x[5] - x[6])) >= kB3GuardBand;
}

Vec7 draw_raw_point(std::mt19937_64& rng) {
    const auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    Vec6 free_coords;
    for (int i = 0; i < 6; ++i)
        free_coords[i] = Cx(0.15 + 0.70 * unit(), -0.3 + 0.6 * unit());
    return from_free_coords(free_coords);
}

} // namespace

const std::vector<Relation>& relation_catalog() {
    static const std::vector<Relation> catalog = build_catalog();
    return catalog;
}

Relation transport_relation(const GroupTables& t, const Relation& r, int elem) {
    PointMap rho;
    rho.mat = t.elements[static_cast<std::size_t>(elem)];
    Relation out = r;
    for (RelationTerm& term : out.terms) {
        term.coset = t.coset_after(term.coset, elem);
        term.coeff = transport(term.coeff, rho);
    }
    return out;
}

std::vector<AffineForm> relation_guard_forms(const GroupTables& t, const Relation& r) {
    std::vector<AffineForm> out;
    for (const RelationTerm& term : r.terms) {
        append_guard_forms(term.coeff, out);
        PointMap rep;
        rep.mat = t.rep_matrix(term.coset);
        const std::vector<AffineForm> base =
            term.coset.side == Side::K ? k_eval_guard_forms() : l_eval_guard_forms();
        for (const AffineForm& f : base) out.push_back(compose(f, rep));
    }
    dedupe_forms(out);
    return out;
}

void check_relation_structure(const GroupTables& t, const Relation& r) {
    const std::array<CosetId, 3> labels{r.terms[0].coset, r.terms[1].coset,
                                        r.terms[2].coset};
    if (labels[0] == labels[1] || labels[0] == labels[2] || labels[1] == labels[2])
        throw LabelingMismatch(r.family + ": relation labels are not distinct");

    const int measured = triple_type(t, labels);
    if (measured != r.type)
        throw LabelingMismatch(r.family + ": declared type " + std::to_string(r.type) +
                               " but label distances give " + std::to_string(measured));

    const int digit_sum = r.type / 100 + (r.type / 10) % 10 + r.type % 10;
    const int expected_length = 2 * digit_sum - 6;
    for (const RelationTerm& term : r.terms) {
        const int len = length(term.coeff);
        if (len != expected_length)
            throw LabelingMismatch(r.family + " [" + label_string(term.coset) +
                                   "]: coefficient length " + std::to_string(len) +
                                   ", expected " + std::to_string(expected_length));
    }

    for (int l = 0; l < 3; ++l) {
        const int j = (l + 1) % 3, k = (l + 2) % 3;
        const int d = label_distance(t, labels[static_cast<std::size_t>(j)],
                                     labels[static_cast<std::size_t>(k)]);
        const int expected_width = 1 << (d / 2 - 1);
        const int w = width(r.terms[static_cast<std::size_t>(l)].coeff);
        if (w != expected_width)
            throw LabelingMismatch(
                r.family + " [" + label_string(labels[static_cast<std::size_t>(l)]) +
                "]: coefficient width " + std::to_string(w) + ", expected " +
                std::to_string(expected_width) + " from opposite-pair distance " +
                std::to_string(d));
    }
}

double ResidualBreakdown::ratio() const {
    if (scale > 0.0) return residual / scale;
    return residual == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

ResidualBreakdown residual(const GroupTables& t, const Relation& r, const Vec7& x,
                           long budget) {
    if (!on_hyperplane(x))
        throw SamplingRejected(r.family + ": point is off the hyperplane");
    if (!point_clears_guards(x, relation_guard_forms(t, r)))
        throw SamplingRejected(r.family + ": point hits a pole guard");

    ResidualBreakdown out;
    Cx sum(0.0, 0.0);
    for (int l = 0; l < 3; ++l) {
        const RelationTerm& term = r.terms[static_cast<std::size_t>(l)];
        const Cx gamma_l = eval_coeff(term.coeff, x);
        const Cx j_l = eval_J(t, term.coset, x, budget);
        const Cx v = gamma_l * j_l;
        out.terms[static_cast<std::size_t>(l)] = v;
        sum += v;
        out.scale = std::max(out.scale, std::abs(v));
    }
    out.residual = std::abs(sum);
    return out;
}

bool near_integer_guard(const Cx& u, double re_margin, double im_margin) {
    const double re_dist = std::abs(u.real() - std::round(u.real()));
    return re_dist < re_margin && std::abs(u.imag()) < im_margin;
}

Vec7 sample_point_for(std::mt19937_64& rng, const std::vector<AffineForm>& guards) {
    for (int attempt = 0; attempt < 20000; ++attempt) {
        const Vec7 x = draw_raw_point(rng);
        if (point_clears_guards(x, guards)) return x;
    }
    throw RejectionBudgetExceeded("point sampler exhausted 20000 draws");
}

Vec7 sample_point(std::mt19937_64& rng) {
    return sample_point_for(rng, catalog_guard_forms());
}

FamilyVerification verify_relation(const GroupTables& t, const Relation& r,
                                   const VerifyOptions& opt) {
    const std::vector<AffineForm> guards = relation_guard_forms(t, r);
    std::mt19937_64 rng(opt.seed ^ fnv1a(r.family));

    FamilyVerification out;
    out.family = r.family;
    out.type = r.type;
    out.tolerance = opt.tolerance;
    for (int i = 0; i < opt.points; ++i) {
        const Vec7 x = sample_point_for(rng, guards);
        const ResidualBreakdown rb = residual(t, r, x, opt.budget);
        ++out.points_tested;
        const double ratio = rb.ratio();
        out.max_relative_residual = std::max(out.max_relative_residual, ratio);
        if (!(ratio < opt.tolerance)) out.failures.push_back({x, ratio});
    }
    out.pass = out.failures.empty() && out.points_tested == opt.points;
    return out;
}

std::vector<FamilyVerification> verify_transported(const GroupTables& t, int count,
                                                   const VerifyOptions& opt) {
    const std::vector<Relation>& catalog = relation_catalog();
    std::mt19937_64 rng(opt.seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull);

    std::vector<FamilyVerification> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const Relation& base = catalog[static_cast<std::size_t>(rng() % catalog.size())];
        const int elem = static_cast<int>(rng() % static_cast<std::uint64_t>(t.order()));
        Relation moved = transport_relation(t, base, elem);
        moved.family = base.family + "@" + std::to_string(elem);
        check_relation_structure(t, moved);
        out.push_back(verify_relation(t, moved, opt));
    }
    return out;
}

} // namespace klrel
