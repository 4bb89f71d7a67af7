#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstdint>
#include <string>

#include "klrel/errors.hpp"

namespace klrel {

using Cx = std::complex<double>;
using Vec7 = Eigen::Matrix<Cx, 7, 1>;   // parameter point (a,b,c,d,e,f,g)
using Vec6 = Eigen::Matrix<Cx, 6, 1>;   // difference coordinates on the hyperplane
using Vec7i = Eigen::Matrix<int, 7, 1>;
using Mat7i = Eigen::Matrix<int, 7, 7>; // integer matrix acting on parameter points

template <class Real>
using Vec7T = Eigen::Matrix<std::complex<Real>, 7, 1>;

// The functions live on the affine hyperplane V: e+f+g-a-b-c-d = 1.
inline Cx hyperplane_defect(const Vec7& x) {
    return x[4] + x[5] + x[6] - x[0] - x[1] - x[2] - x[3] - 1.0;
}

constexpr double kHyperplaneTol = 1e-10;

inline bool on_hyperplane(const Vec7& x, double tol = kHyperplaneTol) {
    return std::abs(hyperplane_defect(x)) <= tol;
}

inline void require_on_hyperplane(const Vec7& x) {
    if (!on_hyperplane(x))
        throw NotOnHyperplane("point is off the hyperplane e+f+g-a-b-c-d=1, defect " +
                              std::to_string(std::abs(hyperplane_defect(x))));
}

// Unconstrained coordinates (a,b,c,d,e,f) for a hyperplane point; g is implied.
inline Vec7 from_free_coords(const Vec6& t) {
    Vec7 x;
    x << t[0], t[1], t[2], t[3], t[4], t[5],
        1.0 + t[0] + t[1] + t[2] + t[3] - t[4] - t[5];
    return x;
}

// An affine-linear scalar form  c + <v, x>  in the seven parameters.
struct AffineForm {
    int constant = 0;
    Vec7i coeffs = Vec7i::Zero();

    friend AffineForm operator+(AffineForm l, const AffineForm& r) {
        l.constant += r.constant;
        l.coeffs += r.coeffs;
        return l;
    }
    friend AffineForm operator-(AffineForm l, const AffineForm& r) {
        l.constant -= r.constant;
        l.coeffs -= r.coeffs;
        return l;
    }
    friend AffineForm operator-(AffineForm f) {
        f.constant = -f.constant;
        f.coeffs = -f.coeffs;
        return f;
    }

    bool operator==(const AffineForm& o) const {
        return constant == o.constant && (coeffs.array() == o.coeffs.array()).all();
    }

    template <class Real>
    std::complex<Real> eval(const Vec7T<Real>& x) const {
        std::complex<Real> v(static_cast<Real>(constant), Real(0));
        for (int i = 0; i < 7; ++i) v += static_cast<Real>(coeffs[i]) * x[i];
        return v;
    }
};

inline AffineForm af_const(int c) {
    AffineForm f;
    f.constant = c;
    return f;
}
inline AffineForm af_coord(int i) {
    AffineForm f;
    f.coeffs[i] = 1;
    return f;
}

// An affine point map  x -> k + M x  on the parameter space. Group elements
// are the special case k = 0; coefficient-atom arguments may carry constants.
struct PointMap {
    Vec7i shift = Vec7i::Zero();
    Mat7i mat = Mat7i::Identity();

    template <class Real>
    Vec7T<Real> apply(const Vec7T<Real>& x) const {
        Vec7T<Real> y;
        for (int i = 0; i < 7; ++i) {
            std::complex<Real> v(static_cast<Real>(shift[i]), Real(0));
            for (int j = 0; j < 7; ++j)
                if (mat(i, j) != 0) v += static_cast<Real>(mat(i, j)) * x[j];
            y[i] = v;
        }
        return y;
    }

    // Row i of the map as an affine form (for pole-guard collection).
    AffineForm row(int i) const {
        AffineForm f;
        f.constant = shift[i];
        f.coeffs = mat.row(i).transpose();
        return f;
    }

    // Composition (this after inner):  x -> shift + mat * inner(x).
    PointMap after(const PointMap& inner) const {
        PointMap out;
        out.shift = shift + mat * inner.shift;
        out.mat = mat * inner.mat;
        return out;
    }

    bool operator==(const PointMap& o) const {
        return (shift.array() == o.shift.array()).all() &&
               (mat.array() == o.mat.array()).all();
    }
};

inline PointMap point_map_from_rows(const std::array<AffineForm, 7>& rows) {
    PointMap m;
    for (int i = 0; i < 7; ++i) {
        m.shift[i] = rows[i].constant;
        m.mat.row(i) = rows[i].coeffs.transpose();
    }
    return m;
}

// Compose an affine form with a point map: (f \circ m)(x) = f(m(x)).
inline AffineForm compose(const AffineForm& f, const PointMap& m) {
    AffineForm out;
    long long c = f.constant;
    for (int i = 0; i < 7; ++i) c += static_cast<long long>(f.coeffs[i]) * m.shift[i];
    out.constant = static_cast<int>(c);
    out.coeffs = m.mat.transpose() * f.coeffs;
    return out;
}

// On the hyperplane, 1 = e+f+g-a-b-c-d, so a constant k in an affine form can
// be folded into the linear part with the signature vector below. Two affine
// maps that agree on the hyperplane therefore agree as matrices after this
// substitution (the hyperplane spans all of C^7 linearly).
inline Vec7i hyperplane_signature() {
    Vec7i s;
    s << -1, -1, -1, -1, 1, 1, 1;
    return s;
}

inline Vec7i linearize_on_hyperplane(const AffineForm& f) {
    return f.coeffs + f.constant * hyperplane_signature();
}

inline Mat7i linearize_on_hyperplane(const PointMap& m) {
    Mat7i out = m.mat;
    Vec7i s = hyperplane_signature();
    for (int i = 0; i < 7; ++i)
        out.row(i) += m.shift[i] * s.transpose();
    return out;
}

// --- coset identifiers ---

enum class Side : std::uint8_t { K, L };

// Identifies one of the 44 function labels: 32 K-cosets p0..p15,n0..n15 and
// 12 L-cosets L1..L6, L1bar..L6bar. K indices: 0..15 = p0..p15, 16..31 =
// n0..n15. L indices: 0..5 = L1..L6, 6..11 = L1bar..L6bar.
struct CosetId {
    Side side = Side::K;
    int index = 0;

    bool operator==(const CosetId&) const = default;
    // Global order: all K labels before all L labels, then by index.
    bool operator<(const CosetId& o) const {
        if (side != o.side) return side == Side::K;
        return index < o.index;
    }
    // Position in the combined 44-element label list.
    int flat() const { return side == Side::K ? index : 32 + index; }
};

inline CosetId k_label_p(int k) { return {Side::K, k}; }
inline CosetId k_label_n(int k) { return {Side::K, 16 + k}; }
inline CosetId l_label(int i, bool bar) { return {Side::L, (bar ? 6 : 0) + (i - 1)}; }
inline CosetId coset_from_flat(int t) {
    return t < 32 ? CosetId{Side::K, t} : CosetId{Side::L, t - 32};
}

inline bool is_barred(const CosetId& id) { return id.side == Side::L && id.index >= 6; }
inline CosetId bar_partner(const CosetId& id) {
    // Only meaningful for L labels: L_i <-> L_ibar.
    return {Side::L, (id.index + 6) % 12};
}

inline std::string label_string(const CosetId& id) {
    if (id.side == Side::K)
        return (id.index < 16 ? "p" + std::to_string(id.index)
                              : "n" + std::to_string(id.index - 16));
    int i = id.index % 6 + 1;
    return "L" + std::to_string(i) + (id.index >= 6 ? "bar" : "");
}

// Parses the output of label_string; throws LabelingMismatch on bad input.
CosetId parse_label(const std::string& s);

} // namespace klrel
