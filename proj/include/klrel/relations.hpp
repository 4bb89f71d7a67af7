#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "klrel/classify.hpp"
#include "klrel/coeffs.hpp"
#include "klrel/functions.hpp"
#include "klrel/group.hpp"

namespace klrel {

struct RelationTerm {
    CosetId coset;
    CoeffExpr coeff;

    bool operator==(const RelationTerm&) const = default;
};

// A three-term relation: the coefficient-weighted sum of the three
// coset-indexed functions vanishes identically on the hyperplane.
struct Relation {
    std::string family;
    std::array<RelationTerm, 3> terms;
    int type = 0; // sorted pairwise label distances, as digits

    bool operator==(const Relation&) const = default;
};

// The eighteen canonical families, one per orbit of the triple space, in
// coefficient-complexity order (four of type 222, five of 224, five of 244,
// two of 246, two of 444).
const std::vector<Relation>& relation_catalog();

// Right-translation by a group element: labels move by right multiplication,
// coefficient argument maps compose with the element matrix. Preserves the
// type and the structural laws.
Relation transport_relation(const GroupTables& t, const Relation& r, int elem);

// Every affine form whose proximity to an integer endangers evaluating the
// relation: the sine/gamma arguments of all coefficient atoms plus the
// function-evaluation arguments at each term's canonical representative.
// Deduplicated.
std::vector<AffineForm> relation_guard_forms(const GroupTables& t, const Relation& r);

// Structural laws: distinct labels, declared type matches the metric type,
// every coefficient has length 2(a+b+c)-6, and the coefficient of each term
// has width 2^{d/2-1} for the distance d between the other two labels.
// Throws LabelingMismatch naming the first violated law.
void check_relation_structure(const GroupTables& t, const Relation& r);

struct ResidualBreakdown {
    std::array<Cx, 3> terms{}; // coefficient times function, per relation term
    double residual = 0.0;     // |sum of the three terms|
    double scale = 0.0;        // largest single |term|
    double ratio() const;      // residual / scale
};

// Validates the point (hyperplane constraint and the relation's pole guards;
// SamplingRejected otherwise), then evaluates all three terms.
ResidualBreakdown residual(const GroupTables& t, const Relation& r, const Vec7& x,
                           long budget = kDefaultSeriesBudget);

// Margin rule used by the samplers: a guard form value is too close to an
// integer when its real part is within `re_margin` of one while the
// imaginary part is under `im_margin`.
bool near_integer_guard(const Cx& u, double re_margin = 0.02, double im_margin = 0.02);

// Draws a,b,c,d,e,f with real parts uniform in [0.15, 0.85] and imaginary
// parts uniform in [-0.3, 0.3], completes g from the hyperplane constraint,
// and rejects until every catalog guard form clears the margin rule and f-g
// stays outside the B3 band. Throws RejectionBudgetExceeded after 20000
// draws.
Vec7 sample_point(std::mt19937_64& rng);

// Same rejection sampler against an explicit guard list (used for
// transported relations, whose forms are not in the catalog set).
Vec7 sample_point_for(std::mt19937_64& rng, const std::vector<AffineForm>& guards);

struct FailureSample {
    Vec7 point;
    double ratio = 0.0;
};

struct FamilyVerification {
    std::string family;
    int type = 0;
    int points_tested = 0;
    double max_relative_residual = 0.0;
    double tolerance = 1e-6;
    bool pass = false;
    std::vector<FailureSample> failures;
};

struct VerifyOptions {
    int points = 25;
    double tolerance = 1e-6;
    std::uint64_t seed = 0;
    long budget = kDefaultSeriesBudget;
};

// Residual sweep for one relation at freshly sampled points. Deterministic
// in (relation family, options): the generator is seeded from opt.seed and
// the family name.
FamilyVerification verify_relation(const GroupTables& t, const Relation& r,
                                   const VerifyOptions& opt);

// Transports `count` random catalog relations by random group elements and
// verifies each at opt.points points (structure checked too). Reported
// families carry an "@element" suffix.
std::vector<FamilyVerification> verify_transported(const GroupTables& t, int count,
                                                   const VerifyOptions& opt);

} // namespace klrel
