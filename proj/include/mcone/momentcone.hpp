#pragma once

// Inequality generators for the moment cone of the cotangent bundle T*K under K~ x K, its
// horizontal slices (orbit polytopes), its vertical slice (invariant cone), the scalar version
// over cubicle rays, the lattice necessary condition and the duality involution.
//
// Variables are the weight coordinates of lambda~ (source) followed by those of lambda (target);
// on semisimple factors these are fundamental-weight coordinates.
//
// Two sign conventions occur:
//   cone       (lambda~, lambda) with w~^{-1} lambda~ in f*(-w^{-1} lambda + vC)
//   branching  (lambda~, lambda) with w~^{-1} lambda~ in f*(w^{-1} lambda - vC), i.e. lambda~ in the
//              moment polytope of the orbit through lambda; integral points with positive
//              branching multiplicity lie here.
// They differ by lambda~ -> -w~0 lambda~.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcone/embedding.hpp"
#include "mcone/polyhedra.hpp"
#include "mcone/schubert.hpp"

namespace mcone {

enum class Mode { Cone, Branching, Polytope, Invariant, Scalar, ScalarBranching };

std::string to_string(Mode m);
Mode parse_mode(const std::string& name);  // throws ConfigError

struct MomentOptions {
    std::size_t group_bound = kDefaultSchubertBound;
    // Ceiling on |W~| |W| |W^rel| for the triple-based generators.
    std::size_t triple_budget = 20'000'000;
    unsigned threads = 1;
};

struct LatticeResult {
    Membership status = Membership::Unknown;
    std::optional<Provenance> failing;  // a triple whose monoid test answered No (or Unknown)
};

class MomentCone {
public:
    // The embedding is re-based to compatible chambers when necessary.
    explicit MomentCone(const Embedding& e, MomentOptions options = {});

    const Embedding& embedding() const { return calculus_->embedding(); }
    const RelativeCalculus& calculus() const { return *calculus_; }
    const MomentOptions& options() const { return options_; }

    std::vector<std::string> variables() const;
    std::size_t source_dim() const;
    std::size_t target_dim() const;

    InequalitySystem cone_inequalities() const;
    InequalitySystem branching_inequalities() const;
    // Rows in lambda~ only; lambda must be dominant.
    InequalitySystem polytope_inequalities(const QVec& lambda) const;
    // Rows in lambda only: the slice lambda~ = 0 of the cone.
    InequalitySystem invariant_inequalities() const;
    // Cone convention, one row per ray and qualifying coset pair.
    InequalitySystem scalar_inequalities() const;
    InequalitySystem scalar_branching_inequalities() const;

    InequalitySystem generate(Mode mode, const std::optional<QVec>& lambda = std::nullopt) const;

    // Maps a system in the cone convention to the branching convention and back (an involution).
    InequalitySystem switch_convention(const InequalitySystem& s) const;
    // Image under (lambda~, lambda) -> (-w~0 lambda~, -w0 lambda) with provenance mapped to the dual triple.
    InequalitySystem apply_duality(const InequalitySystem& s) const;

    // Integral necessary condition for lambda~ to occur in V_lambda (branching convention).
    LatticeResult lattice_necessary(const QVec& source_weight, const QVec& target_weight,
                                    std::size_t node_bound = 200'000) const;

    QVec join(const QVec& source_weight, const QVec& target_weight) const;
    // The lambda-slice of a system in the two-sided variables.
    InequalitySystem slice_target(const InequalitySystem& s, const QVec& lambda) const;
    InequalitySystem slice_source(const InequalitySystem& s, const QVec& source_weight) const;

private:
    void check_budget() const;
    void add_chamber_rows(InequalitySystem& s, bool source, bool target) const;
    void add_center_rows(InequalitySystem& s, bool branching) const;
    std::vector<QualifyingTriple> triples(PairingVariant variant) const;
    InequalitySystem triple_system(PairingVariant variant) const;
    InequalitySystem scalar_system(bool branching) const;
    QVec row_for(const WeylElement& wtilde, const WeylElement& w, const QVec& ray, bool branching) const;

    MomentOptions options_;
    std::shared_ptr<const RelativeCalculus> calculus_;
};

// Diagonal K in K^copies, scalar rows over the fundamental coweights.
InequalitySystem klyachko_inequalities(const RootDatum& group, int copies, const MomentOptions& options = {});

// Closed-form moment interval of an SU(2) embedded with Dynkin labels d: lambda~ ranges over
// [max(0, -lambda(h) + max_{d_i > 0} d_i lambda_i), lambda(h)], lambda~ in units of the fundamental weight.
std::pair<Rational, Rational> sl2_interval(const RootDatum& group, const std::vector<int>& dynkin_labels,
                                           const QVec& lambda);
// The same interval as a one-variable system, tagged "closed-form".
InequalitySystem sl2_closed_form(const RootDatum& group, const std::vector<int>& dynkin_labels, const QVec& lambda);

}  // namespace mcone
