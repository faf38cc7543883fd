#pragma once

// Homomorphisms between root data with finite kernel: the pullback on weights, the push-forward on
// coweights, the subsystem of roots killed by the pullback, compatible chambers, the subdivision
// of the source chamber into cubicles and the lifting homomorphism of Weyl groups.
//
// The pullback matrix has one row per source coordinate and one column per target coordinate,
// so pull(weight) = M weight and push(coweight) = M^T coweight.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mcone/rational.hpp"
#include "mcone/rootdata.hpp"

namespace mcone {

struct ProjectedRoot {
    QVec value;                        // pullback of a positive target root
    std::vector<std::size_t> roots;    // indices into target.positive_roots()
    std::size_t multiplicity() const { return roots.size(); }
};

struct Cubicle {
    WeylElement v;
    QVec interior_point;                 // source coweight
    std::vector<QVec> rays;              // extreme rays, canonical form
    std::vector<QVec> lineality;         // directions along which the cubicle is a product
    std::vector<QVec> dual_generators;   // pullbacks of v R_+
};

struct LiftJ {
    std::vector<WeylElement> simple_images;
    WeylElement longest_image;
};

struct WeightMultiplicity {
    QVec weight;
    int multiplicity = 1;
};

class Embedding {
public:
    Embedding(RootDatum source, RootDatum target, QMat pullback, std::string description);

    const RootDatum& source() const;
    const RootDatum& target() const;
    const QMat& pullback_matrix() const;
    QMat push_matrix() const;
    const std::string& description() const;

    QVec pull(const QVec& target_weight) const;
    QVec push(const QVec& source_coweight) const;

    bool chamber_adjusted() const;
    // Element u with the current target base equal to u applied to the original one.
    const WeylElement& adjusting_element() const;

    // Re-bases the target so that the chambers are compatible; keeps the base when it already is.
    Embedding make_compatible(const std::optional<QVec>& generic_source_coweight = std::nullopt) const;
    bool is_compatible() const;

    // Deterministic sequence of interior source coweights with distinct prime coefficients.
    QVec test_point(std::size_t attempt) const;
    // Nonzero pullbacks do not vanish at push(xi).
    bool is_generic(const QVec& source_coweight, std::string* vanishing_root = nullptr) const;
    QVec generic_point() const;

    std::vector<ProjectedRoot> projected_roots() const;
    std::vector<std::size_t> bar_roots() const;   // indices of positive target roots killed by the pullback
    std::vector<int> bar_simple() const;          // simple target roots killed by the pullback
    std::vector<WeylElement> bar_weyl() const;

    // Cubicles ordered by (length of v, word of v).
    const std::vector<Cubicle>& cubicles() const;
    std::vector<WeylElement> relative_weyl_set() const;
    std::vector<std::size_t> cubicles_containing(const QVec& source_coweight) const;
    // Distinct rays over all cubicles, in canonical order.
    std::vector<QVec> all_rays() const;

    const LiftJ& lift() const;
    WeylElement lift_element(const WeylElement& source_element) const;
    WeylElement dual_target(const WeylElement& w) const;       // j(w~0) w w0
    WeylElement dual_source(const WeylElement& w) const;       // w~0 w w~0

private:
    struct State;
    explicit Embedding(std::shared_ptr<State> state) : state_(std::move(state)) {}
    static std::shared_ptr<State> make_state(RootDatum source, RootDatum target, QMat pullback,
                                             std::string description);
    std::vector<Cubicle> compute_cubicles() const;
    LiftJ compute_lift() const;
    std::shared_ptr<State> state_;
};

Embedding embedding_from_matrix(const RootDatum& source, const RootDatum& target, const QMat& pullback);
Embedding identity_embedding(const RootDatum& group);
// Maximal torus of the given group (a bare torus of the same dimension) into the group.
Embedding torus_embedding(const RootDatum& group);
Embedding diagonal_embedding(const RootDatum& group, int copies);
// SU(2) into the group with h = sum d_i (fundamental coweight i); labels must be 0, 1 or 2.
Embedding sl2_embedding(const RootDatum& group, const std::vector<int>& dynkin_labels);
// Source into U(N) through a weight multiset; target coordinates grouped and ordered by dominance.
Embedding embedding_from_weights(const RootDatum& source, const std::vector<WeightMultiplicity>& weights);
// The weight order used by embedding_from_weights: <mu, rho~^vee> descending, then lexicographically descending.
std::vector<QVec> order_weights(const RootDatum& source, const std::vector<WeightMultiplicity>& weights);

}  // namespace mcone
