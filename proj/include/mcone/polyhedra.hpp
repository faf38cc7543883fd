#pragma once

// Exact rational polyhedral kernel: double description, cone duality, inequality systems with
// provenance, LP-certified redundancy pruning, vertex enumeration and integer-monoid membership.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mcone/lp.hpp"
#include "mcone/rational.hpp"
#include "mcone/rootdata.hpp"

namespace mcone {

inline constexpr std::size_t kDefaultDualizeDim = 8;

// Canonical form: lineality is the primitive rref basis of its span; rays are orthogonal to the
// lineality, primitive, extreme and sorted lexicographically.
struct Cone {
    std::size_t dim = 0;
    std::vector<QVec> rays;
    std::vector<QVec> lineality;

    bool operator==(const Cone&) const = default;
    bool is_pointed() const { return lineality.empty(); }
};

// {x : row.x >= 0 for rows in ge, row.x = 0 for rows in eq}.
Cone cone_from_inequalities(const std::vector<QVec>& ge, const std::vector<QVec>& eq, std::size_t dim,
                            std::size_t max_dim = kDefaultDualizeDim);
// Nonnegative span of generators plus the linear span of lineality.
Cone cone_from_generators(const std::vector<QVec>& generators, const std::vector<QVec>& lineality, std::size_t dim,
                          std::size_t max_dim = kDefaultDualizeDim);
Cone dualize(const Cone& c, std::size_t max_dim = kDefaultDualizeDim);
// Rows r with cone = {x : r.x >= 0}; lineality of the dual appears as opposite pairs.
std::vector<QVec> facet_rows(const Cone& c, std::size_t max_dim = kDefaultDualizeDim);
bool contains_by_generators(const Cone& c, const QVec& x);
bool contains_by_facets(const Cone& c, const QVec& x, std::size_t max_dim = kDefaultDualizeDim);

struct Provenance {
    std::string tag;  // "triple", "scalar", "chamber", "center-equality", "closed-form", "dual"
    Word wtilde;
    Word w;
    Word v;
    QVec ray;

    bool operator==(const Provenance&) const = default;
};

// coeffs . x >= rhs with coeffs primitive integral; the relation is always >=.
struct Inequality {
    QVec coeffs;
    Rational rhs;
    std::vector<Provenance> provenance;

    bool is_chamber() const;
    bool holds(const QVec& x) const;
    Rational slack(const QVec& x) const { return dot(coeffs, x) - rhs; }
};

class InequalitySystem {
public:
    InequalitySystem() = default;
    explicit InequalitySystem(std::vector<std::string> variables) : variables_(std::move(variables)) {}

    const std::vector<std::string>& variables() const { return variables_; }
    std::size_t dim() const { return variables_.size(); }
    const std::vector<Inequality>& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }

    // Scales to a primitive integral covector and merges provenance into an identical row.
    // Rows with zero covector are dropped when trivially true.
    void add(const QVec& coeffs, const Rational& rhs, Provenance provenance);
    void add(const Inequality& row);
    void add_equality(const QVec& coeffs, const Rational& rhs, const Provenance& provenance);
    // Sort rows lexicographically by (coeffs, rhs) and provenance within rows.
    void canonicalize();

    bool satisfies(const QVec& x) const;
    std::vector<std::size_t> tight_rows(const QVec& x) const;
    std::vector<LinearConstraint> constraints() const;
    bool is_feasible() const;

private:
    std::vector<std::string> variables_;
    std::vector<Inequality> rows_;
};

// Nonnegative multipliers y over system rows with sum y_i a_i = row.coeffs and sum y_i b_i >= row.rhs,
// or nullopt if the row is not implied. The system must be feasible.
std::optional<QVec> implication_certificate(const std::vector<Inequality>& system, const Inequality& row);
bool verify_certificate(const std::vector<Inequality>& system, const Inequality& row, const QVec& multipliers);
bool implies(const InequalitySystem& system, const Inequality& row);

struct RemovedRow {
    Inequality row;
    QVec multipliers;  // certificate over the retained rows of the pruned system
};

struct PruneResult {
    InequalitySystem system;
    std::vector<RemovedRow> removed;
};

// Greedy removal in canonical order (non-chamber rows first); certificates refer to the final system.
PruneResult prune_redundant(const InequalitySystem& s);
bool systems_equivalent(const InequalitySystem& a, const InequalitySystem& b);

struct VertexResult {
    bool empty = false;
    bool bounded = true;
    std::vector<QVec> vertices;        // sorted lexicographically
    std::vector<QVec> recession_rays;  // nonempty iff unbounded
};

VertexResult vertex_enumeration(const std::vector<LinearConstraint>& constraints, std::size_t n,
                                std::size_t max_dim = kDefaultDualizeDim);

enum class Membership { Yes, No, Unknown };

struct MonoidResult {
    Membership status = Membership::Unknown;
    std::vector<std::int64_t> coefficients;  // witness when Yes
    std::size_t nodes = 0;
};

MonoidResult monoid_member(const std::vector<IVec>& generators, const IVec& x, std::size_t node_bound);
// All nonnegative integer combinations (up to limit) representing x; requires a strictly positive functional.
std::vector<std::vector<std::int64_t>> monoid_witnesses(const std::vector<IVec>& generators, const IVec& x,
                                                        std::size_t limit);

std::string to_string(Membership m);

}  // namespace mcone
