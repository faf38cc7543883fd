#pragma once

// Reductive root data and Weyl group combinatorics.
//
// Coordinates. A weight is stored as (a_1..a_r ; b_1..b_c) where a_i = <weight, alpha_i^vee>
// and b_k is its value on the k-th central basis coweight. A coweight is stored as
// (x_1..x_r ; y_1..y_c), the coefficients on the simple coroots and on the central basis.
// The two coordinate systems are dual, so the pairing is the plain dot product and the
// fundamental weights are unit vectors.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcone/rational.hpp"

namespace mcone {

inline constexpr std::size_t kDefaultEnumerationBound = 1'000'000;

using Word = std::vector<int>;  // 0-based simple reflection indices

enum class CosetSide { Left, Right };

struct Root {
    QVec weight;           // weight coordinates
    QVec coroot;           // coweight coordinates of the coroot
    IVec simple_coeffs;    // nonnegative expansion in the simple roots
    std::int64_t height = 0;
    Word reflection_word;  // a (palindromic) word for the reflection in this root
};

struct Component {
    char type = '?';
    int rank = 0;
    int offset = 0;  // index of the first simple root of this factor
};

class WeylElement {
public:
    const IMat& matrix() const { return weight_; }
    const IMat& coweight_matrix() const { return coweight_; }
    // Lexicographically least reduced word.
    const Word& word() const { return word_; }
    int length() const { return static_cast<int>(word_.size()); }

    bool operator==(const WeylElement& o) const { return weight_ == o.weight_; }
    // Canonical order: by length, then by word.
    bool operator<(const WeylElement& o) const;

private:
    friend class RootDatum;
    IMat weight_;
    IMat coweight_;
    Word word_;
};

std::string word_to_string(const Word& w);  // "s2s1", or "1" for the empty word

// Closed face of the dominant chamber, recorded by its vanishing simple roots.
struct Face {
    std::vector<int> vanishing;
    QVec interior_point;
};

class RootDatum {
public:
    // Type strings: A1..A20, B2..B4, C2..C4, D4, G2, F4, products joined by 'x', an optional
    // "+uN" central torus suffix, and "T<n>" for a bare n-dimensional torus.
    static RootDatum from_type(std::string_view spec, std::size_t enumeration_bound = kDefaultEnumerationBound);
    // cartan[i][j] = <alpha_i, alpha_j^vee>.
    static RootDatum from_cartan(const std::vector<IVec>& cartan, int central_rank, std::string label,
                                 std::size_t enumeration_bound = kDefaultEnumerationBound);
    // Semisimple coordinates of all factors first, then all central coordinates.
    static RootDatum product(const std::vector<RootDatum>& factors);

    int rank() const;
    int central_rank() const;
    int dim() const { return rank() + central_rank(); }
    const std::string& label() const;
    std::string fingerprint() const;
    const std::vector<Component>& components() const;
    std::size_t enumeration_bound() const;

    std::int64_t cartan(int i, int j) const;
    const QVec& simple_root(int i) const;
    QVec simple_coroot(int i) const;
    const std::vector<Root>& positive_roots() const;
    QVec fundamental_weight(int i) const;
    QVec fundamental_coweight(int i) const;
    QVec rho() const;
    // Gram matrix of the fundamental weights for an invariant form (semisimple block only).
    const QMat& weight_gram() const;
    // <alpha_i, xi> for a coweight xi.
    Rational root_value(int i, const QVec& coweight) const;

    BigInt weyl_order() const;
    bool is_enumerable() const;

    WeylElement identity() const;
    WeylElement simple_reflection(int i) const;
    WeylElement from_word(std::span<const int> word) const;
    WeylElement multiply(const WeylElement& a, const WeylElement& b) const;
    WeylElement inverse(const WeylElement& w) const;
    WeylElement longest() const;
    WeylElement reflection(const Root& r) const;

    QVec act_weight(const WeylElement& w, const QVec& weight) const;
    QVec act_coweight(const WeylElement& w, const QVec& coweight) const;
    bool is_dominant_weight(const QVec& weight) const;
    bool is_dominant_coweight(const QVec& coweight) const;
    // Returns (d, u) with u.d equal to the input, d dominant and u of minimal length.
    std::pair<QVec, WeylElement> to_dominant_weight(const QVec& weight) const;
    std::pair<QVec, WeylElement> to_dominant_coweight(const QVec& coweight) const;

    bool is_left_descent(const WeylElement& w, int i) const;   // l(s_i w) < l(w)
    bool is_right_descent(const WeylElement& w, int i) const;  // l(w s_i) < l(w)
    WeylElement min_coset_rep(const WeylElement& w, const std::vector<int>& subset, CosetSide side) const;
    std::vector<WeylElement> coset_reps(const std::vector<int>& subset) const;
    std::vector<WeylElement> parabolic_subgroup(const std::vector<int>& subset) const;
    int inversion_count(const WeylElement& w) const;

    // Full group in canonical order; throws ResourceError beyond the enumeration bound.
    const std::vector<WeylElement>& elements() const;
    std::size_t index_of(const WeylElement& w) const;

    // Permutation of {1..n+1} for a single type-A factor: w e_j = e_{perm[j]}.
    std::optional<std::vector<int>> permutation(const WeylElement& w) const;
    std::string cycle_notation(const WeylElement& w) const;

    Face face_of(const QVec& dominant_coweight) const;

    bool operator==(const RootDatum& o) const { return fingerprint() == o.fingerprint(); }

private:
    struct Impl;
    explicit RootDatum(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    WeylElement make(IMat weight, IMat coweight) const;
    std::shared_ptr<const Impl> impl_;
};

}  // namespace mcone
