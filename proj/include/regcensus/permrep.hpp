#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "regcensus/fpring.hpp"

namespace regcensus {

enum class Axis { X, Y };

/// The permutation domain: one point per (i, j, alpha) with i, j the monomial
/// exponents and alpha the coefficient. Flat index alpha + p*j + p*p*i, so a
/// coefficient line V_{i,j} is a contiguous run of p points.
struct PointCoords {
    int i, j, alpha;
};

int point_index(int p, int i, int j, int alpha);
PointCoords point_coords(int p, int index);

/// Permutation of [0, degree) as an image table. Composition convention is
/// apply-left-first everywhere: a.then(b) maps v to b(a(v)).
class Perm {
public:
    explicit Perm(int degree);                               // identity
    static Perm from_images(std::vector<std::uint16_t> images);

    int degree() const { return static_cast<int>(img_.size()); }
    std::uint16_t operator()(int point) const { return img_[static_cast<size_t>(point)]; }
    const std::vector<std::uint16_t>& images() const { return img_; }

    Perm then(const Perm& next) const;
    Perm inverse() const;
    Perm conjugated_by(const Perm& w) const;   // w^-1, then *this, then w
    std::uint64_t order() const;               // lcm of cycle lengths, saturating
    bool is_identity() const;

    // Serialization contract: degree first, then the image table,
    // whitespace separated.
    std::string to_text() const;

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    std::vector<std::uint16_t> img_;
};

struct PermHash {
    size_t operator()(const Perm& q) const;
};

/// Generating set of a permutation group; nonempty, uniform degree.
struct GenSet {
    GenSet(std::vector<Perm> generators, std::string name);

    std::vector<Perm> gens;
    std::string label;

    int degree() const { return gens.front().degree(); }
};

// sigma_f: adds the (i,j) coefficient of f to alpha inside every line V_{i,j}.
Perm block_translation(const Context& ctx, const RingElem& f);
// tau_x / tau_y: cyclic shift of one exponent, alpha untouched.
Perm exponent_shift(const Context& ctx, Axis axis);
// t_{g,axis}: block_translation(g) followed by exponent_shift(axis).
Perm twisted_shift(const Context& ctx, const RingElem& g, Axis axis);

// Orbit partition of the point set; orbits sorted by least element, points
// ascending inside each orbit.
std::vector<std::vector<int>> orbits(const GenSet& group);

// The p^2 coefficient lines V_{i,j}, cell index i*p + j.
std::vector<std::vector<int>> standard_blocks(const Context& ctx);

// True when every generator maps every cell onto a cell. Cells must form a
// partition into equal-size parts (std::invalid_argument otherwise).
bool is_block_system(const GenSet& group, const std::vector<std::vector<int>>& cells);
// Action on cell indices; throws std::invalid_argument when cells are not a
// block system of the group.
GenSet induced_action(const GenSet& group, const std::vector<std::vector<int>>& cells);

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Every element of the generated group, sorted; throws CapExceeded when the
// group is larger than cap.
std::vector<Perm> group_closure(const GenSet& group, size_t cap);
std::optional<std::vector<Perm>> try_group_closure(const GenSet& group, size_t cap);

// Transitive of order degree() with pairwise commuting generators and every
// non-identity element of order p, i.e. regular and elementary abelian.
bool is_regular_elementary_abelian(int p, const GenSet& group);

// Generators of Delta(I) = {sigma_v : v in I} and of Gamma(I) = <Delta(I),
// tau_x, tau_y>.
GenSet delta_generators(const Context& ctx, const IdealBasis& ideal);
GenSet gamma_generators(const Context& ctx, const IdealBasis& ideal);

}  // namespace regcensus
