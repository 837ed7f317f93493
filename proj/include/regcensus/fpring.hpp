#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace regcensus {

// Largest prime accepted by Context; degree-p^3 tables grow fast beyond this.
inline constexpr int kDefaultMaxPrime = 13;

int fp_norm(long long value, int p);   // representative in [0, p)
int fp_inv(int a, int p);              // multiplicative inverse, 0 < a < p

/// Prime modulus shared by every value in a computation. Values built from
/// different contexts must never be mixed; all operations check this.
class Context {
public:
    explicit Context(int p, int max_prime = kDefaultMaxPrime);

    int p() const { return p_; }
    int grid_size() const { return p_ * p_; }      // coefficients per ring element
    int degree() const { return p_ * p_ * p_; }    // points acted on downstream

private:
    int p_;
};

/// Element of the group algebra F_p[x,y] with x^p = y^p = 1, stored as the
/// p-by-p coefficient grid; cell (i,j) is the coefficient of x^i y^j.
/// Flat layout is row major, index i*p + j. Immutable in practice: all
/// arithmetic returns new values.
class RingElem {
public:
    explicit RingElem(const Context& ctx);                       // zero
    static RingElem one(const Context& ctx);
    static RingElem monomial(const Context& ctx, int i, int j, int coeff = 1);
    static RingElem all_ones(const Context& ctx);                // every cell 1
    static RingElem x_minus_one(const Context& ctx);
    static RingElem y_minus_one(const Context& ctx);
    static RingElem from_digits(const Context& ctx, std::string_view digits);

    int p() const { return p_; }
    int at(int i, int j) const;
    void set(int i, int j, int value);
    bool is_zero() const;
    std::span<const std::uint8_t> flat() const { return c_; }

    RingElem& operator+=(const RingElem& rhs);
    RingElem& operator-=(const RingElem& rhs);
    friend RingElem operator+(RingElem lhs, const RingElem& rhs) { return lhs += rhs; }
    friend RingElem operator-(RingElem lhs, const RingElem& rhs) { return lhs -= rhs; }
    RingElem operator-() const;
    friend RingElem operator*(const RingElem& lhs, const RingElem& rhs);

    RingElem scaled(int c) const;
    RingElem shifted(int di, int dj) const;       // multiply by the monomial x^di y^dj
    RingElem times_x_minus_one() const;           // shifted(1,0) - *this
    RingElem times_y_minus_one() const;

    // Serialization contract: p^2 digits base p, flat order, most significant
    // (index 0) first. Digits use 0-9 then a,b,c.
    std::string to_digits() const;

    friend bool operator==(const RingElem&, const RingElem&) = default;
    friend auto operator<=>(const RingElem&, const RingElem&) = default;

private:
    RingElem(int p, std::vector<std::uint8_t> c) : p_(p), c_(std::move(c)) {}

    int p_;
    std::vector<std::uint8_t> c_;
};

/// An F_p-subspace of the coefficient space in reduced row echelon form.
/// Pivot order follows the flat index. The echelon form is unique per
/// subspace, so equality of spans is equality of rows.
class IdealBasis {
public:
    static IdealBasis zero(const Context& ctx);
    static IdealBasis full_ring(const Context& ctx);
    // Reduced echelon basis of the linear span of gens; with close_under_xy
    // the span is grown by x*v and y*v until stable, i.e. the smallest ideal
    // containing gens.
    static IdealBasis span_of(const Context& ctx, std::span<const RingElem> gens,
                              bool close_under_xy);

    int p() const { return p_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<RingElem>& rows() const { return rows_; }
    bool xy_closed() const { return xy_closed_; }

    bool contains(const RingElem& v) const;
    RingElem reduce(RingElem v) const;            // remainder after elimination
    bool verify_xy_closed() const;

    friend bool operator==(const IdealBasis& a, const IdealBasis& b) {
        return a.p_ == b.p_ && a.rows_ == b.rows_;
    }

private:
    friend IdealBasis augmentation_power(const Context&, int);
    friend IdealBasis mult_kernel(const IdealBasis&, const RingElem&);
    friend IdealBasis mult_image(const IdealBasis&, const RingElem&);

    IdealBasis(int p, std::vector<RingElem> rows, bool xy_closed)
        : p_(p), xy_closed_(xy_closed), rows_(std::move(rows)) {}

    int p_;
    bool xy_closed_;
    std::vector<RingElem> rows_;   // reduced echelon, pivots strictly increasing
};

// k-th power of the augmentation ideal: the span of (x-1)^i (y-1)^j with
// i + j >= k. Zero for k > 2(p-1).
IdealBasis augmentation_power(const Context& ctx, int k);

// Kernel and image of v -> factor*v restricted to the span s.
IdealBasis mult_kernel(const IdealBasis& s, const RingElem& factor);
IdealBasis mult_image(const IdealBasis& s, const RingElem& factor);

// Some v in s with factor*v = target, or nullopt. The returned solution is
// canonical: it is reduced against the echelon basis of the kernel, so equal
// inputs always produce the identical element.
std::optional<RingElem> solve_mult(const IdealBasis& s, const RingElem& factor,
                                   const RingElem& target);

// All p^dim elements of the span, in lexicographic order of the coefficient
// tuple over the echelon rows (first row most significant).
std::vector<RingElem> span_elements(const IdealBasis& s);

}  // namespace regcensus
