#include "regcensus/fpring.hpp"

#include <algorithm>

namespace regcensus {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

char digit_char(int v) { return static_cast<char>(v < 10 ? '0' + v : 'a' + (v - 10)); }

int digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

void require_same_p(int a, int b) {
    if (a != b) throw std::invalid_argument("context mismatch: p=" + std::to_string(a) +
                                            " vs p=" + std::to_string(b));
}

}  // namespace

int fp_norm(long long value, int p) {
    long long r = value % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

int fp_inv(int a, int p) {
    a = fp_norm(a, p);
    if (a == 0) throw std::invalid_argument("fp_inv of zero");
    for (int b = 1; b < p; ++b)
        if (a * b % p == 1) return b;
    throw std::logic_error("fp_inv: no inverse found (p not prime?)");
}

Context::Context(int p, int max_prime) : p_(p) {
    if (!is_prime(p))
        throw std::invalid_argument("p must be prime, got " + std::to_string(p));
    if (p > max_prime)
        throw std::invalid_argument("p=" + std::to_string(p) + " exceeds the configured cap " +
                                    std::to_string(max_prime));
}

RingElem::RingElem(const Context& ctx)
    : p_(ctx.p()), c_(static_cast<size_t>(ctx.grid_size()), 0) {}

RingElem RingElem::one(const Context& ctx) { return monomial(ctx, 0, 0, 1); }

RingElem RingElem::monomial(const Context& ctx, int i, int j, int coeff) {
    RingElem e(ctx);
    e.set(fp_norm(i, ctx.p()), fp_norm(j, ctx.p()), coeff);
    return e;
}

RingElem RingElem::all_ones(const Context& ctx) {
    RingElem e(ctx);
    std::fill(e.c_.begin(), e.c_.end(), std::uint8_t{1});
    return e;
}

RingElem RingElem::x_minus_one(const Context& ctx) {
    RingElem e(ctx);
    e.set(0, 0, -1);
    e.set(1, 0, 1);
    return e;
}

RingElem RingElem::y_minus_one(const Context& ctx) {
    RingElem e(ctx);
    e.set(0, 0, -1);
    e.set(0, 1, 1);
    return e;
}

RingElem RingElem::from_digits(const Context& ctx, std::string_view digits) {
    if (static_cast<int>(digits.size()) != ctx.grid_size())
        throw std::invalid_argument("digit string has wrong length");
    RingElem e(ctx);
    for (size_t idx = 0; idx < digits.size(); ++idx) {
        int v = digit_value(digits[idx]);
        if (v < 0 || v >= ctx.p()) throw std::invalid_argument("invalid digit in ring element");
        e.c_[idx] = static_cast<std::uint8_t>(v);
    }
    return e;
}

int RingElem::at(int i, int j) const { return c_[static_cast<size_t>(i) * p_ + j]; }

void RingElem::set(int i, int j, int value) {
    c_[static_cast<size_t>(i) * p_ + j] = static_cast<std::uint8_t>(fp_norm(value, p_));
}

bool RingElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::uint8_t v) { return v == 0; });
}

RingElem& RingElem::operator+=(const RingElem& rhs) {
    require_same_p(p_, rhs.p_);
    for (size_t idx = 0; idx < c_.size(); ++idx)
        c_[idx] = static_cast<std::uint8_t>((c_[idx] + rhs.c_[idx]) % p_);
    return *this;
}

RingElem& RingElem::operator-=(const RingElem& rhs) {
    require_same_p(p_, rhs.p_);
    for (size_t idx = 0; idx < c_.size(); ++idx)
        c_[idx] = static_cast<std::uint8_t>((c_[idx] + p_ - rhs.c_[idx]) % p_);
    return *this;
}

RingElem RingElem::operator-() const { return scaled(p_ - 1); }

RingElem RingElem::scaled(int c) const {
    c = fp_norm(c, p_);
    RingElem out = *this;
    for (auto& v : out.c_) v = static_cast<std::uint8_t>(v * c % p_);
    return out;
}

RingElem operator*(const RingElem& lhs, const RingElem& rhs) {
    require_same_p(lhs.p_, rhs.p_);
    const int p = lhs.p_;
    RingElem out(lhs);
    std::fill(out.c_.begin(), out.c_.end(), std::uint8_t{0});
    for (int k = 0; k < p; ++k)
        for (int l = 0; l < p; ++l) {
            const int u = lhs.at(k, l);
            if (u == 0) continue;
            for (int m = 0; m < p; ++m) {
                const int i = (k + m) % p;
                for (int n = 0; n < p; ++n) {
                    const int v = rhs.at(m, n);
                    if (v == 0) continue;
                    const int j = (l + n) % p;
                    out.set(i, j, out.at(i, j) + u * v);
                }
            }
        }
    return out;
}

RingElem RingElem::shifted(int di, int dj) const {
    di = fp_norm(di, p_);
    dj = fp_norm(dj, p_);
    RingElem out = *this;
    for (int i = 0; i < p_; ++i)
        for (int j = 0; j < p_; ++j)
            out.set((i + di) % p_, (j + dj) % p_, at(i, j));
    return out;
}

RingElem RingElem::times_x_minus_one() const { return shifted(1, 0) - *this; }

RingElem RingElem::times_y_minus_one() const { return shifted(0, 1) - *this; }

std::string RingElem::to_digits() const {
    std::string s(c_.size(), '0');
    for (size_t idx = 0; idx < c_.size(); ++idx) s[idx] = digit_char(c_[idx]);
    return s;
}

// ---------------------------------------------------------------------------
// Echelon machinery

namespace {

int pivot_of(const RingElem& v) {
    auto f = v.flat();
    for (size_t idx = 0; idx < f.size(); ++idx)
        if (f[idx] != 0) return static_cast<int>(idx);
    return -1;
}

int coeff_at(const RingElem& v, int flat_idx) {
    return v.flat()[static_cast<size_t>(flat_idx)];
}

// Rows kept in reduced echelon form throughout; pivots strictly increasing.
struct Echelonizer {
    int p;
    std::vector<RingElem> rows;
    std::vector<int> pivots;

    RingElem reduce(RingElem v) const {
        for (size_t r = 0; r < rows.size(); ++r) {
            const int c = coeff_at(v, pivots[r]);
            if (c != 0) v -= rows[r].scaled(c);
        }
        return v;
    }

    // Returns true when v enlarged the span.
    bool insert(RingElem v) {
        v = reduce(std::move(v));
        const int piv = pivot_of(v);
        if (piv < 0) return false;
        v = v.scaled(fp_inv(coeff_at(v, piv), p));
        for (size_t r = 0; r < rows.size(); ++r) {
            const int c = coeff_at(rows[r], piv);
            if (c != 0) rows[r] -= v.scaled(c);
        }
        const auto pos = std::upper_bound(pivots.begin(), pivots.end(), piv) - pivots.begin();
        pivots.insert(pivots.begin() + pos, piv);
        rows.insert(rows.begin() + pos, std::move(v));
        return true;
    }
};

}  // namespace

IdealBasis IdealBasis::zero(const Context& ctx) { return IdealBasis(ctx.p(), {}, true); }

IdealBasis IdealBasis::full_ring(const Context& ctx) {
    std::vector<RingElem> rows;
    rows.reserve(static_cast<size_t>(ctx.grid_size()));
    for (int i = 0; i < ctx.p(); ++i)
        for (int j = 0; j < ctx.p(); ++j) rows.push_back(RingElem::monomial(ctx, i, j));
    return IdealBasis(ctx.p(), std::move(rows), true);
}

IdealBasis IdealBasis::span_of(const Context& ctx, std::span<const RingElem> gens,
                               bool close_under_xy) {
    Echelonizer ech{ctx.p(), {}, {}};
    for (const auto& g : gens) {
        require_same_p(ctx.p(), g.p());
        ech.insert(g);
    }
    if (close_under_xy) {
        bool grew = true;
        while (grew) {
            grew = false;
            const auto snapshot = ech.rows;  // rows mutate during insertion
            for (const auto& v : snapshot) {
                grew |= ech.insert(v.shifted(1, 0));
                grew |= ech.insert(v.shifted(0, 1));
            }
        }
    }
    return IdealBasis(ctx.p(), std::move(ech.rows), close_under_xy);
}

bool IdealBasis::contains(const RingElem& v) const { return reduce(v).is_zero(); }

RingElem IdealBasis::reduce(RingElem v) const {
    require_same_p(p_, v.p());
    for (const auto& row : rows_) {
        const int c = coeff_at(v, pivot_of(row));
        if (c != 0) v -= row.scaled(c);
    }
    return v;
}

bool IdealBasis::verify_xy_closed() const {
    return std::all_of(rows_.begin(), rows_.end(), [&](const RingElem& v) {
        return contains(v.shifted(1, 0)) && contains(v.shifted(0, 1));
    });
}

IdealBasis augmentation_power(const Context& ctx, int k) {
    if (k < 0) throw std::invalid_argument("augmentation_power: k must be >= 0");
    const int p = ctx.p();
    const RingElem a = RingElem::x_minus_one(ctx);
    const RingElem b = RingElem::y_minus_one(ctx);
    std::vector<RingElem> pow_a{RingElem::one(ctx)};
    std::vector<RingElem> pow_b{RingElem::one(ctx)};
    for (int e = 1; e < p; ++e) {
        pow_a.push_back(pow_a.back() * a);
        pow_b.push_back(pow_b.back() * b);
    }
    Echelonizer ech{p, {}, {}};
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if (i + j >= k) ech.insert(pow_a[i] * pow_b[j]);
    return IdealBasis(p, std::move(ech.rows), true);
}

IdealBasis mult_kernel(const IdealBasis& s, const RingElem& factor) {
    require_same_p(s.p(), factor.p());
    const int d = s.dim();
    // Rows [factor*r_i | e_i]; after elimination the zero-image rows carry the
    // coordinate combinations spanning the kernel.
    struct TrackedRow {
        RingElem image;
        std::vector<int> combo;
    };
    std::vector<TrackedRow> work;
    work.reserve(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        std::vector<int> combo(static_cast<size_t>(d), 0);
        combo[static_cast<size_t>(i)] = 1;
        work.push_back({s.rows()[static_cast<size_t>(i)] * factor, std::move(combo)});
    }
    const int p = s.p();
    std::vector<TrackedRow> eliminated;
    std::vector<int> pivots;
    std::vector<TrackedRow> kernel_combos;
    for (auto& row : work) {
        for (size_t r = 0; r < eliminated.size(); ++r) {
            const int c = coeff_at(row.image, pivots[r]);
            if (c == 0) continue;
            row.image -= eliminated[r].image.scaled(c);
            for (int i = 0; i < d; ++i)
                row.combo[static_cast<size_t>(i)] =
                    fp_norm(row.combo[static_cast<size_t>(i)] -
                                c * eliminated[r].combo[static_cast<size_t>(i)],
                            p);
        }
        const int piv = pivot_of(row.image);
        if (piv < 0) {
            kernel_combos.push_back(std::move(row));
            continue;
        }
        const int inv = fp_inv(coeff_at(row.image, piv), p);
        row.image = row.image.scaled(inv);
        for (auto& c : row.combo) c = c * inv % p;
        eliminated.push_back(std::move(row));
        pivots.push_back(piv);
    }
    Echelonizer ech{p, {}, {}};
    for (const auto& kc : kernel_combos) {
        RingElem v{Context(p)};
        for (int i = 0; i < d; ++i)
            if (kc.combo[static_cast<size_t>(i)] != 0)
                v += s.rows()[static_cast<size_t>(i)].scaled(kc.combo[static_cast<size_t>(i)]);
        ech.insert(std::move(v));
    }
    IdealBasis out(p, std::move(ech.rows), false);
    return IdealBasis(p, out.rows(), out.verify_xy_closed());
}

IdealBasis mult_image(const IdealBasis& s, const RingElem& factor) {
    require_same_p(s.p(), factor.p());
    Echelonizer ech{s.p(), {}, {}};
    for (const auto& row : s.rows()) ech.insert(row * factor);
    IdealBasis out(s.p(), std::move(ech.rows), false);
    return IdealBasis(s.p(), out.rows(), out.verify_xy_closed());
}

std::optional<RingElem> solve_mult(const IdealBasis& s, const RingElem& factor,
                                   const RingElem& target) {
    require_same_p(s.p(), factor.p());
    require_same_p(s.p(), target.p());
    const int p = s.p();
    const int d = s.dim();
    struct TrackedRow {
        RingElem image;
        std::vector<int> combo;
    };
    std::vector<TrackedRow> eliminated;
    std::vector<int> pivots;
    for (int i = 0; i < d; ++i) {
        std::vector<int> combo(static_cast<size_t>(d), 0);
        combo[static_cast<size_t>(i)] = 1;
        TrackedRow row{s.rows()[static_cast<size_t>(i)] * factor, std::move(combo)};
        for (size_t r = 0; r < eliminated.size(); ++r) {
            const int c = coeff_at(row.image, pivots[r]);
            if (c == 0) continue;
            row.image -= eliminated[r].image.scaled(c);
            for (int t = 0; t < d; ++t)
                row.combo[static_cast<size_t>(t)] =
                    fp_norm(row.combo[static_cast<size_t>(t)] -
                                c * eliminated[r].combo[static_cast<size_t>(t)],
                            p);
        }
        const int piv = pivot_of(row.image);
        if (piv < 0) continue;
        const int inv = fp_inv(coeff_at(row.image, piv), p);
        row.image = row.image.scaled(inv);
        for (auto& c : row.combo) c = c * inv % p;
        eliminated.push_back(std::move(row));
        pivots.push_back(piv);
    }
    // Reduce the target against the image rows, accumulating the combination.
    RingElem rem = target;
    std::vector<int> coeffs(static_cast<size_t>(d), 0);
    for (size_t r = 0; r < eliminated.size(); ++r) {
        const int c = coeff_at(rem, pivots[r]);
        if (c == 0) continue;
        rem -= eliminated[r].image.scaled(c);
        for (int t = 0; t < d; ++t)
            coeffs[static_cast<size_t>(t)] =
                fp_norm(coeffs[static_cast<size_t>(t)] +
                            c * eliminated[r].combo[static_cast<size_t>(t)],
                        p);
    }
    if (!rem.is_zero()) return std::nullopt;
    RingElem v{Context(p)};
    for (int i = 0; i < d; ++i)
        if (coeffs[static_cast<size_t>(i)] != 0)
            v += s.rows()[static_cast<size_t>(i)].scaled(coeffs[static_cast<size_t>(i)]);
    // Canonicalize against the kernel so the choice does not depend on the
    // elimination path.
    const IdealBasis ker = mult_kernel(s, factor);
    v = ker.reduce(std::move(v));
    return v;
}

std::vector<RingElem> span_elements(const IdealBasis& s) {
    const int p = s.p();
    const int d = s.dim();
    size_t count = 1;
    for (int i = 0; i < d; ++i) {
        if (count > (size_t{1} << 40) / static_cast<size_t>(p))
            throw std::invalid_argument("span_elements: subspace too large to materialize");
        count *= static_cast<size_t>(p);
    }
    std::vector<RingElem> out;
    out.reserve(count);
    std::vector<int> digits(static_cast<size_t>(d), 0);
    const Context ctx(p);
    for (size_t t = 0; t < count; ++t) {
        RingElem v(ctx);
        for (int i = 0; i < d; ++i)
            if (digits[static_cast<size_t>(i)] != 0)
                v += s.rows()[static_cast<size_t>(i)].scaled(digits[static_cast<size_t>(i)]);
        out.push_back(std::move(v));
        for (int i = d - 1; i >= 0; --i) {   // last coordinate least significant
            if (++digits[static_cast<size_t>(i)] < p) break;
            digits[static_cast<size_t>(i)] = 0;
        }
    }
    return out;
}

}  // namespace regcensus
