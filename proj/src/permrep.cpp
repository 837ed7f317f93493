#include "regcensus/permrep.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace regcensus {

int point_index(int p, int i, int j, int alpha) { return alpha + p * j + p * p * i; }

PointCoords point_coords(int p, int index) {
    return PointCoords{index / (p * p), index / p % p, index % p};
}

Perm::Perm(int degree) : img_(static_cast<size_t>(degree)) {
    std::iota(img_.begin(), img_.end(), std::uint16_t{0});
}

Perm Perm::from_images(std::vector<std::uint16_t> images) {
    std::vector<bool> seen(images.size(), false);
    for (auto v : images) {
        if (v >= images.size() || seen[v])
            throw std::invalid_argument("image table is not a bijection");
        seen[v] = true;
    }
    Perm q(0);
    q.img_ = std::move(images);
    return q;
}

Perm Perm::then(const Perm& next) const {
    if (degree() != next.degree()) throw std::invalid_argument("degree mismatch");
    Perm out(0);
    out.img_.resize(img_.size());
    for (size_t v = 0; v < img_.size(); ++v) out.img_[v] = next.img_[img_[v]];
    return out;
}

Perm Perm::inverse() const {
    Perm out(0);
    out.img_.resize(img_.size());
    for (size_t v = 0; v < img_.size(); ++v) out.img_[img_[v]] = static_cast<std::uint16_t>(v);
    return out;
}

Perm Perm::conjugated_by(const Perm& w) const { return w.inverse().then(*this).then(w); }

std::uint64_t Perm::order() const {
    constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
    std::vector<bool> seen(img_.size(), false);
    std::uint64_t result = 1;
    for (size_t start = 0; start < img_.size(); ++start) {
        if (seen[start]) continue;
        std::uint64_t len = 0;
        size_t v = start;
        do {
            seen[v] = true;
            v = img_[v];
            ++len;
        } while (v != start);
        const std::uint64_t g = std::gcd(result, len);
        if (result / g > kSaturated / len) return kSaturated;
        result = result / g * len;
    }
    return result;
}

bool Perm::is_identity() const {
    for (size_t v = 0; v < img_.size(); ++v)
        if (img_[v] != v) return false;
    return true;
}

std::string Perm::to_text() const {
    std::ostringstream os;
    os << degree();
    for (auto v : img_) os << ' ' << v;
    return os.str();
}

size_t PermHash::operator()(const Perm& q) const {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (auto v : q.images()) {
        h ^= v;
        h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
}

GenSet::GenSet(std::vector<Perm> generators, std::string name)
    : gens(std::move(generators)), label(std::move(name)) {
    if (gens.empty()) throw std::invalid_argument("generating set must be nonempty");
    for (const auto& g : gens)
        if (g.degree() != gens.front().degree())
            throw std::invalid_argument("generators have mixed degrees");
}

Perm block_translation(const Context& ctx, const RingElem& f) {
    if (f.p() != ctx.p()) throw std::invalid_argument("context mismatch");
    const int p = ctx.p();
    std::vector<std::uint16_t> img(static_cast<size_t>(ctx.degree()));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            const int add = f.at(i, j);
            for (int alpha = 0; alpha < p; ++alpha)
                img[static_cast<size_t>(point_index(p, i, j, alpha))] =
                    static_cast<std::uint16_t>(point_index(p, i, j, (alpha + add) % p));
        }
    return Perm::from_images(std::move(img));
}

Perm exponent_shift(const Context& ctx, Axis axis) {
    const int p = ctx.p();
    std::vector<std::uint16_t> img(static_cast<size_t>(ctx.degree()));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            const int ti = axis == Axis::X ? (i + 1) % p : i;
            const int tj = axis == Axis::Y ? (j + 1) % p : j;
            for (int alpha = 0; alpha < p; ++alpha)
                img[static_cast<size_t>(point_index(p, i, j, alpha))] =
                    static_cast<std::uint16_t>(point_index(p, ti, tj, alpha));
        }
    return Perm::from_images(std::move(img));
}

Perm twisted_shift(const Context& ctx, const RingElem& g, Axis axis) {
    return block_translation(ctx, g).then(exponent_shift(ctx, axis));
}

std::vector<std::vector<int>> orbits(const GenSet& group) {
    const int n = group.degree();
    std::vector<int> orbit_of(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < n; ++start) {
        if (orbit_of[static_cast<size_t>(start)] >= 0) continue;
        const int id = static_cast<int>(out.size());
        std::vector<int> frontier{start}, members{start};
        orbit_of[static_cast<size_t>(start)] = id;
        while (!frontier.empty()) {
            const int v = frontier.back();
            frontier.pop_back();
            for (const auto& g : group.gens) {
                const int w = g(v);
                if (orbit_of[static_cast<size_t>(w)] < 0) {
                    orbit_of[static_cast<size_t>(w)] = id;
                    frontier.push_back(w);
                    members.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

std::vector<std::vector<int>> standard_blocks(const Context& ctx) {
    const int p = ctx.p();
    std::vector<std::vector<int>> cells;
    cells.reserve(static_cast<size_t>(p * p));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            std::vector<int> cell(static_cast<size_t>(p));
            for (int alpha = 0; alpha < p; ++alpha)
                cell[static_cast<size_t>(alpha)] = point_index(p, i, j, alpha);
            cells.push_back(std::move(cell));
        }
    return cells;
}

namespace {

// cell index per point; validates the partition.
std::vector<int> cell_of_point(int degree, const std::vector<std::vector<int>>& cells) {
    if (cells.empty()) throw std::invalid_argument("empty partition");
    const size_t cell_size = cells.front().size();
    std::vector<int> cell_of(static_cast<size_t>(degree), -1);
    for (size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].size() != cell_size)
            throw std::invalid_argument("partition cells have unequal sizes");
        for (int v : cells[c]) {
            if (v < 0 || v >= degree || cell_of[static_cast<size_t>(v)] >= 0)
                throw std::invalid_argument("cells do not partition the point set");
            cell_of[static_cast<size_t>(v)] = static_cast<int>(c);
        }
    }
    if (cell_size * cells.size() != static_cast<size_t>(degree))
        throw std::invalid_argument("cells do not cover the point set");
    return cell_of;
}

std::optional<std::vector<Perm>> induced_cell_perms(const GenSet& group,
                                                    const std::vector<std::vector<int>>& cells) {
    const auto cell_of = cell_of_point(group.degree(), cells);
    std::vector<Perm> induced;
    induced.reserve(group.gens.size());
    for (const auto& g : group.gens) {
        std::vector<std::uint16_t> img(cells.size());
        for (size_t c = 0; c < cells.size(); ++c) {
            const int target = cell_of[static_cast<size_t>(g(cells[c].front()))];
            for (int v : cells[c])
                if (cell_of[static_cast<size_t>(g(v))] != target) return std::nullopt;
            img[c] = static_cast<std::uint16_t>(target);
        }
        induced.push_back(Perm::from_images(std::move(img)));
    }
    return induced;
}

}  // namespace

bool is_block_system(const GenSet& group, const std::vector<std::vector<int>>& cells) {
    return induced_cell_perms(group, cells).has_value();
}

GenSet induced_action(const GenSet& group, const std::vector<std::vector<int>>& cells) {
    auto perms = induced_cell_perms(group, cells);
    if (!perms) throw std::invalid_argument("partition is not a block system");
    return GenSet(std::move(*perms), group.label + "/blocks");
}

std::optional<std::vector<Perm>> try_group_closure(const GenSet& group, size_t cap) {
    std::unordered_set<Perm, PermHash> seen;
    std::vector<Perm> frontier{Perm(group.degree())};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
        const Perm cur = std::move(frontier.back());
        frontier.pop_back();
        for (const auto& g : group.gens) {
            Perm next = cur.then(g);
            if (seen.contains(next)) continue;
            if (seen.size() >= cap) return std::nullopt;
            frontier.push_back(next);
            seen.insert(std::move(next));
        }
    }
    std::vector<Perm> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Perm> group_closure(const GenSet& group, size_t cap) {
    auto closed = try_group_closure(group, cap);
    if (!closed)
        throw CapExceeded("group closure of '" + group.label + "' exceeds cap " +
                          std::to_string(cap));
    return *std::move(closed);
}

bool is_regular_elementary_abelian(int p, const GenSet& group) {
    const auto degree = static_cast<size_t>(group.degree());
    for (size_t i = 0; i < group.gens.size(); ++i)
        for (size_t j = i + 1; j < group.gens.size(); ++j)
            if (group.gens[i].then(group.gens[j]) != group.gens[j].then(group.gens[i]))
                return false;
    const auto closed = try_group_closure(group, degree);
    if (!closed || closed->size() != degree) return false;
    if (orbits(group).size() != 1) return false;
    for (const auto& q : *closed)
        if (!q.is_identity() && q.order() != static_cast<std::uint64_t>(p)) return false;
    return true;
}

GenSet delta_generators(const Context& ctx, const IdealBasis& ideal) {
    std::vector<Perm> gens;
    for (const auto& row : ideal.rows()) gens.push_back(block_translation(ctx, row));
    if (gens.empty()) gens.push_back(Perm(ctx.degree()));  // Delta(0) is trivial
    return GenSet(std::move(gens), "Delta");
}

GenSet gamma_generators(const Context& ctx, const IdealBasis& ideal) {
    auto delta = delta_generators(ctx, ideal);
    auto gens = std::move(delta.gens);
    gens.push_back(exponent_shift(ctx, Axis::X));
    gens.push_back(exponent_shift(ctx, Axis::Y));
    return GenSet(std::move(gens), "Gamma");
}

}  // namespace regcensus
