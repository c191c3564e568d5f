#pragma once

// Rational polyhedral cones held in both descriptions at once.
//
// A cone C in Q^k is stored as
//   lineality : basis of the largest linear subspace inside C
//   rays      : extreme rays modulo the lineality space
//   equations : basis of the orthogonal complement of lin(C)
//   facets    : irredundant inner facet normals modulo the equations
// All four lists are canonical, so two cones are equal iff the stored data
// agree entrywise. Conversion between the two sides is double description.

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "bunchlab/exactlin.hpp"

namespace bunchlab {

namespace detail {

struct DoubleDescription {
    std::vector<IntVector> lineality;
    std::vector<IntVector> rays;
};

inline void make_primitive_inplace(IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
}

// {x : <a, x> >= 0 for all a in ineqs}, returned as lineality basis plus
// extreme rays (modulo the lineality).
inline DoubleDescription double_description(const std::vector<IntVector>& ineqs, std::size_t n) {
    using Bits = boost::dynamic_bitset<>;
    const std::size_t m = ineqs.size();
    std::vector<IntVector> lin;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n);
        e[i] = 1;
        lin.push_back(std::move(e));
    }
    std::vector<IntVector> rays;
    std::vector<Bits> zeros;

    for (std::size_t step = 0; step < m; ++step) {
        const IntVector& a = ineqs[step];
        if (a.size() != n) throw PreconditionError("DimensionMismatch", "inequality of wrong length");

        std::size_t pick = lin.size();
        Integer s;
        for (std::size_t i = 0; i < lin.size(); ++i) {
            s = dot(a, lin[i]);
            if (s != 0) {
                pick = i;
                break;
            }
        }
        if (pick < lin.size()) {
            IntVector l0 = lin[pick];
            if (s < 0) {
                for (auto& x : l0) x = -x;
                s = -s;
            }
            std::vector<IntVector> next_lin;
            for (std::size_t i = 0; i < lin.size(); ++i) {
                if (i == pick) continue;
                Integer t = dot(a, lin[i]);
                IntVector l = lin[i];
                if (t != 0) {
                    for (std::size_t j = 0; j < n; ++j) l[j] = s * l[j] - t * l0[j];
                    make_primitive_inplace(l);
                }
                next_lin.push_back(std::move(l));
            }
            lin = std::move(next_lin);
            for (std::size_t i = 0; i < rays.size(); ++i) {
                Integer t = dot(a, rays[i]);
                if (t != 0) {
                    for (std::size_t j = 0; j < n; ++j) rays[i][j] = s * rays[i][j] - t * l0[j];
                    make_primitive_inplace(rays[i]);
                }
                zeros[i].set(step);
            }
            Bits z(m);
            for (std::size_t j = 0; j < step; ++j) z.set(j);
            make_primitive_inplace(l0);
            rays.push_back(std::move(l0));
            zeros.push_back(std::move(z));
            continue;
        }

        std::vector<Integer> val(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(a, rays[i]);
            if (val[i] > 0) pos.push_back(i);
            else if (val[i] < 0) neg.push_back(i);
        }
        if (neg.empty()) {
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (val[i] == 0) zeros[i].set(step);
            continue;
        }

        const std::size_t d = n - lin.size();
        const std::size_t need = d >= 2 ? d - 2 : 0;
        std::vector<IntVector> next_rays;
        std::vector<Bits> next_zeros;
        for (std::size_t p : pos) {
            for (std::size_t q : neg) {
                Bits common = zeros[p] & zeros[q];
                if (common.count() < need) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == q) continue;
                    if (common.is_subset_of(zeros[r])) adjacent = false;
                }
                if (!adjacent) continue;
                IntVector v(n);
                for (std::size_t j = 0; j < n; ++j) v[j] = val[p] * rays[q][j] - val[q] * rays[p][j];
                make_primitive_inplace(v);
                common.set(step);
                next_rays.push_back(std::move(v));
                next_zeros.push_back(std::move(common));
            }
        }
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (val[i] < 0) continue;
            if (val[i] == 0) zeros[i].set(step);
            next_rays.push_back(std::move(rays[i]));
            next_zeros.push_back(std::move(zeros[i]));
        }
        rays = std::move(next_rays);
        zeros = std::move(next_zeros);
    }
    return {std::move(lin), std::move(rays)};
}

// Reduces vectors modulo a subspace given by its RREF and returns the
// sorted, deduplicated primitive representatives (zero vectors dropped).
inline std::vector<IntVector> reduce_modulo(const std::vector<IntVector>& vs, const RowEchelon& sub) {
    std::vector<IntVector> out;
    for (const auto& v : vs) {
        RatVector r = to_rational(v);
        for (std::size_t i = 0; i < sub.rows.size(); ++i) {
            Rational c = r[sub.pivots[i]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < r.size(); ++j) r[j] -= c * sub.rows[i][j];
        }
        IntVector p = primitive_integer(r);
        if (!is_zero(p)) out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace detail

class RatCone {
public:
    /// The zero cone of Q^0.
    RatCone() = default;

    static RatCone zero(std::size_t k) {
        RatCone c;
        c.dim_ = k;
        for (std::size_t i = 0; i < k; ++i) {
            IntVector e(k);
            e[i] = 1;
            c.equations_.push_back(std::move(e));
        }
        return c;
    }

    static RatCone full_space(std::size_t k) { return zero(k).dual(); }

    /// cone(generators) + lin(lineality_generators).
    static RatCone from_generators(std::size_t k, const std::vector<IntVector>& generators,
                                   const std::vector<IntVector>& lineality_generators = {}) {
        std::vector<IntVector> ineqs;
        for (const auto& g : generators) {
            if (g.size() != k) throw PreconditionError("DimensionMismatch", "generator of wrong length");
            ineqs.push_back(g);
        }
        append_both_signs(ineqs, lineality_generators, k);
        auto dual = detail::double_description(ineqs, k);
        return from_both(k, dual.lineality, dual.rays);
    }

    static RatCone from_generators(std::size_t k, const std::vector<RatVector>& generators) {
        std::vector<IntVector> ints;
        for (const auto& g : generators) {
            if (g.size() != k) throw PreconditionError("DimensionMismatch", "generator of wrong length");
            ints.push_back(primitive_integer(g));
        }
        return from_generators(k, ints);
    }

    /// {x : <a, x> >= 0 for a in inequalities, <e, x> = 0 for e in equations}.
    static RatCone from_inequalities(std::size_t k, const std::vector<IntVector>& inequalities,
                                     const std::vector<IntVector>& equations = {}) {
        std::vector<IntVector> ineqs;
        // equations first keeps the intermediate ray sets small
        append_both_signs(ineqs, equations, k);
        for (const auto& a : inequalities) {
            if (a.size() != k) throw PreconditionError("DimensionMismatch", "inequality of wrong length");
            ineqs.push_back(a);
        }
        auto primal = detail::double_description(ineqs, k);
        std::vector<IntVector> back;
        append_both_signs(back, primal.lineality, k);
        for (const auto& r : primal.rays) back.push_back(r);
        auto dual = detail::double_description(back, k);
        RatCone c;
        c.dim_ = k;
        c.set_primal(primal.lineality, primal.rays);
        c.set_dual(dual.lineality, dual.rays);
        return c;
    }

    std::size_t ambient_dim() const noexcept { return dim_; }
    const std::vector<IntVector>& lineality() const noexcept { return lineality_; }
    const std::vector<IntVector>& rays() const noexcept { return rays_; }
    const std::vector<IntVector>& equations() const noexcept { return equations_; }
    const std::vector<IntVector>& facets() const noexcept { return facets_; }
    std::size_t lineality_dim() const noexcept { return lineality_.size(); }

    /// V-representation: rays plus both signs of every lineality vector.
    std::vector<IntVector> generators() const {
        std::vector<IntVector> g = rays_;
        append_both_signs(g, lineality_, dim_);
        return g;
    }

    std::size_t dim() const noexcept { return dim_ - equations_.size(); }
    bool is_strictly_convex() const noexcept { return lineality_.empty(); }
    bool spans_fulldim() const noexcept { return equations_.empty(); }
    bool is_zero_cone() const noexcept { return lineality_.empty() && rays_.empty(); }

    bool contains(const IntVector& v) const {
        check_length(v);
        for (const auto& e : equations_)
            if (dot(e, v) != 0) return false;
        for (const auto& f : facets_)
            if (dot(f, v) < 0) return false;
        return true;
    }

    bool contains(const RatVector& v) const { return contains(scaled(v)); }

    bool in_relative_interior(const IntVector& v) const {
        check_length(v);
        for (const auto& e : equations_)
            if (dot(e, v) != 0) return false;
        for (const auto& f : facets_)
            if (dot(f, v) <= 0) return false;
        return true;
    }

    bool in_relative_interior(const RatVector& v) const { return in_relative_interior(scaled(v)); }

    /// Sum of the extreme rays; zero for a linear subspace.
    IntVector relative_interior_point() const {
        IntVector p(dim_);
        for (const auto& r : rays_)
            for (std::size_t i = 0; i < dim_; ++i) p[i] += r[i];
        return p;
    }

    bool contains(const RatCone& other) const {
        if (other.dim_ != dim_) throw PreconditionError("DimensionMismatch", "cones in different ambient spaces");
        for (const auto& r : other.rays_)
            if (!contains(r)) return false;
        for (const auto& l : other.lineality_) {
            if (!contains(l)) return false;
            IntVector neg = l;
            for (auto& x : neg) x = -x;
            if (!contains(neg)) return false;
        }
        return true;
    }

    RatCone dual() const {
        RatCone c;
        c.dim_ = dim_;
        c.lineality_ = equations_;
        c.rays_ = facets_;
        c.equations_ = lineality_;
        c.facets_ = rays_;
        return c;
    }

    RatCone intersect(const RatCone& other) const {
        if (other.dim_ != dim_) throw PreconditionError("DimensionMismatch", "cones in different ambient spaces");
        std::vector<IntVector> ineqs = facets_;
        ineqs.insert(ineqs.end(), other.facets_.begin(), other.facets_.end());
        std::vector<IntVector> eqs = equations_;
        eqs.insert(eqs.end(), other.equations_.begin(), other.equations_.end());
        return from_inequalities(dim_, ineqs, eqs);
    }

    /// Minkowski sum.
    RatCone operator+(const RatCone& other) const {
        if (other.dim_ != dim_) throw PreconditionError("DimensionMismatch", "cones in different ambient spaces");
        std::vector<IntVector> g = rays_;
        g.insert(g.end(), other.rays_.begin(), other.rays_.end());
        std::vector<IntVector> l = lineality_;
        l.insert(l.end(), other.lineality_.begin(), other.lineality_.end());
        return from_generators(dim_, g, l);
    }

    /// The cone cut out by the facets that vanish at v (the smallest face
    /// containing v when v lies in the cone).
    RatCone face_containing(const IntVector& v) const {
        std::vector<IntVector> eqs = equations_;
        std::vector<IntVector> ineqs;
        for (const auto& f : facets_) {
            if (dot(f, v) == 0) eqs.push_back(f);
            else ineqs.push_back(f);
        }
        return from_inequalities(dim_, ineqs, eqs);
    }

    /// Facets as cones (each the intersection with one supporting hyperplane).
    std::vector<RatCone> facet_cones() const {
        std::vector<RatCone> out;
        for (const auto& f : facets_) {
            std::vector<IntVector> gens;
            for (const auto& r : rays_)
                if (dot(f, r) == 0) gens.push_back(r);
            out.push_back(from_generators(dim_, gens, lineality_));
        }
        return out;
    }

    bool is_simplicial() const {
        return is_strictly_convex() && rational_rank(rays_, dim_) == rays_.size();
    }

    bool is_regular() const {
        if (!is_simplicial()) return false;
        if (rays_.empty()) return true;
        IntMatrix g = IntMatrix::from_columns(rays_, dim_);
        auto d = snf_diagonal(g);
        return std::all_of(d.begin(), d.end(), [](const Integer& x) { return x == 1; });
    }

    friend bool operator==(const RatCone& a, const RatCone& b) {
        return a.dim_ == b.dim_ && a.lineality_ == b.lineality_ && a.rays_ == b.rays_;
    }

    /// Strict weak order on canonical data; used for deterministic containers.
    friend bool operator<(const RatCone& a, const RatCone& b) {
        if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
        if (a.lineality_ != b.lineality_) return a.lineality_ < b.lineality_;
        return a.rays_ < b.rays_;
    }

    std::string to_string() const {
        std::string s = "cone(";
        for (std::size_t i = 0; i < rays_.size(); ++i) {
            if (i) s += ',';
            s += bunchlab::to_string(rays_[i]);
        }
        if (!lineality_.empty()) {
            s += "; lin ";
            for (std::size_t i = 0; i < lineality_.size(); ++i) {
                if (i) s += ',';
                s += bunchlab::to_string(lineality_[i]);
            }
        }
        return s + ")";
    }

private:
    static void append_both_signs(std::vector<IntVector>& out, const std::vector<IntVector>& vs, std::size_t k) {
        for (const auto& v : vs) {
            if (v.size() != k) throw PreconditionError("DimensionMismatch", "vector of wrong length");
            out.push_back(v);
            IntVector neg = v;
            for (auto& x : neg) x = -x;
            out.push_back(std::move(neg));
        }
    }

    // equations / facets known; recover the primal side
    static RatCone from_both(std::size_t k, const std::vector<IntVector>& eqs, const std::vector<IntVector>& fac) {
        std::vector<IntVector> ineqs;
        append_both_signs(ineqs, eqs, k);
        for (const auto& f : fac) ineqs.push_back(f);
        auto primal = detail::double_description(ineqs, k);
        RatCone c;
        c.dim_ = k;
        c.set_primal(primal.lineality, primal.rays);
        c.set_dual(eqs, fac);
        return c;
    }

    void set_primal(const std::vector<IntVector>& lin, const std::vector<IntVector>& rays) {
        RowEchelon e = reduced_row_echelon(to_rational_rows(lin), dim_);
        lineality_.clear();
        for (const auto& r : e.rows) lineality_.push_back(primitive_integer(r));
        rays_ = detail::reduce_modulo(rays, e);
    }

    void set_dual(const std::vector<IntVector>& eqs, const std::vector<IntVector>& fac) {
        RowEchelon e = reduced_row_echelon(to_rational_rows(eqs), dim_);
        equations_.clear();
        for (const auto& r : e.rows) equations_.push_back(primitive_integer(r));
        facets_ = detail::reduce_modulo(fac, e);
    }

    void check_length(const IntVector& v) const {
        if (v.size() != dim_) throw PreconditionError("DimensionMismatch", "vector length differs from ambient dimension");
    }

    static IntVector scaled(const RatVector& v) {
        Integer l = 1;
        for (const auto& x : v) l = lcm(l, x.get_den());
        IntVector out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            Rational s = v[i] * l;
            out[i] = s.get_num();
        }
        return out;
    }

    std::size_t dim_ = 0;
    std::vector<IntVector> lineality_;
    std::vector<IntVector> rays_;
    std::vector<IntVector> equations_;
    std::vector<IntVector> facets_;
};

inline RatCone cone_from_generators(std::size_t k, const std::vector<IntVector>& vs) {
    return RatCone::from_generators(k, vs);
}

inline RatCone dual(const RatCone& c) { return c.dual(); }
inline RatCone intersect(const RatCone& a, const RatCone& b) { return a.intersect(b); }
inline bool contains(const RatCone& c, const IntVector& v) { return c.contains(v); }
inline bool in_relative_interior(const RatCone& c, const IntVector& v) { return c.in_relative_interior(v); }
inline IntVector relative_interior_point(const RatCone& c) { return c.relative_interior_point(); }
inline std::size_t cone_dim(const RatCone& c) { return c.dim(); }
inline bool is_strictly_convex(const RatCone& c) { return c.is_strictly_convex(); }
inline bool spans_fulldim(const RatCone& c) { return c.spans_fulldim(); }
inline bool is_regular(const RatCone& c) { return c.is_regular(); }
inline bool is_simplicial(const RatCone& c) { return c.is_simplicial(); }

/// Intersection over a nonempty list; the full space for an empty list.
inline RatCone intersect_all(std::size_t k, const std::vector<RatCone>& cones) {
    std::vector<IntVector> ineqs, eqs;
    for (const auto& c : cones) {
        ineqs.insert(ineqs.end(), c.facets().begin(), c.facets().end());
        eqs.insert(eqs.end(), c.equations().begin(), c.equations().end());
    }
    return RatCone::from_inequalities(k, ineqs, eqs);
}

/// σ° ∩ τ° ≠ ∅. Relative interiors of convex sets that meet have
/// relint(σ ∩ τ) = σ° ∩ τ°, so one witness point decides it.
inline bool interiors_meet(const RatCone& a, const RatCone& b) {
    IntVector p = a.intersect(b).relative_interior_point();
    return a.in_relative_interior(p) && b.in_relative_interior(p);
}

/// τ° ⊆ C°.
inline bool interior_contained(const RatCone& tau, const RatCone& c) {
    return c.contains(tau) && c.in_relative_interior(tau.relative_interior_point());
}

enum class FaceRelation { Face, NotFace };

/// Decides whether c1 is a face of c2. Requires c1 ⊆ c2.
inline FaceRelation face_relation(const RatCone& c1, const RatCone& c2) {
    if (!c2.contains(c1)) throw PreconditionError("NotContained", "first cone is not contained in the second");
    return c2.face_containing(c1.relative_interior_point()) == c1 ? FaceRelation::Face : FaceRelation::NotFace;
}

/// A face γ₀ = cone(e_i : i ∈ S) of the positive orthant in Q^r, as a bit
/// mask over 0-based indices. Ordered lexicographically by the sorted index
/// list, so {1} < {1,2} < {2}.
class FaceIndexSet {
public:
    static constexpr std::size_t max_size = 64;

    FaceIndexSet() = default;
    explicit FaceIndexSet(std::uint64_t mask) : mask_(mask) {}

    static FaceIndexSet from_indices(const std::vector<std::size_t>& idx) {
        std::uint64_t m = 0;
        for (auto i : idx) {
            if (i >= max_size) throw PreconditionError("TooManyGenerators", "face index out of range");
            m |= std::uint64_t{1} << i;
        }
        return FaceIndexSet(m);
    }

    static FaceIndexSet full(std::size_t r) {
        return FaceIndexSet(r >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1);
    }

    std::uint64_t mask() const noexcept { return mask_; }
    bool contains(std::size_t i) const noexcept { return (mask_ >> i) & 1u; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }
    bool empty() const noexcept { return mask_ == 0; }
    bool is_subset_of(FaceIndexSet o) const noexcept { return (mask_ & ~o.mask_) == 0; }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for (std::uint64_t m = mask_; m; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
        return out;
    }

    FaceIndexSet complement(std::size_t r) const { return FaceIndexSet(full(r).mask_ & ~mask_); }

    friend bool operator==(FaceIndexSet a, FaceIndexSet b) { return a.mask_ == b.mask_; }

    friend bool operator<(FaceIndexSet a, FaceIndexSet b) {
        std::uint64_t x = a.mask_, y = b.mask_;
        while (x && y) {
            auto i = std::countr_zero(x), j = std::countr_zero(y);
            if (i != j) return i < j;
            x &= x - 1;
            y &= y - 1;
        }
        return !x && y;
    }

    /// 1-based, e.g. "(1,3,5)".
    std::string to_string() const {
        std::string s = "(";
        bool first = true;
        for (auto i : indices()) {
            if (!first) s += ',';
            first = false;
            s += std::to_string(i + 1);
        }
        return s + ")";
    }

    /// The orthant face as a cone in Q^r.
    RatCone cone(std::size_t r) const {
        std::vector<IntVector> gens;
        for (auto i : indices()) {
            IntVector e(r);
            e[i] = 1;
            gens.push_back(std::move(e));
        }
        return RatCone::from_generators(r, gens);
    }

private:
    std::uint64_t mask_ = 0;
};

} // namespace bunchlab
