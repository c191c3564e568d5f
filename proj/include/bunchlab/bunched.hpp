#pragma once

// Bunched-ring presentations and their face combinatorics.
//
// Faces of the positive orthant γ ⊂ Q^r are FaceIndexSet bit masks (0-based
// internally). Q is the k × r degree matrix, P the Gale dual n × r matrix.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bunchlab/cones.hpp"
#include "bunchlab/fans.hpp"

namespace bunchlab {

struct Term {
    Rational coeff;
    IntVector exponents;
};

struct Relation {
    std::vector<Term> terms;
};

/// Validated presentation of a graded ring: generator degrees in Z^k and
/// homogeneous relations. Build it with validate_presentation().
struct RingPresentation {
    std::size_t r = 0;
    std::size_t k = 0;
    IntMatrix degrees;  // k × r, column i is w_i
    std::vector<Relation> relations;
    std::optional<bool> xhat_smooth;
    std::optional<std::vector<FaceIndexSet>> fface_table;
    std::vector<std::string> warnings;

    // support masks of every term, per relation
    std::vector<std::vector<std::uint64_t>> term_supports;

    IntVector degree(std::size_t i) const { return degrees.column(i); }
    std::vector<IntVector> degree_columns() const { return degrees.columns(); }

    IntVector relation_degree(std::size_t j) const { return degrees * relations.at(j).terms.front().exponents; }

    std::size_t dim_R() const { return r - relations.size(); }

    IntMatrix restricted(FaceIndexSet face) const {
        auto idx = face.indices();
        return degrees.select_columns(idx);
    }
};

struct PresentationInput {
    std::size_t class_rank = 0;
    std::vector<IntVector> degrees;
    std::vector<Relation> relations;
    std::optional<bool> xhat_smooth;
    std::optional<std::vector<FaceIndexSet>> fface_table;
};

inline constexpr std::size_t hard_generator_limit = 62;

/// Checks the presentation axioms: faithful grading, homogeneous relations
/// with at least two distinct terms.
inline RingPresentation validate_presentation(const PresentationInput& in) {
    RingPresentation R;
    R.k = in.class_rank;
    R.r = in.degrees.size();
    if (R.r > hard_generator_limit)
        throw PreconditionError("TooManyGenerators", "at most " + std::to_string(hard_generator_limit) + " generators are supported");
    for (std::size_t i = 0; i < R.r; ++i)
        if (in.degrees[i].size() != R.k)
            throw ValidationError("DimensionMismatch", "degree of generator " + std::to_string(i + 1) + " has length " +
                                                           std::to_string(in.degrees[i].size()) + ", expected " +
                                                           std::to_string(R.k));
    if (R.r < R.k)
        throw ValidationError("TooFewGenerators", std::to_string(R.r) + " generators cannot generate Z^" + std::to_string(R.k));
    R.degrees = IntMatrix::from_columns(in.degrees, R.k);
    if (!is_surjective(R.degrees))
        throw ValidationError("DegreesDontGenerate", "the generator degrees do not generate the lattice Z^" + std::to_string(R.k));

    for (std::size_t j = 0; j < in.relations.size(); ++j) {
        const Relation& g = in.relations[j];
        const std::string tag = std::to_string(j + 1);
        if (g.terms.size() < 2)
            throw ValidationError("RelationTooFewTerms(" + tag + ")", "relation " + tag + " needs at least two terms");
        std::vector<std::uint64_t> supports;
        for (const auto& t : g.terms) {
            if (t.exponents.size() != R.r)
                throw ValidationError("DimensionMismatch", "relation " + tag + " has an exponent vector of wrong length");
            if (t.coeff == 0) throw ValidationError("ZeroCoefficient(" + tag + ")", "relation " + tag + " has a zero coefficient");
            std::uint64_t s = 0;
            for (std::size_t i = 0; i < R.r; ++i) {
                if (t.exponents[i] < 0)
                    throw ValidationError("NegativeExponent(" + tag + ")", "relation " + tag + " has a negative exponent");
                if (t.exponents[i] > 0) s |= std::uint64_t{1} << i;
            }
            supports.push_back(s);
        }
        for (std::size_t a = 0; a < g.terms.size(); ++a)
            for (std::size_t b = a + 1; b < g.terms.size(); ++b)
                if (g.terms[a].exponents == g.terms[b].exponents)
                    throw ValidationError("DuplicateExponents(" + tag + ")", "relation " + tag + " repeats a monomial");
        IntVector d0 = R.degrees * g.terms[0].exponents;
        for (std::size_t b = 1; b < g.terms.size(); ++b) {
            IntVector db = R.degrees * g.terms[b].exponents;
            if (db != d0)
                throw ValidationError("RelationNotHomogeneous(" + tag + ",1," + std::to_string(b + 1) + ")",
                                      "relation " + tag + ": term 1 has degree " + to_string(d0) + " but term " +
                                          std::to_string(b + 1) + " has degree " + to_string(db));
        }
        std::uint64_t common = ~std::uint64_t{0};
        for (auto s : supports) common &= s;
        if (common)
            R.warnings.push_back("DegenerateRelation(" + tag + "): all terms share a variable, so the relation is reducible");
        R.term_supports.push_back(std::move(supports));
    }
    // two relations that are scalar multiples of each other
    for (std::size_t a = 0; a < in.relations.size(); ++a)
        for (std::size_t b = a + 1; b < in.relations.size(); ++b) {
            const auto& ta = in.relations[a].terms;
            const auto& tb = in.relations[b].terms;
            if (ta.size() != tb.size()) continue;
            std::map<IntVector, Rational> ma, mb;
            for (const auto& t : ta) ma[t.exponents] = t.coeff;
            for (const auto& t : tb) mb[t.exponents] = t.coeff;
            bool proportional = true;
            std::optional<Rational> ratio;
            for (const auto& [e, c] : ma) {
                auto it = mb.find(e);
                if (it == mb.end()) {
                    proportional = false;
                    break;
                }
                Rational q = it->second / c;
                if (ratio && *ratio != q) {
                    proportional = false;
                    break;
                }
                ratio = q;
            }
            if (proportional)
                R.warnings.push_back("DegenerateRelation(" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                                     "): relations are proportional");
        }
    R.relations = in.relations;
    R.xhat_smooth = in.xhat_smooth;
    if (in.fface_table) {
        for (const auto& f : *in.fface_table)
            if (!f.is_subset_of(FaceIndexSet::full(R.r)))
                throw ValidationError("DimensionMismatch", "fface_table entry " + f.to_string() + " exceeds the generator count");
        auto table = *in.fface_table;
        std::sort(table.begin(), table.end());
        table.erase(std::unique(table.begin(), table.end()), table.end());
        R.fface_table = std::move(table);
    }
    return R;
}

/// Number of terms of relation j whose support lies in the face.
inline std::size_t nu(const RingPresentation& R, std::size_t j, FaceIndexSet face) {
    std::size_t count = 0;
    for (auto s : R.term_supports.at(j))
        if ((s & ~face.mask()) == 0) ++count;
    return count;
}

/// F-face test. Polynomial rings: every face. One relation: ν ≠ 1.
/// Several relations need an externally supplied table.
inline bool is_fface(const RingPresentation& R, FaceIndexSet face) {
    if (R.relations.empty()) return true;
    if (R.relations.size() == 1) return nu(R, 0, face) != 1;
    if (!R.fface_table)
        throw UndeterminedError("OracleRequired",
                                "F-faces of a ring with several relations need an fface_table from an external computation");
    return std::binary_search(R.fface_table->begin(), R.fface_table->end(), face);
}

inline void check_scan_bound(const RingPresentation& R, std::size_t bound) {
    if (R.r > std::min(bound, hard_generator_limit))
        throw PreconditionError("TooManyGenerators", "face scan over 2^" + std::to_string(R.r) +
                                                         " faces exceeds the bound of " + std::to_string(bound) +
                                                         " generators");
}

/// All faces of γ, in canonical (lexicographic) order.
inline std::vector<FaceIndexSet> all_faces(std::size_t r) {
    std::vector<FaceIndexSet> out;
    out.reserve(std::size_t{1} << r);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << r); ++m) out.emplace_back(m);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<FaceIndexSet> enumerate_ffaces(const RingPresentation& R, std::size_t bound = 24) {
    check_scan_bound(R, bound);
    std::vector<FaceIndexSet> out;
    for (auto f : all_faces(R.r))
        if (is_fface(R, f)) out.push_back(f);
    return out;
}

/// Memoized images Q(γ₀). Images depend only on which distinct degree
/// vectors occur in γ₀, so the cache is keyed by that set.
class FaceCatalog {
public:
    explicit FaceCatalog(const RingPresentation& R) : k_(R.k), r_(R.r) {
        for (std::size_t i = 0; i < R.r; ++i) {
            IntVector w = R.degree(i);
            auto it = std::find(distinct_.begin(), distinct_.end(), w);
            class_of_.push_back(static_cast<std::size_t>(it - distinct_.begin()));
            if (it == distinct_.end()) distinct_.push_back(std::move(w));
        }
    }

    std::uint64_t class_mask(FaceIndexSet face) const {
        std::uint64_t m = 0;
        for (auto i : face.indices()) m |= std::uint64_t{1} << class_of_[i];
        return m;
    }

    const RatCone& image(FaceIndexSet face) const { return image_of_classes(class_mask(face)); }

    const RatCone& image_of_classes(std::uint64_t cm) const {
        auto it = cache_.find(cm);
        if (it != cache_.end()) return it->second;
        std::vector<IntVector> gens;
        for (std::size_t c = 0; c < distinct_.size(); ++c)
            if ((cm >> c) & 1u) gens.push_back(distinct_[c]);
        return cache_.emplace(cm, RatCone::from_generators(k_, gens)).first->second;
    }

    std::size_t r() const noexcept { return r_; }
    std::size_t k() const noexcept { return k_; }

private:
    std::size_t k_;
    std::size_t r_;
    std::vector<IntVector> distinct_;
    std::vector<std::size_t> class_of_;
    mutable std::unordered_map<std::uint64_t, RatCone> cache_;
};

/// One cone of a bunch as given by the user: explicit generators or a
/// witness face.
struct ConeSpec {
    std::optional<std::vector<IntVector>> generators;
    std::optional<FaceIndexSet> face;
};

/// A validated F-bunch: cones in K_Q with a witness face for each.
struct FBunch {
    std::vector<RatCone> cones;
    std::vector<FaceIndexSet> witnesses;
    bool maximality_checked = false;
};

struct FBunchOptions {
    bool skip_maximality = false;
    // report facet-condition failures as warnings instead of errors; the
    // ambient fan does not depend on that condition
    bool facet_condition_as_warning = false;
    std::size_t max_generators = 24;
};

namespace detail {

inline RatCone cone_of_spec(const RingPresentation& R, const FaceCatalog& cat, const ConeSpec& spec, std::size_t idx) {
    const std::string tag = std::to_string(idx + 1);
    if (spec.generators.has_value() == spec.face.has_value())
        throw ValidationError("BadConeSpec(" + tag + ")", "bunch cone " + tag + " needs exactly one of generators or face");
    if (spec.face) {
        if (!spec.face->is_subset_of(FaceIndexSet::full(R.r)))
            throw ValidationError("BadConeSpec(" + tag + ")", "bunch cone " + tag + " names a generator out of range");
        return cat.image(*spec.face);
    }
    for (const auto& g : *spec.generators)
        if (g.size() != R.k)
            throw ValidationError("DimensionMismatch", "bunch cone " + tag + " has a generator of wrong length");
    return RatCone::from_generators(R.k, *spec.generators);
}

// An F-face γ₀ with Q(γ₀) = τ, preferring the given face.
inline std::optional<FaceIndexSet> find_witness(const RingPresentation& R, const FaceCatalog& cat, const RatCone& tau,
                                                std::optional<FaceIndexSet> hint) {
    if (hint && cat.image(*hint) == tau && is_fface(R, *hint)) return hint;
    std::uint64_t top = 0;
    for (std::size_t i = 0; i < R.r; ++i)
        if (tau.contains(R.degree(i))) top |= std::uint64_t{1} << i;
    if (!(cat.image(FaceIndexSet(top)) == tau)) return std::nullopt;
    // submasks of top, largest first
    for (std::uint64_t s = top;; s = (s - 1) & top) {
        FaceIndexSet f(s);
        if (cat.image(f) == tau && is_fface(R, f)) return f;
        if (s == 0) break;
    }
    return std::nullopt;
}

inline bool satisfies_overlap(const RatCone& tau, const RatCone& sigma) {
    // ∅ ≠ τ° ∩ σ° ≠ σ°
    return interiors_meet(tau, sigma) && !interior_contained(sigma, tau);
}

} // namespace detail

/// Checks the F-bunch axioms in the order witness, pairwise overlap, facet
/// condition, maximality.
inline FBunch validate_fbunch(const RingPresentation& R, const FaceCatalog& cat, const std::vector<ConeSpec>& specs,
                              const FBunchOptions& opt = {}, std::vector<std::string>* warnings = nullptr) {
    if (specs.empty()) throw ValidationError("EmptyBunch", "the bunch must contain at least one cone");
    FBunch B;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        RatCone tau = detail::cone_of_spec(R, cat, specs[i], i);
        auto w = detail::find_witness(R, cat, tau, specs[i].face);
        if (!w)
            throw ValidationError("NotProjectedFFace(" + std::to_string(i + 1) + ")",
                                  "bunch cone " + std::to_string(i + 1) + " " + tau.to_string() +
                                      " is not the image of an F-face");
        B.cones.push_back(std::move(tau));
        B.witnesses.push_back(*w);
    }
    for (std::size_t i = 0; i < B.cones.size(); ++i)
        for (std::size_t j = i + 1; j < B.cones.size(); ++j)
            if (!detail::satisfies_overlap(B.cones[i], B.cones[j]) || !detail::satisfies_overlap(B.cones[j], B.cones[i]))
                throw ValidationError("OverlapViolation(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                                      "bunch cones " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                          " violate the pairwise overlap condition");
    for (std::size_t i = 0; i < R.r; ++i) {
        FaceIndexSet facet(FaceIndexSet::full(R.r).mask() & ~(std::uint64_t{1} << i));
        const std::string code = "FacetConditionFails(" + std::to_string(i + 1) + ")";
        std::string problem;
        if (!is_surjective(R.restricted(facet))) {
            problem = "the degrees other than w_" + std::to_string(i + 1) + " do not generate the lattice";
        } else {
            const RatCone& img = cat.image(facet);
            bool hit = std::any_of(B.cones.begin(), B.cones.end(), [&](const RatCone& t) { return interior_contained(t, img); });
            if (!hit)
                problem = "no bunch cone has its interior inside the interior of the image of facet " + std::to_string(i + 1);
        }
        if (problem.empty()) continue;
        if (!opt.facet_condition_as_warning) throw ValidationError(code, problem);
        if (warnings) warnings->push_back(code + ": " + problem);
    }
    if (opt.skip_maximality) {
        if (warnings) warnings->push_back("MaximalityUnchecked: maximality of the bunch was not verified");
        return B;
    }
    check_scan_bound(R, opt.max_generators);
    std::map<std::uint64_t, FaceIndexSet> seen;  // class mask -> first F-face
    for (auto f : all_faces(R.r)) {
        if (!is_fface(R, f)) continue;
        seen.emplace(cat.class_mask(f), f);
    }
    std::vector<RatCone> checked;
    for (const auto& [cm, face] : seen) {
        const RatCone& tau = cat.image_of_classes(cm);
        if (std::find(B.cones.begin(), B.cones.end(), tau) != B.cones.end()) continue;
        if (std::find(checked.begin(), checked.end(), tau) != checked.end()) continue;
        checked.push_back(tau);
        bool all = std::all_of(B.cones.begin(), B.cones.end(),
                               [&](const RatCone& s) { return detail::satisfies_overlap(tau, s); });
        if (all)
            throw ValidationError("MaximalityViolation(" + face.to_string() + ")",
                                  "the image " + tau.to_string() + " of the F-face " + face.to_string() +
                                      " overlaps every bunch cone but is not in the bunch");
    }
    B.maximality_checked = true;
    return B;
}

/// F-faces whose image has relative interior containing some τ° of the bunch.
inline std::vector<FaceIndexSet> relevant_faces(const RingPresentation& R, const FaceCatalog& cat,
                                                const std::vector<RatCone>& bunch, std::size_t bound = 24) {
    check_scan_bound(R, bound);
    std::unordered_map<std::uint64_t, bool> verdict;
    std::vector<FaceIndexSet> out;
    for (auto f : all_faces(R.r)) {
        if (!is_fface(R, f)) continue;
        std::uint64_t cm = cat.class_mask(f);
        auto it = verdict.find(cm);
        if (it == verdict.end()) {
            const RatCone& img = cat.image_of_classes(cm);
            bool v = std::any_of(bunch.begin(), bunch.end(), [&](const RatCone& t) { return interior_contained(t, img); });
            it = verdict.emplace(cm, v).first;
        }
        if (it->second) out.push_back(f);
    }
    return out;
}

/// Inclusion-minimal members of a face list, preserving order.
inline std::vector<FaceIndexSet> minimal_faces(const std::vector<FaceIndexSet>& faces) {
    std::vector<FaceIndexSet> out;
    for (auto f : faces) {
        bool minimal = std::none_of(faces.begin(), faces.end(),
                                    [&](FaceIndexSet g) { return g != f && g.is_subset_of(f); });
        if (minimal) out.push_back(f);
    }
    return out;
}

inline std::vector<FaceIndexSet> covering_collection(const std::vector<FaceIndexSet>& rlv) { return minimal_faces(rlv); }

// ---------------------------------------------------------------------------
// Gale duality

struct GaleData {
    std::size_t n = 0;
    IntMatrix P;                    // n × r
    std::vector<IntVector> images;  // P e_i, i = 1..r
};

inline GaleData gale_setup(const RingPresentation& R) {
    IntMatrix K = kernel_basis(R.degrees);  // r × n
    GaleData g;
    g.n = K.cols();
    g.P = K.transpose();
    if (!(R.degrees * K).is_zero()) throw Error("InternalError", "Gale kernel is not annihilated by Q");
    if (rank(g.P) != g.n) throw Error("InternalError", "Gale matrix has deficient rank");
    for (std::size_t i = 0; i < R.r; ++i) g.images.push_back(g.P.column(i));
    return g;
}

inline FaceIndexSet costar(FaceIndexSet face, std::size_t r) { return face.complement(r); }

/// P applied to a face of the dual orthant.
inline RatCone gale_cone(const GaleData& g, FaceIndexSet dual_face) {
    std::vector<IntVector> gens;
    for (auto i : dual_face.indices()) gens.push_back(g.images[i]);
    return RatCone::from_generators(g.n, gens);
}

/// The fan whose maximal cones are the maximal P(γ₀*) for γ₀ in a
/// covering collection.
inline Fan fan_from_covering(const RingPresentation& R, const GaleData& g, const std::vector<FaceIndexSet>& cov) {
    std::vector<RatCone> cones;
    for (auto f : cov) {
        RatCone c = gale_cone(g, costar(f, R.r));
        if (std::find(cones.begin(), cones.end(), c) == cones.end()) cones.push_back(std::move(c));
    }
    std::vector<RatCone> maximal;
    for (const auto& c : cones) {
        bool dominated = std::any_of(cones.begin(), cones.end(), [&](const RatCone& d) { return !(d == c) && d.contains(c); });
        if (!dominated) maximal.push_back(c);
    }
    return verify_fan(g.n, std::move(maximal));
}

inline Fan minimal_ambient_fan(const RingPresentation& R, const GaleData& g, const std::vector<FaceIndexSet>& cov) {
    return fan_from_covering(R, g, cov);
}

/// Inclusion-minimal cones of a list, deduplicated, in first-seen order.
inline std::vector<RatCone> minimal_cones(const std::vector<RatCone>& cones) {
    std::vector<RatCone> uniq;
    for (const auto& c : cones)
        if (std::find(uniq.begin(), uniq.end(), c) == uniq.end()) uniq.push_back(c);
    std::vector<RatCone> out;
    for (const auto& c : uniq) {
        bool minimal = std::none_of(uniq.begin(), uniq.end(), [&](const RatCone& d) { return !(d == c) && c.contains(d); });
        if (minimal) out.push_back(c);
    }
    return out;
}

/// Greedy enlargement of Φ to a bunch over all faces of γ, scanning faces in
/// lexicographic order, then keeping the minimal cones.
inline std::vector<RatCone> extend_to_bunch(const RingPresentation& R, const FaceCatalog& cat,
                                            const std::vector<RatCone>& phi, std::size_t bound = 24) {
    check_scan_bound(R, bound);
    std::vector<RatCone> theta = phi;
    std::vector<std::uint64_t> done;
    for (auto f : all_faces(R.r)) {
        std::uint64_t cm = cat.class_mask(f);
        if (std::find(done.begin(), done.end(), cm) != done.end()) continue;
        done.push_back(cm);
        const RatCone& tau = cat.image_of_classes(cm);
        if (std::find(theta.begin(), theta.end(), tau) != theta.end()) continue;
        bool overlaps = std::all_of(theta.begin(), theta.end(), [&](const RatCone& s) { return interiors_meet(tau, s); });
        if (overlaps) theta.push_back(tau);
    }
    return minimal_cones(theta);
}

/// The bunch of images Q(γ₀) attached to the maximal cones P(γ₀*) of a fan.
inline std::vector<RatCone> bunch_from_fan(const Fan& F, const IntMatrix& Q) {
    const std::size_t r = Q.cols();
    IntMatrix K = kernel_basis(Q);
    const std::size_t n = K.cols();
    if (F.ambient_rank() != n)
        throw ValidationError("RaysIncompatible", "fan rank differs from the Gale dual rank");
    std::vector<IntVector> images;
    std::vector<IntVector> prim;
    for (std::size_t i = 0; i < r; ++i) {
        images.push_back(K.row(i));
        if (!is_zero(images.back())) prim.push_back(primitive(images.back()));
    }
    for (const auto& ray : rays(F))
        if (std::find(prim.begin(), prim.end(), ray) == prim.end())
            throw ValidationError("RaysIncompatible", "fan ray " + to_string(ray) + " is not a Gale image");
    std::vector<RatCone> out;
    for (const auto& sigma : F.maximal_cones()) {
        std::uint64_t dual_face = 0;
        std::vector<IntVector> gens;
        for (std::size_t i = 0; i < r; ++i)
            if (sigma.contains(images[i])) {
                dual_face |= std::uint64_t{1} << i;
                gens.push_back(images[i]);
            }
        if (!(RatCone::from_generators(n, gens) == sigma))
            throw ValidationError("RaysIncompatible", "fan cone " + sigma.to_string() + " is not the image of a face of the dual orthant");
        FaceIndexSet face = FaceIndexSet(dual_face).complement(r);
        std::vector<IntVector> qgens;
        for (auto i : face.indices()) qgens.push_back(Q.column(i));
        out.push_back(RatCone::from_generators(Q.rows(), qgens));
    }
    return minimal_cones(out);
}

/// Q(γ) strictly convex and no generator of degree zero.
inline bool has_only_constants(const RingPresentation& R) {
    for (std::size_t i = 0; i < R.r; ++i)
        if (is_zero(R.degree(i))) return false;
    return RatCone::from_generators(R.k, R.degree_columns()).is_strictly_convex();
}

/// An F-bunch with nonempty ample cone for the same presentation, read off
/// a polytopal fan on the Gale images.
inline FBunch projectivize(const RingPresentation& R, const FaceCatalog& cat, std::size_t bound = 24) {
    if (!has_only_constants(R))
        throw PreconditionError("PreconditionFailed",
                                "projectivize needs a strictly convex weight cone and no zero degree");
    check_scan_bound(R, bound);
    GaleData g = gale_setup(R);
    std::vector<IntVector> prim;
    for (const auto& v : g.images) {
        if (is_zero(v)) throw PreconditionError("PreconditionFailed", "a Gale image vanishes");
        prim.push_back(primitive(v));
    }
    Fan fan;
    try {
        fan = polytopal_fan_with_rays(g.n, prim);
    } catch (const PreconditionError& e) {
        throw PreconditionError("PreconditionFailed", std::string("Gale images unsuitable: ") + e.what());
    }
    std::vector<RatCone> theta = bunch_from_fan(fan, R.degrees);
    std::vector<FaceIndexSet> rel = relevant_faces(R, cat, theta, bound);
    std::vector<RatCone> imgs;
    std::vector<FaceIndexSet> wit;
    for (auto f : rel) {
        const RatCone& c = cat.image(f);
        if (std::find(imgs.begin(), imgs.end(), c) == imgs.end()) {
            imgs.push_back(c);
            wit.push_back(f);
        }
    }
    FBunch out;
    for (std::size_t i = 0; i < imgs.size(); ++i) {
        const RatCone& c = imgs[i];
        bool minimal = std::none_of(imgs.begin(), imgs.end(), [&](const RatCone& d) { return !(d == c) && c.contains(d); });
        if (minimal) {
            out.cones.push_back(c);
            out.witnesses.push_back(wit[i]);
        }
    }
    return out;
}

/// A presentation together with a validated F-bunch and the derived face
/// data every invariant needs.
class BunchedRing {
public:
    BunchedRing(RingPresentation R, const std::vector<ConeSpec>& specs, const FBunchOptions& opt = {})
        : R_(std::move(R)), cat_(R_), opt_(opt) {
        bunch_ = validate_fbunch(R_, cat_, specs, opt_, &warnings_);
        rlv_ = relevant_faces(R_, cat_, bunch_.cones, opt_.max_generators);
        cov_ = covering_collection(rlv_);
    }

    const RingPresentation& presentation() const noexcept { return R_; }
    const FaceCatalog& catalog() const noexcept { return cat_; }
    const FBunch& bunch() const noexcept { return bunch_; }
    const std::vector<RatCone>& cones() const noexcept { return bunch_.cones; }
    const std::vector<FaceIndexSet>& rlv() const noexcept { return rlv_; }
    const std::vector<FaceIndexSet>& cov() const noexcept { return cov_; }
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }
    const FBunchOptions& options() const noexcept { return opt_; }

    const RatCone& image(FaceIndexSet f) const { return cat_.image(f); }

    bool is_relevant(FaceIndexSet f) const { return std::binary_search(rlv_.begin(), rlv_.end(), f); }

private:
    RingPresentation R_;
    FaceCatalog cat_;
    FBunchOptions opt_;
    std::vector<std::string> warnings_;
    FBunch bunch_;
    std::vector<FaceIndexSet> rlv_;
    std::vector<FaceIndexSet> cov_;
};

} // namespace bunchlab
