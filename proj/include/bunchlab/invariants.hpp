#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "bunchlab/bunched.hpp"

namespace bunchlab {

using DivisorClass = IntVector;

inline std::size_t dimension(const RingPresentation& R) {
    const std::size_t dr = R.dim_R();
    if (R.relations.size() > R.r || dr < R.k)
        throw ValidationError("NegativeDimension", "r - d - k is negative for this presentation");
    return dr - R.k;
}

struct PicardGroup {
    Sublattice lattice;
    LatticeIndex index;
};

/// Intersection of the lattices Q(lin(γ₀) ∩ E) over the covering collection.
inline PicardGroup picard_group(const BunchedRing& X) {
    const RingPresentation& R = X.presentation();
    Sublattice pic = Sublattice::full(R.k);
    for (auto f : X.cov()) pic = lattice_intersection(pic, image_lattice(R.restricted(f)));
    LatticeIndex idx = lattice_index(pic, Sublattice::full(R.k));
    return {pic, idx};
}

/// Closed cones of divisor classes in K_Q. The ample classes form the
/// common interior of the bunch cones; it is represented by the closed
/// semiample cone plus a nonemptiness flag.
struct ConeProfile {
    RatCone effective;
    RatCone moving;
    RatCone semiample;
    bool ample_nonempty = false;
    // mori lives in the dual of Pic_Q; coordinates refer to the columns of mori_basis
    RatCone mori;
    IntMatrix mori_basis;
};

namespace detail {

// basis of Pic_Q used for Mori cone coordinates: the standard basis when
// the Picard lattice has full rank, else its Hermite basis
inline IntMatrix pic_coordinate_basis(const Sublattice& pic) {
    if (pic.rank() == pic.ambient_rank()) return IntMatrix::identity(pic.ambient_rank());
    return pic.basis();
}

inline RatCone restrict_to_span(const RatCone& tau, const IntMatrix& basis) {
    const std::size_t k = basis.rows();
    const std::size_t p = basis.cols();
    std::vector<IntVector> cols = basis.columns();
    RatCone cut = tau;
    if (p < k) {
        std::vector<IntVector> eqs = rational_nullspace(cols, k);
        cut = tau.intersect(RatCone::from_inequalities(k, {}, eqs));
    }
    std::vector<RatVector> coords;
    auto push = [&](const IntVector& g) {
        auto c = solve_in_span(cols, g);
        if (!c) throw Error("InternalError", "cone generator outside the Picard span");
        coords.push_back(std::move(*c));
    };
    for (const auto& g : cut.rays()) push(g);
    for (const auto& l : cut.lineality()) {
        push(l);
        IntVector m = l;
        for (auto& x : m) x = -x;
        push(m);
    }
    return RatCone::from_generators(p, coords);
}

} // namespace detail

/// Pic_Q ∩ τ written in the coordinates of the Mori basis.
inline RatCone picard_slice(const RatCone& tau, const Sublattice& pic) {
    return detail::restrict_to_span(tau, detail::pic_coordinate_basis(pic));
}

inline ConeProfile divisor_cones(const BunchedRing& X) {
    const RingPresentation& R = X.presentation();
    const std::size_t k = R.k;
    auto w = R.degree_columns();
    ConeProfile out;
    out.effective = RatCone::from_generators(k, w);

    std::vector<RatCone> drops;
    for (std::size_t i = 0; i < R.r; ++i) {
        std::vector<IntVector> rest;
        for (std::size_t j = 0; j < R.r; ++j)
            if (j != i) rest.push_back(w[j]);
        drops.push_back(RatCone::from_generators(k, rest));
    }
    out.moving = drops.empty() ? out.effective : intersect_all(k, drops);

    out.semiample = intersect_all(k, X.cones());
    IntVector p = out.semiample.relative_interior_point();
    out.ample_nonempty = std::all_of(X.cones().begin(), X.cones().end(),
                                     [&](const RatCone& t) { return t.in_relative_interior(p); });

    Sublattice pic = picard_group(X).lattice;
    out.mori_basis = detail::pic_coordinate_basis(pic);
    out.mori = RatCone::zero(out.mori_basis.cols());
    for (const auto& tau : X.cones()) out.mori = out.mori + detail::restrict_to_span(tau, out.mori_basis).dual();
    return out;
}

inline bool is_projective(const BunchedRing& X) {
    if (!has_only_constants(X.presentation()))
        throw UndeterminedError("Undetermined", "the projectivity criterion needs O(X) = K");
    return divisor_cones(X).ample_nonempty;
}

struct StratumReport {
    FaceIndexSet face;
    bool q_factorial = false;
    bool factorial = false;
    std::optional<bool> smooth;
};

inline std::vector<StratumReport> stratum_reports(const BunchedRing& X) {
    const RingPresentation& R = X.presentation();
    const bool smooth_known = R.xhat_smooth.value_or(false);
    std::vector<StratumReport> out;
    for (auto f : X.rlv()) {
        StratumReport s;
        s.face = f;
        s.q_factorial = X.image(f).spans_fulldim();
        s.factorial = is_surjective(R.restricted(f));
        if (smooth_known) s.smooth = s.factorial;
        out.push_back(s);
    }
    return out;
}

inline bool is_q_factorial(const BunchedRing& X) {
    return std::all_of(X.cones().begin(), X.cones().end(), [](const RatCone& t) { return t.spans_fulldim(); });
}

inline bool is_geometric_quotient(const BunchedRing& X) { return is_q_factorial(X); }

namespace detail {

inline void require_relevant(const BunchedRing& X, FaceIndexSet f, const DivisorClass& w) {
    if (w.size() != X.presentation().k) throw PreconditionError("DimensionMismatch", "divisor class has wrong length");
    if (!X.is_relevant(f)) throw PreconditionError("NotRelevant", "face " + f.to_string() + " is not relevant");
}

} // namespace detail

inline bool is_cartier(const BunchedRing& X, const DivisorClass& w, FaceIndexSet face) {
    detail::require_relevant(X, face, w);
    return image_lattice(X.presentation().restricted(face)).contains(w);
}

inline bool is_q_cartier(const BunchedRing& X, const DivisorClass& w, FaceIndexSet face) {
    detail::require_relevant(X, face, w);
    return in_rational_span(X.presentation().restricted(face).columns(), w);
}

inline DivisorClass canonical_class(const RingPresentation& R) {
    DivisorClass c(R.k, Integer(0));
    for (std::size_t j = 0; j < R.relations.size(); ++j) {
        IntVector d = R.relation_degree(j);
        for (std::size_t i = 0; i < R.k; ++i) c[i] += d[i];
    }
    for (std::size_t j = 0; j < R.r; ++j)
        for (std::size_t i = 0; i < R.k; ++i) c[i] -= R.degrees(i, j);
    return c;
}

inline DivisorClass anticanonical_class(const RingPresentation& R) {
    DivisorClass c = canonical_class(R);
    for (auto& x : c) x = -x;
    return c;
}

enum class GorensteinStatus { Gorenstein, QGorenstein, Neither };
enum class FanoStatus { Fano, QFano, NotFano };

inline std::string to_string(GorensteinStatus s) {
    switch (s) {
        case GorensteinStatus::Gorenstein: return "Gorenstein";
        case GorensteinStatus::QGorenstein: return "QGorenstein";
        default: return "Neither";
    }
}

inline std::string to_string(FanoStatus s) {
    switch (s) {
        case FanoStatus::Fano: return "Fano";
        case FanoStatus::QFano: return "QFano";
        default: return "NotFano";
    }
}

inline GorensteinStatus gorenstein_status(const BunchedRing& X) {
    const RingPresentation& R = X.presentation();
    DivisorClass a = anticanonical_class(R);
    bool q = std::all_of(X.cones().begin(), X.cones().end(), [&](const RatCone& t) {
        return std::all_of(t.equations().begin(), t.equations().end(), [&](const IntVector& e) { return dot(e, a) == 0; });
    });
    if (!q) return GorensteinStatus::Neither;
    bool cartier = std::all_of(X.rlv().begin(), X.rlv().end(),
                               [&](FaceIndexSet f) { return image_lattice(R.restricted(f)).contains(a); });
    return cartier ? GorensteinStatus::Gorenstein : GorensteinStatus::QGorenstein;
}

inline FanoStatus fano_status(const BunchedRing& X) {
    DivisorClass a = anticanonical_class(X.presentation());
    bool ample = std::all_of(X.cones().begin(), X.cones().end(), [&](const RatCone& t) { return t.in_relative_interior(a); });
    if (!ample) return FanoStatus::NotFano;
    return picard_group(X).lattice.contains(a) ? FanoStatus::Fano : FanoStatus::QFano;
}

// ---------------------------------------------------------------------------
// Intrinsic quadrics

struct QuadricReport {
    std::size_t form_rank = 0;
    bool full_rank = false;
    bool degree_symmetric = false;
    bool only_constants = false;
    bool xhat_smooth_asserted = false;
    std::size_t dim = 0;
    bool class_rank_bound = false;      // rank(K) ≤ dim + 3
    bool ring_dimension_bound = false;  // r − 1 ≤ 2·dim + 3
    RingPresentation presentation;
};

namespace detail {

inline std::pair<std::size_t, std::size_t> quadric_pair(const IntVector& e) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (long n = e[i].get_si(); n > 0; --n) idx.push_back(i);
    return {idx[0], idx[1]};
}

} // namespace detail

/// Structural checks for a single homogeneous quadric of full rank. Works on
/// the raw input so that degree asymmetry is reported before homogeneity.
inline QuadricReport quadric_checks(const PresentationInput& in) {
    if (in.relations.size() != 1) throw PreconditionError("NotAQuadric", "a quadric presentation has exactly one relation");
    const std::size_t r = in.degrees.size();
    const auto& terms = in.relations.front().terms;
    for (const auto& t : terms) {
        if (t.exponents.size() != r) throw ValidationError("DimensionMismatch", "exponent vector of wrong length");
        Integer total = 0;
        for (const auto& x : t.exponents) {
            if (x < 0) throw PreconditionError("NotAQuadric", "negative exponent");
            total += x;
        }
        if (total != 2) throw PreconditionError("NotAQuadric", "every term must have total degree two");
    }
    for (const auto& w : in.degrees)
        if (w.size() != in.class_rank) throw ValidationError("DimensionMismatch", "degree vector of wrong length");

    auto pair_degree = [&](std::pair<std::size_t, std::size_t> p) {
        IntVector d = in.degrees[p.first];
        for (std::size_t i = 0; i < d.size(); ++i) d[i] += in.degrees[p.second][i];
        return d;
    };
    // deg(q) is taken as the most frequent pair degree, earliest on ties
    std::vector<IntVector> pair_degrees;
    for (const auto& t : terms) pair_degrees.push_back(pair_degree(detail::quadric_pair(t.exponents)));
    IntVector dq = pair_degrees.front();
    std::ptrdiff_t best = 0;
    for (const auto& d : pair_degrees) {
        auto c = std::count(pair_degrees.begin(), pair_degrees.end(), d);
        if (c > best) {
            best = c;
            dq = d;
        }
    }
    for (const auto& t : terms) {
        auto p = detail::quadric_pair(t.exponents);
        if (pair_degree(p) != dq)
            throw ValidationError("DegreeAsymmetry(" + std::to_string(p.first + 1) + "," + std::to_string(p.second + 1) + ")",
                                  "w_i + w_j differs from deg(q)");
    }

    // twice the symmetric coefficient matrix
    std::vector<RatVector> form(r, RatVector(r, Rational(0)));
    for (const auto& t : terms) {
        auto [i, j] = detail::quadric_pair(t.exponents);
        if (i == j) {
            form[i][i] += 2 * t.coeff;
        } else {
            form[i][j] += t.coeff;
            form[j][i] += t.coeff;
        }
    }
    QuadricReport rep;
    rep.form_rank = reduced_row_echelon(form, r).pivots.size();
    rep.full_rank = rep.form_rank == r;
    if (!rep.full_rank)
        throw ValidationError("RankDeficient", "the quadric has rank " + std::to_string(rep.form_rank) + " < " + std::to_string(r));
    rep.degree_symmetric = true;

    PresentationInput adjusted = in;
    RingPresentation probe = validate_presentation(in);
    rep.only_constants = has_only_constants(probe);
    if (rep.only_constants) {
        adjusted.xhat_smooth = true;
        rep.xhat_smooth_asserted = true;
    }
    rep.presentation = validate_presentation(adjusted);
    rep.dim = dimension(rep.presentation);
    rep.class_rank_bound = rep.presentation.k <= rep.dim + 3;
    rep.ring_dimension_bound = r - 1 <= 2 * rep.dim + 3;
    return rep;
}

/// A constructed intrinsic quadric: the raw input, the bunch as given and
/// the validated bunched ring.
struct QuadricModel {
    PresentationInput input;
    std::vector<ConeSpec> bunch;
    QuadricReport checks;
    BunchedRing ring;
};

namespace detail {

inline Term pair_term(std::size_t r, std::size_t i, std::size_t j, long sign) {
    Term t;
    t.coeff = sign;
    t.exponents.assign(r, Integer(0));
    t.exponents[i] += 1;
    t.exponents[j] += 1;
    return t;
}

// Σ ±T_a T_b over the pairs, signs alternating in pair order
inline Relation paired_quadric(std::size_t r, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    Relation q;
    long sign = 1;
    for (auto [a, b] : pairs) {
        q.terms.push_back(pair_term(r, a, b, sign));
        sign = -sign;
    }
    return q;
}

inline QuadricModel finish_quadric(PresentationInput in, std::vector<ConeSpec> bunch, const FBunchOptions& opt) {
    QuadricReport rep = quadric_checks(in);
    in.xhat_smooth = rep.presentation.xhat_smooth;
    BunchedRing ring(rep.presentation, bunch, opt);
    return QuadricModel{std::move(in), std::move(bunch), std::move(rep), std::move(ring)};
}

} // namespace detail

/// Rank-one intrinsic quadric with weights ws (strictly increasing) and
/// multiplicities mus, Φ = {Q≥0}.
inline QuadricModel build_rank1_quadric(const std::vector<long>& ws, const std::vector<long>& mus) {
    if (ws.size() != mus.size() || ws.empty())
        throw PreconditionError("DimensionMismatch", "weights and multiplicities must be nonempty lists of equal length");
    long total = 0;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (ws[i] <= 0 || (i > 0 && ws[i] <= ws[i - 1]))
            throw PreconditionError("SymmetryViolation", "weights must be strictly increasing positive integers");
        if (mus[i] <= 0) throw PreconditionError("MultiplicityOutOfRange", "multiplicities must be positive");
        total += mus[i];
    }
    if (total < 5) throw PreconditionError("TooFewVariables", "a full intrinsic quadric needs at least five variables");
    const std::size_t n = ws.size();
    for (std::size_t i = 0; i < n; ++i)
        if (ws[i] + ws[n - 1 - i] != ws[0] + ws[n - 1] || mus[i] != mus[n - 1 - i])
            throw PreconditionError("SymmetryViolation", "weights and multiplicities must be symmetric about their center");

    PresentationInput in;
    in.class_rank = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (long m = 0; m < mus[i]; ++m) in.degrees.push_back(IntVector{Integer(ws[i])});
    const std::size_t r = in.degrees.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < r / 2; ++j) pairs.emplace_back(j, r - 1 - j);
    if (r % 2) pairs.emplace_back(r / 2, r / 2);
    in.relations = {detail::paired_quadric(r, pairs)};
    std::vector<ConeSpec> bunch{ConeSpec{std::vector<IntVector>{IntVector{Integer(1)}}, std::nullopt}};
    return detail::finish_quadric(std::move(in), std::move(bunch), {});
}

enum class QuadricSide { Left, Right };

/// Rank-two intrinsic quadrics. Left: x = (1,0) and y = (0,1), each mu1
/// times, deg q = (1,1). Right: x = (1,0) mu1 times, y = (0,1) mu2 times,
/// x' = (−1,2) mu1 times, deg q = (0,2). In both cases Φ = {cone(x,y)}.
inline QuadricModel build_rank2_quadric(QuadricSide side, long mu1, long mu2 = 0) {
    PresentationInput in;
    in.class_rank = 2;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    FBunchOptions opt;
    if (side == QuadricSide::Left) {
        if (mu1 < 3) throw PreconditionError("MultiplicityOutOfRange", "the left family needs mu >= 3");
        const auto m = static_cast<std::size_t>(mu1);
        for (std::size_t a = 0; a < m; ++a) in.degrees.push_back(make_int_vector({1, 0}));
        for (std::size_t a = 0; a < m; ++a) in.degrees.push_back(make_int_vector({0, 1}));
        for (std::size_t a = 0; a < m; ++a) pairs.emplace_back(a, m + a);
    } else {
        if (mu1 < 1 || mu2 < 1) throw PreconditionError("MultiplicityOutOfRange", "the right family needs mu1, mu2 >= 1");
        if (2 * mu1 + mu2 < 5) throw PreconditionError("TooFewVariables", "the right family needs 2 mu1 + mu2 >= 5");
        const auto m1 = static_cast<std::size_t>(mu1);
        const auto m2 = static_cast<std::size_t>(mu2);
        for (std::size_t a = 0; a < m1; ++a) in.degrees.push_back(make_int_vector({1, 0}));
        for (std::size_t a = 0; a < m2; ++a) in.degrees.push_back(make_int_vector({0, 1}));
        for (std::size_t a = 0; a < m1; ++a) in.degrees.push_back(make_int_vector({-1, 2}));
        for (std::size_t a = 0; a < m1; ++a) pairs.emplace_back(a, m1 + m2 + a);
        for (std::size_t b = 0; b < m2 / 2; ++b) pairs.emplace_back(m1 + b, m1 + m2 - 1 - b);
        if (m2 % 2) pairs.emplace_back(m1 + m2 / 2, m1 + m2 / 2);
        // with a single x' the remaining weights miss the interior of cone(x,y)
        opt.facet_condition_as_warning = true;
    }
    in.relations = {detail::paired_quadric(in.degrees.size(), pairs)};
    std::vector<ConeSpec> bunch{
        ConeSpec{std::vector<IntVector>{make_int_vector({1, 0}), make_int_vector({0, 1})}, std::nullopt}};
    return detail::finish_quadric(std::move(in), std::move(bunch), opt);
}

} // namespace bunchlab
