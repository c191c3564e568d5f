#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bunchlab/cones.hpp"

namespace bunchlab {

/// A fan in Z^n, stored by its maximal cones in canonical order.
class Fan {
public:
    Fan() = default;

    std::size_t ambient_rank() const noexcept { return n_; }
    const std::vector<RatCone>& maximal_cones() const noexcept { return cones_; }

    friend bool operator==(const Fan& a, const Fan& b) { return a.n_ == b.n_ && a.cones_ == b.cones_; }

    friend Fan verify_fan(std::size_t n, std::vector<RatCone> cones);

private:
    std::size_t n_ = 0;
    std::vector<RatCone> cones_;
};

namespace detail {

inline bool ray_order(const RatCone& a, const RatCone& b) { return a.rays() < b.rays(); }

} // namespace detail

/// Validates that the cones form a fan and drops those that are faces of
/// others. Errors name the offending pair with 1-based positions in the input.
inline Fan verify_fan(std::size_t n, std::vector<RatCone> cones) {
    for (std::size_t i = 0; i < cones.size(); ++i) {
        if (cones[i].ambient_dim() != n)
            throw PreconditionError("DimensionMismatch", "cone " + std::to_string(i + 1) + " has the wrong ambient rank");
        if (!cones[i].is_strictly_convex())
            throw PreconditionError("NotStrictlyConvex", "cone " + std::to_string(i + 1) + " is not strictly convex");
    }
    for (std::size_t i = 0; i < cones.size(); ++i)
        for (std::size_t j = i + 1; j < cones.size(); ++j) {
            RatCone meet = cones[i].intersect(cones[j]);
            if (face_relation(meet, cones[i]) != FaceRelation::Face ||
                face_relation(meet, cones[j]) != FaceRelation::Face) {
                std::string pair = std::to_string(i + 1) + "," + std::to_string(j + 1);
                throw ValidationError("NotAFan(" + pair + ")", "cones " + cones[i].to_string() + " and " +
                                                                   cones[j].to_string() +
                                                                   " do not intersect in a common face");
            }
        }
    // now any cone contained in another is a face of it
    std::vector<RatCone> maximal;
    for (std::size_t i = 0; i < cones.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < cones.size() && !dominated; ++j) {
            if (i == j) continue;
            if (cones[j].contains(cones[i]) && !(cones[j] == cones[i] && j > i)) dominated = true;
        }
        if (!dominated) maximal.push_back(cones[i]);
    }
    std::sort(maximal.begin(), maximal.end(), detail::ray_order);
    Fan f;
    f.n_ = n;
    f.cones_ = std::move(maximal);
    return f;
}

/// All rays of the fan as primitive vectors, sorted.
inline std::vector<IntVector> rays(const Fan& f) {
    std::vector<IntVector> out;
    for (const auto& c : f.maximal_cones()) out.insert(out.end(), c.rays().begin(), c.rays().end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline bool in_support(const Fan& f, const IntVector& v) {
    return std::any_of(f.maximal_cones().begin(), f.maximal_cones().end(),
                       [&](const RatCone& c) { return c.contains(v); });
}

/// Inserts the ray through v: every maximal cone containing v is replaced by
/// the joins of v with its facets that miss v.
inline Fan stellar_subdivide(const Fan& f, const IntVector& v) {
    if (v.size() != f.ambient_rank()) throw PreconditionError("DimensionMismatch", "vector length differs from fan rank");
    if (is_zero(v)) throw PreconditionError("ZeroVector", "cannot subdivide at the zero vector");
    IntVector p = primitive(v);
    if (!in_support(f, p)) throw PreconditionError("RayOutsideSupport", "ray " + to_string(p) + " is outside the support");
    auto existing = rays(f);
    if (std::binary_search(existing.begin(), existing.end(), p)) return f;

    std::vector<RatCone> out;
    for (const auto& c : f.maximal_cones()) {
        if (!c.contains(p)) {
            out.push_back(c);
            continue;
        }
        for (const auto& facet_normal : c.facets()) {
            if (dot(facet_normal, p) == 0) continue;
            std::vector<IntVector> gens{p};
            for (const auto& r : c.rays())
                if (dot(facet_normal, r) == 0) gens.push_back(r);
            out.push_back(RatCone::from_generators(f.ambient_rank(), gens));
        }
    }
    return verify_fan(f.ambient_rank(), std::move(out));
}

/// A complete fan whose rays are exactly the rays through the given vectors:
/// the face fan of their convex hull, refined by stellar subdivision at
/// every vector that is not a vertex.
inline Fan polytopal_fan_with_rays(std::size_t n, const std::vector<IntVector>& vs) {
    for (const auto& v : vs)
        if (v.size() != n) throw PreconditionError("DimensionMismatch", "vector length differs from rank");
    RatCone spanned = RatCone::from_generators(n, vs);
    if (spanned.lineality_dim() != n)
        throw PreconditionError("DoNotSpanCone", "vectors do not positively span the ambient space");
    if (n > 0 && !is_surjective(IntMatrix::from_columns(vs, n)))
        throw PreconditionError("DoNotGenerateLattice", "vectors do not generate the lattice");
    if (n == 0) return verify_fan(0, {RatCone::zero(0)});

    std::vector<IntVector> lifted;
    for (const auto& v : vs) {
        IntVector h = v;
        h.push_back(1);
        lifted.push_back(std::move(h));
    }
    RatCone hull = RatCone::from_generators(n + 1, lifted);
    std::vector<RatCone> cones;
    for (const auto& f : hull.facets()) {
        std::vector<IntVector> gens;
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (dot(f, lifted[i]) == 0) gens.push_back(vs[i]);
        cones.push_back(RatCone::from_generators(n, gens));
    }
    Fan fan = verify_fan(n, std::move(cones));
    for (const auto& v : vs) fan = stellar_subdivide(fan, v);
    return fan;
}

/// Boundary pairing: a pure full-dimensional fan is complete iff each facet
/// of a maximal cone lies in exactly two maximal cones.
inline bool is_complete(const Fan& f) {
    const std::size_t n = f.ambient_rank();
    if (f.maximal_cones().empty()) return false;
    for (const auto& c : f.maximal_cones())
        if (c.dim() != n) return false;
    if (n == 0) return true;
    std::map<std::vector<IntVector>, int> incidence;
    for (const auto& c : f.maximal_cones())
        for (const auto& facet : c.facet_cones()) ++incidence[facet.rays()];
    return std::all_of(incidence.begin(), incidence.end(), [](const auto& kv) { return kv.second == 2; });
}

// ---------------------------------------------------------------------------
// Text format: first line the ambient rank, then one maximal cone per line
// as space separated "[a,b,c]" ray tokens ("0" for the zero cone).

inline std::string export_fan(const Fan& f) {
    std::vector<std::string> lines;
    for (const auto& c : f.maximal_cones()) {
        if (c.rays().empty()) {
            lines.push_back("0");
            continue;
        }
        std::string line;
        for (std::size_t i = 0; i < c.rays().size(); ++i) {
            if (i) line += ' ';
            line += '[';
            const auto& r = c.rays()[i];
            for (std::size_t j = 0; j < r.size(); ++j) {
                if (j) line += ',';
                line += r[j].get_str();
            }
            line += ']';
        }
        lines.push_back(std::move(line));
    }
    std::ostringstream os;
    os << f.ambient_rank() << '\n';
    for (const auto& l : lines) os << l << '\n';
    return os.str();
}

inline Fan parse_fan(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto fail = [](const std::string& why) { return ParseError("ParseError", "fan text: " + why); };
    if (!std::getline(in, line)) throw fail("missing rank line");
    std::size_t n = 0;
    try {
        std::size_t used = 0;
        long value = std::stol(line, &used);
        if (value < 0 || line.find_first_not_of(" \t\r", used) != std::string::npos) throw fail("bad rank line");
        n = static_cast<std::size_t>(value);
    } catch (const std::logic_error&) {
        throw fail("bad rank line");
    }
    std::vector<RatCone> cones;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string tok;
        std::vector<IntVector> gens;
        bool zero = false;
        while (ls >> tok) {
            if (tok == "0") {
                zero = true;
                continue;
            }
            if (tok.size() < 2 || tok.front() != '[' || tok.back() != ']') throw fail("bad ray token " + tok);
            IntVector r;
            std::istringstream ts(tok.substr(1, tok.size() - 2));
            std::string part;
            while (std::getline(ts, part, ',')) {
                Integer x;
                if (x.set_str(part, 10) != 0) throw fail("bad integer " + part);
                r.push_back(x);
            }
            if (r.size() != n) throw fail("ray of wrong length");
            gens.push_back(std::move(r));
        }
        if (zero && !gens.empty()) throw fail("zero cone token mixed with rays");
        cones.push_back(RatCone::from_generators(n, gens));
    }
    return verify_fan(n, std::move(cones));
}

} // namespace bunchlab
