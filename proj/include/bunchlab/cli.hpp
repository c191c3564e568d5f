#pragma once

// Input documents, reports and the command implementations behind the
// bunchlab executable. Every command returns its exit code and output text
// so the same code paths serve the binary and in-process tests.

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bunchlab/invariants.hpp"

namespace bunchlab::cli {

using Json = nlohmann::ordered_json;

inline constexpr int exit_ok = 0;
inline constexpr int exit_io = 1;
inline constexpr int exit_invalid = 2;
inline constexpr int exit_classification = 3;

struct DocumentFlags {
    std::optional<bool> xhat_smooth;
    bool skip_maximality_check = false;
};

struct InputDocument {
    std::string description;
    PresentationInput presentation;
    std::vector<ConeSpec> bunch;
    DocumentFlags flags;
};

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& why) { throw ParseError("ParseError", why); }

inline void check_keys(const Json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!obj.is_object()) parse_fail(where + " must be an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || it.key() == a;
        if (!ok) throw ParseError("UnknownKey(" + it.key() + ")", "unknown key \"" + it.key() + "\" in " + where);
    }
}

inline Integer parse_integer(const Json& v, const std::string& where) {
    if (v.is_number_integer()) return Integer(v.get<long>());
    if (v.is_string()) {
        Integer x;
        const std::string s = v.get<std::string>();
        if (s.empty() || x.set_str(s, 10) != 0) parse_fail(where + ": \"" + s + "\" is not an integer");
        return x;
    }
    parse_fail(where + ": expected an integer");
}

inline IntVector parse_int_list(const Json& v, const std::string& where) {
    if (!v.is_array()) parse_fail(where + " must be a list of integers");
    IntVector out;
    for (const auto& x : v) out.push_back(parse_integer(x, where));
    return out;
}

inline std::size_t parse_count(const Json& v, const std::string& where) {
    if (!v.is_number_unsigned()) parse_fail(where + " must be a nonnegative integer");
    return v.get<std::size_t>();
}

inline Rational parse_rational(const Json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (!v.is_string()) parse_fail(where + ": coefficients are integers or \"p/q\" strings");
    Rational q;
    const std::string s = v.get<std::string>();
    if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) parse_fail(where + ": \"" + s + "\" is not a rational number");
    q.canonicalize();
    return q;
}

inline FaceIndexSet parse_face(const Json& v, std::size_t r, const std::string& where) {
    if (!v.is_array()) parse_fail(where + " must be a list of 1-based generator indices");
    std::vector<std::size_t> idx;
    for (const auto& x : v) {
        if (!x.is_number_unsigned()) parse_fail(where + ": indices are positive integers");
        auto i = x.get<std::size_t>();
        if (i == 0 || i > r) throw ValidationError("IndexOutOfRange", where + ": index " + std::to_string(i) + " out of range");
        idx.push_back(i - 1);
    }
    return FaceIndexSet::from_indices(idx);
}

} // namespace detail

inline InputDocument parse_document(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        detail::parse_fail(std::string("malformed JSON: ") + e.what());
    }
    detail::check_keys(doc, {"description", "class_rank", "degrees", "relations", "bunch", "flags", "fface_table"}, "document");
    for (const char* req : {"class_rank", "degrees", "bunch"})
        if (!doc.contains(req)) detail::parse_fail(std::string("missing required key \"") + req + "\"");

    InputDocument out;
    if (doc.contains("description")) {
        if (!doc["description"].is_string()) detail::parse_fail("description must be a string");
        out.description = doc["description"].get<std::string>();
    }
    PresentationInput& in = out.presentation;
    in.class_rank = detail::parse_count(doc["class_rank"], "class_rank");

    if (!doc["degrees"].is_array()) detail::parse_fail("degrees must be a list");
    for (const auto& d : doc["degrees"]) {
        if (d.is_object()) {
            detail::check_keys(d, {"degree", "multiplicity"}, "degree entry");
            if (!d.contains("degree")) detail::parse_fail("degree entry needs \"degree\"");
            IntVector w = detail::parse_int_list(d["degree"], "degree");
            std::size_t m = d.contains("multiplicity") ? detail::parse_count(d["multiplicity"], "multiplicity") : 1;
            if (m == 0) detail::parse_fail("multiplicity must be positive");
            for (std::size_t i = 0; i < m; ++i) in.degrees.push_back(w);
        } else {
            in.degrees.push_back(detail::parse_int_list(d, "degree"));
        }
    }
    const std::size_t r = in.degrees.size();

    if (doc.contains("relations")) {
        if (!doc["relations"].is_array()) detail::parse_fail("relations must be a list");
        for (const auto& rel : doc["relations"]) {
            detail::check_keys(rel, {"terms"}, "relation");
            if (!rel.contains("terms") || !rel["terms"].is_array()) detail::parse_fail("relation needs a \"terms\" list");
            Relation g;
            for (const auto& t : rel["terms"]) {
                detail::check_keys(t, {"coeff", "exponents"}, "term");
                if (!t.contains("coeff") || !t.contains("exponents")) detail::parse_fail("term needs coeff and exponents");
                g.terms.push_back(Term{detail::parse_rational(t["coeff"], "coeff"), detail::parse_int_list(t["exponents"], "exponents")});
            }
            in.relations.push_back(std::move(g));
        }
    }

    if (!doc["bunch"].is_array()) detail::parse_fail("bunch must be a list of cones");
    for (const auto& c : doc["bunch"]) {
        detail::check_keys(c, {"generators", "face"}, "bunch cone");
        ConeSpec s;
        if (c.contains("generators")) {
            if (!c["generators"].is_array()) detail::parse_fail("generators must be a list of vectors");
            std::vector<IntVector> gens;
            for (const auto& g : c["generators"]) gens.push_back(detail::parse_int_list(g, "generator"));
            s.generators = std::move(gens);
        }
        if (c.contains("face")) s.face = detail::parse_face(c["face"], r, "bunch face");
        out.bunch.push_back(std::move(s));
    }

    if (doc.contains("flags")) {
        const Json& f = doc["flags"];
        detail::check_keys(f, {"xhat_smooth", "skip_maximality_check"}, "flags");
        if (f.contains("xhat_smooth")) {
            if (!f["xhat_smooth"].is_boolean()) detail::parse_fail("xhat_smooth must be a boolean");
            out.flags.xhat_smooth = f["xhat_smooth"].get<bool>();
        }
        if (f.contains("skip_maximality_check")) {
            if (!f["skip_maximality_check"].is_boolean()) detail::parse_fail("skip_maximality_check must be a boolean");
            out.flags.skip_maximality_check = f["skip_maximality_check"].get<bool>();
        }
    }
    in.xhat_smooth = out.flags.xhat_smooth;

    if (doc.contains("fface_table")) {
        if (!doc["fface_table"].is_array()) detail::parse_fail("fface_table must be a list of index lists");
        std::vector<FaceIndexSet> table;
        for (const auto& f : doc["fface_table"]) table.push_back(detail::parse_face(f, r, "fface_table entry"));
        in.fface_table = std::move(table);
    }
    return out;
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("IOError", "cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// ---------------------------------------------------------------------------
// Serialization helpers

inline Json to_json(const Integer& x) {
    if (x.fits_slong_p()) return Json(x.get_si());
    return Json(x.get_str());
}

inline Json to_json(const IntVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

inline Json to_json(const std::vector<IntVector>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    return a;
}

inline Json to_json(const RatCone& c) {
    Json o;
    o["dim"] = c.dim();
    o["rays"] = to_json(c.rays());
    o["lineality"] = to_json(c.lineality());
    return o;
}

inline Json face_json(FaceIndexSet f) {
    Json a = Json::array();
    for (auto i : f.indices()) a.push_back(i + 1);
    return a;
}

inline std::string rational_string(const Rational& q) { return q.get_str(); }

inline Json document_json(const InputDocument& d) {
    Json o;
    if (!d.description.empty()) o["description"] = d.description;
    o["class_rank"] = d.presentation.class_rank;
    Json degs = Json::array();
    for (const auto& w : d.presentation.degrees) degs.push_back(to_json(w));
    o["degrees"] = degs;
    Json rels = Json::array();
    for (const auto& g : d.presentation.relations) {
        Json terms = Json::array();
        for (const auto& t : g.terms) {
            Json jt;
            jt["coeff"] = rational_string(t.coeff);
            jt["exponents"] = to_json(t.exponents);
            terms.push_back(jt);
        }
        Json jr;
        jr["terms"] = terms;
        rels.push_back(jr);
    }
    o["relations"] = rels;
    Json bunch = Json::array();
    for (const auto& s : d.bunch) {
        Json c;
        if (s.generators) c["generators"] = to_json(*s.generators);
        if (s.face) c["face"] = face_json(*s.face);
        bunch.push_back(c);
    }
    o["bunch"] = bunch;
    Json flags = Json::object();
    if (d.flags.xhat_smooth) flags["xhat_smooth"] = *d.flags.xhat_smooth;
    if (d.flags.skip_maximality_check) flags["skip_maximality_check"] = true;
    if (!flags.empty()) o["flags"] = flags;
    if (d.presentation.fface_table) {
        Json t = Json::array();
        for (auto f : *d.presentation.fface_table) t.push_back(face_json(f));
        o["fface_table"] = t;
    }
    return o;
}

// ---------------------------------------------------------------------------
// Analysis

struct CommandOptions {
    bool json = false;
    std::size_t max_generators = 24;
    bool skip_maximality = false;
};

inline FBunchOptions bunch_options(const InputDocument& d, const CommandOptions& opt) {
    FBunchOptions o;
    o.max_generators = opt.max_generators;
    o.skip_maximality = opt.skip_maximality || d.flags.skip_maximality_check;
    return o;
}

struct Analysis {
    std::string description;
    std::size_t r = 0, k = 0, relations = 0;
    std::vector<IntVector> degrees;
    std::vector<std::string> warnings;
    std::size_t dim = 0;
    bool only_constants = false;
    std::vector<FaceIndexSet> rlv, cov;
    PicardGroup pic;
    ConeProfile cones;
    std::vector<StratumReport> strata;
    DivisorClass canonical;
    GorensteinStatus gorenstein = GorensteinStatus::Neither;
    FanoStatus fano = FanoStatus::NotFano;
    bool q_factorial = false;
    std::optional<bool> projective;
    Fan fan;
};

inline Analysis analyze_ring(const BunchedRing& X, const std::string& description) {
    const RingPresentation& R = X.presentation();
    Analysis a;
    a.description = description;
    a.r = R.r;
    a.k = R.k;
    a.relations = R.relations.size();
    a.degrees = R.degree_columns();
    a.warnings = R.warnings;
    a.warnings.insert(a.warnings.end(), X.warnings().begin(), X.warnings().end());
    a.dim = dimension(R);
    a.only_constants = has_only_constants(R);
    a.rlv = X.rlv();
    a.cov = X.cov();
    a.pic = picard_group(X);
    a.cones = divisor_cones(X);
    a.strata = stratum_reports(X);
    a.canonical = canonical_class(R);
    a.gorenstein = gorenstein_status(X);
    a.fano = fano_status(X);
    a.q_factorial = is_q_factorial(X);
    if (a.only_constants) a.projective = a.cones.ample_nonempty;
    a.fan = minimal_ambient_fan(R, gale_setup(R), X.cov());
    return a;
}

inline Json fan_json(const Fan& f) {
    Json o;
    o["ambient_rank"] = f.ambient_rank();
    Json cones = Json::array();
    for (const auto& c : f.maximal_cones()) cones.push_back(to_json(c.rays()));
    o["maximal_cones"] = cones;
    return o;
}

inline Json analysis_json(const Analysis& a) {
    Json o;
    o["schema"] = 1;
    o["description"] = a.description;
    Json p;
    p["generators"] = a.r;
    p["class_rank"] = a.k;
    p["relations"] = a.relations;
    p["degrees"] = to_json(a.degrees);
    o["presentation"] = p;
    Json w = Json::array();
    for (const auto& s : a.warnings) w.push_back(s);
    o["warnings"] = w;
    o["assumptions"] = Json::array({"X is assumed A2-maximal; this is not verified"});
    o["dimension"] = a.dim;
    o["only_constants"] = a.only_constants;
    Json rl = Json::array();
    for (auto f : a.rlv) rl.push_back(face_json(f));
    o["relevant_faces"] = rl;
    Json cv = Json::array();
    for (auto f : a.cov) cv.push_back(face_json(f));
    o["covering_collection"] = cv;
    Json pic;
    pic["basis"] = to_json(a.pic.lattice.basis().columns());
    pic["index"] = a.pic.index.to_string();
    o["picard"] = pic;
    Json cones;
    cones["effective"] = to_json(a.cones.effective);
    cones["moving"] = to_json(a.cones.moving);
    cones["semiample"] = to_json(a.cones.semiample);
    cones["ample_nonempty"] = a.cones.ample_nonempty;
    Json mori = to_json(a.cones.mori);
    mori["coordinate_basis"] = to_json(a.cones.mori_basis.columns());
    cones["mori"] = mori;
    o["cones"] = cones;
    Json strata = Json::array();
    for (const auto& s : a.strata) {
        Json js;
        js["face"] = face_json(s.face);
        js["q_factorial"] = s.q_factorial;
        js["factorial"] = s.factorial;
        js["smooth"] = s.smooth ? Json(*s.smooth) : Json(nullptr);
        strata.push_back(js);
    }
    o["strata"] = strata;
    o["canonical_class"] = to_json(a.canonical);
    o["gorenstein"] = to_string(a.gorenstein);
    o["fano"] = to_string(a.fano);
    o["q_factorial"] = a.q_factorial;
    o["projective"] = a.projective ? Json(*a.projective) : Json("undetermined");
    o["ambient_fan"] = fan_json(a.fan);
    return o;
}

namespace detail {

inline std::string vec_text(const IntVector& v) { return to_string(v); }

inline std::string face_text(FaceIndexSet f) { return f.to_string(); }

// rows of cells rendered with left-aligned padded columns
inline std::string table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c) width.push_back(0);
            width[c] = std::max(width[c], row[c].size());
        }
    std::ostringstream os;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        os << "  " << line << '\n';
    }
    return os.str();
}

inline std::string cone_text(const std::string& name, const RatCone& c) {
    std::ostringstream os;
    os << name << " (dim " << c.dim() << ")\n";
    for (const auto& v : c.rays()) os << "    ray  " << to_string(v) << '\n';
    for (const auto& v : c.lineality()) os << "    line " << to_string(v) << '\n';
    return os.str();
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

} // namespace detail

inline std::string analysis_text(const Analysis& a) {
    std::ostringstream os;
    if (!a.description.empty()) os << a.description << "\n\n";
    os << "Presentation\n"
       << detail::table({{"generators", std::to_string(a.r)},
                         {"class rank", std::to_string(a.k)},
                         {"relations", std::to_string(a.relations)},
                         {"dimension", std::to_string(a.dim)},
                         {"O(X) = K", detail::yes_no(a.only_constants)}});
    std::vector<std::vector<std::string>> deg{{"i", "w_i"}};
    for (std::size_t i = 0; i < a.degrees.size(); ++i) deg.push_back({std::to_string(i + 1), to_string(a.degrees[i])});
    os << "\nDegrees\n" << detail::table(deg);
    if (!a.warnings.empty()) {
        os << "\nWarnings\n";
        for (const auto& w : a.warnings) os << "  " << w << '\n';
    }
    os << "\nAssumption: X is A2-maximal (not verified)\n";
    os << "\nRelevant faces (" << a.rlv.size() << ")\n  ";
    for (std::size_t i = 0; i < a.rlv.size(); ++i) os << (i ? " " : "") << a.rlv[i].to_string();
    os << "\nCovering collection (" << a.cov.size() << ")\n  ";
    for (std::size_t i = 0; i < a.cov.size(); ++i) os << (i ? " " : "") << a.cov[i].to_string();
    os << "\n\nPicard group (index " << a.pic.index.to_string() << ")\n";
    for (const auto& b : a.pic.lattice.basis().columns()) os << "  " << to_string(b) << '\n';
    os << "\nDivisor cones\n"
       << "  " << detail::cone_text("effective", a.cones.effective) << "  " << detail::cone_text("moving", a.cones.moving)
       << "  " << detail::cone_text("semiample", a.cones.semiample) << "  ample cone nonempty: "
       << detail::yes_no(a.cones.ample_nonempty) << '\n'
       << "  " << detail::cone_text("mori", a.cones.mori);
    std::vector<std::vector<std::string>> st{{"face", "Q-factorial", "factorial", "smooth"}};
    for (const auto& s : a.strata)
        st.push_back({s.face.to_string(), detail::yes_no(s.q_factorial), detail::yes_no(s.factorial),
                      s.smooth ? detail::yes_no(*s.smooth) : std::string("unknown")});
    os << "\nStrata\n" << detail::table(st);
    os << "\nVerdicts\n"
       << detail::table({{"canonical class", to_string(a.canonical)},
                         {"Gorenstein", to_string(a.gorenstein)},
                         {"Fano", to_string(a.fano)},
                         {"Q-factorial", detail::yes_no(a.q_factorial)},
                         {"projective", a.projective ? detail::yes_no(*a.projective) : std::string("undetermined")}});
    os << "\nMinimal ambient fan\n" << export_fan(a.fan);
    return os.str();
}

// ---------------------------------------------------------------------------
// Commands

struct CommandResult {
    int exit_code = exit_ok;
    std::string out;
    std::string err;
};

namespace detail {

inline CommandResult failure(int code, const Error& e) {
    return {code, "", "error: " + e.code() + ": " + e.what() + "\n"};
}

// runs body, mapping library errors onto exit codes
template <class F>
CommandResult guarded(F&& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        return failure(exit_io, e);
    } catch (const Error& e) {
        return failure(exit_invalid, e);
    }
}

inline InputDocument load(const std::string& path) { return parse_document(read_file(path)); }

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace detail

inline CommandResult cmd_validate(const std::string& path, const CommandOptions& opt = {}) {
    return detail::guarded([&] {
        InputDocument d = detail::load(path);
        BunchedRing X(validate_presentation(d.presentation), d.bunch, bunch_options(d, opt));
        std::string out = "valid: " + std::to_string(X.presentation().r) + " generators, " +
                          std::to_string(X.cones().size()) + " bunch cones\n";
        for (const auto& w : X.presentation().warnings) out += "warning: " + w + "\n";
        for (const auto& w : X.warnings()) out += "warning: " + w + "\n";
        return CommandResult{exit_ok, out, ""};
    });
}

inline CommandResult cmd_analyze(const std::string& path, const CommandOptions& opt = {}) {
    return detail::guarded([&] {
        InputDocument d = detail::load(path);
        BunchedRing X(validate_presentation(d.presentation), d.bunch, bunch_options(d, opt));
        Analysis a = analyze_ring(X, d.description);
        return CommandResult{exit_ok, opt.json ? detail::dump(analysis_json(a)) : analysis_text(a), ""};
    });
}

/// The ambient fan only needs the covering collection, so the facet
/// condition is downgraded to a warning here.
inline CommandResult cmd_fan(const std::string& path, const CommandOptions& opt = {}) {
    return detail::guarded([&] {
        InputDocument d = detail::load(path);
        FBunchOptions bo = bunch_options(d, opt);
        bo.facet_condition_as_warning = true;
        BunchedRing X(validate_presentation(d.presentation), d.bunch, bo);
        Fan f = minimal_ambient_fan(X.presentation(), gale_setup(X.presentation()), X.cov());
        std::string err;
        for (const auto& w : X.warnings()) err += "warning: " + w + "\n";
        return CommandResult{exit_ok, export_fan(f), err};
    });
}

inline CommandResult cmd_projectivize(const std::string& path, const CommandOptions& opt = {}) {
    return detail::guarded([&] {
        InputDocument d = detail::load(path);
        RingPresentation R = validate_presentation(d.presentation);
        FaceCatalog cat(R);
        FBunch b = projectivize(R, cat, opt.max_generators);
        InputDocument out = d;
        out.bunch.clear();
        for (const auto& c : b.cones) out.bunch.push_back(ConeSpec{c.rays(), std::nullopt});
        return CommandResult{exit_ok, detail::dump(document_json(out)), ""};
    });
}

struct QuadricRequest {
    enum class Kind { Rank1, Rank2 } kind = Kind::Rank1;
    std::vector<long> weights;
    std::vector<long> multiplicities;
    QuadricSide side = QuadricSide::Left;
    long mu1 = 0;
    long mu2 = 0;
};

struct ClaimCheck {
    std::string claim;
    std::string expected;
    std::string observed;
    bool ok = false;
};

/// The classification claims for a constructed quadric, recomputed from
/// the analysis of its bunched ring.
inline std::vector<ClaimCheck> quadric_claims(const QuadricRequest& q, const Analysis& a) {
    std::vector<ClaimCheck> out;
    auto add = [&](std::string claim, std::string expected, std::string observed) {
        bool ok = expected == observed;
        out.push_back({std::move(claim), std::move(expected), std::move(observed), ok});
    };
    auto proj = a.projective ? detail::yes_no(*a.projective) : std::string("undetermined");
    if (q.kind == QuadricRequest::Kind::Rank1) {
        long total = 0;
        for (long m : q.multiplicities) total += m;
        add("dimension", std::to_string(total - 2), std::to_string(a.dim));
        add("Q-factorial", "yes", detail::yes_no(a.q_factorial));
        add("projective", "yes", proj);
        add("Q-Fano", "yes", detail::yes_no(a.fano != FanoStatus::NotFano));
    } else {
        const bool left = q.side == QuadricSide::Left;
        long expected_dim = left ? 2 * q.mu1 - 3 : 2 * q.mu1 + q.mu2 - 3;
        bool smooth = std::all_of(a.strata.begin(), a.strata.end(), [](const StratumReport& s) { return s.smooth == true; });
        add("dimension", std::to_string(expected_dim), std::to_string(a.dim));
        add("smooth", "yes", detail::yes_no(smooth));
        add("projective", "yes", proj);
        add("Fano", left ? "yes" : "no", detail::yes_no(a.fano == FanoStatus::Fano));
    }
    return out;
}

inline CommandResult cmd_quadric(const QuadricRequest& q, const CommandOptions& opt = {}) {
    return detail::guarded([&] {
        QuadricModel m = q.kind == QuadricRequest::Kind::Rank1 ? build_rank1_quadric(q.weights, q.multiplicities)
                                                               : build_rank2_quadric(q.side, q.mu1, q.mu2);
        std::string title = q.kind == QuadricRequest::Kind::Rank1 ? "rank-1 intrinsic quadric"
                            : q.side == QuadricSide::Left         ? "rank-2 intrinsic quadric, left family"
                                                                  : "rank-2 intrinsic quadric, right family";
        Analysis a = analyze_ring(m.ring, title);
        auto claims = quadric_claims(q, a);
        bool all_ok = std::all_of(claims.begin(), claims.end(), [](const ClaimCheck& c) { return c.ok; });

        std::string out;
        if (opt.json) {
            Json o = analysis_json(a);
            Json qc;
            qc["form_rank"] = m.checks.form_rank;
            qc["degree_symmetric"] = m.checks.degree_symmetric;
            qc["xhat_smooth_asserted"] = m.checks.xhat_smooth_asserted;
            qc["class_rank_bound"] = m.checks.class_rank_bound;
            qc["ring_dimension_bound"] = m.checks.ring_dimension_bound;
            o["quadric_checks"] = qc;
            Json cl = Json::array();
            for (const auto& c : claims) {
                Json jc;
                jc["claim"] = c.claim;
                jc["expected"] = c.expected;
                jc["observed"] = c.observed;
                jc["ok"] = c.ok;
                cl.push_back(jc);
            }
            o["classification"] = cl;
            o["input"] = document_json(InputDocument{title, m.input, m.bunch, {m.input.xhat_smooth, false}});
            out = detail::dump(o);
        } else {
            out = analysis_text(a);
            out += "\nQuadric checks\n" +
                   detail::table({{"form rank", std::to_string(m.checks.form_rank)},
                                  {"degree symmetric", detail::yes_no(m.checks.degree_symmetric)},
                                  {"xhat smooth asserted", detail::yes_no(m.checks.xhat_smooth_asserted)},
                                  {"rank(K) <= dim + 3", detail::yes_no(m.checks.class_rank_bound)},
                                  {"r - 1 <= 2 dim + 3", detail::yes_no(m.checks.ring_dimension_bound)}});
            std::vector<std::vector<std::string>> rows{{"claim", "expected", "observed", "status"}};
            for (const auto& c : claims) rows.push_back({c.claim, c.expected, c.observed, c.ok ? "ok" : "MISMATCH"});
            out += "\nClassification\n" + detail::table(rows);
        }
        std::string err;
        if (!all_ok) {
            for (const auto& c : claims)
                if (!c.ok)
                    err += "classification mismatch: " + c.claim + " expected " + c.expected + ", observed " + c.observed + "\n";
        }
        return CommandResult{all_ok ? exit_ok : exit_classification, out, err};
    });
}

} // namespace bunchlab::cli
