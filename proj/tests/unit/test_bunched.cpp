#include <gtest/gtest.h>

#include <set>

#include "../support/examples.hpp"
#include "bunchlab/bunched.hpp"

using namespace bunchlab;
using namespace bunchlab::testing;

namespace {

template <class F>
std::string error_code(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

// Independent ν count: number of terms with every positive exponent inside
// the index set.
std::size_t count_terms_inside(const Relation& g, const std::set<std::size_t>& face) {
    std::size_t n = 0;
    for (const auto& t : g.terms) {
        bool inside = true;
        for (std::size_t i = 0; i < t.exponents.size(); ++i)
            if (t.exponents[i] > 0 && !face.count(i)) inside = false;
        n += inside;
    }
    return n;
}

std::set<std::size_t> to_set(FaceIndexSet f) {
    auto v = f.indices();
    return {v.begin(), v.end()};
}

} // namespace

TEST(Presentation, Grassmannian) {
    auto R = validate_presentation(grassmannian_input());
    EXPECT_EQ(R.r, 6u);
    EXPECT_EQ(R.k, 1u);
    EXPECT_EQ(R.dim_R(), 5u);
    EXPECT_EQ(R.relation_degree(0), iv({2}));
    EXPECT_TRUE(R.warnings.empty());
}

TEST(Presentation, NotHomogeneous) {
    auto in = grassmannian_input({1, 1, 1, 1, 1, 2});
    EXPECT_EQ(error_code([&] { validate_presentation(in); }), "RelationNotHomogeneous(1,1,2)");
}

TEST(Presentation, PolynomialRing) {
    PresentationInput in;
    in.class_rank = 2;
    in.degrees = {iv({1, 0}), iv({0, 1}), iv({1, 1}), iv({1, 2})};
    auto R = validate_presentation(in);
    EXPECT_EQ(R.dim_R(), 4u);
}

TEST(Presentation, Errors) {
    PresentationInput in;
    in.class_rank = 2;
    in.degrees = {iv({1, 0})};
    EXPECT_EQ(error_code([&] { validate_presentation(in); }), "TooFewGenerators");
    in.degrees = {iv({2, 0}), iv({0, 1})};
    EXPECT_EQ(error_code([&] { validate_presentation(in); }), "DegreesDontGenerate");
    in.degrees = {iv({1, 0}), iv({0, 1})};
    in.relations = {Relation{{term(1, {1, 0})}}};
    EXPECT_EQ(error_code([&] { validate_presentation(in); }), "RelationTooFewTerms(1)");
    in.relations = {Relation{{term(1, {1, 0}), term(2, {1, 0})}}};
    EXPECT_EQ(error_code([&] { validate_presentation(in); }), "DuplicateExponents(1)");
}

TEST(Presentation, DegenerateWarnings) {
    PresentationInput in;
    in.class_rank = 1;
    in.degrees = {iv({1}), iv({1}), iv({1}), iv({1})};
    in.relations = {Relation{{term(1, {1, 1, 0, 0}), term(1, {1, 0, 1, 0})}}};
    auto R = validate_presentation(in);
    ASSERT_EQ(R.warnings.size(), 1u);
    EXPECT_NE(R.warnings[0].find("DegenerateRelation(1)"), std::string::npos);
}

TEST(FFace, GrassmannianExamples) {
    auto R = validate_presentation(grassmannian_input());
    EXPECT_FALSE(is_fface(R, face1({1, 6})));
    EXPECT_TRUE(is_fface(R, face1({1, 2})));
    EXPECT_TRUE(is_fface(R, face1({1, 2, 3, 4, 5, 6})));
}

TEST(FFace, EnumerationMatchesExhaustiveCount) {
    auto in = grassmannian_input();
    auto R = validate_presentation(in);
    auto ff = enumerate_ffaces(R);
    std::size_t expected = 0;
    for (std::uint64_t m = 0; m < 64; ++m)
        if (count_terms_inside(in.relations[0], to_set(FaceIndexSet(m))) != 1) ++expected;
    EXPECT_EQ(ff.size(), expected);
    EXPECT_TRUE(std::is_sorted(ff.begin(), ff.end()));
    for (auto f : ff) EXPECT_NE(count_terms_inside(in.relations[0], to_set(f)), 1u);
    EXPECT_EQ(std::find(ff.begin(), ff.end(), face1({1, 6})), ff.end());
}

TEST(FFace, PolynomialAndSquares) {
    PresentationInput in;
    in.class_rank = 1;
    in.degrees = {iv({1}), iv({1}), iv({1})};
    EXPECT_EQ(enumerate_ffaces(validate_presentation(in)).size(), 8u);
    PresentationInput sq;
    sq.class_rank = 1;
    sq.degrees = {iv({1}), iv({1})};
    sq.relations = {Relation{{term(1, {2, 0}), term(1, {0, 2})}}};
    auto ff = enumerate_ffaces(validate_presentation(sq));
    EXPECT_EQ(ff, (std::vector<FaceIndexSet>{FaceIndexSet(), face1({1, 2})}));
}

TEST(FFace, OracleRequiredAndTable) {
    PresentationInput in;
    in.class_rank = 1;
    in.degrees = {iv({1}), iv({1}), iv({1}), iv({1})};
    in.relations = {Relation{{term(1, {1, 1, 0, 0}), term(1, {0, 0, 1, 1})}},
                    Relation{{term(1, {1, 0, 1, 0}), term(1, {0, 1, 0, 1})}}};
    auto R = validate_presentation(in);
    EXPECT_EQ(error_code([&] { is_fface(R, face1({1})); }), "OracleRequired");
    in.fface_table = std::vector<FaceIndexSet>{FaceIndexSet(), face1({1, 2, 3, 4})};
    auto R2 = validate_presentation(in);
    EXPECT_TRUE(is_fface(R2, face1({1, 2, 3, 4})));
    EXPECT_FALSE(is_fface(R2, face1({1, 2})));
}

TEST(FFace, TooManyGenerators) {
    PresentationInput in;
    in.class_rank = 1;
    for (int i = 0; i < 30; ++i) in.degrees.push_back(iv({1}));
    auto R = validate_presentation(in);
    EXPECT_EQ(error_code([&] { enumerate_ffaces(R); }), "TooManyGenerators");
}

TEST(FBunch, QuotientIsValid) {
    auto R = validate_presentation(quotient_input());
    FaceCatalog cat(R);
    auto B = validate_fbunch(R, cat, quotient_bunch());
    EXPECT_EQ(B.cones.size(), 5u);
    EXPECT_TRUE(B.maximality_checked);
    for (std::size_t i = 0; i < B.cones.size(); ++i) EXPECT_EQ(cat.image(B.witnesses[i]), B.cones[i]);
}

TEST(FBunch, NestedConesRejected) {
    auto R = validate_presentation(quotient_input());
    FaceCatalog cat(R);
    auto specs = face_specs({face1({1, 3, 5}), face1({1, 2, 3, 4, 5, 6})});
    EXPECT_EQ(error_code([&] { validate_fbunch(R, cat, specs); }), "OverlapViolation(1,2)");
}

TEST(FBunch, NotProjectedFFace) {
    auto R = validate_presentation(quotient_input());
    FaceCatalog cat(R);
    ConeSpec s;
    s.generators = std::vector<IntVector>{iv({0, 0, 1})};
    std::vector<ConeSpec> specs{s};
    EXPECT_EQ(error_code([&] { validate_fbunch(R, cat, specs); }), "NotProjectedFFace(1)");
}

TEST(FBunch, MissingMemberBreaksMaximality) {
    auto R = validate_presentation(quotient_input());
    FaceCatalog cat(R);
    auto specs = face_specs({face1({1, 3, 5}), face1({2, 4, 6}), face1({1, 6, 2, 5}), face1({1, 6, 3, 4})});
    std::string code = error_code([&] { validate_fbunch(R, cat, specs); });
    EXPECT_EQ(code.rfind("MaximalityViolation(", 0), 0u) << code;
    std::vector<std::string> warnings;
    FBunchOptions opt;
    opt.skip_maximality = true;
    auto B = validate_fbunch(R, cat, specs, opt, &warnings);
    EXPECT_FALSE(B.maximality_checked);
    EXPECT_EQ(warnings.size(), 1u);
}

TEST(FBunch, FacetCondition) {
    // w = (1,0),(0,1),(1,1): every facet image generates Z^2, but
    // cone((1,0),(1,1)) has no interior point inside cone((0,1),(1,1))
    PresentationInput in;
    in.class_rank = 2;
    in.degrees = {iv({1, 0}), iv({0, 1}), iv({1, 1})};
    auto R = validate_presentation(in);
    FaceCatalog cat(R);
    EXPECT_EQ(error_code([&] { validate_fbunch(R, cat, face_specs({face1({1, 3})})); }), "FacetConditionFails(1)");
    PresentationInput lat;
    lat.class_rank = 1;
    lat.degrees = {iv({2}), iv({3})};
    auto R2 = validate_presentation(lat);
    FaceCatalog cat2(R2);
    EXPECT_EQ(error_code([&] { validate_fbunch(R2, cat2, positive_ray_bunch()); }), "FacetConditionFails(1)");
}

TEST(FBunch, RankOneQuadric) {
    auto R = validate_presentation(grassmannian_input());
    FaceCatalog cat(R);
    EXPECT_NO_THROW(validate_fbunch(R, cat, positive_ray_bunch()));
}

TEST(Relevant, QuotientFaces) {
    BunchedRing X(validate_presentation(quotient_input()), quotient_bunch());
    std::set<FaceIndexSet> expected{face1({1, 2, 3, 4, 5, 6}), face1({1, 3, 5}),    face1({2, 4, 6}),
                                    face1({1, 6, 2, 5}),       face1({1, 6, 3, 4}), face1({2, 5, 3, 4})};
    for (std::size_t i = 1; i <= 6; ++i) {
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; j < 6; ++j)
            if (j != i - 1) idx.push_back(j);
        expected.insert(FaceIndexSet::from_indices(idx));
    }
    EXPECT_EQ(std::set<FaceIndexSet>(X.rlv().begin(), X.rlv().end()), expected);
    EXPECT_EQ(X.rlv().size(), 12u);
    std::set<FaceIndexSet> cov{face1({1, 3, 5}), face1({2, 4, 6}), face1({1, 6, 2, 5}), face1({1, 6, 3, 4}),
                               face1({2, 5, 3, 4})};
    EXPECT_EQ(std::set<FaceIndexSet>(X.cov().begin(), X.cov().end()), cov);
}

TEST(Relevant, GrassmannianAllButEmpty) {
    auto R = validate_presentation(grassmannian_input());
    BunchedRing X(R, positive_ray_bunch());
    auto ff = enumerate_ffaces(R);
    ff.erase(std::remove(ff.begin(), ff.end(), FaceIndexSet()), ff.end());
    EXPECT_EQ(X.rlv(), ff);
    std::vector<FaceIndexSet> rays;
    for (std::size_t i = 1; i <= 6; ++i) rays.push_back(face1({i}));
    std::sort(rays.begin(), rays.end());
    EXPECT_EQ(X.cov(), rays);
}

TEST(Relevant, IdentityPolynomialRing) {
    PresentationInput in;
    in.class_rank = 2;
    in.degrees = {iv({1, 0}), iv({0, 1})};
    auto R = validate_presentation(in);
    FaceCatalog cat(R);
    auto quadrant = RatCone::from_generators(2, {iv({1, 0}), iv({0, 1})});
    EXPECT_EQ(relevant_faces(R, cat, {quadrant}), (std::vector<FaceIndexSet>{face1({1, 2})}));
    // the identity grading violates the facet condition
    ConeSpec s;
    s.generators = std::vector<IntVector>{iv({1, 0}), iv({0, 1})};
    EXPECT_EQ(error_code([&] { validate_fbunch(R, cat, {s}); }), "FacetConditionFails(1)");
    auto g = gale_setup(R);
    EXPECT_EQ(g.n, 0u);
    auto fan = minimal_ambient_fan(R, g, relevant_faces(R, cat, {RatCone::zero(2)}));
    EXPECT_EQ(fan.maximal_cones().size(), 1u);
    EXPECT_TRUE(fan.maximal_cones()[0].is_zero_cone());
}

TEST(Cubic, CoveringCollectionAndFan) {
    BunchedRing X(validate_presentation(cubic_input()), cubic_bunch());
    auto expected = cubic_covering_collection();
    EXPECT_EQ(std::set<FaceIndexSet>(X.cov().begin(), X.cov().end()),
              std::set<FaceIndexSet>(expected.begin(), expected.end()));
    auto g = gale_setup(X.presentation());
    EXPECT_EQ(g.n, 3u);
    auto fan = minimal_ambient_fan(X.presentation(), g, X.cov());
    EXPECT_EQ(fan.maximal_cones().size(), 10u);
    EXPECT_FALSE(is_complete(fan));
    EXPECT_EQ(rays(fan).size(), 10u);
}

TEST(Gale, SimpleCases) {
    PresentationInput in;
    in.class_rank = 1;
    in.degrees = {iv({1}), iv({1}), iv({1})};
    auto R = validate_presentation(in);
    auto g = gale_setup(R);
    EXPECT_EQ(g.n, 2u);
    EXPECT_TRUE((R.degrees * g.P.transpose()).is_zero());
    // images sum to zero and span Z^2
    IntVector sum(2);
    for (const auto& v : g.images)
        for (std::size_t i = 0; i < 2; ++i) sum[i] += v[i];
    EXPECT_TRUE(is_zero(sum));
    EXPECT_TRUE(is_surjective(g.P));
}

TEST(Gale, CubicImagesMatchListingUpToBasis) {
    auto R = validate_presentation(cubic_input());
    auto g = gale_setup(R);
    auto U = unimodular_transform(g.P, cubic_listing_gale_matrix());
    ASSERT_TRUE(U.has_value());
    for (const auto& v : g.images) EXPECT_EQ(primitive(v), v);
}

TEST(Costar, Examples) {
    EXPECT_EQ(costar(FaceIndexSet(), 4), FaceIndexSet::full(4));
    EXPECT_EQ(costar(face1({1, 3}), 4), face1({2, 4}));
    EXPECT_EQ(costar(FaceIndexSet::full(4), 4), FaceIndexSet());
}

TEST(AmbientFan, GrassmannianIsProjectiveSpace) {
    BunchedRing X(validate_presentation(grassmannian_input()), positive_ray_bunch());
    auto g = gale_setup(X.presentation());
    auto fan = minimal_ambient_fan(X.presentation(), g, X.cov());
    EXPECT_EQ(g.n, 5u);
    EXPECT_EQ(fan.maximal_cones().size(), 6u);
    for (const auto& c : fan.maximal_cones()) EXPECT_EQ(c.dim(), 5u);
    EXPECT_TRUE(is_complete(fan));
}

TEST(ExtendToBunch, Examples) {
    BunchedRing G(validate_presentation(grassmannian_input()), positive_ray_bunch());
    auto theta = extend_to_bunch(G.presentation(), G.catalog(), G.cones());
    ASSERT_EQ(theta.size(), 1u);
    EXPECT_EQ(theta[0], RatCone::from_generators(1, {iv({1})}));

    BunchedRing X(validate_presentation(quotient_input()), quotient_bunch());
    auto th = extend_to_bunch(X.presentation(), X.catalog(), X.cones());
    for (const auto& s : th)
        for (const auto& t : X.cones()) EXPECT_TRUE(interiors_meet(s, t));
    // fixed point
    EXPECT_EQ(extend_to_bunch(X.presentation(), X.catalog(), th), th);
}

TEST(BunchFromFan, ProjectivePlane) {
    IntMatrix Q{{1, 1, 1}};
    auto g = kernel_basis(Q);
    std::vector<IntVector> images;
    for (std::size_t i = 0; i < 3; ++i) images.push_back(g.row(i));
    auto fan = polytopal_fan_with_rays(2, images);
    auto theta = bunch_from_fan(fan, Q);
    ASSERT_EQ(theta.size(), 1u);
    EXPECT_EQ(theta[0], RatCone::from_generators(1, {iv({1})}));
}

TEST(BunchFromFan, CubicRecoversBunchRefiningPhi) {
    BunchedRing X(validate_presentation(cubic_input()), cubic_bunch());
    auto g = gale_setup(X.presentation());
    auto fan = minimal_ambient_fan(X.presentation(), g, X.cov());
    auto theta = bunch_from_fan(fan, X.presentation().degrees);
    // each recovered cone is the image of a covering face, so contains some τ° of Φ
    for (const auto& s : theta) {
        bool ok = std::any_of(X.cones().begin(), X.cones().end(), [&](const RatCone& t) { return interior_contained(t, s); });
        EXPECT_TRUE(ok);
    }
    EXPECT_EQ(std::set<RatCone>(theta.begin(), theta.end()), std::set<RatCone>(X.cones().begin(), X.cones().end()));
}

TEST(BunchFromFan, RaysIncompatible) {
    IntMatrix Q{{1, 1, 1}};
    auto fan = verify_fan(2, {RatCone::from_generators(2, {iv({1, 0}), iv({1, 1})})});
    EXPECT_EQ(error_code([&] { bunch_from_fan(fan, Q); }), "RaysIncompatible");
}

TEST(Projectivize, Examples) {
    auto R = validate_presentation(grassmannian_input());
    FaceCatalog cat(R);
    auto B = projectivize(R, cat);
    ASSERT_EQ(B.cones.size(), 1u);
    EXPECT_EQ(B.cones[0], RatCone::from_generators(1, {iv({1})}));

    auto Rq = validate_presentation(quotient_input());
    FaceCatalog catq(Rq);
    auto Bq = projectivize(Rq, catq);
    auto ample = intersect_all(3, Bq.cones);
    IntVector p = ample.relative_interior_point();
    for (const auto& t : Bq.cones) EXPECT_TRUE(t.in_relative_interior(p));
    std::vector<ConeSpec> specs;
    for (auto f : Bq.witnesses) specs.push_back(ConeSpec{std::nullopt, f});
    EXPECT_NO_THROW(validate_fbunch(Rq, catq, specs));
}

TEST(Projectivize, PreconditionFailed) {
    PresentationInput in;
    in.class_rank = 1;
    in.degrees = {iv({1}), iv({-1}), iv({1})};
    auto R = validate_presentation(in);
    FaceCatalog cat(R);
    EXPECT_EQ(error_code([&] { projectivize(R, cat); }), "PreconditionFailed");
    EXPECT_FALSE(has_only_constants(R));
}

TEST(HasOnlyConstants, Examples) {
    EXPECT_TRUE(has_only_constants(validate_presentation(quotient_input())));
    PresentationInput z;
    z.class_rank = 1;
    z.degrees = {iv({0}), iv({1})};
    EXPECT_FALSE(has_only_constants(validate_presentation(z)));
    PresentationInput l;
    l.class_rank = 1;
    l.degrees = {iv({1}), iv({-1})};
    EXPECT_FALSE(has_only_constants(validate_presentation(l)));
}
