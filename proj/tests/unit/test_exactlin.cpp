#include <gtest/gtest.h>

#include <random>
#include <set>

#include "bunchlab/exactlin.hpp"

using namespace bunchlab;

namespace {

// Independent gcd via plain Euclid on longs.
long euclid(long a, long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

bool is_hermite(const HermiteResult& h) {
    // columns past rank are zero, pivots positive, entries to the right zero,
    // entries to the left reduced
    for (std::size_t j = h.rank; j < h.h.cols(); ++j)
        if (!is_zero(h.h.column(j))) return false;
    for (std::size_t j = 0; j < h.rank; ++j) {
        std::size_t p = h.pivot_rows[j];
        if (h.h(p, j) <= 0) return false;
        for (std::size_t i = 0; i < p; ++i)
            if (h.h(i, j) != 0) return false;
        for (std::size_t l = 0; l < j; ++l)
            if (h.h(p, l) < 0 || h.h(p, l) >= h.h(p, j)) return false;
    }
    return true;
}

} // namespace

TEST(Hnf, IdentityIsFixed) {
    auto r = hnf(IntMatrix::identity(2));
    EXPECT_EQ(r.h, IntMatrix::identity(2));
    EXPECT_EQ(r.u, IntMatrix::identity(2));
}

TEST(Hnf, RowVectorReducesToGcd) {
    auto r = hnf(IntMatrix{{4, 6}});
    EXPECT_EQ(r.h, (IntMatrix{{euclid(4, 6), 0}}));
    EXPECT_EQ(IntMatrix({{4, 6}}) * r.u, r.h);
    EXPECT_EQ(abs(determinant(r.u)), 1);
}

TEST(Hnf, DiagonalAlreadyHermite) {
    IntMatrix m{{2, 0}, {0, 3}};
    EXPECT_EQ(hnf(m).h, m);
}

TEST(Hnf, RandomMatricesSatisfyConvention) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix m = random_matrix(rng, 1 + trial % 4, 1 + (trial / 4) % 5, 7);
        auto r = hnf(m);
        EXPECT_EQ(m * r.u, r.h);
        EXPECT_EQ(abs(determinant(r.u)), 1);
        EXPECT_TRUE(is_hermite(r));
        EXPECT_EQ(r.rank, rank(m));
    }
}

TEST(Snf, DiagonalTwoThree) {
    IntMatrix m{{2, 0}, {0, 3}};
    auto s = snf(m);
    EXPECT_EQ(s.s, (IntMatrix{{1, 0}, {0, 6}}));
    EXPECT_EQ(s.u * m * s.v, s.s);
}

TEST(Snf, IdentityAndZero) {
    EXPECT_EQ(snf(IntMatrix::identity(3)).s, IntMatrix::identity(3));
    IntMatrix z(2, 3);
    auto s = snf(z);
    EXPECT_TRUE(s.s.is_zero());
    EXPECT_TRUE(s.diagonal.empty());
}

TEST(Snf, LazyTransforms) {
    auto s = snf(IntMatrix{{2, 4}, {6, 8}}, false);
    EXPECT_EQ(s.u.rows(), 0u);
    EXPECT_EQ(s.diagonal, (std::vector<Integer>{2, 4}));
}

TEST(Snf, RandomRoundTrip) {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix m = random_matrix(rng, 1 + trial % 4, 1 + (trial / 3) % 4, 9);
        auto s = snf(m);
        EXPECT_EQ(s.u * m * s.v, s.s);
        EXPECT_EQ(abs(determinant(s.u)), 1);
        EXPECT_EQ(abs(determinant(s.v)), 1);
        for (std::size_t i = 0; i < s.s.rows(); ++i)
            for (std::size_t j = 0; j < s.s.cols(); ++j)
                if (i != j) { EXPECT_EQ(s.s(i, j), 0); }
        for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i)
            EXPECT_TRUE(mpz_divisible_p(s.diagonal[i + 1].get_mpz_t(), s.diagonal[i].get_mpz_t()));
        for (const auto& d : s.diagonal) EXPECT_GT(d, 0);
        EXPECT_EQ(s.diagonal.size(), rank(m));
    }
}

TEST(Kernel, SimpleCases) {
    IntMatrix k = kernel_basis(IntMatrix{{1, 1}});
    ASSERT_EQ(k.cols(), 1u);
    EXPECT_EQ(k.column(0), make_int_vector({1, -1}));
    EXPECT_EQ(kernel_basis(IntMatrix::identity(3)).cols(), 0u);
}

TEST(Kernel, TwoFourBruteForce) {
    IntMatrix k = kernel_basis(IntMatrix{{2, 4}});
    ASSERT_EQ(k.cols(), 1u);
    // brute force: the smallest nonzero kernel vector with a > 0 is the generator
    IntVector best;
    for (long a = 1; a <= 5 && best.empty(); ++a)
        for (long b = -5; b <= 5; ++b)
            if (2 * a + 4 * b == 0) {
                best = make_int_vector({a, b});
                break;
            }
    EXPECT_EQ(k.column(0), best);
}

TEST(Kernel, RandomSaturated) {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix m = random_matrix(rng, 1 + trial % 3, 3 + trial % 3, 6);
        IntMatrix k = kernel_basis(m);
        EXPECT_EQ(k.cols(), m.cols() - rank(m));
        EXPECT_TRUE((m * k).is_zero());
        // saturation: the kernel lattice has torsion-free cokernel
        if (k.cols()) {
            auto d = snf_diagonal(k);
            for (const auto& x : d) EXPECT_EQ(x, 1);
        }
    }
}

TEST(Lattice, ImageAndMembership) {
    auto full = image_lattice(IntMatrix::identity(2));
    EXPECT_EQ(full, Sublattice::full(2));
    auto l = image_lattice(IntMatrix{{2, 0}, {0, 3}});
    EXPECT_TRUE(lattice_member(l, make_int_vector({2, 0})));
    EXPECT_FALSE(lattice_member(l, make_int_vector({1, 0})));
    EXPECT_EQ(lattice_index(l, full), LatticeIndex::finite(6));
}

TEST(Lattice, CanonicalFormIndependentOfGenerators) {
    auto a = image_lattice(IntMatrix{{2, 0}, {0, 3}});
    EXPECT_EQ(a.basis(), image_lattice(IntMatrix{{2, 0}, {3, 3}}).basis());
    EXPECT_EQ(a.basis(), image_lattice(IntMatrix{{2, 0, 4}, {0, 3, 6}}).basis());
    EXPECT_EQ(a.basis(), image_lattice(IntMatrix{{-2, 2}, {3, 0}}).basis());
    EXPECT_EQ(a.basis(), image_lattice(IntMatrix{{2, 2, 0}, {0, 3, 9}}).basis());
}

TEST(Lattice, Intersection) {
    auto a = image_lattice(IntMatrix{{2, 0}, {0, 1}});
    auto b = image_lattice(IntMatrix{{1, 0}, {0, 3}});
    auto ab = lattice_intersection(a, b);
    EXPECT_EQ(ab, image_lattice(IntMatrix{{2, 0}, {0, 3}}));
    EXPECT_EQ(lattice_intersection(a, a), a);
    EXPECT_EQ(lattice_intersection(Sublattice::full(2), b), b);
    EXPECT_EQ(lattice_intersection(a, b), lattice_intersection(b, a));
}

TEST(Lattice, IndexInfiniteAndNotSublattice) {
    auto line = image_lattice(IntMatrix{{1}, {0}});
    EXPECT_TRUE(lattice_index(line, Sublattice::full(2)).infinite);
    auto sub = image_lattice(IntMatrix{{1, 0}, {0, 1}});
    auto super = image_lattice(IntMatrix{{2, 0}, {0, 1}});
    try {
        (void)lattice_index(sub, super);
        FAIL() << "expected NotASublattice";
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.code(), "NotASublattice");
    }
}

TEST(Lattice, QuotientFaceImagesGivePicard) {
    // degrees of the torus quotient of G(2,4)
    std::vector<IntVector> w = {make_int_vector({1, 0, 1}),   make_int_vector({1, 1, 1}),
                                make_int_vector({0, 1, 1}),   make_int_vector({0, -1, 1}),
                                make_int_vector({-1, -1, 1}), make_int_vector({-1, 0, 1})};
    std::vector<std::vector<std::size_t>> faces = {{0, 2, 4}, {1, 3, 5}, {0, 5, 1, 4}, {0, 5, 2, 3}, {1, 4, 2, 3}};
    Sublattice pic = Sublattice::full(3);
    for (const auto& f : faces) {
        std::vector<IntVector> cols;
        for (auto i : f) cols.push_back(w[i]);
        pic = lattice_intersection(pic, image_lattice(IntMatrix::from_columns(cols, 3)));
    }
    auto expected = image_lattice(IntMatrix::from_columns(
        {make_int_vector({2, 4, 0}), make_int_vector({0, 6, 0}), make_int_vector({0, 0, 6})}, 3));
    EXPECT_EQ(pic, expected);
    EXPECT_EQ(lattice_index(pic, Sublattice::full(3)), LatticeIndex::finite(72));
    EXPECT_TRUE(lattice_member(pic, make_int_vector({0, 0, -12})));
    EXPECT_FALSE(lattice_member(pic, make_int_vector({0, 0, -4})));
}

TEST(Surjective, Examples) {
    EXPECT_TRUE(is_surjective(IntMatrix::identity(3)));
    EXPECT_FALSE(is_surjective(IntMatrix{{2}}));
    IntMatrix face = IntMatrix::from_columns(
        {make_int_vector({1, 0, 1}), make_int_vector({0, 1, 1}), make_int_vector({-1, -1, 1})}, 3);
    EXPECT_EQ(abs(determinant(face)), 3);
    EXPECT_FALSE(is_surjective(face));
}

TEST(Primitive, Examples) {
    EXPECT_EQ(primitive(make_int_vector({2, 4, 6})), make_int_vector({1, 2, 3}));
    EXPECT_EQ(primitive(make_int_vector({1, 0})), make_int_vector({1, 0}));
    EXPECT_EQ(primitive(make_int_vector({-3, -6})), make_int_vector({-1, -2}));
    try {
        (void)primitive(make_int_vector({0, 0}));
        FAIL();
    } catch (const PreconditionError& e) {
        EXPECT_EQ(e.code(), "ZeroVector");
    }
}

TEST(Lattice, IntersectionAgainstCosetEnumeration) {
    // Sublattices of Z^2 with index <= 50: compare membership of the computed
    // intersection with direct membership in both inputs over a box.
    std::mt19937 rng(14);
    std::uniform_int_distribution<int> d(-6, 6);
    int checked = 0;
    while (checked < 60) {
        IntMatrix a(2, 2), b(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                a(i, j) = d(rng);
                b(i, j) = d(rng);
            }
        Integer da = abs(determinant(a)), db = abs(determinant(b));
        if (da == 0 || db == 0 || lcm(da, db) > 50) continue;
        ++checked;
        auto la = image_lattice(a), lb = image_lattice(b);
        auto lab = lattice_intersection(la, lb);
        // both lattices contain n * Z^2, so the n x n box is a full set of
        // coset representatives of Z^2 / (n Z^2)
        long n = Integer(lcm(da, db)).get_si();
        long count = 0;
        for (long x = 0; x < n; ++x)
            for (long y = 0; y < n; ++y) {
                IntVector v = make_int_vector({x, y});
                bool in_both = lattice_member(la, v) && lattice_member(lb, v);
                EXPECT_EQ(in_both, lattice_member(lab, v));
                count += in_both;
            }
        // in an n x n box (n a multiple of every index) the members number n^2/index
        auto idx = lattice_index(lab, Sublattice::full(2));
        ASSERT_FALSE(idx.infinite);
        EXPECT_EQ(Integer(count) * idx.value, Integer(n * n));
    }
}
