#include <gtest/gtest.h>

#include "lp2/errors.hpp"
#include "lp2/homalg.hpp"
#include "support.hpp"

using namespace lp2;

namespace {

using V = std::vector<std::int64_t>;

const PrimeMode kP{2147483659ULL};

// Closed-form term dimensions, written out independently of the layout code.
V y_terms(const Dims& m, const Dims& n) {
    const auto d0 = m[0] * n[0] + m[1] * n[1] + m[2] * n[2];
    const auto d1 = 3 * (m[1] * n[0] + m[2] * n[1] + m[0] * n[2]);
    const auto d2 = 3 * (m[0] * n[1] + m[1] * n[2] + m[2] * n[0]);
    return {d0, d1, d2, d0};
}

}  // namespace

TEST(ExtComplexY, TermDims) {
    const auto s0 = simple_module(0, 0);
    const auto c = build_ext_complex_Y(s0, s0);
    EXPECT_EQ(c.term_dims(), (V{1, 0, 0, 1}));
    for (const auto& d : c.differentials) EXPECT_TRUE(d.is_zero());
    const auto p = point_module({1, 1, 1}, 1, 0);
    EXPECT_EQ(build_ext_complex_Y(p, p).term_dims(), (V{3, 9, 9, 3}));
    const auto f1 = pushforward_module(1, 0);
    EXPECT_EQ(build_ext_complex_Y(f1, f1).term_dims(), (V{10, 9, 9, 10}));
    EXPECT_THROW(build_ext_complex_Y(s0, simple_module(0, 1)), HeartMismatch);
}

TEST(ExtComplexY, TermDimsMatchClosedFormAndDuality) {
    const auto corpus = standard_corpus();
    for (const auto& a : corpus) {
        for (const auto& b : corpus) {
            const auto t = build_ext_complex_Y(a.rep, b.rep).term_dims();
            EXPECT_EQ(t, y_terms(a.rep.dims(), b.rep.dims())) << a.name << " " << b.name;
            EXPECT_EQ(t[0], t[3]);
            // deg(i)(M,N) = deg(3-i)(N,M)
            const auto s = build_ext_complex_Y(b.rep, a.rep).term_dims();
            for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(t[i], s[3 - i]);
        }
    }
}

TEST(ExtComplexY, DifferentialsCompose) {
    testkit::Gen g(77);
    const auto corpus = standard_corpus();
    for (int t = 0; t < 20; ++t) {
        const auto m = g.corpus_sum(corpus), n = g.corpus_sum(corpus);
        const auto c = build_ext_complex_Y(m, n);
        ASSERT_EQ(c.differentials.size(), 3u);
        EXPECT_TRUE((c.differentials[1] * c.differentials[0]).is_zero());
        EXPECT_TRUE((c.differentials[2] * c.differentials[1]).is_zero());
    }
}

TEST(ExtComplexY, RejectsRelationViolation) {
    // A point with a2 knocked off the line through (1:0:0); pushforwards would not do, their
    // empty slot 2 makes every relation vanish.
    auto f = point_module({1, 0, 0}, 1, 0);
    auto arrows = f.arrows();
    arrows[arrow_a(1)] = QMatrix{{1}};
    const Representation bad(0, f.dims(), arrows);
    EXPECT_THROW(build_ext_complex_Y(bad, bad), PostconditionError);
}

TEST(ExtDimsY, Oracles) {
    const auto p = point_module({1, 2, 3}, 1, 0);
    EXPECT_EQ(ext_dims_Y(p, p), (V{1, 3, 3, 1}));
    EXPECT_EQ(ext_dims_Y(p, point_module({1, 0, 0}, 0, 0)), (V{0, 0, 0, 0}));
    EXPECT_EQ(ext_dims_Y(p, point_module({1, 2, 3}, 2, 0)), (V{0, 0, 0, 0}));
    const auto s0 = pushforward_module(0, 0), f1 = pushforward_module(1, 0);
    EXPECT_EQ(ext_dims_Y(s0, s0), (V{1, 0, 0, 1}));
    EXPECT_EQ(ext_dims_Y(f1, f1), (V{1, 0, 0, 1}));
    EXPECT_EQ(ext_dims_Y(s0, f1), (V{3, 0, 0, 0}));
    EXPECT_EQ(ext_dims_Y(f1, s0), (V{0, 0, 0, 3}));
}

TEST(ExtDimsY, PointsProperty) {
    testkit::Gen g(404);
    for (int t = 0; t < 40; ++t) {
        const auto p = g.point_module();
        const auto q = g.point_module();
        EXPECT_EQ(ext_dims_Y(p, p), (V{1, 3, 3, 1}));
        EXPECT_EQ(ext_dims_Y(p, q), (p == q ? V{1, 3, 3, 1} : V{0, 0, 0, 0}));
    }
}

TEST(ExtDimsY, ZeroRepresentation) {
    const Representation z(0, {0, 0, 0}, std::vector<QMatrix>(9));
    EXPECT_EQ(ext_dims_Y(z, z), (V{0, 0, 0, 0}));
    EXPECT_EQ(ext_dims_Y(z, pushforward_module(2, 0)), (V{0, 0, 0, 0}));
}

TEST(ExtComplexP2, TermDims) {
    const auto s0 = p2_restrict(simple_module(0, 0));
    EXPECT_EQ(build_ext_complex_P2(s0, s0).term_dims(), (V{1, 0, 0}));
    const auto p = p2_restrict(point_module({1, 1, 1}, 0, 0));
    EXPECT_EQ(build_ext_complex_P2(p, p).term_dims(), (V{3, 6, 3}));
    // The relation term is Hom(M_2, N_0): 3 * m2 * n0 = 0 for (3,1,0).
    const auto f1 = p2_restrict(pushforward_module(1, 0));
    EXPECT_EQ(build_ext_complex_P2(f1, f1).term_dims(), (V{10, 9, 0}));
}

TEST(ExtDimsP2, Oracles) {
    const auto p = p2_restrict(point_module({2, 1, 0}, 5, 0));
    EXPECT_EQ(ext_dims_P2(p, p), (V{1, 2, 1}));
    const auto s0 = p2_restrict(simple_module(0, 0));
    EXPECT_EQ(ext_dims_P2(s0, s0), (V{1, 0, 0}));
    const auto f1 = p2_restrict(pushforward_module(1, 0));
    EXPECT_EQ(ext_dims_P2(f1, f1), (V{1, 0, 0}));
    const auto f2 = p2_restrict(pushforward_module(2, 0));
    EXPECT_EQ(ext_dims_P2(s0, f2), (V{6, 0, 0}));  // H^0(O(2))
    EXPECT_EQ(ext_dims_P2(f2, s0), (V{0, 0, 0}));  // H^*(O(-2)) = 0
}

TEST(Euler, ClosedFormExamples) {
    EXPECT_EQ(euler_form_Y({1, 1, 1}, {1, 1, 1}), 0);
    EXPECT_EQ(euler_form_Y({1, 0, 0}, {3, 1, 0}), 3);
    EXPECT_EQ(euler_form_Y({3, 1, 0}, {1, 0, 0}), -3);
    EXPECT_EQ(euler_form_P2({1, 0, 0}, {1, 0, 0}), 1);
    EXPECT_EQ(euler_form_P2({1, 0, 0}, {3, 1, 0}), 3);
    EXPECT_EQ(euler_form_P2({3, 1, 0}, {1, 0, 0}), 0);
}

TEST(Euler, AntisymmetryAndBilinearity) {
    testkit::Gen g(9);
    auto rnd = [&] { return Dims{g.integer(0, 9), g.integer(0, 9), g.integer(0, 9)}; };
    for (int t = 0; t < 500; ++t) {
        const Dims u = rnd(), v = rnd(), w = rnd();
        EXPECT_EQ(euler_form_Y(u, u), 0);
        EXPECT_EQ(euler_form_Y(u, v), -euler_form_Y(v, u));
        const Dims uv{u[0] + v[0], u[1] + v[1], u[2] + v[2]};
        EXPECT_EQ(euler_form_Y(uv, w), euler_form_Y(u, w) + euler_form_Y(v, w));
        EXPECT_EQ(euler_form_Y(w, uv), euler_form_Y(w, u) + euler_form_Y(w, v));
        EXPECT_EQ(euler_form_P2(uv, w), euler_form_P2(u, w) + euler_form_P2(v, w));
        EXPECT_EQ(euler_form_P2(w, uv), euler_form_P2(w, u) + euler_form_P2(w, v));
    }
}

TEST(Euler, MatchesAlternatingSums) {
    testkit::Gen g(12);
    const auto corpus = standard_corpus();
    for (const auto& a : corpus) {
        for (const auto& b : corpus) {
            EXPECT_EQ(alternating_sum(ext_dims_Y(a.rep, b.rep)), euler_form_Y(a.rep.dims(), b.rep.dims()));
            EXPECT_EQ(alternating_sum(ext_dims_P2(p2_restrict(a.rep), p2_restrict(b.rep))),
                      euler_form_P2(a.rep.dims(), b.rep.dims()));
        }
    }
    for (int t = 0; t < 30; ++t) {
        const auto m = g.corpus_sum(corpus), n = g.corpus_sum(corpus);
        EXPECT_EQ(alternating_sum(ext_dims_Y(m, n)), euler_form_Y(m.dims(), n.dims()));
    }
}

TEST(Duality, Examples) {
    const auto s0 = simple_module(0, 0), f1 = pushforward_module(1, 0);
    const auto d = verify_cy3_duality(s0, f1);
    EXPECT_TRUE(d.ok);
    EXPECT_EQ(d.forward, (V{3, 0, 0, 0}));
    EXPECT_EQ(d.backward, (V{0, 0, 0, 3}));
    const auto p = point_module({1, 1, 1}, 1, 0);
    EXPECT_TRUE(verify_cy3_duality(p, p).ok);
    const auto s1 = simple_module(1, 0);
    const auto e = verify_cy3_duality(s0, s1);
    EXPECT_TRUE(e.ok);
    EXPECT_EQ(e.forward, (V{0, 0, 3, 0}));
    EXPECT_EQ(e.backward, (V{0, 3, 0, 0}));
}

TEST(Duality, RandomSums) {
    testkit::Gen g(2718);
    const auto corpus = standard_corpus();
    for (int t = 0; t < 30; ++t) {
        EXPECT_TRUE(verify_cy3_duality(g.corpus_sum(corpus), g.corpus_sum(corpus)).ok);
    }
}

TEST(Additivity, HomDegreeZero) {
    testkit::Gen g(31);
    const auto corpus = standard_corpus();
    for (int t = 0; t < 30; ++t) {
        const auto& a = g.pick(corpus).rep;
        const auto& b = g.pick(corpus).rep;
        const auto& c = g.pick(corpus).rep;
        EXPECT_EQ(ext_dims_Y(direct_sum(a, b), c)[0], ext_dims_Y(a, c)[0] + ext_dims_Y(b, c)[0]);
        EXPECT_EQ(ext_dims_Y(direct_sum(a, b), c)[0],
                  static_cast<std::int64_t>(hom_space(direct_sum(a, b), c).dimension));
    }
}

TEST(Triangle, Corpus) {
    for (const auto& e : triangle_corpus()) {
        const auto r = verify_pushforward_triangle(e.rep);
        EXPECT_TRUE(r.holds()) << e.name;
    }
    const auto pt = verify_pushforward_triangle(point_module({1, 0, 0}, 0, 0));
    EXPECT_EQ(pt.p2_side, (V{1, 2, 1}));
    EXPECT_EQ(pt.y_side, (V{1, 3, 3, 1}));
}

TEST(Modes, PrimeAgreesWithRational) {
    const auto corpus = standard_corpus();
    for (const auto& a : corpus) {
        for (const auto& b : corpus) {
            const auto c = build_ext_complex_Y(a.rep, b.rep);
            EXPECT_EQ(differential_ranks(c, RationalMode{}), differential_ranks(c, kP)) << a.name << " " << b.name;
        }
    }
}

TEST(Report, Fields) {
    const auto s0 = simple_module(0, 0), f1 = pushforward_module(1, 0);
    const auto r = ext_report(s0, f1, Side::Y);
    EXPECT_EQ(r.ext, (V{3, 0, 0, 0}));
    EXPECT_EQ(r.euler, 3);
    EXPECT_TRUE(r.euler_matches);
    ASSERT_TRUE(r.cy3_ok.has_value());
    EXPECT_TRUE(*r.cy3_ok);
    const auto q = ext_report(s0, f1, Side::P2);
    EXPECT_EQ(q.ext, (V{3, 0, 0}));
    EXPECT_FALSE(q.cy3_ok.has_value());
    EXPECT_THROW(parse_side("z"), InputError);
}
