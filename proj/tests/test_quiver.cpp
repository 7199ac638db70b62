#include <gtest/gtest.h>

#include <map>

#include "lp2/errors.hpp"
#include "lp2/quiver.hpp"
#include "support.hpp"

using namespace lp2;

namespace {

const QuiverPresentation& Y() { return QuiverPresentation::local_p2(); }

PathSum parse_sum(std::initializer_list<std::pair<int, std::vector<std::string>>> terms) {
    PathSum s;
    for (const auto& [c, word] : terms) {
        PathTerm t;
        t.coefficient = c;
        for (const auto& a : word) t.word.push_back(Y().arrow_index(a));
        s.push_back(t);
    }
    return s;
}

// Independent monomial tables for the pushforward oracle.
std::vector<std::array<int, 3>> monomials(int m) {
    std::vector<std::array<int, 3>> out;
    for (int a = m; a >= 0; --a) {
        for (int b = m - a; b >= 0; --b) out.push_back({a, b, m - a - b});
    }
    return out;
}

QMatrix multiplication(int src_degree, std::size_t var) {
    const auto src = monomials(src_degree), dst = monomials(src_degree + 1);
    QMatrix m(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        auto e = src[j];
        ++e[var];
        for (std::size_t i = 0; i < dst.size(); ++i) {
            if (dst[i] == e) m(i, j) = 1;
        }
    }
    return m;
}

}  // namespace

TEST(Presentation, Counts) {
    EXPECT_EQ(Y().arrows().size(), 9u);
    EXPECT_EQ(Y().relations().size(), 9u);
    EXPECT_EQ(Y().potential().size(), 6u);
    const auto& b = QuiverPresentation::beilinson();
    EXPECT_EQ(b.arrows().size(), 6u);
    EXPECT_EQ(b.relations().size(), 3u);
    EXPECT_FALSE(b.has_potential());
}

TEST(Presentation, PotentialCyclesAndHomogeneity) {
    for (const auto& t : Y().potential()) {
        ASSERT_EQ(t.word.size(), 3u);
        // Words compose right to left: the last letter is the first quiver step.
        for (std::size_t l = 0; l + 1 < t.word.size(); ++l) {
            EXPECT_EQ(Y().arrow(t.word[l + 1]).target, Y().arrow(t.word[l]).source);
        }
        EXPECT_EQ(Y().arrow(t.word.front()).target, Y().arrow(t.word.back()).source);
    }
    for (const auto& r : Y().relations()) {
        EXPECT_EQ(r.paths.size(), 2u) << r.name;
        for (const auto& t : r.paths) {
            EXPECT_EQ(Y().arrow(t.word.front()).matrix_from(), r.matrix_from);
            EXPECT_EQ(Y().arrow(t.word.back()).matrix_to(), r.matrix_to);
        }
    }
}

TEST(Presentation, EpsilonIsAlternating) {
    const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    const int sign[6] = {1, 1, 1, -1, -1, -1};
    // Potential term c3 b2 a1 has sign +1, so eps(a1, b2, c3) = +1.
    const int base = Y().epsilon(0, 1, 2);
    EXPECT_EQ(base, 1);
    for (int p = 0; p < 6; ++p) EXPECT_EQ(Y().epsilon(perm[p][0], perm[p][1], perm[p][2]), sign[p] * base);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(Y().epsilon(i, i, (i + 1) % 3), 0);
        EXPECT_EQ(Y().epsilon(i, (i + 1) % 3, i), 0);
    }
}

TEST(CyclicDerivative, Examples) {
    const auto da1 = cyclic_derivative(Y(), Y().potential(), "a1");
    EXPECT_EQ(Y().format(da1), "c3b2 - c2b3");
    EXPECT_EQ(da1, parse_sum({{1, {"c3", "b2"}}, {-1, {"c2", "b3"}}}));
    const auto dc1 = cyclic_derivative(Y(), Y().potential(), "c1");
    EXPECT_EQ(dc1, parse_sum({{1, {"b3", "a2"}}, {-1, {"b2", "a3"}}}));
    EXPECT_TRUE(cyclic_derivative(Y(), PathSum{}, "a1").empty());
    EXPECT_THROW(cyclic_derivative(Y(), Y().potential(), "d7"), InputError);
}

TEST(CyclicDerivative, EveryArrowTwoTerms) {
    for (const auto& a : Y().arrows()) {
        EXPECT_EQ(cyclic_derivative(Y(), Y().potential(), a.name).size(), 2u) << a.name;
    }
}

TEST(CheckRelations, Examples) {
    EXPECT_TRUE(check_relations(point_module({1, 0, 0}, 1, 0)).ok());
    EXPECT_TRUE(check_relations(point_module({1, 1, 1}, 1, 0)).ok());
    EXPECT_TRUE(check_relations(Representation(0, {0, 0, 0}, std::vector<QMatrix>(9))).ok());

    // A point with a2 knocked off the line through (1:0:0); pushforwards would not do, their
    // empty slot 2 makes every relation vanish.
    auto f = point_module({1, 0, 0}, 1, 0);
    auto arrows = f.arrows();
    arrows[arrow_a(1)] = QMatrix{{1}};
    const auto bad = check_relations(Representation(0, f.dims(), arrows));
    EXPECT_EQ(bad.status, RelationCheck::Status::RelationsViolated);
    EXPECT_FALSE(bad.violated.empty());
}

TEST(CheckRelations, ShapeReportedSeparately) {
    std::vector<QMatrix> arrows(9, QMatrix(1, 1));
    arrows[0] = QMatrix(2, 1);
    const auto rc = check_relations(Y(), {1, 1, 1}, arrows);
    EXPECT_EQ(rc.status, RelationCheck::Status::ShapeMismatch);
    EXPECT_THROW(Representation(0, {1, 1, 1}, arrows), ShapeError);
}

TEST(PointModule, Matrices) {
    const auto p = point_module({1, 0, 0}, 0, 0);
    EXPECT_EQ(p.dims(), (Dims{1, 1, 1}));
    EXPECT_EQ(p.arrow("a1"), QMatrix{{1}});
    EXPECT_EQ(p.arrow("a2"), QMatrix{{0}});
    EXPECT_EQ(p.arrow("b1"), QMatrix{{1}});
    for (const char* c : {"c1", "c2", "c3"}) EXPECT_TRUE(p.arrow(c).is_zero());

    const auto q = point_module({1, 1, 1}, 1, 0);
    for (std::size_t i = 0; i < 9; ++i) EXPECT_EQ(q.arrow(i), QMatrix{{1}});
}

TEST(PointModule, ChartNormalization) {
    const auto a = point_module({2, 4, 6}, 3, 0);
    const auto b = point_module({1, 2, 3}, 3, 0);
    EXPECT_EQ(a, b);
    const auto c = point_module({0, Rational(-1, 2), 1}, 5, 2);
    EXPECT_EQ(c.arrow("a2"), QMatrix{{1}});
    EXPECT_EQ(c.arrow("a3"), QMatrix{{-2}});
    EXPECT_EQ(c.arrow("c3"), QMatrix{{-10}});
    EXPECT_EQ(c.heart(), 2);
    EXPECT_THROW(point_module({0, 0, 0}, 1, 0), InputError);
}

TEST(Pushforward, DimsMatchH0Oracle) {
    auto h0 = [](int m) -> std::int64_t { return m < 0 ? 0 : (m + 1) * (m + 2) / 2; };
    for (int d = 0; d <= 5; ++d) {
        for (int n = 0; n <= d; ++n) {
            const auto f = pushforward_module(d, n);
            EXPECT_EQ(f.dims(), (Dims{h0(d - n), h0(d - n - 1), h0(d - n - 2)})) << d << "," << n;
            EXPECT_TRUE(check_relations(f).ok());
            EXPECT_EQ(f.heart(), n);
        }
    }
    EXPECT_EQ(pushforward_module(0, 0).dims(), (Dims{1, 0, 0}));
    EXPECT_EQ(pushforward_module(1, 0).dims(), (Dims{3, 1, 0}));
    EXPECT_EQ(pushforward_module(2, 0).dims(), (Dims{6, 3, 1}));
}

TEST(Pushforward, MonomialMatrices) {
    const auto f1 = pushforward_module(1, 0);
    for (std::size_t i = 0; i < 3; ++i) {
        QMatrix e(3, 1);
        e(i, 0) = 1;
        EXPECT_EQ(f1.arrow(arrow_a(i)), e);
    }
    const auto f3 = pushforward_module(3, 0);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(f3.arrow(arrow_a(i)), multiplication(2, i));
        EXPECT_EQ(f3.arrow(arrow_b(i)), multiplication(1, i));
        EXPECT_TRUE(f3.arrow(arrow_c(i)).is_zero());
    }
    EXPECT_EQ(monomial_basis(2), monomials(2));
}

TEST(Pushforward, RangeEnforced) {
    EXPECT_THROW(pushforward_module(1, 2), InputError);
    EXPECT_THROW(pushforward_module(1, -1), InputError);
    EXPECT_THROW(pushforward_module(-1, 0), InputError);
}

TEST(Simple, Indicators) {
    EXPECT_EQ(simple_module(0, 0).dims(), (Dims{1, 0, 0}));
    EXPECT_EQ(simple_module(1, 0).dims(), (Dims{0, 1, 0}));
    const auto s2 = simple_module(2, 5);
    EXPECT_EQ(s2.dims(), (Dims{0, 0, 1}));
    EXPECT_EQ(s2.heart(), 5);
    EXPECT_EQ(simple_module(0, 0), pushforward_module(0, 0));
}

TEST(DirectSum, Examples) {
    const auto s0 = simple_module(0, 0);
    EXPECT_EQ(direct_sum(s0, s0).dims(), (Dims{2, 0, 0}));
    const auto p = point_module({1, 0, 0}, 0, 0), q = point_module({1, 2, 3}, 1, 0);
    const auto pq = direct_sum(p, q);
    EXPECT_EQ(pq.dims(), (Dims{2, 2, 2}));
    EXPECT_EQ(pq.arrow("a2"), (QMatrix{{0, 0}, {0, 2}}));
    EXPECT_THROW(direct_sum(s0, simple_module(0, 1)), HeartMismatch);
}

TEST(HomSpace, Oracles) {
    const auto p = point_module({1, 2, 3}, 4, 0);
    EXPECT_EQ(hom_space(p, p).dimension, 1u);
    EXPECT_EQ(hom_space(p, point_module({1, 2, 3}, 5, 0)).dimension, 0u);
    EXPECT_EQ(hom_space(p, point_module({1, 2, 4}, 4, 0)).dimension, 0u);
    const auto s0 = simple_module(0, 0), f1 = pushforward_module(1, 0), f2 = pushforward_module(2, 0);
    EXPECT_EQ(hom_space(s0, f1).dimension, 3u);
    EXPECT_EQ(hom_space(f1, s0).dimension, 0u);
    EXPECT_EQ(hom_space(f1, f2).dimension, 3u);  // Hom(O(1), O(2))
    EXPECT_EQ(hom_space(s0, f2).dimension, 6u);  // Hom(O, O(2))
    EXPECT_THROW(hom_space(s0, simple_module(0, 1)), HeartMismatch);
}

TEST(HomSpace, BasisIntertwines) {
    const auto s0 = simple_module(0, 0), f1 = pushforward_module(1, 0);
    const auto h = hom_space(direct_sum(s0, f1), direct_sum(f1, s0));
    const auto m = direct_sum(s0, f1), n = direct_sum(f1, s0);
    for (const auto& phi : h.basis) {
        for (std::size_t i = 0; i < 9; ++i) {
            const auto& a = Y().arrow(i);
            EXPECT_EQ(phi[a.matrix_to()] * m.arrow(i), n.arrow(i) * phi[a.matrix_from()]);
        }
    }
}

TEST(Properties, ConstructorsSatisfyRelations) {
    testkit::Gen g(101);
    for (int t = 0; t < 200; ++t) {
        const auto p = g.point_module(g.integer(-8, 8));
        EXPECT_TRUE(check_relations(p).ok());
        EXPECT_EQ(hom_space(p, p).dimension, 1u);
    }
    for (const auto& e : standard_corpus()) EXPECT_TRUE(check_relations(e.rep).ok()) << e.name;
}

TEST(Properties, HomSelfNonzeroAndAdditive) {
    const auto corpus = standard_corpus();
    for (const auto& e : corpus) EXPECT_GE(hom_space(e.rep, e.rep).dimension, 1u) << e.name;
    testkit::Gen g(33);
    for (int t = 0; t < 60; ++t) {
        const auto& m = g.pick(corpus).rep;
        const auto& n = g.pick(corpus).rep;
        const auto& p = g.pick(corpus).rep;
        EXPECT_EQ(hom_space(direct_sum(m, n), p).dimension, hom_space(m, p).dimension + hom_space(n, p).dimension);
        EXPECT_EQ(hom_space(p, direct_sum(m, n)).dimension, hom_space(p, m).dimension + hom_space(p, n).dimension);
    }
}

TEST(P2Restrict, KeepsAB) {
    const auto p = point_module({1, 2, 3}, 7, 0);
    const auto r = p2_restrict(p);
    EXPECT_EQ(r.dims(), p.dims());
    for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(r.arrow(i), p.arrow(i));
    EXPECT_EQ(r, p2_restrict(point_module({1, 2, 3}, 0, 0)));
    EXPECT_TRUE(check_relations(r).ok());
    EXPECT_EQ(p2_restrict(pushforward_module(1, 0)).dims(), (Dims{3, 1, 0}));
    EXPECT_EQ(p2_restrict(simple_module(1, 0)).dims(), (Dims{0, 1, 0}));
    for (const auto& e : standard_corpus()) {
        const auto rr = p2_restrict(e.rep);
        EXPECT_TRUE(check_relations(rr).ok());
        for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(rr.arrow(i), e.rep.arrow(i));
    }
}

TEST(Sandwich, VectorizationIdentity) {
    testkit::Gen g(5);
    for (int t = 0; t < 30; ++t) {
        const auto r = static_cast<std::size_t>(g.integer(1, 4)), s = static_cast<std::size_t>(g.integer(1, 4));
        const auto u = static_cast<std::size_t>(g.integer(1, 4)), v = static_cast<std::size_t>(g.integer(1, 4));
        const QMatrix L = g.matrix(u, r), X = g.matrix(r, s), R = g.matrix(s, v);
        const QMatrix lhs = L * X * R;
        const QMatrix vecx(r * s, 1, X.data());
        EXPECT_EQ(QMatrix(u * v, 1, lhs.data()), sandwich_operator(L, R) * vecx);
    }
}
