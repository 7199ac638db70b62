#include "lp2/homalg.hpp"

#include "lp2/errors.hpp"
#include "lp2/linalg.hpp"

namespace lp2 {

std::string to_string(Side s) { return s == Side::Y ? "y" : "p2"; }

Side parse_side(const std::string& s) {
    if (s == "y" || s == "Y") return Side::Y;
    if (s == "p2" || s == "P2") return Side::P2;
    throw InputError("unknown side '" + s + "' (expected y or p2)");
}

std::vector<std::vector<HomBlock>> hom_complex_layout(const QuiverPresentation& q) {
    std::vector<std::vector<HomBlock>> layout;
    auto vertex_term = [] {
        std::vector<HomBlock> t;
        for (std::size_t v = 0; v < kVertexCount; ++v) t.push_back({"e" + std::to_string(v), v, v});
        return t;
    };
    layout.push_back(vertex_term());
    std::vector<HomBlock> arrows;
    for (const auto& a : q.arrows()) arrows.push_back({a.name, a.matrix_from(), a.matrix_to()});
    layout.push_back(std::move(arrows));
    std::vector<HomBlock> relations;
    for (const auto& r : q.relations()) relations.push_back({r.name, r.matrix_from, r.matrix_to});
    layout.push_back(std::move(relations));
    if (q.has_potential()) layout.push_back(vertex_term());
    return layout;
}

std::vector<std::int64_t> ExtComplex::term_dims() const {
    std::vector<std::int64_t> out;
    for (const auto& t : terms) out.push_back(static_cast<std::int64_t>(t.dimension));
    return out;
}

namespace {

std::size_t udim(const Dims& d, std::size_t v) { return static_cast<std::size_t>(d[v]); }

QMatrix product_chain(const std::vector<QMatrix>& mats, const std::vector<std::size_t>& word, std::size_t begin,
                      std::size_t end, std::size_t identity_size) {
    QMatrix acc = QMatrix::identity(identity_size);
    for (std::size_t l = begin; l < end; ++l) acc = mats[word[l]] * acc;
    return acc;
}

}  // namespace

ExtComplex build_hom_complex(const QuiverPresentation& q, const Dims& dm, const std::vector<QMatrix>& m,
                             const Dims& dn, const std::vector<QMatrix>& n) {
    ExtComplex cx;
    cx.side = q.has_potential() ? Side::Y : Side::P2;
    const auto layout = hom_complex_layout(q);
    std::vector<std::vector<std::size_t>> offsets;
    for (std::size_t deg = 0; deg < layout.size(); ++deg) {
        ExtTerm term;
        term.degree = static_cast<int>(deg);
        term.blocks = layout[deg];
        std::vector<std::size_t> off;
        for (const auto& b : layout[deg]) {
            off.push_back(term.dimension);
            const std::size_t sz = udim(dm, b.from_slot) * udim(dn, b.to_slot);
            term.block_dims.push_back(sz);
            term.dimension += sz;
        }
        offsets.push_back(std::move(off));
        cx.terms.push_back(std::move(term));
    }

    // d0: intertwiner defect.
    cx.differentials.push_back(intertwiner_defect(q, dm, m, dn, n));

    // d1: Leibniz linearization of each relation.
    QMatrix d1(cx.terms[2].dimension, cx.terms[1].dimension);
    for (std::size_t r = 0; r < q.relations().size(); ++r) {
        const auto& rel = q.relations()[r];
        for (const auto& t : rel.paths) {
            const auto& w = t.word;
            for (std::size_t l = 0; l < w.size(); ++l) {
                const auto& a = q.arrow(w[l]);
                // N_{y_m} ... N_{y_{l+1}} * psi * M_{y_{l-1}} ... M_{y_1}
                const QMatrix left = product_chain(n, w, l + 1, w.size(), udim(dn, a.matrix_to()));
                const QMatrix right = product_chain(m, w, 0, l, udim(dm, rel.matrix_from));
                d1.add_block(offsets[2][r], offsets[1][w[l]],
                             sandwich_operator(left, right) * Rational(t.coefficient));
            }
        }
    }
    cx.differentials.push_back(std::move(d1));

    if (q.has_potential()) {
        // d2(chi)_v = sum_{a from v} chi_{dW/da} M_a - sum_{a into v} N_a chi_{dW/da}.
        QMatrix d2(cx.terms[3].dimension, cx.terms[2].dimension);
        for (std::size_t i = 0; i < q.arrows().size(); ++i) {
            const auto& a = q.arrow(i);
            if (q.relations()[i].name != "dW/d" + a.name) {
                throw PostconditionError("relations are not indexed by arrows");
            }
            const std::size_t f = a.matrix_from(), t = a.matrix_to();
            d2.add_block(offsets[3][f], offsets[2][i], sandwich_operator(QMatrix::identity(udim(dn, f)), m[i]));
            d2.add_block(offsets[3][t], offsets[2][i], -sandwich_operator(n[i], QMatrix::identity(udim(dm, t))));
        }
        cx.differentials.push_back(std::move(d2));
    }

    for (std::size_t i = 0; i + 1 < cx.differentials.size(); ++i) {
        if (!(cx.differentials[i + 1] * cx.differentials[i]).is_zero()) {
            throw PostconditionError("d" + std::to_string(i + 1) + " * d" + std::to_string(i) +
                                     " != 0 in the Hom complex (inputs violate relations?)");
        }
    }
    return cx;
}

ExtComplex build_ext_complex_Y(const Representation& m, const Representation& n) {
    if (m.heart() != n.heart()) throw HeartMismatch(m.heart(), n.heart());
    return build_hom_complex(Representation::presentation(), m.dims(), m.arrows(), n.dims(), n.arrows());
}

ExtComplex build_ext_complex_P2(const P2Representation& m, const P2Representation& n) {
    return build_hom_complex(P2Representation::presentation(), m.dims(), m.arrows(), n.dims(), n.arrows());
}

std::vector<std::size_t> differential_ranks(const ExtComplex& c, const ScalarMode& mode) {
    std::vector<std::size_t> ranks;
    for (const auto& d : c.differentials) ranks.push_back(rank(d, mode));
    return ranks;
}

ExtDims ext_dims(const ExtComplex& c, const ScalarMode& mode) {
    const auto ranks = differential_ranks(c, mode);
    ExtDims out;
    for (std::size_t i = 0; i < c.terms.size(); ++i) {
        std::int64_t e = static_cast<std::int64_t>(c.terms[i].dimension);
        if (i < ranks.size()) e -= static_cast<std::int64_t>(ranks[i]);
        if (i > 0) e -= static_cast<std::int64_t>(ranks[i - 1]);
        out.push_back(e);
    }
    return out;
}

ExtDims ext_dims_Y(const Representation& m, const Representation& n, const ScalarMode& mode) {
    return ext_dims(build_ext_complex_Y(m, n), mode);
}

ExtDims ext_dims_P2(const P2Representation& m, const P2Representation& n, const ScalarMode& mode) {
    return ext_dims(build_ext_complex_P2(m, n), mode);
}

std::int64_t alternating_sum(const std::vector<std::int64_t>& v) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i % 2 == 0 ? 1 : -1) * v[i];
    return s;
}

std::int64_t euler_form_Y(const Dims& m, const Dims& n) {
    return 3 * ((m[0] * n[1] - m[1] * n[0]) + (m[1] * n[2] - m[2] * n[1]) + (m[2] * n[0] - m[0] * n[2]));
}

std::int64_t euler_form_P2(const Dims& m, const Dims& n) {
    return m[0] * n[0] + m[1] * n[1] + m[2] * n[2] - 3 * (m[1] * n[0] + m[2] * n[1]) + 3 * m[2] * n[0];
}

DualityCheck verify_cy3_duality(const Representation& m, const Representation& n, const ScalarMode& mode) {
    DualityCheck out;
    out.forward = ext_dims_Y(m, n, mode);
    out.backward = ext_dims_Y(n, m, mode);
    out.ok = out.forward.size() == 4 && out.backward.size() == 4;
    for (std::size_t i = 0; out.ok && i < 4; ++i) out.ok = out.forward[i] == out.backward[3 - i];
    return out;
}

TriangleReport verify_pushforward_triangle(const Representation& m, const ScalarMode& mode) {
    TriangleReport r;
    r.y_side = ext_dims_Y(m, m, mode);
    const auto p = p2_restrict(m);
    r.p2_side = ext_dims_P2(p, p, mode);
    auto pe = [&](int i) -> std::int64_t { return i >= 0 && i < 3 ? r.p2_side[static_cast<std::size_t>(i)] : 0; };
    for (int i = 0; i < 4; ++i) {
        r.predicted[static_cast<std::size_t>(i)] = pe(i) + pe(3 - i);
        if (r.predicted[static_cast<std::size_t>(i)] != r.y_side[static_cast<std::size_t>(i)]) r.flagged.push_back(i);
    }
    return r;
}

ExtReport ext_report(const Representation& m, const Representation& n, Side side, const ScalarMode& mode) {
    ExtReport r;
    r.side = side;
    r.dims_m = m.dims();
    r.dims_n = n.dims();
    if (side == Side::Y) {
        const auto cx = build_ext_complex_Y(m, n);
        r.term_dims = cx.term_dims();
        r.ext = ext_dims(cx, mode);
        r.euler = euler_form_Y(m.dims(), n.dims());
        r.cy3_ok = verify_cy3_duality(m, n, mode).ok;
    } else {
        if (m.heart() != n.heart()) throw HeartMismatch(m.heart(), n.heart());
        const auto cx = build_ext_complex_P2(p2_restrict(m), p2_restrict(n));
        r.term_dims = cx.term_dims();
        r.ext = ext_dims(cx, mode);
        r.euler = euler_form_P2(m.dims(), n.dims());
    }
    r.euler_matches = alternating_sum(r.ext) == r.euler;
    return r;
}

}  // namespace lp2
