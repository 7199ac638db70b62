#include "lp2/windows.hpp"

#include "lp2/errors.hpp"
#include "lp2/linalg.hpp"

namespace lp2 {

namespace {

std::size_t udim(const Dims& d, std::size_t v) { return static_cast<std::size_t>(d[v]); }

std::int64_t srank(const QMatrix& m, const ScalarMode& mode) { return static_cast<std::int64_t>(rank(m, mode)); }

const QuiverPresentation& pres() { return Representation::presentation(); }

void check_twisted(const Representation& out, std::int64_t lhs, std::int64_t rhs, const char* what) {
    const auto rc = check_relations(out);
    if (!rc.ok()) throw PostconditionError(std::string(what) + " produced a module violating relations: " + rc.detail);
    if (lhs != rhs) {
        throw PostconditionError(std::string(what) + " broke the window recursion (" + std::to_string(lhs) +
                                 " != " + std::to_string(rhs) + ")");
    }
}

std::string ord_label(const std::string& label, const char* suffix) {
    return label.empty() ? std::string() : label + suffix;
}

}  // namespace

std::string to_string(TwistDirection d) { return d == TwistDirection::Up ? "up" : "down"; }

TwistDirection parse_direction(const std::string& s) {
    if (s == "up") return TwistDirection::Up;
    if (s == "down") return TwistDirection::Down;
    throw InputError("unknown twist direction '" + s + "' (expected up or down)");
}

KoszulMaps koszul_maps(const Representation& rep) {
    const auto& q = pres();
    const auto& d = rep.dims();
    const std::size_t h0 = udim(d, 0), h1 = udim(d, 1), h2 = udim(d, 2);
    KoszulMaps k{QMatrix(h0, 3 * h1), QMatrix(3 * h1, 3 * h2)};
    for (std::size_t i = 0; i < 3; ++i) k.kappa1.set_block(0, i * h1, rep.arrow(arrow_a(i)));
    for (std::size_t row = 0; row < 3; ++row) {
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                const int e = q.epsilon(i, j, row);
                if (e != 0) k.kappa2.add_block(row * h1, i * h2, rep.arrow(arrow_b(j)) * Rational(e));
            }
        }
    }
    if (!(k.kappa1 * k.kappa2).is_zero()) throw PostconditionError("kappa1 * kappa2 != 0 (relations violated?)");
    return k;
}

DownMaps down_maps(const Representation& rep) {
    const auto& q = pres();
    const auto& d = rep.dims();
    const std::size_t h0 = udim(d, 0), h1 = udim(d, 1), h2 = udim(d, 2);
    DownMaps m{QMatrix(3 * h1, h2), QMatrix(3 * h0, 3 * h1)};
    for (std::size_t j = 0; j < 3; ++j) m.bstack.set_block(j * h1, 0, rep.arrow(arrow_b(j)));
    for (std::size_t row = 0; row < 3; ++row) {
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                const int e = q.epsilon(i, j, row);
                if (e != 0) m.sigma.add_block(row * h0, i * h1, rep.arrow(arrow_a(j)) * Rational(e));
            }
        }
    }
    if (!(m.sigma * m.bstack).is_zero()) throw PostconditionError("sigma * bstack != 0 (relations violated?)");
    return m;
}

Membership window_membership(const Representation& rep, TwistDirection dir, const ScalarMode& mode) {
    Membership m;
    const auto& d = rep.dims();
    if (dir == TwistDirection::Up) {
        m.target_heart = rep.heart() + 1;
        const auto k = koszul_maps(rep);
        const std::int64_t r1 = srank(k.kappa1, mode), r2 = srank(k.kappa2, mode);
        const std::int64_t ker1 = 3 * d[1] - r1;
        m.ranks = {{"rank_kappa1", r1}, {"rank_kappa2", r2}, {"dim_ker_kappa1", ker1}, {"dim_target", d[0]}};
        const bool surj = r1 == d[0];
        const bool exact = ker1 == r2;
        if (!surj) {
            m.diagnostics.push_back("kappa1 not surjective: rank " + std::to_string(r1) + " < h_" +
                                    std::to_string(rep.heart()) + " = " + std::to_string(d[0]));
        }
        if (!exact) {
            m.diagnostics.push_back("not exact at slot(n+1)^3: dim ker kappa1 = " + std::to_string(ker1) +
                                    ", rank kappa2 = " + std::to_string(r2));
        }
        m.member = surj && exact;
    } else {
        m.target_heart = rep.heart() - 1;
        const auto k = down_maps(rep);
        const std::int64_t rb = srank(k.bstack, mode), rs = srank(k.sigma, mode);
        const std::int64_t kers = 3 * d[1] - rs;
        m.ranks = {{"rank_bstack", rb}, {"rank_sigma", rs}, {"dim_ker_sigma", kers}, {"dim_source", d[2]}};
        const bool inj = rb == d[2];
        const bool exact = kers == rb;
        if (!inj) {
            m.diagnostics.push_back("bstack not injective: rank " + std::to_string(rb) + " < h_" +
                                    std::to_string(rep.heart() + 2) + " = " + std::to_string(d[2]));
        }
        if (!exact) {
            m.diagnostics.push_back("not exact at slot(n+1)^3: dim ker sigma = " + std::to_string(kers) +
                                    ", rank bstack = " + std::to_string(rb));
        }
        m.member = inj && exact;
    }
    return m;
}

QMatrix solve_in_basis(const QMatrix& basis, const QMatrix& w) {
    const std::size_t r = basis.cols();
    if (w.rows() != basis.rows()) throw PostconditionError("solve_in_basis: row mismatch");
    if (r == 0) {
        if (!w.is_zero()) throw PostconditionError("vector outside the zero subspace");
        return QMatrix(0, w.cols());
    }
    const auto red = rref(hconcat(basis, w));
    if (red.pivots.size() != r || (!red.pivots.empty() && red.pivots.back() >= r)) {
        throw PostconditionError("vector outside the kernel basis span");
    }
    return red.reduced.block(0, r, r, w.cols());
}

Representation twist_up(const Representation& rep) {
    const auto mem = window_membership(rep, TwistDirection::Up);
    if (!mem.member) {
        std::string msg = "not in heart " + std::to_string(mem.target_heart) + ":";
        for (const auto& s : mem.diagnostics) msg += " " + s + ";";
        throw MembershipError(msg);
    }
    const auto& d = rep.dims();
    const std::size_t h1 = udim(d, 1), h2 = udim(d, 2);
    const auto k = koszul_maps(rep);
    const QMatrix kernel = nullspace(k.kappa2);  // 3h2 x h3
    const std::size_t h3 = kernel.cols();

    std::vector<QMatrix> arrows(9);
    for (std::size_t i = 0; i < 3; ++i) arrows[arrow_a(i)] = rep.arrow(arrow_b(i));
    for (std::size_t j = 0; j < 3; ++j) arrows[arrow_b(j)] = kernel.block(j * h2, 0, h2, h3);
    for (std::size_t c = 0; c < 3; ++c) {
        // v in slot n+1  ->  (C_j A_c v)_j in ker kappa2
        QMatrix w(3 * h2, h1);
        for (std::size_t j = 0; j < 3; ++j) w.set_block(j * h2, 0, rep.arrow(arrow_c(j)) * rep.arrow(arrow_a(c)));
        arrows[arrow_c(c)] = solve_in_basis(kernel, w);
    }
    Dims nd{d[1], d[2], static_cast<std::int64_t>(h3)};
    Representation out(rep.heart() + 1, nd, std::move(arrows), ord_label(rep.label(), "(+1)"));
    check_twisted(out, d[0], 3 * d[1] - 3 * d[2] + nd[2], "twist_up");
    return out;
}

Representation twist_down(const Representation& rep) {
    const auto mem = window_membership(rep, TwistDirection::Down);
    if (!mem.member) {
        std::string msg = "not in heart " + std::to_string(mem.target_heart) + ":";
        for (const auto& s : mem.diagnostics) msg += " " + s + ";";
        throw MembershipError(msg);
    }
    const auto& d = rep.dims();
    const std::size_t h0 = udim(d, 0);
    const auto m = down_maps(rep);
    const QMatrix quot = left_nullspace(m.sigma);  // hm x 3h0
    const std::size_t hm = quot.rows();
    const QMatrix section = hm == 0 ? QMatrix(3 * h0, 0) : rref_section(quot);

    QMatrix crow(udim(d, 2), 3 * h0);
    for (std::size_t j = 0; j < 3; ++j) crow.set_block(0, j * h0, rep.arrow(arrow_c(j)));

    std::vector<QMatrix> arrows(9);
    for (std::size_t i = 0; i < 3; ++i) arrows[arrow_a(i)] = quot.block(0, i * h0, hm, h0);
    for (std::size_t j = 0; j < 3; ++j) arrows[arrow_b(j)] = rep.arrow(arrow_a(j));
    for (std::size_t c = 0; c < 3; ++c) arrows[arrow_c(c)] = rep.arrow(arrow_b(c)) * crow * section;

    Dims nd{static_cast<std::int64_t>(hm), d[0], d[1]};
    Representation out(rep.heart() - 1, nd, std::move(arrows), ord_label(rep.label(), "(-1)"));
    check_twisted(out, nd[0], 3 * d[0] - 3 * d[1] + d[2], "twist_down");
    return out;
}

Representation twist(const Representation& rep, TwistDirection dir) {
    return dir == TwistDirection::Up ? twist_up(rep) : twist_down(rep);
}

std::int64_t WindowVector::at(int k) const {
    auto it = values.find(k);
    if (it == values.end()) throw InputError("h_" + std::to_string(k) + " is not known");
    return it->second;
}

WindowVector window_of(const Representation& rep) {
    WindowVector wv;
    wv.base = rep.heart();
    for (int i = 0; i < 3; ++i) {
        wv.values[rep.heart() + i] = rep.dims()[static_cast<std::size_t>(i)];
        wv.certified.insert(rep.heart() + i);
    }
    return wv;
}

WindowVector certified_window(const Representation& rep, int lo, int hi) {
    WindowVector wv = window_of(rep);
    auto record = [&](const Representation& r) {
        for (int i = 0; i < 3; ++i) {
            wv.values[r.heart() + i] = r.dims()[static_cast<std::size_t>(i)];
            wv.certified.insert(r.heart() + i);
        }
    };
    Representation cur = rep;
    while (cur.heart() < hi && window_membership(cur, TwistDirection::Up).member) {
        cur = twist_up(cur);
        record(cur);
    }
    cur = rep;
    while (cur.heart() > lo && window_membership(cur, TwistDirection::Down).member) {
        cur = twist_down(cur);
        record(cur);
    }
    return wv;
}

std::vector<int> recursion_violations(const WindowVector& wv) {
    std::vector<int> bad;
    for (const int k : wv.certified) {
        if (wv.is_certified(k + 1) && wv.is_certified(k + 2) && wv.is_certified(k + 3)) {
            if (wv.at(k) != 3 * wv.at(k + 1) - 3 * wv.at(k + 2) + wv.at(k + 3)) bad.push_back(k);
        }
    }
    return bad;
}

WindowVector extend_window(const WindowVector& wv, int k) {
    if (wv.known(k)) return wv;
    if (wv.values.empty()) throw InputError("cannot extend an empty window");
    WindowVector out = wv;
    const bool upward = k > wv.values.rbegin()->first;
    if (!upward && k > wv.values.begin()->first) {
        throw InputError("h_" + std::to_string(k) + " lies inside a gap of the window");
    }
    const int s = upward ? 1 : -1;
    int edge = upward ? wv.values.rbegin()->first : wv.values.begin()->first;
    for (int i = 1; i <= 2; ++i) {
        if (!wv.known(edge - s * i)) {
            throw InputError("extend_window needs three consecutive known values next to h_" + std::to_string(k));
        }
    }
    if (wv.is_certified(edge) && wv.is_certified(edge - s) && wv.is_certified(edge - 2 * s) &&
        wv.is_certified(edge - 3 * s)) {
        const int lo = upward ? edge - 3 : edge;
        if (wv.at(lo) != 3 * wv.at(lo + 1) - 3 * wv.at(lo + 2) + wv.at(lo + 3)) {
            throw InputError("window recursion violated at h_" + std::to_string(lo) + ".." + std::to_string(lo + 3) +
                             ": " + std::to_string(wv.at(lo)) + " != " +
                             std::to_string(3 * wv.at(lo + 1) - 3 * wv.at(lo + 2) + wv.at(lo + 3)));
        }
    }
    while (edge != k) {
        const int next = edge + s;
        std::int64_t v;
        if (upward) {
            v = out.at(next - 3) - 3 * out.at(next - 2) + 3 * out.at(next - 1);
        } else {
            v = 3 * out.at(next + 1) - 3 * out.at(next + 2) + out.at(next + 3);
        }
        out.values[next] = v;
        edge = next;
    }
    return out;
}

}  // namespace lp2
