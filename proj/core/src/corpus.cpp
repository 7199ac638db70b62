#include "lp2/corpus.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

#include "lp2/errors.hpp"
#include "lp2/homalg.hpp"
#include "lp2/linalg.hpp"
#include "lp2/oricalc.hpp"
#include "lp2/windows.hpp"

namespace lp2 {

std::vector<CorpusEntry> standard_corpus() {
    std::vector<CorpusEntry> c;
    for (std::size_t v = 0; v < 3; ++v) c.push_back({"S" + std::to_string(v), simple_module(v, 0)});
    c.push_back({"point(1:0:0;0)", point_module({1, 0, 0}, 0, 0)});
    c.push_back({"point(1:1:1;1)", point_module({1, 1, 1}, 1, 0)});
    c.push_back({"point(0:2:-1;1/3)", point_module({0, 2, -1}, Rational(1, 3), 0)});
    c.push_back({"pushforward(1)@0", pushforward_module(1, 0)});
    c.push_back({"pushforward(2)@0", pushforward_module(2, 0)});
    return c;
}

std::vector<CorpusEntry> triangle_corpus() {
    return {{"point(1:1:1;1)", point_module({1, 1, 1}, 1, 0)},
            {"S0", simple_module(0, 0)},
            {"pushforward(0)@0", pushforward_module(0, 0)},
            {"pushforward(1)@0", pushforward_module(1, 0)},
            {"pushforward(2)@0", pushforward_module(2, 0)}};
}

std::vector<std::pair<Representation, Representation>> random_sum_pairs(const std::vector<CorpusEntry>& pool,
                                                                        std::size_t count, std::uint64_t seed) {
    if (pool.empty()) throw InputError("empty corpus");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    auto draw = [&] {
        const auto& a = pool[pick(rng)];
        const auto& b = pool[pick(rng)];
        return direct_sum(a.rep, b.rep).with_label(a.name + "+" + b.name);
    };
    std::vector<std::pair<Representation, Representation>> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        auto m = draw();
        auto n = draw();
        out.emplace_back(std::move(m), std::move(n));
    }
    return out;
}

std::size_t CorpusResult::failures() const {
    std::size_t n = 0;
    for (const auto& r : rows) {
        for (auto c : r.cells) n += c == Cell::Fail;
    }
    return n;
}

namespace {

enum Col { kRelations, kHomSelf, kCy3, kEuler, kTriangle, kTwist, kExtTwist, kWindow, kModes, kIdentity, kCols };

const std::vector<std::string> kColumnNames = {"relations", "hom_self", "cy3",    "euler",  "triangle",
                                               "twist",     "ext_twist", "window", "modes", "identity"};

ExtDims from_ranks(const ExtComplex& c, const std::vector<std::size_t>& ranks) {
    ExtDims out;
    for (std::size_t i = 0; i < c.terms.size(); ++i) {
        auto e = static_cast<std::int64_t>(c.terms[i].dimension);
        if (i < ranks.size()) e -= static_cast<std::int64_t>(ranks[i]);
        if (i > 0) e -= static_cast<std::int64_t>(ranks[i - 1]);
        out.push_back(e);
    }
    return out;
}

std::string show(const ExtDims& e) {
    std::string s = "(";
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    return s + ")";
}

ScalarMode other_mode(const ScalarMode& m) {
    if (std::holds_alternative<RationalMode>(m)) return PrimeMode{kDefaultPrime};
    return RationalMode{};
}

struct PairData {
    ExtDims ext;
    bool modes_agree = true;
    bool euler_ok = true;
    std::string note;
};

PairData analyse_pair(const Representation& m, const Representation& n, const ScalarMode& mode) {
    PairData d;
    const auto alt = other_mode(mode);
    const auto cx = build_ext_complex_Y(m, n);
    const auto ranks = differential_ranks(cx, mode);
    d.ext = from_ranks(cx, ranks);
    d.modes_agree = ranks == differential_ranks(cx, alt);
    const auto pm = p2_restrict(m), pn = p2_restrict(n);
    const auto px = build_ext_complex_P2(pm, pn);
    const auto pranks = differential_ranks(px, mode);
    d.modes_agree = d.modes_agree && pranks == differential_ranks(px, alt);
    const bool ey = alternating_sum(d.ext) == euler_form_Y(m.dims(), n.dims());
    const bool ep = alternating_sum(from_ranks(px, pranks)) == euler_form_P2(m.dims(), n.dims());
    d.euler_ok = ey && ep;
    if (!ey) d.note = "euler_Y mismatch";
    if (!ep) d.note = "euler_P2 mismatch";
    return d;
}

struct RowBuilder {
    CorpusRow row;
    explicit RowBuilder(std::string name) {
        row.name = std::move(name);
        row.cells.assign(kCols, Cell::Skip);
    }
    void set(int col, bool ok, const std::string& why = {}) {
        auto& c = row.cells[static_cast<std::size_t>(col)];
        if (c == Cell::Fail) return;
        c = ok ? Cell::Pass : Cell::Fail;
        if (!ok) row.notes.push_back(kColumnNames[static_cast<std::size_t>(col)] + ": " + why);
    }
};

bool round_trip_ok(const Representation& orig, const Representation& back, std::string& why) {
    if (back.dims() != orig.dims() || back.heart() != orig.heart()) {
        why = "round trip changed dims or heart";
        return false;
    }
    const auto fwd = hom_space(orig, back);
    const auto bwd = hom_space(back, orig);
    if (fwd.dimension != 1 || bwd.dimension != 1 || !has_isomorphism_witness(fwd)) {
        why = "hom dims " + std::to_string(fwd.dimension) + "/" + std::to_string(bwd.dimension) + " or no iso";
        return false;
    }
    return true;
}

}  // namespace

CorpusResult run_corpus(const std::vector<CorpusEntry>& entries, const RunConfig& cfg) {
    CorpusResult result;
    result.columns = kColumnNames;
    result.mode = describe(cfg.mode);
    result.seed = cfg.seed;

    std::vector<RowBuilder> rows;
    std::vector<std::size_t> valid;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        rows.emplace_back(entries[i].name);
        const auto rc = check_relations(entries[i].rep);
        rows.back().set(kRelations, rc.ok(), rc.detail);
        if (rc.ok()) valid.push_back(i);
    }

    std::vector<std::vector<ExtDims>> ext(entries.size(), std::vector<ExtDims>(entries.size()));
    for (auto i : valid) {
        const auto& m = entries[i].rep;
        auto& rb = rows[i];
        const auto hs = hom_space(m, m);
        rb.set(kHomSelf, m.total_dim() == 0 || hs.dimension >= 1, "End is zero");
        for (auto j : valid) {
            const auto& n = entries[j].rep;
            if (m.heart() != n.heart()) continue;
            const auto pd = analyse_pair(m, n, cfg.mode);
            ext[i][j] = pd.ext;
            rb.set(kEuler, pd.euler_ok, entries[j].name + " " + pd.note);
            rb.set(kModes, pd.modes_agree, "ranks differ against " + entries[j].name);
        }
    }
    for (auto i : valid) {
        for (auto j : valid) {
            if (ext[i][j].empty() || ext[j][i].empty()) continue;
            bool ok = true;
            for (std::size_t d = 0; d < 4; ++d) ok = ok && ext[i][j][d] == ext[j][i][3 - d];
            rows[i].set(kCy3, ok, entries[j].name + " " + show(ext[i][j]) + " vs " + show(ext[j][i]));
        }
    }

    // Triangle check and windows, per object.
    std::vector<std::optional<Representation>> up(entries.size());
    for (auto i : valid) {
        const auto& m = entries[i].rep;
        auto& rb = rows[i];
        const auto tri = verify_pushforward_triangle(m, cfg.mode);
        rb.set(kTriangle, tri.holds(), "Y " + show(tri.y_side) + " vs P2 " + show(tri.p2_side));

        try {
            bool any = false;
            if (window_membership(m, TwistDirection::Up, cfg.mode).member) {
                any = true;
                up[i] = twist_up(m);
                std::string why;
                rb.set(kTwist, round_trip_ok(m, twist_down(*up[i]), why), "up/down " + why);
            }
            if (window_membership(m, TwistDirection::Down, cfg.mode).member) {
                any = true;
                std::string why;
                rb.set(kTwist, round_trip_ok(m, twist_up(twist_down(m)), why), "down/up " + why);
            }
            if (!any) rows[i].row.cells[kTwist] = Cell::Skip;

            const auto wv = certified_window(m, cfg.range_lo, cfg.range_hi);
            const auto bad = recursion_violations(wv);
            rb.set(kWindow, bad.empty(), bad.empty() ? "" : "violated at h_" + std::to_string(bad.front()));
        } catch (const Error& e) {
            rb.set(kTwist, false, e.what());
        }
    }
    for (auto i : valid) {
        if (!up[i]) continue;
        for (auto j : valid) {
            if (!up[j] || ext[i][j].empty()) continue;
            const auto e = ext_dims_Y(*up[i], *up[j], cfg.mode);
            rows[i].set(kExtTwist, e == ext[i][j],
                        entries[j].name + " " + show(ext[i][j]) + " -> " + show(e));
        }
    }

    // Seeded direct sums of corpus objects.
    {
        std::vector<CorpusEntry> pool;
        for (auto i : valid) pool.push_back(entries[i]);
        RowBuilder rb("random-sums(seed=" + std::to_string(cfg.seed) + ")");
        if (!pool.empty() && cfg.random_pairs > 0) {
            for (const auto& [m, n] : random_sum_pairs(pool, cfg.random_pairs, cfg.seed)) {
                if (m.heart() != n.heart()) continue;
                const auto a = analyse_pair(m, n, cfg.mode);
                const auto b = ext_dims_Y(n, m, cfg.mode);
                bool ok = true;
                for (std::size_t d = 0; d < 4; ++d) ok = ok && a.ext[d] == b[3 - d];
                rb.set(kCy3, ok, m.label() + " / " + n.label());
                rb.set(kEuler, a.euler_ok, m.label() + " / " + n.label() + " " + a.note);
                rb.set(kModes, a.modes_agree, m.label() + " / " + n.label());
            }
        }
        rows.push_back(std::move(rb));
    }

    // Symbolic identities.
    auto identity_row = [&](const std::string& name, const ProofReport& r, bool expect) {
        RowBuilder rb(name);
        std::string why = r.diff.empty() ? "" : r.diff.front().symbol + ": " + r.diff.front().lhs_form + " vs " +
                                                    r.diff.front().rhs_form;
        if (!expect) why = "negative control unexpectedly passed";
        rb.set(kIdentity, r.passed == expect, why);
        rows.push_back(std::move(rb));
    };
    identity_row("theorem3[" + std::to_string(cfg.range_lo) + "," + std::to_string(cfg.range_hi) + "]",
                 verify_theorem3(cfg.range_lo, cfg.range_hi), true);
    identity_row("theorem4", verify_theorem4(), true);
    identity_row("square-root", verify_square_root(0), true);
    identity_row("cocycle", verify_cocycle(0, true), true);
    identity_row("cocycle-control", verify_cocycle(0, false), false);

    for (auto& rb : rows) result.rows.push_back(std::move(rb.row));
    return result;
}

std::string render_text(const CorpusResult& r) {
    std::size_t w = 8;
    for (const auto& row : r.rows) w = std::max(w, row.name.size());
    std::ostringstream os;
    os << "mode: " << r.mode << "  seed: " << r.seed << "\n";
    os << std::string(w, ' ');
    for (const auto& c : r.columns) os << "  " << c;
    os << "\n";
    for (const auto& row : r.rows) {
        os << row.name << std::string(w - row.name.size(), ' ');
        for (std::size_t c = 0; c < r.columns.size(); ++c) {
            const char* mark = row.cells[c] == Cell::Pass ? "ok" : row.cells[c] == Cell::Fail ? "FAIL" : "-";
            const std::string m(mark);
            os << "  " << m << std::string(r.columns[c].size() > m.size() ? r.columns[c].size() - m.size() : 0, ' ');
        }
        os << "\n";
    }
    for (const auto& row : r.rows) {
        for (const auto& n : row.notes) os << "FAIL " << row.name << " " << n << "\n";
    }
    os << (r.passed() ? "all cells pass" : std::to_string(r.failures()) + " failing cell(s)") << "\n";
    return os.str();
}

}  // namespace lp2
