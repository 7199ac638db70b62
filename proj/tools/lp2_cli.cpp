// lp2: command-line front end for the local P^2 library.
//
// Exit codes: 0 pass, 1 identity or corpus failure, 2 input error (including a refused
// twist), 3 internal postcondition failure.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "lp2/corpus.hpp"
#include "lp2/errors.hpp"
#include "lp2/homalg.hpp"
#include "lp2/json_io.hpp"
#include "lp2/oricalc.hpp"
#include "lp2/quiver.hpp"
#include "lp2/windows.hpp"

namespace {

using namespace lp2;

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct Globals {
    std::vector<std::string> mode{"rational"};
    std::uint64_t seed = kDefaultSeed;
    std::string format = "text";
    std::vector<int> range;
};

RunConfig make_config(const Globals& g) {
    RunConfig cfg;
    if (g.mode.empty()) throw InputError("--mode needs a value");
    if (g.mode[0] == "rational") {
        if (g.mode.size() != 1) throw InputError("--mode rational takes no prime");
        cfg.mode = RationalMode{};
    } else if (g.mode[0] == "prime") {
        std::uint64_t p = kDefaultPrime;
        if (g.mode.size() == 2) {
            try {
                std::size_t used = 0;
                p = std::stoull(g.mode[1], &used);
                if (used != g.mode[1].size()) throw std::invalid_argument("trailing text");
            } catch (const std::logic_error&) {
                throw InputError("bad prime '" + g.mode[1] + "'");
            }
        }
        try {
            cfg.mode = make_prime_mode(p);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    } else {
        throw InputError("unknown mode '" + g.mode[0] + "' (expected rational or prime <p>)");
    }
    if (!g.range.empty()) {
        cfg.range_lo = g.range[0];
        cfg.range_hi = g.range[1];
        if (cfg.range_hi < cfg.range_lo) throw InputError("--range needs lo <= hi");
    }
    if (g.format == "json") {
        cfg.format = OutputFormat::Json;
    } else if (g.format != "text") {
        throw InputError("unknown format '" + g.format + "'");
    }
    cfg.seed = g.seed;
    return cfg;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

Rational rational_arg(const std::string& s) {
    try {
        return parse_fraction(s);
    } catch (const std::invalid_argument&) {
        throw InputError("'" + s + "' is not an integer or p/q fraction");
    }
}

Dims dims_arg(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() != 3) throw InputError("dims must look like a,b,c");
    Dims d{};
    for (std::size_t i = 0; i < 3; ++i) {
        const Rational q = rational_arg(parts[i]);
        if (q.get_den() != 1 || q < 0) throw InputError("dims must be nonnegative integers");
        d[i] = q.get_num().get_si();
    }
    return d;
}

std::string dims_str(const Dims& d) {
    return "(" + std::to_string(d[0]) + "," + std::to_string(d[1]) + "," + std::to_string(d[2]) + ")";
}

std::string vec_str(const std::vector<std::int64_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

Representation load_valid(const std::string& path) {
    auto rep = read_representation(path);
    const auto rc = check_relations(rep);
    if (!rc.ok()) throw InputError(path + ": " + rc.detail);
    return rep;
}

void emit_rep(const Representation& rep, const std::string& out) {
    const auto rc = check_relations(rep);
    if (out.empty()) {
        std::cout << to_json(rep).dump(2) << '\n';
    } else {
        write_representation(rep, out);
        // Re-read to confirm the file round-trips exactly.
        if (!(read_representation(out) == rep)) throw PostconditionError("JSON round trip changed " + out);
    }
    std::ostream& log = out.empty() ? std::cerr : std::cout;
    log << (rep.label().empty() ? "representation" : rep.label()) << ": heart " << rep.heart() << ", dims "
        << dims_str(rep.dims()) << ", relations " << (rc.ok() ? "ok" : "VIOLATED " + rc.detail) << '\n';
}

void print_report(const ProofReport& r, const RunConfig& cfg) {
    if (cfg.format == OutputFormat::Json) {
        std::cout << stamped(to_json(r)).dump(2) << '\n';
        return;
    }
    std::cout << r.identity << ": " << (r.passed ? "PASS" : "FAIL") << "  window [" << r.window_lo << ", "
              << r.window_hi << "]\n";
    for (const auto& w : r.witness) std::cout << "  " << w << '\n';
    if (!r.diff.empty()) {
        std::cout << "  differing symbols:\n";
        for (const auto& d : r.diff) {
            std::cout << "    " << d.context << "  " << d.symbol << ": lhs " << d.lhs_form << "  rhs " << d.rhs_form
                      << '\n';
        }
    }
}

void print_membership(const Membership& m, std::ostream& os) {
    os << "membership in heart " << m.target_heart << ": " << (m.member ? "yes" : "no") << '\n';
    for (const auto& [k, v] : m.ranks) os << "  " << k << " = " << v << '\n';
    for (const auto& d : m.diagnostics) os << "  " << d << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact homological algebra for the local P^2 quiver with potential"};
    app.set_version_flag("--version", lp2::version());
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--mode", g.mode, "rational | prime [p]")->expected(1, 2);
    app.add_option("--seed", g.seed, "seed for sampled corpora");
    app.add_option("--format", g.format, "text | json");
    app.add_option("--range", g.range, "window range lo hi")->expected(2);

    std::function<int()> action;

    // mk
    auto* mk = app.add_subcommand("mk", "construct a representation");
    mk->require_subcommand(1);
    std::string out;
    int heart = 0;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-o,--out", out, "output file (stdout if omitted)");
        sub->add_option("--heart", heart, "heart index n");
    };
    std::string point_spec, t_spec = "0";
    auto* mk_point = mk->add_subcommand("point", "point module of (x0:x1:x2) with fiber coordinate t");
    mk_point->add_option("coords", point_spec, "x0:x1:x2 (integers or p/q)")->required();
    mk_point->add_option("--t", t_spec, "fiber coordinate");
    add_common(mk_point);
    mk_point->callback([&] {
        action = [&] {
            const auto parts = split(point_spec, ':');
            if (parts.size() != 3) throw InputError("point must look like x0:x1:x2");
            const std::array<Rational, 3> p{rational_arg(parts[0]), rational_arg(parts[1]), rational_arg(parts[2])};
            emit_rep(point_module(p, rational_arg(t_spec), heart), out);
            return 0;
        };
    });
    int degree = 0;
    auto* mk_push = mk->add_subcommand("pushforward", "O(d) on the zero section");
    mk_push->add_option("d", degree, "degree d >= 0")->required();
    add_common(mk_push);
    mk_push->callback([&] {
        action = [&] {
            emit_rep(pushforward_module(degree, heart), out);
            return 0;
        };
    });
    int vertex = 0;
    auto* mk_simple = mk->add_subcommand("simple", "vertex simple S_v");
    mk_simple->add_option("vertex", vertex, "0, 1 or 2")->required()->check(CLI::Range(0, 2));
    add_common(mk_simple);
    mk_simple->callback([&] {
        action = [&] {
            emit_rep(simple_module(static_cast<std::size_t>(vertex), heart), out);
            return 0;
        };
    });
    std::string sum_a, sum_b;
    auto* mk_sum = mk->add_subcommand("sum", "direct sum of two representation files");
    mk_sum->add_option("first", sum_a)->required();
    mk_sum->add_option("second", sum_b)->required();
    mk_sum->add_option("-o,--out", out, "output file (stdout if omitted)");
    mk_sum->callback([&] {
        action = [&] {
            emit_rep(direct_sum(load_valid(sum_a), load_valid(sum_b)), out);
            return 0;
        };
    });

    // ext
    std::string file_m, file_n, side = "y";
    auto* ext = app.add_subcommand("ext", "Ext dimensions between two representations");
    ext->add_option("M", file_m)->required();
    ext->add_option("N", file_n)->required();
    ext->add_option("--side", side, "y | p2");
    ext->callback([&] {
        action = [&] {
            const auto cfg = make_config(g);
            const auto r = ext_report(load_valid(file_m), load_valid(file_n), parse_side(side), cfg.mode);
            if (cfg.format == OutputFormat::Json) {
                auto j = to_json(r);
                j["mode"] = describe(cfg.mode);
                std::cout << stamped(j).dump(2) << '\n';
            } else {
                std::cout << "side " << to_string(r.side) << "  dims_M " << dims_str(r.dims_m) << "  dims_N "
                          << dims_str(r.dims_n) << '\n'
                          << "term dims " << vec_str(r.term_dims) << '\n'
                          << "ext dims  " << vec_str(r.ext) << '\n'
                          << "euler     " << r.euler << (r.euler_matches ? " (matches)" : " (MISMATCH)") << '\n';
                if (r.cy3_ok) std::cout << "cy3       " << (*r.cy3_ok ? "ok" : "FAILED") << '\n';
            }
            const bool ok = r.euler_matches && r.cy3_ok.value_or(true);
            return ok ? 0 : kExitInternal;
        };
    });

    // euler
    std::string dm, dn;
    auto* euler = app.add_subcommand("euler", "closed-form Euler pairing of two dimension vectors");
    euler->add_option("m", dm, "a,b,c")->required();
    euler->add_option("n", dn, "a,b,c")->required();
    euler->add_option("--side", side, "y | p2");
    euler->callback([&] {
        action = [&] {
            const auto cfg = make_config(g);
            const Dims a = dims_arg(dm), b = dims_arg(dn);
            const Side s = parse_side(side);
            const auto v = s == Side::Y ? euler_form_Y(a, b) : euler_form_P2(a, b);
            if (cfg.format == OutputFormat::Json) {
                std::cout << stamped({{"side", to_string(s)}, {"dims_M", a}, {"dims_N", b}, {"euler", v}}).dump(2)
                          << '\n';
            } else {
                std::cout << v << '\n';
            }
            return 0;
        };
    });

    // orichar
    int char_heart = 0;
    std::string eval_dims;
    bool geometric = false;
    std::string rewrite_dir;
    std::optional<int> rewrite_base;
    auto* orichar = app.add_subcommand("orichar", "determinant characters");
    orichar->add_option("--heart", char_heart, "heart index n");
    orichar->add_flag("--geometric", geometric, "P^2-side character instead of ori_char");
    orichar->add_option("--rewrite", rewrite_dir, "apply a Koszul rewrite: up | down");
    orichar->add_option("--base", rewrite_base, "base index of the rewrite (default: heart)");
    orichar->add_option("--eval", eval_dims, "evaluate at h_n,h_{n+1},h_{n+2}");
    orichar->callback([&] {
        action = [&] {
            const auto cfg = make_config(g);
            DetCharacter c = geometric ? geometric_char() : ori_char(char_heart);
            const int base = geometric ? 0 : char_heart;
            if (!rewrite_dir.empty()) {
                const auto d = rewrite_dir == "up"     ? RewriteDirection::Up
                               : rewrite_dir == "down" ? RewriteDirection::Down
                                                       : throw InputError("--rewrite expects up or down");
                c = koszul_rewrite(c, rewrite_base.value_or(base), d);
            }
            json j = {{"character", to_json(c)}};
            if (!eval_dims.empty()) {
                const auto vals = c.evaluate(window_assignment(base, dims_arg(eval_dims)));
                json ev = json::object();
                for (const auto& [s, v] : vals) ev[symbol_name(s)] = v.get_si();
                j["evaluated"] = ev;
            }
            if (cfg.format == OutputFormat::Json) {
                std::cout << stamped(j).dump(2) << '\n';
            } else {
                std::cout << c.to_string() << '\n';
                if (j.contains("evaluated")) {
                    for (const auto& [k, v] : j["evaluated"].items()) std::cout << "  " << k << " = " << v << '\n';
                }
            }
            return 0;
        };
    });

    // twist
    std::string twist_file, twist_dir;
    auto* tw = app.add_subcommand("twist", "re-present a module in the adjacent heart");
    tw->add_option("file", twist_file)->required();
    tw->add_option("direction", twist_dir, "up | down")->required();
    tw->add_option("-o,--out", out, "output file (stdout if omitted)");
    tw->callback([&] {
        action = [&] {
            const auto cfg = make_config(g);
            const auto rep = load_valid(twist_file);
            const auto dir = parse_direction(twist_dir);
            const auto m = window_membership(rep, dir, cfg.mode);
            if (!m.member) {
                std::cerr << "twist " << to_string(dir) << " refused\n";
                print_membership(m, std::cerr);
                return kExitInput;
            }
            emit_rep(twist(rep, dir), out);
            return 0;
        };
    });

    // window
    std::string window_file;
    std::optional<int> extend_to;
    auto* win = app.add_subcommand("window", "window vector of a module (or of a window JSON file)");
    win->add_option("file", window_file, "representation or window-vector JSON")->required();
    win->add_option("--extend", extend_to, "extend to index k by the Koszul recursion");
    win->callback([&] {
        action = [&] {
            const auto cfg = make_config(g);
            WindowVector wv;
            std::optional<Representation> rep;
            {
                std::ifstream in(window_file);
                if (!in) throw InputError("cannot open " + window_file);
                json j;
                try {
                    in >> j;
                } catch (const json::exception& e) {
                    throw InputError(window_file + ": " + e.what());
                }
                if (j.contains("base")) {
                    wv = window_from_json(j);
                } else {
                    rep = representation_from_json(j);
                    const auto rc = check_relations(*rep);
                    if (!rc.ok()) throw InputError(window_file + ": " + rc.detail);
                    wv = g.range.empty() ? window_of(*rep) : certified_window(*rep, cfg.range_lo, cfg.range_hi);
                }
            }
            const auto bad = recursion_violations(wv);
            if (extend_to) wv = extend_window(wv, *extend_to);
            json j = to_json(wv);
            if (rep) {
                j["up"] = to_json(window_membership(*rep, TwistDirection::Up, cfg.mode));
                j["down"] = to_json(window_membership(*rep, TwistDirection::Down, cfg.mode));
            }
            j["recursion_violations"] = bad;
            if (cfg.format == OutputFormat::Json) {
                std::cout << stamped(j).dump(2) << '\n';
            } else {
                for (const auto& [k, h] : wv.values) {
                    std::cout << "h_" << k << " = " << h << (wv.is_certified(k) ? "" : "  (extrapolated)") << '\n';
                }
                for (int k : bad) std::cout << "recursion violated at h_" << k << ".." << k + 3 << '\n';
            }
            return bad.empty() ? 0 : kExitFail;
        };
    });

    // verify
    std::string identity;
    bool negative = false;
    auto* ver = app.add_subcommand("verify", "symbolic verification of the orientation identities");
    ver->add_option("identity", identity, "theorem3 | theorem4 | square-root | cocycle")
        ->required()
        ->check(CLI::IsMember({"theorem3", "theorem4", "square-root", "cocycle"}));
    ver->add_option("--heart", char_heart, "heart for square-root and cocycle");
    ver->add_flag("--negative-control", negative, "run the deliberately broken variant (expected to fail)");
    ver->callback([&] {
        action = [&] {
            auto cfg = make_config(g);
            if (g.range.empty() && identity == "theorem3") {
                cfg.range_lo = 0;
                cfg.range_hi = 1;
            }
            ProofReport r;
            if (identity == "theorem3") {
                if (cfg.range_hi <= cfg.range_lo) throw InputError("theorem3 needs a range with hi > lo");
                if (negative) {
                    r = verify_theorem3(cfg.range_lo, cfg.range_hi, corrupted_ori_char);
                } else {
                    r = verify_theorem3(cfg.range_lo, cfg.range_hi);
                }
            } else if (identity == "theorem4") {
                if (negative) throw InputError("theorem4 has no negative control");
                r = verify_theorem4();
            } else if (identity == "square-root") {
                if (negative) throw InputError("square-root has no negative control");
                r = verify_square_root(char_heart);
            } else {
                r = verify_cocycle(char_heart, !negative);
            }
            print_report(r, cfg);
            return r.passed ? 0 : kExitFail;
        };
    });

    // corpus
    std::vector<std::string> fixtures;
    std::size_t pairs = 100;
    auto* corp = app.add_subcommand("corpus", "run the regression corpus and print a pass/fail matrix");
    corp->add_option("--fixture", fixtures, "extra representation files to include");
    corp->add_option("--pairs", pairs, "number of seeded direct-sum pairs");
    corp->callback([&] {
        action = [&] {
            auto cfg = make_config(g);
            cfg.random_pairs = pairs;
            auto entries = standard_corpus();
            for (const auto& f : fixtures) {
                auto rep = read_representation(f);
                entries.push_back({f, std::move(rep)});
            }
            const auto r = run_corpus(entries, cfg);
            if (cfg.format == OutputFormat::Json) {
                json rows = json::array();
                for (const auto& row : r.rows) {
                    json cells = json::object();
                    for (std::size_t c = 0; c < r.columns.size(); ++c) {
                        cells[r.columns[c]] = row.cells[c] == Cell::Pass   ? "pass"
                                              : row.cells[c] == Cell::Fail ? "fail"
                                                                           : "skip";
                    }
                    rows.push_back({{"name", row.name}, {"cells", cells}, {"notes", row.notes}});
                }
                std::cout << stamped({{"mode", r.mode}, {"seed", r.seed}, {"failures", r.failures()}, {"rows", rows}})
                                 .dump(2)
                          << '\n';
            } else {
                std::cout << render_text(r);
            }
            return r.passed() ? 0 : kExitFail;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }
    try {
        return action ? action() : kExitInput;
    } catch (const PostconditionError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
