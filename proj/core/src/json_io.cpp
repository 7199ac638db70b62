#include "lp2/json_io.hpp"

#include <fstream>
#include <sstream>

#include "lp2/errors.hpp"

namespace lp2 {

std::string version() { return LP2_VERSION; }

json conventions() {
    return {
        {"arrow_directions", "right-module: A_i slot1->slot0, B_j slot2->slot1, C_k slot0->slot2"},
        {"epsilon", "read off the signed terms c_k b_j a_i of W"},
        {"ext_orientation", "deg1 = Hom(M_src, N_tgt) over arrows, deg2 = Hom(M_src, N_tgt) over relations"},
        {"det_parity", "det(C) = sum_i (-1)^i char(C^i); Hom(V_a, V_b) -> h_a D_b - h_b D_a"},
        {"twist_kernel", "kappa2[k][i] = sum_j eps(i,j,k) B_j; kernel basis in pivot order"},
    };
}

json stamped(json report) {
    report["version"] = version();
    report["conventions"] = conventions();
    return report;
}

json to_json(const Representation& rep) {
    const auto& q = Representation::presentation();
    json mats = json::object();
    for (std::size_t i = 0; i < q.arrows().size(); ++i) {
        json flat = json::array();
        for (const auto& x : rep.arrow(i).data()) flat.push_back(to_fraction_string(x));
        mats[q.arrow(i).name] = std::move(flat);
    }
    return {{"heart", rep.heart()},
            {"dims", {rep.dims()[0], rep.dims()[1], rep.dims()[2]}},
            {"matrices", std::move(mats)},
            {"label", rep.label()}};
}

Representation representation_from_json(const json& j) {
    try {
        if (!j.is_object()) throw InputError("representation must be a JSON object");
        const int heart = j.at("heart").get<int>();
        const auto& jd = j.at("dims");
        if (!jd.is_array() || jd.size() != 3) throw InputError("dims must be an array of 3 integers");
        Dims dims{};
        for (std::size_t v = 0; v < 3; ++v) {
            dims[v] = jd[v].get<std::int64_t>();
            if (dims[v] < 0) throw InputError("negative dimension");
        }
        const auto& q = Representation::presentation();
        const auto& jm = j.at("matrices");
        if (!jm.is_object()) throw InputError("matrices must be an object");
        for (const auto& [name, unused] : jm.items()) q.arrow_index(name);
        std::vector<QMatrix> arrows;
        for (const auto& a : q.arrows()) {
            const auto [rows, cols] = arrow_shape(a, dims);
            if (!jm.contains(a.name)) throw ShapeError("missing matrix " + a.name);
            const auto& flat = jm.at(a.name);
            if (!flat.is_array() || flat.size() != rows * cols) {
                throw ShapeError("matrix " + a.name + " must have " + std::to_string(rows * cols) + " entries");
            }
            std::vector<Rational> data;
            data.reserve(flat.size());
            for (const auto& e : flat) {
                if (!e.is_string()) throw InputError("matrix entries must be \"p/q\" strings");
                data.push_back(parse_fraction(e.get<std::string>()));
            }
            arrows.emplace_back(rows, cols, std::move(data));
        }
        std::string label = j.contains("label") && j.at("label").is_string() ? j.at("label").get<std::string>() : "";
        return Representation(heart, dims, std::move(arrows), std::move(label));
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed representation: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("bad matrix entry: ") + e.what());
    }
}

Representation read_representation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
    return representation_from_json(j);
}

void write_representation(const Representation& rep, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << to_json(rep).dump(2) << '\n';
}

namespace {

json dims_json(const Dims& d) { return {d[0], d[1], d[2]}; }

}  // namespace

json to_json(const ExtReport& r) {
    json j = {{"side", to_string(r.side)},
              {"dims_M", dims_json(r.dims_m)},
              {"dims_N", dims_json(r.dims_n)},
              {"term_dims", r.term_dims},
              {"ext_dims", r.ext},
              {"euler", r.euler},
              {"euler_matches", r.euler_matches}};
    j["cy3_ok"] = r.cy3_ok ? json(*r.cy3_ok) : json(nullptr);
    return j;
}

json to_json(const ProofReport& r) {
    json diff = json::array();
    for (const auto& d : r.diff) {
        diff.push_back({{"symbol", d.symbol}, {"lhs_form", d.lhs_form}, {"rhs_form", d.rhs_form}, {"context", d.context}});
    }
    return {{"identity", r.identity},
            {"status", r.passed ? "pass" : "fail"},
            {"window", {r.window_lo, r.window_hi}},
            {"diff", std::move(diff)},
            {"witness", r.witness}};
}

json to_json(const WindowVector& wv) {
    json values = json::object();
    for (const auto& [k, h] : wv.values) values[std::to_string(k)] = h;
    return {{"base", wv.base}, {"values", std::move(values)}, {"certified", wv.certified}};
}

WindowVector window_from_json(const json& j) {
    try {
        WindowVector wv;
        wv.base = j.at("base").get<int>();
        for (const auto& [k, h] : j.at("values").items()) {
            std::size_t used = 0;
            const int idx = std::stoi(k, &used);
            if (used != k.size()) throw InputError("bad window index '" + k + "'");
            wv.values[idx] = h.get<std::int64_t>();
        }
        if (j.contains("certified")) {
            for (const auto& k : j.at("certified")) {
                const int idx = k.get<int>();
                if (!wv.known(idx)) throw InputError("certified index " + std::to_string(idx) + " has no value");
                wv.certified.insert(idx);
            }
        }
        return wv;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed window vector: ") + e.what());
    } catch (const std::logic_error& e) {
        throw InputError(std::string("malformed window index: ") + e.what());
    }
}

json to_json(const Membership& m) {
    json ranks = json::object();
    for (const auto& [k, v] : m.ranks) ranks[k] = v;
    return {{"member", m.member}, {"target_heart", m.target_heart}, {"ranks", std::move(ranks)},
            {"diagnostics", m.diagnostics}};
}

json to_json(const DetCharacter& c) {
    json j = json::object();
    for (const auto& [s, f] : c.exponents()) j[symbol_name(s)] = f.to_string();
    return j;
}

json to_json(const RelationCheck& rc) {
    static const char* names[] = {"ok", "shape_mismatch", "relations_violated"};
    return {{"status", names[static_cast<int>(rc.status)]}, {"violated", rc.violated}, {"detail", rc.detail}};
}

}  // namespace lp2
