#include "lp2/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "lp2/errors.hpp"
#include "lp2/linalg.hpp"

namespace lp2 {

namespace {

constexpr std::string_view kPotential = "c3b2a1 - c2b3a1 + c1b3a2 - c3b1a2 + c2b1a3 - c1b2a3";

std::vector<Arrow> standard_arrows(bool with_c) {
    std::vector<Arrow> arrows;
    for (int i = 1; i <= 3; ++i) arrows.push_back({"a" + std::to_string(i), 0, 1});
    for (int j = 1; j <= 3; ++j) arrows.push_back({"b" + std::to_string(j), 1, 2});
    if (with_c) {
        for (int k = 1; k <= 3; ++k) arrows.push_back({"c" + std::to_string(k), 2, 0});
    }
    return arrows;
}

// Parses "c3b2a1 - c2b3a1 + ..." into terms over the given arrows.
PathSum parse_path_sum(const std::vector<Arrow>& arrows, std::string_view text) {
    PathSum out;
    std::int64_t sign = 1;
    std::size_t i = 0;
    auto lookup = [&](std::string_view name) {
        for (std::size_t a = 0; a < arrows.size(); ++a) {
            if (arrows[a].name == name) return a;
        }
        throw InputError("unknown arrow '" + std::string(name) + "'");
    };
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == ' ') {
            ++i;
        } else if (ch == '+' || ch == '-') {
            sign = ch == '-' ? -1 : 1;
            ++i;
        } else {
            PathTerm term{sign, {}};
            while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) {
                std::size_t j = i + 1;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                term.word.push_back(lookup(text.substr(i, j - i)));
                i = j;
            }
            if (term.word.empty()) throw InputError("malformed path sum");
            out.push_back(std::move(term));
            sign = 1;
        }
    }
    return out;
}

// Combine repeated words, keeping first-appearance order; drop zero terms.
PathSum collect(const PathSum& s) {
    PathSum out;
    for (const auto& t : s) {
        auto it = std::find_if(out.begin(), out.end(), [&](const PathTerm& o) { return o.word == t.word; });
        if (it == out.end()) {
            out.push_back(t);
        } else {
            it->coefficient += t.coefficient;
        }
    }
    std::erase_if(out, [](const PathTerm& t) { return t.coefficient == 0; });
    return out;
}

}  // namespace

const QuiverPresentation& QuiverPresentation::local_p2() {
    static const QuiverPresentation q = [] {
        QuiverPresentation p;
        p.arrows_ = standard_arrows(true);
        p.potential_ = parse_path_sum(p.arrows_, kPotential);
        for (const auto& t : p.potential_) {
            // term c_k b_j a_i
            p.epsilon_[t.word[2]][t.word[1] - 3][t.word[0] - 6] = static_cast<int>(t.coefficient);
        }
        for (const auto& a : p.arrows_) {
            Relation r;
            r.name = "dW/d" + a.name;
            r.paths = cyclic_derivative(p, p.potential_, a.name);
            r.matrix_from = a.source;
            r.matrix_to = a.target;
            p.relations_.push_back(std::move(r));
        }
        p.validate();
        return p;
    }();
    return q;
}

const QuiverPresentation& QuiverPresentation::beilinson() {
    static const QuiverPresentation q = [] {
        const auto& y = local_p2();
        QuiverPresentation p;
        p.arrows_ = standard_arrows(false);
        p.epsilon_ = y.epsilon_;
        // dW/dc_k only involves a and b, whose indices coincide in both presentations.
        for (std::size_t k = 0; k < 3; ++k) {
            Relation r = y.relations_[arrow_c(k)];
            p.relations_.push_back(std::move(r));
        }
        p.validate();
        return p;
    }();
    return q;
}

std::size_t QuiverPresentation::arrow_index(std::string_view name) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        if (arrows_[i].name == name) return i;
    }
    throw InputError("unknown arrow '" + std::string(name) + "'");
}

void QuiverPresentation::validate() const {
    auto check_word = [&](const std::vector<std::size_t>& w) {
        for (std::size_t l = 0; l + 1 < w.size(); ++l) {
            if (arrows_.at(w[l + 1]).target != arrows_.at(w[l]).source) {
                throw PostconditionError("non-composable word in presentation");
            }
        }
    };
    for (const auto& t : potential_) {
        check_word(t.word);
        if (arrows_.at(t.word.front()).target != arrows_.at(t.word.back()).source) {
            throw PostconditionError("potential term is not a cycle");
        }
    }
    for (const auto& r : relations_) {
        for (const auto& t : r.paths) {
            check_word(t.word);
            if (arrows_.at(t.word.front()).matrix_from() != r.matrix_from ||
                arrows_.at(t.word.back()).matrix_to() != r.matrix_to) {
                throw PostconditionError("inhomogeneous relation " + r.name);
            }
        }
    }
    const bool y_side = has_potential();
    if (arrows_.size() != (y_side ? 9u : 6u) || relations_.size() != (y_side ? 9u : 3u)) {
        throw PostconditionError("unexpected arrow/relation count");
    }
}

std::string QuiverPresentation::format(const PathSum& s) const {
    if (s.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : s) {
        const std::int64_t mag = t.coefficient < 0 ? -t.coefficient : t.coefficient;
        if (first) {
            if (t.coefficient < 0) os << "-";
        } else {
            os << (t.coefficient < 0 ? " - " : " + ");
        }
        if (mag != 1) os << mag;
        for (auto a : t.word) os << arrows_.at(a).name;
        first = false;
    }
    return os.str();
}

PathSum cyclic_derivative(const QuiverPresentation& q, const PathSum& potential, std::string_view arrow) {
    const std::size_t target = q.arrow_index(arrow);
    PathSum out;
    for (const auto& t : potential) {
        const std::size_t m = t.word.size();
        for (std::size_t p = 0; p < m; ++p) {
            if (t.word[p] != target) continue;
            PathTerm r{t.coefficient, {}};
            for (std::size_t l = 1; l < m; ++l) r.word.push_back(t.word[(p + l) % m]);
            out.push_back(std::move(r));
        }
    }
    return collect(out);
}

QMatrix evaluate(const PathSum& s, std::size_t from, std::size_t to,
                 const Dims& dims, const std::vector<QMatrix>& arrows) {
    QMatrix total(static_cast<std::size_t>(dims[to]), static_cast<std::size_t>(dims[from]));
    for (const auto& t : s) {
        QMatrix acc = QMatrix::identity(static_cast<std::size_t>(dims[from]));
        for (auto a : t.word) acc = arrows.at(a) * acc;
        total += acc * Rational(t.coefficient);
    }
    return total;
}

std::pair<std::size_t, std::size_t> arrow_shape(const Arrow& a, const Dims& dims) {
    return {static_cast<std::size_t>(dims[a.matrix_to()]), static_cast<std::size_t>(dims[a.matrix_from()])};
}

namespace {

void require_shapes(const QuiverPresentation& q, const Dims& dims, const std::vector<QMatrix>& arrows) {
    for (auto d : dims) {
        if (d < 0) throw ShapeError("negative dimension");
    }
    if (arrows.size() != q.arrows().size()) {
        throw ShapeError("expected " + std::to_string(q.arrows().size()) + " arrow matrices, got " +
                         std::to_string(arrows.size()));
    }
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        const auto [r, c] = arrow_shape(q.arrow(i), dims);
        if (arrows[i].rows() != r || arrows[i].cols() != c) {
            throw ShapeError("arrow " + q.arrow(i).name + " has shape " + arrows[i].shape_string() +
                             ", expected " + std::to_string(r) + "x" + std::to_string(c));
        }
    }
}

}  // namespace

Representation::Representation(int heart, Dims dims, std::vector<QMatrix> arrows, std::string label)
    : heart_(heart), dims_(dims), arrows_(std::move(arrows)), label_(std::move(label)) {
    require_shapes(presentation(), dims_, arrows_);
}

const QMatrix& Representation::arrow(std::string_view name) const {
    return arrows_.at(presentation().arrow_index(name));
}

Representation Representation::with_label(std::string label) const {
    Representation r = *this;
    r.label_ = std::move(label);
    return r;
}

Representation Representation::with_heart(int heart) const {
    Representation r = *this;
    r.heart_ = heart;
    return r;
}

P2Representation::P2Representation(Dims dims, std::vector<QMatrix> arrows, std::string label)
    : dims_(dims), arrows_(std::move(arrows)), label_(std::move(label)) {
    require_shapes(presentation(), dims_, arrows_);
}

RelationCheck check_relations(const QuiverPresentation& q, const Dims& dims, const std::vector<QMatrix>& arrows) {
    RelationCheck out;
    try {
        require_shapes(q, dims, arrows);
    } catch (const ShapeError& e) {
        out.status = RelationCheck::Status::ShapeMismatch;
        out.detail = e.what();
        return out;
    }
    for (const auto& r : q.relations()) {
        if (!evaluate(r.paths, r.matrix_from, r.matrix_to, dims, arrows).is_zero()) {
            out.violated.push_back(r.name);
        }
    }
    if (!out.violated.empty()) {
        out.status = RelationCheck::Status::RelationsViolated;
        out.detail = std::to_string(out.violated.size()) + " relation(s) violated";
    }
    return out;
}

RelationCheck check_relations(const Representation& rep) {
    return check_relations(rep.presentation(), rep.dims(), rep.arrows());
}

RelationCheck check_relations(const P2Representation& rep) {
    return check_relations(rep.presentation(), rep.dims(), rep.arrows());
}

Representation point_module(const std::array<Rational, 3>& point, const Rational& t, int heart) {
    auto lead = std::find_if(point.begin(), point.end(), [](const Rational& x) { return sgn(x) != 0; });
    if (lead == point.end()) throw InputError("(0:0:0) is not a point of P^2");
    const Rational scale = *lead;
    std::array<Rational, 3> x;
    for (std::size_t i = 0; i < 3; ++i) x[i] = point[i] / scale;

    std::vector<QMatrix> arrows;
    for (std::size_t i = 0; i < 3; ++i) arrows.push_back(QMatrix{{x[i]}});
    for (std::size_t j = 0; j < 3; ++j) arrows.push_back(QMatrix{{x[j]}});
    for (std::size_t k = 0; k < 3; ++k) arrows.push_back(QMatrix{{t * x[k]}});

    std::ostringstream label;
    label << "point(" << x[0] << ":" << x[1] << ":" << x[2] << ";t=" << t << ")";
    return Representation(heart, {1, 1, 1}, std::move(arrows), label.str());
}

std::int64_t h0_plane(std::int64_t m) { return m < 0 ? 0 : (m + 1) * (m + 2) / 2; }

std::vector<std::array<int, 3>> monomial_basis(int m) {
    std::vector<std::array<int, 3>> out;
    for (int e0 = m; e0 >= 0; --e0)
        for (int e1 = m - e0; e1 >= 0; --e1) out.push_back({e0, e1, m - e0 - e1});
    return out;
}

namespace {

// Multiplication by x_var from degree m-1 to degree m in the monomial bases.
QMatrix multiplication_matrix(int var, int m) {
    const auto src = monomial_basis(m - 1);
    const auto dst = monomial_basis(m);
    QMatrix out(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        auto e = src[c];
        e[var] += 1;
        const auto row = std::find(dst.begin(), dst.end(), e) - dst.begin();
        out(static_cast<std::size_t>(row), c) = 1;
    }
    return out;
}

}  // namespace

Representation pushforward_module(int d, int heart) {
    if (d < 0) throw InputError("pushforward degree must be >= 0");
    if (heart < 0 || heart > d) {
        throw InputError("O(" + std::to_string(d) + ") on the zero section is only constructed in hearts 0.." +
                         std::to_string(d) + " (heart " + std::to_string(heart) +
                         " requested): higher cohomology of the window slots would not vanish");
    }
    const int top = d - heart;
    const Dims dims{h0_plane(top), h0_plane(top - 1), h0_plane(top - 2)};
    std::vector<QMatrix> arrows;
    for (int i = 0; i < 3; ++i) {
        arrows.push_back(dims[1] == 0 ? QMatrix(dims[0], 0) : multiplication_matrix(i, top));
    }
    for (int j = 0; j < 3; ++j) {
        arrows.push_back(dims[2] == 0 ? QMatrix(dims[1], 0) : multiplication_matrix(j, top - 1));
    }
    for (int k = 0; k < 3; ++k) arrows.emplace_back(dims[2], dims[0]);
    return Representation(heart, dims, std::move(arrows),
                          "pushforward(" + std::to_string(d) + ")@" + std::to_string(heart));
}

Representation simple_module(std::size_t vertex, int heart) {
    if (vertex >= kVertexCount) throw InputError("vertex must be 0, 1 or 2");
    Dims dims{0, 0, 0};
    dims[vertex] = 1;
    const auto& q = Representation::presentation();
    std::vector<QMatrix> arrows;
    for (const auto& a : q.arrows()) {
        const auto [r, c] = arrow_shape(a, dims);
        arrows.emplace_back(r, c);
    }
    return Representation(heart, dims, std::move(arrows), "S" + std::to_string(vertex));
}

Representation direct_sum(const Representation& a, const Representation& b) {
    if (a.heart() != b.heart()) throw HeartMismatch(a.heart(), b.heart());
    Dims dims;
    for (std::size_t v = 0; v < kVertexCount; ++v) dims[v] = a.dims()[v] + b.dims()[v];
    std::vector<QMatrix> arrows;
    for (std::size_t i = 0; i < a.arrows().size(); ++i) arrows.push_back(block_diagonal(a.arrow(i), b.arrow(i)));
    return Representation(a.heart(), dims, std::move(arrows), "(" + a.label() + ")+(" + b.label() + ")");
}

QMatrix sandwich_operator(const QMatrix& left, const QMatrix& right) {
    const std::size_t p = left.rows(), q = left.cols(), r = right.rows(), s = right.cols();
    QMatrix op(p * s, q * r);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            if (sgn(left(i, j)) == 0) continue;
            for (std::size_t k = 0; k < r; ++k)
                for (std::size_t l = 0; l < s; ++l) {
                    if (sgn(right(k, l)) == 0) continue;
                    op(i * s + l, j * r + k) = left(i, j) * right(k, l);
                }
        }
    return op;
}

QMatrix intertwiner_defect(const QuiverPresentation& q, const Dims& dm, const std::vector<QMatrix>& m,
                           const Dims& dn, const std::vector<QMatrix>& n) {
    std::array<std::size_t, kVertexCount> col_offset{};
    std::size_t cols = 0;
    for (std::size_t v = 0; v < kVertexCount; ++v) {
        col_offset[v] = cols;
        cols += static_cast<std::size_t>(dn[v] * dm[v]);
    }
    std::size_t rows = 0;
    for (const auto& a : q.arrows()) rows += static_cast<std::size_t>(dn[a.matrix_to()] * dm[a.matrix_from()]);

    QMatrix d(rows, cols);
    std::size_t row = 0;
    for (std::size_t i = 0; i < q.arrows().size(); ++i) {
        const auto& a = q.arrow(i);
        const auto f = a.matrix_from(), t = a.matrix_to();
        const auto id_nt = QMatrix::identity(static_cast<std::size_t>(dn[t]));
        const auto id_mf = QMatrix::identity(static_cast<std::size_t>(dm[f]));
        // phi_t * M_a
        d.add_block(row, col_offset[t], sandwich_operator(id_nt, m[i]));
        // - N_a * phi_f
        d.add_block(row, col_offset[f], -sandwich_operator(n[i], id_mf));
        row += static_cast<std::size_t>(dn[t] * dm[f]);
    }
    return d;
}

HomSpace hom_space(const Representation& m, const Representation& n) {
    if (m.heart() != n.heart()) throw HeartMismatch(m.heart(), n.heart());
    const auto& q = Representation::presentation();
    const QMatrix kernel = nullspace(intertwiner_defect(q, m.dims(), m.arrows(), n.dims(), n.arrows()));
    HomSpace out;
    out.dimension = kernel.cols();
    for (std::size_t k = 0; k < kernel.cols(); ++k) {
        std::array<QMatrix, 3> phi;
        std::size_t offset = 0;
        for (std::size_t v = 0; v < kVertexCount; ++v) {
            const auto r = static_cast<std::size_t>(n.dims()[v]);
            const auto c = static_cast<std::size_t>(m.dims()[v]);
            phi[v] = QMatrix(r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) phi[v](i, j) = kernel(offset + i * c + j, k);
            offset += r * c;
        }
        out.basis.push_back(std::move(phi));
    }
    return out;
}

bool has_isomorphism_witness(const HomSpace& h) {
    auto invertible = [](const std::array<QMatrix, 3>& phi) {
        return std::all_of(phi.begin(), phi.end(), [](const QMatrix& b) { return is_invertible(b); });
    };
    if (h.basis.empty()) return false;
    for (const auto& phi : h.basis) {
        if (invertible(phi)) return true;
    }
    std::array<QMatrix, 3> sum = h.basis.front();
    for (std::size_t k = 1; k < h.basis.size(); ++k)
        for (std::size_t v = 0; v < 3; ++v) sum[v] += h.basis[k][v] * Rational(static_cast<long>(k + 1));
    return invertible(sum);
}

P2Representation p2_restrict(const Representation& rep) {
    std::vector<QMatrix> arrows(rep.arrows().begin(), rep.arrows().begin() + 6);
    return P2Representation(rep.dims(), std::move(arrows), rep.label());
}

}  // namespace lp2
