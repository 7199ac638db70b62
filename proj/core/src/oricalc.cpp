#include "lp2/oricalc.hpp"

#include <sstream>

#include "lp2/errors.hpp"
#include "lp2/homalg.hpp"

namespace lp2 {

namespace {

std::string tagged(const char* stem, const WindowIndex& w) {
    std::string s = std::string(stem) + "_" + std::to_string(w.index);
    if (w.branch != 0) s += "^(" + std::to_string(w.branch) + ")";
    return s;
}

}  // namespace

std::string variable_name(const WindowIndex& v) { return tagged("h", v); }
std::string symbol_name(const WindowIndex& s) { return tagged("D", s); }

LinearForm LinearForm::variable(int index, int branch, Integer coefficient) {
    LinearForm f;
    f.coeffs_[{index, branch}] = std::move(coefficient);
    f.prune();
    return f;
}

LinearForm LinearForm::constant(Integer c) {
    LinearForm f;
    f.constant_ = std::move(c);
    return f;
}

Integer LinearForm::coefficient(const WindowIndex& v) const {
    auto it = coeffs_.find(v);
    return it == coeffs_.end() ? Integer(0) : it->second;
}

void LinearForm::prune() { std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; }); }

LinearForm& LinearForm::operator+=(const LinearForm& o) {
    for (const auto& [v, c] : o.coeffs_) coeffs_[v] += c;
    constant_ += o.constant_;
    prune();
    return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) {
    for (const auto& [v, c] : o.coeffs_) coeffs_[v] -= c;
    constant_ -= o.constant_;
    prune();
    return *this;
}

LinearForm& LinearForm::operator*=(const Integer& s) {
    for (auto& [v, c] : coeffs_) c *= s;
    constant_ *= s;
    prune();
    return *this;
}

LinearForm LinearForm::substitute(const WindowIndex& v, const LinearForm& replacement) const {
    auto it = coeffs_.find(v);
    if (it == coeffs_.end()) return *this;
    LinearForm out = *this;
    const Integer c = it->second;
    out.coeffs_.erase(v);
    out += c * replacement;
    return out;
}

Integer LinearForm::evaluate(const std::map<WindowIndex, Integer>& assignment) const {
    Integer total = constant_;
    for (const auto& [v, c] : coeffs_) {
        auto it = assignment.find(v);
        if (it == assignment.end()) throw InputError("no value for " + variable_name(v));
        total += c * it->second;
    }
    return total;
}

std::string LinearForm::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Integer& c, const std::string& name) {
        const Integer mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (name.empty()) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            os << name;
        }
        first = false;
    };
    for (const auto& [v, c] : coeffs_) emit(c, variable_name(v));
    if (constant_ != 0) emit(constant_, "");
    return os.str();
}

LinearForm DetCharacter::exponent(const WindowIndex& s) const {
    auto it = exps_.find(s);
    return it == exps_.end() ? LinearForm{} : it->second;
}

void DetCharacter::add(const WindowIndex& symbol, const LinearForm& form) {
    auto& slot = exps_[symbol];
    slot += form;
    if (slot.is_zero()) exps_.erase(symbol);
}

DetCharacter& DetCharacter::operator+=(const DetCharacter& o) {
    for (const auto& [s, f] : o.exps_) add(s, f);
    return *this;
}

DetCharacter& DetCharacter::operator-=(const DetCharacter& o) {
    for (const auto& [s, f] : o.exps_) add(s, -f);
    return *this;
}

DetCharacter& DetCharacter::operator*=(const Integer& k) {
    if (k == 0) {
        exps_.clear();
        return *this;
    }
    for (auto& [s, f] : exps_) f *= k;
    return *this;
}

DetCharacter DetCharacter::substitute_symbol(const WindowIndex& symbol,
                                             const std::map<WindowIndex, Integer>& combo) const {
    auto it = exps_.find(symbol);
    if (it == exps_.end()) return *this;
    DetCharacter out = *this;
    const LinearForm f = it->second;
    out.exps_.erase(symbol);
    for (const auto& [t, c] : combo) out.add(t, c * f);
    return out;
}

DetCharacter DetCharacter::substitute_variable(const WindowIndex& v, const LinearForm& form) const {
    DetCharacter out;
    for (const auto& [s, f] : exps_) out.add(s, f.substitute(v, form));
    return out;
}

std::map<WindowIndex, Integer> DetCharacter::evaluate(const std::map<WindowIndex, Integer>& assignment) const {
    std::map<WindowIndex, Integer> out;
    for (const auto& [s, f] : exps_) out[s] = f.evaluate(assignment);
    return out;
}

std::string DetCharacter::to_string() const {
    if (exps_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, f] : exps_) {
        if (!first) os << ", ";
        os << symbol_name(s) << ": " << f.to_string();
        first = false;
    }
    return os.str();
}

std::map<WindowIndex, Integer> window_assignment(int heart, const Dims& dims, int branch) {
    std::map<WindowIndex, Integer> a;
    for (int i = 0; i < 3; ++i) a[{heart + i, branch}] = Integer(static_cast<long>(dims[static_cast<std::size_t>(i)]));
    return a;
}

DetCharacter ori_char(int n, int b) {
    auto h = [&](int k) { return LinearForm::variable(k, b); };
    DetCharacter c;
    c.add({n, b}, Integer(3) * (h(n + 2) - h(n + 1)));
    c.add({n + 1, b}, Integer(3) * (h(n) - h(n + 2)));
    c.add({n + 2, b}, Integer(3) * (h(n + 1) - h(n)));
    return c;
}

DetCharacter corrupted_ori_char(int n) {
    auto h = [&](int k) { return LinearForm::variable(k); };
    DetCharacter c = ori_char(n);
    c.add({n + 1}, -(h(n) - h(n + 2)));
    return c;
}

DetCharacter koszul_rewrite(const DetCharacter& c, int base, RewriteDirection dir, int b) {
    std::map<WindowIndex, Integer> combo;
    LinearForm form;
    WindowIndex dropped;
    if (dir == RewriteDirection::Up) {
        dropped = {base, b};
        combo = {{{base + 1, b}, 3}, {{base + 2, b}, -3}, {{base + 3, b}, 1}};
    } else {
        dropped = {base + 3, b};
        combo = {{{base, b}, 1}, {{base + 1, b}, -3}, {{base + 2, b}, 3}};
    }
    for (const auto& [v, k] : combo) form += LinearForm::variable(v.index, v.branch, k);
    return c.substitute_symbol(dropped, combo).substitute_variable(dropped, form);
}

DetCharacter term_character(const QuiverPresentation& q, std::size_t degree, int heart, int bm, int bn) {
    const auto layout = hom_complex_layout(q);
    DetCharacter c;
    if (degree >= layout.size()) return c;
    for (const auto& blk : layout[degree]) {
        // Hom(M_x, N_y) = M_x^* (x) N_y : h^M_x D^N_y - h^N_y D^M_x
        const int x = heart + static_cast<int>(blk.from_slot);
        const int y = heart + static_cast<int>(blk.to_slot);
        c.add({y, bn}, LinearForm::variable(x, bm));
        c.add({x, bm}, -LinearForm::variable(y, bn));
    }
    return c;
}

DetCharacter complex_character(const QuiverPresentation& q, int heart, int bm, int bn) {
    const auto layout = hom_complex_layout(q);
    DetCharacter total;
    for (std::size_t d = 0; d < layout.size(); ++d) {
        const auto t = term_character(q, d, heart, bm, bn);
        if (d % 2 == 0) {
            total += t;
        } else {
            total -= t;
        }
    }
    return total;
}

DetCharacter geometric_char() { return complex_character(QuiverPresentation::beilinson(), 0); }

bool compare_characters(const DetCharacter& lhs, const DetCharacter& rhs, const std::string& context,
                        std::vector<DiffEntry>& diff) {
    bool equal = true;
    std::map<WindowIndex, bool> symbols;
    for (const auto& [s, f] : lhs.exponents()) symbols[s] = true;
    for (const auto& [s, f] : rhs.exponents()) symbols[s] = true;
    for (const auto& [s, unused] : symbols) {
        const auto l = lhs.exponent(s);
        const auto r = rhs.exponent(s);
        if (!(l == r)) {
            diff.push_back({symbol_name(s), l.to_string(), r.to_string(), context});
            equal = false;
        }
    }
    return equal;
}

ProofReport verify_theorem3(int lo, int hi, const CharacterFamily& chars) {
    ProofReport r;
    r.identity = "theorem3";
    r.window_lo = lo;
    r.window_hi = hi + 3;
    if (hi <= lo) throw InputError("verify theorem3 needs a range with n_max > n_min");
    r.passed = true;
    for (int n = lo; n < hi; ++n) {
        const auto lhs = koszul_rewrite(chars(n), n, RewriteDirection::Up);
        const auto rhs = chars(n + 1);
        const std::string ctx = "hearts " + std::to_string(n) + "->" + std::to_string(n + 1);
        const bool ok = compare_characters(lhs, rhs, ctx, r.diff);
        r.passed = r.passed && ok;
        r.witness.push_back(ctx + ": " + (ok ? "equal" : "DIFFER") + " | " + lhs.to_string());
    }
    return r;
}

ProofReport verify_theorem4() {
    ProofReport r;
    r.identity = "theorem4";
    r.window_lo = 0;
    r.window_hi = 2;
    const auto g = geometric_char();
    const auto a = ori_char(0);
    r.passed = compare_characters(g, a, "geometric vs heart-0 orientation character", r.diff);
    r.witness.push_back("geometric: " + g.to_string());
    r.witness.push_back("ori_char(0): " + a.to_string());
    // det of the c*-term equals the inverse det of the dual c-term
    const auto& q = QuiverPresentation::beilinson();
    r.witness.push_back("relation term: " + term_character(q, 2, 0).to_string());
    return r;
}

ProofReport verify_square_root(int heart) {
    ProofReport r;
    r.identity = "square-root";
    r.window_lo = heart;
    r.window_hi = heart + 2;
    const auto& q = QuiverPresentation::local_p2();
    const auto total = complex_character(q, heart);
    const auto twice = Integer(2) * ori_char(heart);
    r.passed = compare_characters(total, twice, "full complex vs 2*ori_char", r.diff);

    // Structural facts behind the identity.
    const auto c0 = term_character(q, 0, heart), c1 = term_character(q, 1, heart);
    const auto c2 = term_character(q, 2, heart), c3 = term_character(q, 3, heart);
    r.passed = compare_characters(c0 - c3, DetCharacter{}, "degree 0 vs degree 3", r.diff) && r.passed;
    r.passed = compare_characters(c1, -c2, "degree 1 vs -degree 2", r.diff) && r.passed;
    r.witness.push_back("total: " + total.to_string());
    r.witness.push_back("2*ori_char: " + twice.to_string());
    return r;
}

DetCharacter zero_branch(const DetCharacter& c, int branch) {
    DetCharacter out;
    for (const auto& [s, f] : c.exponents()) {
        if (s.branch == branch) continue;
        LinearForm g;
        for (const auto& [v, k] : f.coefficients()) {
            if (v.branch != branch) g += LinearForm::variable(v.index, v.branch, k);
        }
        g += LinearForm::constant(f.constant_term());
        out.add(s, g);
    }
    return out;
}

ProofReport verify_cocycle(int heart, bool symmetrized) {
    ProofReport r;
    r.identity = symmetrized ? "cocycle" : "cocycle-unsymmetrized";
    r.window_lo = heart;
    r.window_hi = heart + 2;

    DetCharacter middle = ori_char(heart, 2);
    for (int k = heart; k <= heart + 2; ++k) {
        middle = middle.substitute_symbol({k, 2}, {{{k, 1}, 1}, {{k, 3}, 1}});
        middle = middle.substitute_variable({k, 2}, LinearForm::variable(k, 1) + LinearForm::variable(k, 3));
    }
    const DetCharacter lhs = middle - ori_char(heart, 1) - ori_char(heart, 3);
    const auto& q = QuiverPresentation::local_p2();
    const DetCharacter rhs = symmetrized ? complex_character(q, heart, 1, 3) : term_character(q, 2, heart, 1, 3);
    r.passed = compare_characters(lhs, rhs, "extension vs mixed RHom(M1, M3)", r.diff);
    r.witness.push_back("lhs: " + lhs.to_string());
    r.witness.push_back("rhs: " + rhs.to_string());
    return r;
}

}  // namespace lp2
