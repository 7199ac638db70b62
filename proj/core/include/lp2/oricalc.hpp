#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lp2/quiver.hpp"
#include "lp2/scalar.hpp"

namespace lp2 {

/*
 * Determinant-character calculus.
 *
 * A determinant line built from window spaces V_k = Hom(O(k), F) is recorded as a
 * formal exponent vector over symbols D_k = det V_k. Exponents are integer linear
 * forms in the dimension variables h_k = dim V_k, so an identity between characters
 * holds for every module at once.
 *
 * Symbols and variables carry a branch tag; branch 0 is the untagged default, and
 * branches 1, 2, 3 index the terms of a short exact sequence 0 -> M1 -> M2 -> M3 -> 0.
 *
 * Conventions: det(V_a^* (x) V_b) has character h_a D_b - h_b D_a, and a complex C
 * has character sum_i (-1)^i char(C^i).
 */

struct WindowIndex {
    int index = 0;
    int branch = 0;

    auto operator<=>(const WindowIndex&) const = default;
};

std::string variable_name(const WindowIndex& v);  // h_k or h_k^(b)
std::string symbol_name(const WindowIndex& s);    // D_k or D_k^(b)

class LinearForm {
public:
    LinearForm() = default;
    static LinearForm variable(int index, int branch = 0, Integer coefficient = 1);
    static LinearForm constant(Integer c);

    const std::map<WindowIndex, Integer>& coefficients() const { return coeffs_; }
    const Integer& constant_term() const { return constant_; }
    Integer coefficient(const WindowIndex& v) const;
    bool is_zero() const { return coeffs_.empty() && constant_ == 0; }

    LinearForm& operator+=(const LinearForm& o);
    LinearForm& operator-=(const LinearForm& o);
    LinearForm& operator*=(const Integer& s);
    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
    friend LinearForm operator*(const Integer& s, LinearForm a) { return a *= s; }
    friend LinearForm operator-(LinearForm a) { return a *= Integer(-1); }
    friend bool operator==(const LinearForm&, const LinearForm&) = default;

    /// Replace variable v by the given form.
    LinearForm substitute(const WindowIndex& v, const LinearForm& replacement) const;

    /// Throws InputError naming the first variable missing from the assignment.
    Integer evaluate(const std::map<WindowIndex, Integer>& assignment) const;

    std::string to_string() const;

private:
    void prune();

    std::map<WindowIndex, Integer> coeffs_;
    Integer constant_ = 0;
};

class DetCharacter {
public:
    DetCharacter() = default;

    const std::map<WindowIndex, LinearForm>& exponents() const { return exps_; }
    LinearForm exponent(const WindowIndex& s) const;
    bool is_zero() const { return exps_.empty(); }

    void add(const WindowIndex& symbol, const LinearForm& form);

    DetCharacter& operator+=(const DetCharacter& o);
    DetCharacter& operator-=(const DetCharacter& o);
    DetCharacter& operator*=(const Integer& s);
    friend DetCharacter operator+(DetCharacter a, const DetCharacter& b) { return a += b; }
    friend DetCharacter operator-(DetCharacter a, const DetCharacter& b) { return a -= b; }
    friend DetCharacter operator*(const Integer& s, DetCharacter a) { return a *= s; }
    friend DetCharacter operator-(DetCharacter a) { return a *= Integer(-1); }
    friend bool operator==(const DetCharacter&, const DetCharacter&) = default;

    /// D_symbol -> sum_t c_t D_t.
    DetCharacter substitute_symbol(const WindowIndex& symbol, const std::map<WindowIndex, Integer>& combo) const;
    /// h_v -> form, inside every exponent.
    DetCharacter substitute_variable(const WindowIndex& v, const LinearForm& form) const;

    std::map<WindowIndex, Integer> evaluate(const std::map<WindowIndex, Integer>& assignment) const;

    std::string to_string() const;

private:
    std::map<WindowIndex, LinearForm> exps_;
};

/// Dimension assignment h_{n}, h_{n+1}, h_{n+2} = dims on the given branch.
std::map<WindowIndex, Integer> window_assignment(int heart, const Dims& dims, int branch = 0);

/// Orientation character of heart n:
///   D_n -> 3(h_{n+2} - h_{n+1}), D_{n+1} -> 3(h_n - h_{n+2}), D_{n+2} -> 3(h_{n+1} - h_n).
DetCharacter ori_char(int heart, int branch = 0);

/// Negative control: ori_char with the D_{n+1} exponent scaled by 2 instead of 3.
DetCharacter corrupted_ori_char(int heart);

enum class RewriteDirection { Up, Down };

/// Rewrite along the 4-term relation on indices base..base+3:
///   Up:   D_base -> 3D_{base+1} - 3D_{base+2} + D_{base+3}, same for h_base.
///   Down: D_{base+3} -> D_base - 3D_{base+1} + 3D_{base+2}, same for h_{base+3}.
/// Up and Down with the same base are mutually inverse between characters supported on
/// [base, base+2] and on [base+1, base+3].
DetCharacter koszul_rewrite(const DetCharacter& c, int base, RewriteDirection dir, int branch = 0);

/// Character of the degree-`degree` term of the Hom complex for `q`, with M on branch
/// `branch_m` and N on branch `branch_n`, both in heart n.
DetCharacter term_character(const QuiverPresentation& q, std::size_t degree, int heart, int branch_m = 0,
                            int branch_n = 0);

/// Alternating character of the whole Hom complex.
DetCharacter complex_character(const QuiverPresentation& q, int heart, int branch_m = 0, int branch_n = 0);

/// Character of the P^2-side complex, heart 0.
DetCharacter geometric_char();

struct DiffEntry {
    std::string symbol;
    std::string lhs_form;
    std::string rhs_form;
    std::string context;
};

struct ProofReport {
    std::string identity;
    bool passed = false;
    int window_lo = 0;
    int window_hi = 0;
    std::vector<DiffEntry> diff;
    /// Human-readable witness lines (one per checked instance).
    std::vector<std::string> witness;
};

/// Appends one DiffEntry per symbol where lhs and rhs differ; returns true when equal.
bool compare_characters(const DetCharacter& lhs, const DetCharacter& rhs, const std::string& context,
                        std::vector<DiffEntry>& diff);

using CharacterFamily = std::function<DetCharacter(int heart)>;

/// For each n in [lo, hi-1]: koszul_rewrite(chars(n), n, Up) == chars(n+1).
ProofReport verify_theorem3(int lo, int hi, const CharacterFamily& chars = [](int n) { return ori_char(n); });

/// geometric_char() == ori_char(0).
ProofReport verify_theorem4();

/// Character of the full Y-side Hom complex == 2 * ori_char(n).
ProofReport verify_square_root(int heart = 0);

/// Branch-2 character expanded through D^(2) = D^(1) + D^(3), h^(2) = h^(1) + h^(3), minus the
/// branch-1 and branch-3 characters, equals the character of the mixed complex RHom(M1, M3).
/// With `symmetrized` false the right side is only the degree-2 part of Hom(M1, M3): a negative
/// control that must fail.
ProofReport verify_cocycle(int heart = 0, bool symmetrized = true);

/// Sets every branch-3 symbol and variable to zero.
DetCharacter zero_branch(const DetCharacter& c, int branch);

}  // namespace lp2
