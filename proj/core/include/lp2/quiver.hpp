#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lp2/matrix.hpp"
#include "lp2/scalar.hpp"

namespace lp2 {

inline constexpr std::size_t kVertexCount = 3;

/// Vertex dimensions (h_n, h_{n+1}, h_{n+2}) of a module in heart n.
using Dims = std::array<std::int64_t, kVertexCount>;

/*
 * Arrow directions.
 *
 * Arrows are stored as in the quiver: a_i: 0 -> 1, b_j: 1 -> 2, c_k: 2 -> 0.
 * Modules are right modules, so the matrix of an arrow runs the other way:
 *   A_i: slot 1 -> slot 0,  B_j: slot 2 -> slot 1,  C_k: slot 0 -> slot 2.
 * A word x_1 x_2 ... x_m (as written in the potential) acts by X_m ... X_1, i.e.
 * x_1 is applied first. Example: the word c3b2 acts by B2*C3 : slot 0 -> slot 1.
 */
struct Arrow {
    std::string name;
    std::size_t source = 0;
    std::size_t target = 0;

    std::size_t matrix_from() const { return target; }
    std::size_t matrix_to() const { return source; }
};

struct PathTerm {
    std::int64_t coefficient = 0;
    std::vector<std::size_t> word;  // arrow indices, as written

    friend bool operator==(const PathTerm&, const PathTerm&) = default;
};

/// Formal Z-linear combination of paths.
using PathSum = std::vector<PathTerm>;

struct Relation {
    std::string name;
    PathSum paths;
    std::size_t matrix_from = 0;
    std::size_t matrix_to = 0;
};

class QuiverPresentation {
public:
    /// Jacobi algebra of the local P^2 quiver with potential: 9 arrows, 9 relations.
    static const QuiverPresentation& local_p2();
    /// Beilinson algebra of P^2: arrows a_i, b_j and the 3 relations dW/dc_k.
    static const QuiverPresentation& beilinson();

    const std::vector<Arrow>& arrows() const { return arrows_; }
    const PathSum& potential() const { return potential_; }
    const std::vector<Relation>& relations() const { return relations_; }
    bool has_potential() const { return !potential_.empty(); }

    std::size_t arrow_index(std::string_view name) const;
    const Arrow& arrow(std::size_t i) const { return arrows_.at(i); }

    /// Alternating symbol read off the signed terms c_k b_j a_i of W; indices 0..2.
    int epsilon(std::size_t i, std::size_t j, std::size_t k) const { return epsilon_[i][j][k]; }

    std::string format(const PathSum& s) const;

private:
    QuiverPresentation() = default;
    void validate() const;

    std::vector<Arrow> arrows_;
    PathSum potential_;
    std::vector<Relation> relations_;
    std::array<std::array<std::array<int, 3>, 3>, 3> epsilon_{};
};

/// Arrow-index helpers for the fixed naming a1..a3, b1..b3, c1..c3.
inline constexpr std::size_t arrow_a(std::size_t i) { return i; }
inline constexpr std::size_t arrow_b(std::size_t j) { return 3 + j; }
inline constexpr std::size_t arrow_c(std::size_t k) { return 6 + k; }

/// Rotate each cycle of `potential` so that `arrow` is the last letter and delete it.
/// Throws InputError for an unknown arrow name; returns the zero sum if the arrow does
/// not occur.
PathSum cyclic_derivative(const QuiverPresentation& q, const PathSum& potential, std::string_view arrow);

/// Matrix of a path sum acting on the given arrow matrices; rows/cols from dims.
QMatrix evaluate(const PathSum& s, std::size_t from, std::size_t to,
                 const Dims& dims, const std::vector<QMatrix>& arrows);

// A finite-dimensional right module over the local P^2 Jacobi algebra A^n.
class Representation {
public:
    /// Validates matrix shapes against dims (ShapeError); relations are not checked here.
    Representation(int heart, Dims dims, std::vector<QMatrix> arrows, std::string label = {});

    static const QuiverPresentation& presentation() { return QuiverPresentation::local_p2(); }

    int heart() const { return heart_; }
    const Dims& dims() const { return dims_; }
    const std::vector<QMatrix>& arrows() const { return arrows_; }
    const QMatrix& arrow(std::size_t i) const { return arrows_.at(i); }
    const QMatrix& arrow(std::string_view name) const;
    const std::string& label() const { return label_; }
    std::int64_t total_dim() const { return dims_[0] + dims_[1] + dims_[2]; }

    Representation with_label(std::string label) const;
    Representation with_heart(int heart) const;

    friend bool operator==(const Representation& a, const Representation& b) {
        return a.heart_ == b.heart_ && a.dims_ == b.dims_ && a.arrows_ == b.arrows_;
    }

private:
    int heart_;
    Dims dims_;
    std::vector<QMatrix> arrows_;
    std::string label_;
};

// A module over the Beilinson algebra: the c-free truncation.
class P2Representation {
public:
    P2Representation(Dims dims, std::vector<QMatrix> arrows, std::string label = {});

    static const QuiverPresentation& presentation() { return QuiverPresentation::beilinson(); }

    const Dims& dims() const { return dims_; }
    const std::vector<QMatrix>& arrows() const { return arrows_; }
    const QMatrix& arrow(std::size_t i) const { return arrows_.at(i); }
    const std::string& label() const { return label_; }

    friend bool operator==(const P2Representation& a, const P2Representation& b) {
        return a.dims_ == b.dims_ && a.arrows_ == b.arrows_;
    }

private:
    Dims dims_;
    std::vector<QMatrix> arrows_;
    std::string label_;
};

/// Expected shape (rows, cols) of each arrow matrix.
std::pair<std::size_t, std::size_t> arrow_shape(const Arrow& a, const Dims& dims);

struct RelationCheck {
    enum class Status { Ok, ShapeMismatch, RelationsViolated };
    Status status = Status::Ok;
    std::vector<std::string> violated;  // relation names
    std::string detail;

    bool ok() const { return status == Status::Ok; }
};

/// Raw check used by the parsers: shape problems and relation failures are reported
/// with different statuses.
RelationCheck check_relations(const QuiverPresentation& q, const Dims& dims, const std::vector<QMatrix>& arrows);
RelationCheck check_relations(const Representation& rep);
RelationCheck check_relations(const P2Representation& rep);

/// Point (x0:x1:x2) of P^2 with fiber coordinate t. The first nonzero coordinate is
/// scaled to 1. Throws InputError for (0:0:0).
Representation point_module(const std::array<Rational, 3>& point, const Rational& t, int heart);

/// Number of monomials of degree m in three variables ((m+1)(m+2)/2, or 0 for m < 0).
std::int64_t h0_plane(std::int64_t m);

/// Degree-lexicographic monomial basis of degree m: exponent triples, x0 largest first.
std::vector<std::array<int, 3>> monomial_basis(int m);

/// Module of the zero-section sheaf O_{P^2}(d) in heart n, 0 <= n <= d.
Representation pushforward_module(int d, int heart);

Representation simple_module(std::size_t vertex, int heart);

Representation direct_sum(const Representation& a, const Representation& b);

struct HomSpace {
    std::size_t dimension = 0;
    /// Each element is (phi_0, phi_1, phi_2) with phi_v: M_v -> N_v.
    std::vector<std::array<QMatrix, 3>> basis;
};

HomSpace hom_space(const Representation& m, const Representation& n);

/// True iff Hom(m, n) contains an isomorphism; decided exactly when hom is 1-dimensional,
/// otherwise by testing the basis elements and their sum.
bool has_isomorphism_witness(const HomSpace& h);

P2Representation p2_restrict(const Representation& rep);

/// Matrix of phi -> (phi_to * M_alpha - N_alpha * phi_from) over all arrows, on
/// row-major vectorized intertwiners. Its kernel is Hom(M, N).
QMatrix intertwiner_defect(const QuiverPresentation& q, const Dims& dm, const std::vector<QMatrix>& m,
                           const Dims& dn, const std::vector<QMatrix>& n);

/// vec(L X R) = op * vec(X) for row-major vec.
QMatrix sandwich_operator(const QMatrix& left, const QMatrix& right);

}  // namespace lp2
