#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lp2/matrix.hpp"
#include "lp2/quiver.hpp"
#include "lp2/scalar.hpp"

namespace lp2 {

enum class Side { Y, P2 };

std::string to_string(Side s);
Side parse_side(const std::string& s);

/// One summand Hom(M_from, N_to) of a complex term.
struct HomBlock {
    std::string label;
    std::size_t from_slot = 0;
    std::size_t to_slot = 0;
};

/*
 * Block layout of the Hom complex computing RHom(M, N), read off a presentation:
 *   degree 0: Hom(M_v, N_v) for each vertex v
 *   degree 1: Hom(M_src, N_tgt) for each arrow (matrix directions)
 *   degree 2: Hom(M_src, N_tgt) for each relation
 *   degree 3: Hom(M_v, N_v) again, present only when the relations come from a potential.
 * Both the numeric complex and the symbolic determinant characters use this layout.
 */
std::vector<std::vector<HomBlock>> hom_complex_layout(const QuiverPresentation& q);

struct ExtTerm {
    int degree = 0;
    std::vector<HomBlock> blocks;
    std::vector<std::size_t> block_dims;
    std::size_t dimension = 0;
};

struct ExtComplex {
    Side side = Side::Y;
    std::vector<ExtTerm> terms;
    std::vector<QMatrix> differentials;  // differentials[i]: C^i -> C^{i+1}

    std::vector<std::int64_t> term_dims() const;
};

using ExtDims = std::vector<std::int64_t>;

/// Builds the complex for any presentation and checks d^{i+1} d^i = 0
/// (PostconditionError otherwise).
ExtComplex build_hom_complex(const QuiverPresentation& q, const Dims& dm, const std::vector<QMatrix>& m,
                             const Dims& dn, const std::vector<QMatrix>& n);

ExtComplex build_ext_complex_Y(const Representation& m, const Representation& n);
ExtComplex build_ext_complex_P2(const P2Representation& m, const P2Representation& n);

/// e^i = dim C^i - rank d^i - rank d^{i-1}.
ExtDims ext_dims(const ExtComplex& c, const ScalarMode& mode = RationalMode{});

ExtDims ext_dims_Y(const Representation& m, const Representation& n, const ScalarMode& mode = RationalMode{});
ExtDims ext_dims_P2(const P2Representation& m, const P2Representation& n,
                    const ScalarMode& mode = RationalMode{});

/// Ranks of all differentials, for mode-agreement checks.
std::vector<std::size_t> differential_ranks(const ExtComplex& c, const ScalarMode& mode);

std::int64_t alternating_sum(const std::vector<std::int64_t>& v);

std::int64_t euler_form_Y(const Dims& m, const Dims& n);
std::int64_t euler_form_P2(const Dims& m, const Dims& n);

struct DualityCheck {
    ExtDims forward;   // e(M, N)
    ExtDims backward;  // e(N, M)
    bool ok = false;
};

/// e^i(M, N) = e^{3-i}(N, M) for i = 0..3.
DualityCheck verify_cy3_duality(const Representation& m, const Representation& n,
                                const ScalarMode& mode = RationalMode{});

struct TriangleReport {
    ExtDims y_side;
    ExtDims p2_side;
    std::array<std::int64_t, 4> predicted{};  // p^i + p^{3-i}
    /// Degrees where the prediction and the Y-side value differ: a connecting map of the
    /// long exact sequence is nonzero there.
    std::vector<int> flagged;
    bool holds() const { return flagged.empty(); }
};

TriangleReport verify_pushforward_triangle(const Representation& m, const ScalarMode& mode = RationalMode{});

struct ExtReport {
    Side side = Side::Y;
    Dims dims_m{};
    Dims dims_n{};
    std::vector<std::int64_t> term_dims;
    ExtDims ext;
    std::int64_t euler = 0;
    bool euler_matches = false;
    std::optional<bool> cy3_ok;  // empty on the P^2 side
};

ExtReport ext_report(const Representation& m, const Representation& n, Side side,
                     const ScalarMode& mode = RationalMode{});

}  // namespace lp2
