#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lp2/matrix.hpp"
#include "lp2/quiver.hpp"
#include "lp2/scalar.hpp"

namespace lp2 {

/*
 * Window slots of a module F in heart n are V_k = Hom(O(k), F) for k = n, n+1, n+2.
 * The Koszul sequence 0 -> O(-3) -> O(-2)^3 -> O(-1)^3 -> O -> 0 gives
 *
 *   up:   V_{n+3} -> V_{n+2}^3 --kappa2--> V_{n+1}^3 --kappa1--> V_n -> 0
 *   down: 0 -> V_{n+2} --bstack--> V_{n+1}^3 --sigma--> V_n^3 -> V_{n-1}
 *
 * and F lies in the adjacent heart exactly when the relevant part is exact.
 *
 * kappa1 = (A1 A2 A3),  kappa2[k][i] = sum_j eps(i,j,k) B_j,
 * bstack = (B1; B2; B3), sigma[k][i] = sum_j eps(i,j,k) A_j.
 */

struct KoszulMaps {
    QMatrix kappa1;  // h_n x 3h_{n+1}
    QMatrix kappa2;  // 3h_{n+1} x 3h_{n+2}
};

struct DownMaps {
    QMatrix bstack;  // 3h_{n+1} x h_{n+2}
    QMatrix sigma;   // 3h_n x 3h_{n+1}
};

/// Throws PostconditionError if kappa1 * kappa2 != 0.
KoszulMaps koszul_maps(const Representation& rep);
/// Throws PostconditionError if sigma * bstack != 0.
DownMaps down_maps(const Representation& rep);

enum class TwistDirection { Up, Down };

std::string to_string(TwistDirection d);
TwistDirection parse_direction(const std::string& s);

struct Membership {
    bool member = false;
    int target_heart = 0;
    std::map<std::string, std::int64_t> ranks;
    std::vector<std::string> diagnostics;
};

Membership window_membership(const Representation& rep, TwistDirection dir,
                             const ScalarMode& mode = RationalMode{});

/// Re-presents rep in heart n+1. Throws MembershipError when rep is not in that heart,
/// PostconditionError if the result violates relations or the dimension recursion.
Representation twist_up(const Representation& rep);
Representation twist_down(const Representation& rep);
Representation twist(const Representation& rep, TwistDirection dir);

/// X with basis * X = w; basis must have full column rank. PostconditionError if w is
/// not in the column span.
QMatrix solve_in_basis(const QMatrix& basis, const QMatrix& w);

struct WindowVector {
    int base = 0;
    std::map<int, std::int64_t> values;
    std::set<int> certified;

    bool known(int k) const { return values.count(k) != 0; }
    bool is_certified(int k) const { return certified.count(k) != 0; }
    std::int64_t at(int k) const;
};

/// The three slots of rep, all certified.
WindowVector window_of(const Representation& rep);

/// Certifies the window [lo, hi + 2] by twisting rep through hearts lo..hi (as far as
/// membership allows) and recording every slot seen.
WindowVector certified_window(const Representation& rep, int lo, int hi);

/// Fills h_k by h_k = 3h_{k+1} - 3h_{k+2} + h_{k+3}, stepping from the nearest known
/// block of three consecutive values. New values are uncertified. Throws InputError when
/// fewer than three consecutive known values are adjacent to the gap, or when four
/// certified values next to it already violate the recursion.
WindowVector extend_window(const WindowVector& wv, int k);

/// Indices k for which h_k..h_{k+3} are all certified and violate the recursion.
std::vector<int> recursion_violations(const WindowVector& wv);

}  // namespace lp2
