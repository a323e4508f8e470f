#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arimat/fh_vector.hpp"
#include "arimat/poly.hpp"
#include "arimat/realization.hpp"
#include "arimat/torsion_poset.hpp"

namespace arimat {

// h_i = coefficient of t^{r-i} in sum_j f[j] (t-1)^{r-j}, r = #f - 1
HVector h_from_f(const FVector& f);

// (h_0 + h_1 t + ... + h_r t^r) / (1-t)^r, normalized
HilbertSeries hilbert_from_h(const HVector& h);

// Independent route: the series is the sum over strict chains above the
// bottom of prod t^{rank} / (1 - t^{rank}). Requires a unique bottom.
HilbertSeries hilbert_via_chains(const TorsionPoset& p, const std::vector<int>& component);

struct FaceIdealRelation {
    int sigma = -1; // incomparable pair, sigma < tau
    int tau = -1;
    int meet = -1;         // unique meet; -1 when join is empty
    std::vector<int> join; // minimal common upper bounds, possibly empty
};

// Straightening presentation of the face ring of one component: x_bottom
// identified with 1, and per incomparable pair either a vanishing product
// or a rewrite through the meet and the minimal upper bounds.
struct FaceIdealPresentation {
    std::vector<std::pair<int, int>> variables; // (id, degree)
    int bottom = -1;
    std::vector<FaceIdealRelation> relations;

    std::string to_string() const; // one relation per line, bottom first
};

FaceIdealPresentation face_ideal(const TorsionPoset& p, const std::vector<int>& component);

// Hilbert series of the face module of the whole poset of torsions:
// m(empty) times the series of one component, which is computed from the
// f-vector and cross-checked against the chain route.
HilbertSeries face_module_hilbert(const Realization& r);

struct MainTheoremCheck {
    bool matches = false;
    bool dual_route_checked = false; // runs when M(empty) is free
    bool dual_route_matches = false;
    HilbertSeries lhs; // face-module Hilbert series
    HilbertSeries rhs; // t^r T(1/t, 1), normalized
};

// face_module_hilbert(r) == t^r T(1/t, 1) / (1-t)^r; when M(empty) is
// free the right side is recomputed through the dual realization
MainTheoremCheck verify_main_theorem(const Realization& r);

} // namespace arimat
