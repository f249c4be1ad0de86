#pragma once

#include "oag/verdict.hpp"

namespace oag {

// Q(sqrt2): minpoly x^2 - 2 on [1, 2].
FieldSpec field_sqrt2();
// Q(sqrt2 + sqrt3): minpoly x^4 - 10x^2 + 1 on [3, 4].
FieldSpec field_sqrt2_sqrt3();
FieldElement sqrt2_in(const FieldSpec& F);
FieldElement sqrt3_in(const FieldSpec& F);

// Three-slot orthogonality example; c = (c1, c2, c3), no B.
Scene golden_orthogonality();
// A = Q, B = Q + Q sqrt2, c = (sqrt2 + eps, eps sqrt2).
Scene golden_extension_counts();
// A = Q, B = Q + Q eps, c infinitesimal below eps.
Scene golden_finite_satisfiability();
// A = Q, B = Q + Q sqrt2 + Q sqrt3, c = (sqrt2 + eps, sqrt3 + eps sqrt2).
Scene golden_nonforking_vs_seq();
// c1 = sqrt2 + eps over A = span(1, c2), B = A + Q sqrt2.
Scene golden_seqstar();

std::vector<std::pair<std::string, Scene>> golden_scenes();

struct GoldenCheck {
    std::string name;
    bool ok = false;
};

std::vector<GoldenCheck> orthogonality_checks();
std::vector<GoldenCheck> extension_count_checks();
// seed drives the random Q-free pair (f1, f2) used for the Archimedean-value claim.
std::vector<GoldenCheck> independence_checks(unsigned seed = 1);

}
