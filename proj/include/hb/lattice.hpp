/*
   Copyright 2026 The hbspace Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#ifndef HB_LATTICE_HPP
#define HB_LATTICE_HPP

#include <vector>

#include "hb/space.hpp"

namespace hb {

struct BoundaryOrder {
    cplx point;            // mate boundary zero
    int order = 0;         // j, capped at the multiplicity
    int multiplicity = 1;  // mate multiplicity at the point
};

enum class SubspaceForm { zero, full, classified };

/// [f] = [prod (z - point)^order * theta]
struct SubspaceDescriptor {
    RationalFn theta = RationalFn(Poly::constant(1.0));
    std::vector<RootCluster> theta_zeros;
    std::vector<BoundaryOrder> boundary_orders;
    SubspaceForm form = SubspaceForm::full;
};

SubspaceDescriptor classify(const HbSpace& s, const RationalFn& f);

/// The generator prod (z - point)^order * theta of a descriptor.
RationalFn canonical_form(const SubspaceDescriptor& d);

struct CyclicWitness {
    bool cyclic = false;
    std::vector<RootCluster> inner_zeros;
    std::vector<std::pair<cplx, cplx>> boundary_values;  // (point, f(point))
};

CyclicWitness cyclic_witness(const HbSpace& s, const RationalFn& f);
inline bool is_cyclic(const HbSpace& s, const RationalFn& f) { return cyclic_witness(s, f).cyclic; }

struct Membership {
    bool member = false;
    /// f = prod (z - point)^mult * g + p with deg p below the total multiplicity
    RationalFn g;
    Poly p;
    double residual = 0.0;
};

Membership membership(const HbSpace& s, const RationalFn& f);

struct Distance {
    double angle = 0.0;         // max of the two one-sided gaps
    double h_to_span_f = 0.0;   // largest angle from span{z^k h : k <= depth} to span{z^k f : k <= K}
    double f_to_span_h = 0.0;
    int truncation = 0;
    double tail = 0.0;
};

/// Oracle for [f] = [h] in the H(b) metric. Each side's first depth+1 shifted
/// generators are compared against the other side's K+1 shifted generators,
/// so the result tends to 0 as K grows exactly when [f] = [h]. A negative
/// depth selects the default of 3. Throws rank_deficiency when a Gram block
/// has eigenvalue ratio below 1e-10.
Distance subspace_distance(const HbSpace& s, const RationalFn& f, const RationalFn& h, int K, int depth = -1);

/// Largest principal angle between span{z^k f} and span{z^k h}, k <= K.
/// Tends to pi/2 with K whenever f and h are not proportional.
double largest_principal_angle(const HbSpace& s, const RationalFn& f, const RationalFn& h, int K);

/// Bases of L_j = span{(z - point)^j, ..., (z - point)^(n-1)}, j = 0 .. n-1,
/// for a mate with a single boundary zero of multiplicity n.
std::vector<std::vector<Poly>> ladder_spaces(const HbSpace& s);

}  // namespace hb

#endif  // HB_LATTICE_HPP
