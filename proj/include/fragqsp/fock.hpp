#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fragqsp {

// Spinless-fermion occupation configuration on an open chain.
// Site j (1-based, 1 <= j <= length) lives in bit j-1 of `bits`.
struct FockState {
    std::uint64_t bits = 0;
    int length = 0;

    friend bool operator==(const FockState&, const FockState&) = default;
};

// Two fermion sites (2m-1, 2m) form pseudospin cell m:
//   u = (0,1)   d = (1,0)   '+' = (1,1)   '-' = (0,0)
// Cells are written left to right, cell 1 first, e.g. "udud" or "ud++du".
using PseudospinString = std::string;

struct ConservedCharges {
    int n_total = 0;   // total fermion number
    long long dipole = 0; // sum of j * n_j over sites
    int n_even = 0;    // fermions on even sites
    int n_odd = 0;     // fermions on odd sites

    friend bool operator==(const ConservedCharges&, const ConservedCharges&) = default;
};

// Validated constructor: length even, 2 <= length <= 62, no bits above length.
FockState make_fock(std::uint64_t bits, int length);

bool occupied(const FockState& s, int site);

// Pseudospin cell count (length / 2).
int cell_count(const FockState& s);

FockState encode(const PseudospinString& text);
PseudospinString decode(const FockState& s);

ConservedCharges charges(const FockState& s);

// sigma^z of cell m: n_{2m} - n_{2m-1}. Fracton cells give 0.
int pseudospin_z(const FockState& s, int m);

struct PairHopResult {
    FockState state;
    int sign = 1; // fermionic permutation parity of the matrix element
};

// Apply c_j^dag c_{j+3}^dag c_{j+2} c_{j+1} (squeeze, window 0110 -> 1001)
// or its adjoint (antisqueeze, 1001 -> 0110) at window start j.
// Returns nullopt when the window matches neither pattern.
std::optional<PairHopResult> apply_pair_hop(const FockState& s, int j);

// All states reachable from s in one move, scanning j = 1 .. length-3.
std::vector<PairHopResult> pair_hop_moves(const FockState& s);

} // namespace fragqsp
