#include "fragqsp/fock.hpp"

#include <bit>
#include <stdexcept>

namespace fragqsp {

namespace {

constexpr std::uint64_t kSqueeze = 0b0110;   // sites j..j+3 = 0,1,1,0
constexpr std::uint64_t kAntisqueeze = 0b1001;

// Parity of the occupied sites strictly below `site`, for moving a mode
// operator into its slot in the ordered product.
int jordan_wigner_parity(std::uint64_t bits, int site) {
    const std::uint64_t below = bits & ((std::uint64_t{1} << (site - 1)) - 1);
    return (std::popcount(below) & 1) ? -1 : 1;
}

int annihilate(std::uint64_t& bits, int site) {
    const int sign = jordan_wigner_parity(bits, site);
    bits &= ~(std::uint64_t{1} << (site - 1));
    return sign;
}

int create(std::uint64_t& bits, int site) {
    const int sign = jordan_wigner_parity(bits, site);
    bits |= std::uint64_t{1} << (site - 1);
    return sign;
}

} // namespace

FockState make_fock(std::uint64_t bits, int length) {
    if (length < 2 || length > 62 || length % 2 != 0)
        throw std::invalid_argument("chain length must be even and within [2, 62]");
    if (length < 64 && (bits >> length) != 0)
        throw std::invalid_argument("occupation bits beyond chain length");
    return FockState{bits, length};
}

bool occupied(const FockState& s, int site) {
    if (site < 1 || site > s.length)
        throw std::invalid_argument("site index out of range");
    return (s.bits >> (site - 1)) & 1;
}

int cell_count(const FockState& s) { return s.length / 2; }

FockState encode(const PseudospinString& text) {
    if (text.empty() || text.size() > 31)
        throw std::invalid_argument("pseudospin string must have 1..31 cells");
    std::uint64_t bits = 0;
    for (std::size_t m = 0; m < text.size(); ++m) {
        int lo = 0, hi = 0; // occupations of sites (2m+1, 2m+2)
        switch (text[m]) {
            case 'u': lo = 0; hi = 1; break;
            case 'd': lo = 1; hi = 0; break;
            case '+': lo = 1; hi = 1; break;
            case '-': lo = 0; hi = 0; break;
            default:
                throw std::invalid_argument("pseudospin characters are u, d, +, -");
        }
        bits |= std::uint64_t(lo) << (2 * m);
        bits |= std::uint64_t(hi) << (2 * m + 1);
    }
    return FockState{bits, 2 * static_cast<int>(text.size())};
}

PseudospinString decode(const FockState& s) {
    PseudospinString text;
    text.reserve(cell_count(s));
    for (int m = 0; m < cell_count(s); ++m) {
        const int lo = (s.bits >> (2 * m)) & 1;
        const int hi = (s.bits >> (2 * m + 1)) & 1;
        if (lo == 0 && hi == 1) text += 'u';
        else if (lo == 1 && hi == 0) text += 'd';
        else if (lo == 1 && hi == 1) text += '+';
        else text += '-';
    }
    return text;
}

ConservedCharges charges(const FockState& s) {
    ConservedCharges c;
    for (int j = 1; j <= s.length; ++j) {
        if ((s.bits >> (j - 1)) & 1) {
            ++c.n_total;
            c.dipole += j;
            (j % 2 == 0 ? c.n_even : c.n_odd) += 1;
        }
    }
    return c;
}

int pseudospin_z(const FockState& s, int m) {
    if (m < 1 || m > cell_count(s))
        throw std::invalid_argument("cell index out of range");
    const int lo = (s.bits >> (2 * m - 2)) & 1;
    const int hi = (s.bits >> (2 * m - 1)) & 1;
    return hi - lo;
}

std::optional<PairHopResult> apply_pair_hop(const FockState& s, int j) {
    if (j < 1 || j > s.length - 3)
        throw std::invalid_argument("window start out of range");
    const std::uint64_t window = (s.bits >> (j - 1)) & 0xF;

    std::uint64_t bits = s.bits;
    int sign = 1;
    if (window == kSqueeze) {
        // c_j^dag c_{j+3}^dag c_{j+2} c_{j+1}, rightmost factor first
        sign *= annihilate(bits, j + 1);
        sign *= annihilate(bits, j + 2);
        sign *= create(bits, j + 3);
        sign *= create(bits, j);
    } else if (window == kAntisqueeze) {
        // c_{j+1}^dag c_{j+2}^dag c_{j+3} c_j
        sign *= annihilate(bits, j);
        sign *= annihilate(bits, j + 3);
        sign *= create(bits, j + 2);
        sign *= create(bits, j + 1);
    } else {
        return std::nullopt;
    }
    return PairHopResult{FockState{bits, s.length}, sign};
}

std::vector<PairHopResult> pair_hop_moves(const FockState& s) {
    std::vector<PairHopResult> moves;
    for (int j = 1; j <= s.length - 3; ++j) {
        if (auto r = apply_pair_hop(s, j)) moves.push_back(*r);
    }
    return moves;
}

} // namespace fragqsp
