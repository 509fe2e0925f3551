#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stiefelmw/bigraded.hpp"

namespace stiefelmw {

/// The pair (n, k) indexing the variety of k-frames in affine n-space.
/// Valid range is 1 <= k <= n-1; the index set N_{n,k} = {n-k, ..., n-1}.
class StiefelIndex {
public:
    StiefelIndex(int n, int k);  // throws std::domain_error outside the valid range

    int n() const { return n_; }
    int k() const { return k_; }
    int bottom() const { return n_ - k_; }  // smallest element of N_{n,k}
    int top() const { return n_ - 1; }      // largest element of N_{n,k}

    friend constexpr auto operator<=>(const StiefelIndex&, const StiefelIndex&) = default;

private:
    int n_;
    int k_;
};

std::string to_string(StiefelIndex idx);  // "V_4(A^7)"

enum class BlockKind : std::uint8_t { TopSingleton, EvenPair, BottomSingleton };

/// One block of the free-pair tiling of N_{n,k}: the singleton {n-1} when n
/// is even, an adjacent pair {i, i-1} with i even, or the singleton {n-k}
/// when n-k is even. Singletons have hi == lo.
struct FreeBlock {
    BlockKind kind = BlockKind::EvenPair;
    int hi = 0;
    int lo = 0;

    friend constexpr auto operator<=>(const FreeBlock&, const FreeBlock&) = default;
};

/// The blocks of the tiling, in descending order of top element. They are
/// pairwise disjoint and their union is N_{n,k}.
std::vector<FreeBlock> free_blocks(StiefelIndex idx);

std::string block_label(const FreeBlock& b);  // "β_{6,5}" or "β_{7}"

/// A subset I of N_{n,k} with its free part I_F (union of the tiling
/// blocks contained in I), torsion part I_T = I \ I_F, degree
/// d(I) = (sum 2i+1, sum i+1), coefficient kind and generator label.
struct SubsetBasis {
    std::vector<int> elements;      // I, ascending
    std::vector<int> free_part;     // I_F, ascending
    std::vector<int> torsion_part;  // I_T, ascending
    Bidegree degree;
    RingKind ring = RingKind::MW;
    std::string label;  // "1" for the empty subset
};

/// Classify one subset. Throws std::out_of_range if an element lies
/// outside N_{n,k} and std::invalid_argument on duplicates.
SubsetBasis classify_subset(StiefelIndex idx, const std::vector<int>& subset);

/// All 2^k subsets, sorted by (degree, ring, label).
std::vector<SubsetBasis> enumerate_basis(StiefelIndex idx);

/// Path A: the closed-form additive cohomology, one atom per subset of
/// N_{n,k}, with kind decided by the free/torsion split and the parity of
/// Max(I_T).
FormalSum closed_form(StiefelIndex idx);

}  // namespace stiefelmw
