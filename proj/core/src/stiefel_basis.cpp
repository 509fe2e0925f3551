#include "stiefelmw/stiefel_basis.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace stiefelmw {

StiefelIndex::StiefelIndex(int n, int k) : n_(n), k_(k) {
    if (k < 1 || k >= n)
        throw std::domain_error("StiefelIndex: require 1 <= k <= n-1, got n=" +
                                std::to_string(n) + " k=" + std::to_string(k));
}

std::string to_string(StiefelIndex idx) {
    return "V_" + std::to_string(idx.k()) + "(A^" + std::to_string(idx.n()) + ")";
}

std::vector<FreeBlock> free_blocks(StiefelIndex idx) {
    const int n = idx.n();
    const int lo = idx.bottom();
    std::vector<FreeBlock> blocks;
    if (n % 2 == 0) blocks.push_back({BlockKind::TopSingleton, n - 1, n - 1});
    for (int i = n - 1; i - 1 >= lo; --i)
        if (i % 2 == 0) blocks.push_back({BlockKind::EvenPair, i, i - 1});
    if (lo % 2 == 0) blocks.push_back({BlockKind::BottomSingleton, lo, lo});
    return blocks;
}

std::string block_label(const FreeBlock& b) {
    if (b.hi == b.lo) return "β_{" + std::to_string(b.hi) + "}";
    return "β_{" + std::to_string(b.hi) + "," + std::to_string(b.lo) + "}";
}

namespace {

// Subsets of N_{n,k} are bitmasks with bit j standing for element lo + j.
struct BlockMasks {
    std::vector<FreeBlock> blocks;  // descending hi, as free_blocks returns
    std::vector<std::uint64_t> masks;
};

BlockMasks block_masks(StiefelIndex idx) {
    BlockMasks bm;
    bm.blocks = free_blocks(idx);
    const int lo = idx.bottom();
    for (const FreeBlock& b : bm.blocks) {
        std::uint64_t m = 0;
        for (int i = b.lo; i <= b.hi; ++i) m |= std::uint64_t{1} << (i - lo);
        bm.masks.push_back(m);
    }
    return bm;
}

SubsetBasis classify_mask(StiefelIndex idx, std::uint64_t mask, const BlockMasks& bm) {
    const int lo = idx.bottom();
    SubsetBasis out;

    std::uint64_t free_mask = 0;
    for (std::size_t b = 0; b < bm.masks.size(); ++b)
        if ((mask & bm.masks[b]) == bm.masks[b]) free_mask |= bm.masks[b];
    const std::uint64_t torsion_mask = mask & ~free_mask;

    long long sum = 0;
    for (int j = 0; j < idx.k(); ++j) {
        if (!(mask >> j & 1)) continue;
        const int i = lo + j;
        sum += i;
        out.elements.push_back(i);
        if (free_mask >> j & 1)
            out.free_part.push_back(i);
        else
            out.torsion_part.push_back(i);
    }
    const int count = std::popcount(mask);
    out.degree = {static_cast<int>(2 * sum + count), static_cast<int>(sum + count)};

    if (torsion_mask == 0) {
        out.ring = RingKind::MW;
    } else {
        const int max_torsion = lo + (63 - std::countl_zero(torsion_mask));
        out.ring = (max_torsion % 2 == 0) ? RingKind::M : RingKind::EtaM;
    }

    // b_I = product of the block generators inside I, then the torsion
    // generators, each family in descending index order.
    for (std::size_t b = 0; b < bm.masks.size(); ++b)
        if ((mask & bm.masks[b]) == bm.masks[b]) out.label += block_label(bm.blocks[b]);
    for (auto it = out.torsion_part.rbegin(); it != out.torsion_part.rend(); ++it)
        out.label += "α_{" + std::to_string(*it) + "}";
    if (out.label.empty()) out.label = "1";
    return out;
}

}  // namespace

SubsetBasis classify_subset(StiefelIndex idx, const std::vector<int>& subset) {
    const int lo = idx.bottom();
    std::uint64_t mask = 0;
    for (int i : subset) {
        if (i < lo || i > idx.top())
            throw std::out_of_range("classify_subset: element " + std::to_string(i) +
                                    " outside N_{" + std::to_string(idx.n()) + "," +
                                    std::to_string(idx.k()) + "}");
        const std::uint64_t bit = std::uint64_t{1} << (i - lo);
        if (mask & bit)
            throw std::invalid_argument("classify_subset: duplicate element " + std::to_string(i));
        mask |= bit;
    }
    return classify_mask(idx, mask, block_masks(idx));
}

std::vector<SubsetBasis> enumerate_basis(StiefelIndex idx) {
    const BlockMasks bm = block_masks(idx);
    std::vector<SubsetBasis> rows;
    rows.reserve(std::size_t{1} << idx.k());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << idx.k()); ++mask)
        rows.push_back(classify_mask(idx, mask, bm));
    std::sort(rows.begin(), rows.end(), [](const SubsetBasis& a, const SubsetBasis& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        if (a.ring != b.ring) return a.ring < b.ring;
        return a.label < b.label;
    });
    return rows;
}

FormalSum closed_form(StiefelIndex idx) {
    const BlockMasks bm = block_masks(idx);
    std::vector<FormalSum::Term> terms;
    terms.reserve(std::size_t{1} << idx.k());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << idx.k()); ++mask) {
        SubsetBasis row = classify_mask(idx, mask, bm);
        terms.push_back({CoeffAtom{row.ring, row.degree, std::move(row.label)}, 1});
    }
    return FormalSum(std::move(terms));
}

}  // namespace stiefelmw
