#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "stiefelmw/bigraded.hpp"
#include "stiefelmw/motive.hpp"
#include "stiefelmw/stiefel_basis.hpp"

namespace testutil {

using namespace stiefelmw;

struct AtomSpec {
    RingKind kind;
    int p;
    int q;
    std::int64_t mult = 1;
};

inline FormalSum make_sum(std::initializer_list<AtomSpec> atoms) {
    std::vector<FormalSum::Term> terms;
    for (const auto& a : atoms) terms.push_back({CoeffAtom{a.kind, {a.p, a.q}, {}}, a.mult});
    return FormalSum(std::move(terms));
}

/// Exact term-level comparison including labels and entry order, for tests
/// that pin the canonical representation rather than multiset equality.
inline bool same_terms(const FormalSum& a, const FormalSum& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    if (ta.size() != tb.size()) return false;
    for (std::size_t i = 0; i < ta.size(); ++i)
        if (ta[i].atom.kind != tb[i].atom.kind || ta[i].atom.shift != tb[i].atom.shift ||
            ta[i].atom.label != tb[i].atom.label || ta[i].mult != tb[i].mult)
            return false;
    return true;
}

/// Independent oracle for path A: the subset classification rebuilt from
/// plain set arithmetic (sorted vectors, set_difference, includes) with no
/// bitmask shortcuts. Kept deliberately naive.
inline FormalSum closed_form_naive(StiefelIndex idx) {
    const int n = idx.n();
    const int lo = idx.bottom();
    const int hi = idx.top();

    std::vector<std::vector<int>> blocks;
    if (n % 2 == 0) blocks.push_back({n - 1});
    for (int i = hi; i >= lo + 1; --i)
        if (i % 2 == 0) blocks.push_back({i - 1, i});
    if (lo % 2 == 0) blocks.push_back({lo});

    std::vector<FormalSum::Term> terms;
    std::vector<int> subset;
    const auto classify = [&]() {
        std::vector<int> free_part;
        for (const auto& blk : blocks)
            if (std::includes(subset.begin(), subset.end(), blk.begin(), blk.end()))
                free_part.insert(free_part.end(), blk.begin(), blk.end());
        std::sort(free_part.begin(), free_part.end());
        std::vector<int> torsion;
        std::set_difference(subset.begin(), subset.end(), free_part.begin(), free_part.end(),
                            std::back_inserter(torsion));
        int p = 0;
        int q = 0;
        for (int i : subset) {
            p += 2 * i + 1;
            q += i + 1;
        }
        RingKind ring = RingKind::MW;
        if (!torsion.empty()) ring = torsion.back() % 2 == 0 ? RingKind::M : RingKind::EtaM;
        terms.push_back({CoeffAtom{ring, {p, q}, {}}, 1});
    };
    const auto recurse = [&](auto&& self, int next) -> void {
        if (next > hi) {
            classify();
            return;
        }
        self(self, next + 1);
        subset.push_back(next);
        self(self, next + 1);
        subset.pop_back();
    };
    recurse(recurse, lo);
    return FormalSum(std::move(terms));
}

inline FormalSum random_formal_sum(std::mt19937& rng, int max_atoms = 5) {
    std::uniform_int_distribution<int> n_atoms(0, max_atoms);
    std::uniform_int_distribution<int> coord(-6, 6);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<std::int64_t> mult(1, 3);
    std::vector<FormalSum::Term> terms;
    const int count = n_atoms(rng);
    for (int i = 0; i < count; ++i)
        terms.push_back({CoeffAtom{static_cast<RingKind>(kind(rng)), {coord(rng), coord(rng)}, {}},
                         mult(rng)});
    return FormalSum(std::move(terms));
}

inline MotiveSum random_motive_sum(std::mt19937& rng, int max_atoms = 4) {
    std::uniform_int_distribution<int> n_atoms(0, max_atoms);
    std::uniform_int_distribution<int> coord(-5, 5);
    std::uniform_int_distribution<int> kind(0, 1);
    std::uniform_int_distribution<std::int64_t> mult(1, 3);
    std::vector<MotiveSum::Term> terms;
    const int count = n_atoms(rng);
    for (int i = 0; i < count; ++i)
        terms.push_back(
            {MotiveAtom{static_cast<MotiveKind>(kind(rng)), coord(rng), coord(rng)}, mult(rng)});
    return MotiveSum(std::move(terms));
}

/// Direct sum of motives (multiset union of atoms).
inline MotiveSum motive_add(const MotiveSum& a, const MotiveSum& b) {
    std::vector<MotiveSum::Term> terms = a.terms();
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    return MotiveSum(std::move(terms));
}

struct CliResult {
    int exit_code = -1;
    std::string output;
};

/// Run the built CLI with the given arguments, capturing stdout. stderr is
/// discarded; tests that care about error text redirect it themselves.
inline CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + STIEFEL_MW_CLI_PATH + "\" " + args + " 2>/dev/null";
    CliResult result;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return result;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
    const int rc = ::pclose(pipe);
    result.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

/// The hand-checked 16-atom cohomology of V_4(A^7), shared by the path
/// equivalence tests.
inline FormalSum v4_a7_atoms() {
    return make_sum({{RingKind::MW, 0, 0},
                     {RingKind::EtaM, 7, 4},
                     {RingKind::M, 9, 5},
                     {RingKind::EtaM, 11, 6},
                     {RingKind::M, 13, 7},
                     {RingKind::MW, 16, 9},
                     {RingKind::EtaM, 18, 10},
                     {RingKind::M, 20, 11},
                     {RingKind::EtaM, 20, 11},
                     {RingKind::M, 22, 12},
                     {RingKind::MW, 24, 13},
                     {RingKind::EtaM, 27, 15},
                     {RingKind::M, 29, 16},
                     {RingKind::EtaM, 31, 17},
                     {RingKind::M, 33, 18},
                     {RingKind::MW, 40, 22}});
}

}  // namespace testutil
