#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace infoconv {

// A source subset is a nonempty bitmask over source indices 0..n-1.
using SourceSubset = std::uint32_t;

inline bool subset_of(SourceSubset a, SourceSubset b) { return (a & ~b) == 0; }

// An antichain of source subsets: no member contains another. Members
// are kept sorted by mask, which is the canonical form used for
// equality, hashing and string output.
class Antichain {
public:
    Antichain(std::vector<SourceSubset> members, int n_sources);

    const std::vector<SourceSubset>& members() const { return members_; }
    int n_sources() const { return n_sources_; }

    // "{0}{12}" style: each member lists its source indices.
    std::string to_string() const;

    bool operator==(const Antichain&) const = default;

private:
    std::vector<SourceSubset> members_;
    int n_sources_;
};

// a precedes b (a is redundancy-ward of b) iff every member of b has
// a member of a below it: for all s in b there is t in a with t <= s.
bool precedes(const Antichain& a, const Antichain& b);

// All antichains of nonempty subsets of {0..n-1}, in lexicographic
// member order. Counts for n = 1..5: 1, 4, 18, 166, 7579.
std::vector<Antichain> enumerate_atoms(int n_sources);

// rank(j) = length of the longest strictly ascending chain ending at
// atom j, given each atom's full list of strict predecessors. Returns
// per-atom ranks and the height (maximum rank).
std::pair<std::vector<int>, int> compute_ranks(
    const std::vector<std::vector<std::uint32_t>>& strict_down);

// The partial-information lattice: atoms, their order, and the
// longest-chain layer ranks. Lattices are immutable; use for_sources()
// to share one instance per source count across the process.
class PILattice {
public:
    explicit PILattice(int n_sources);

    static const PILattice& for_sources(int n_sources);

    int n_sources() const { return n_sources_; }
    std::size_t size() const { return atoms_.size(); }
    const std::vector<Antichain>& atoms() const { return atoms_; }
    const Antichain& atom(std::size_t i) const { return atoms_[i]; }
    int rank(std::size_t i) const { return ranks_[i]; }
    int height() const { return height_; }
    std::size_t bottom() const { return bottom_; }
    std::size_t top() const { return top_; }

    // atom i precedes atom j (reflexive).
    bool leq(std::size_t i, std::size_t j) const;

    // Indices of all strict predecessors of atom j.
    std::span<const std::uint32_t> strict_down(std::size_t j) const {
        return down_[j];
    }

    std::size_t index_of(const Antichain& a) const;

    // One atom per line with its rank, for golden-file comparisons.
    std::string dump() const;

private:
    int n_sources_;
    std::vector<Antichain> atoms_;
    std::vector<std::uint32_t> member_bits_;  // bit s set iff subset-mask s is a member
    std::vector<std::uint32_t> covered_bits_; // bit s set iff some member is a subset of s
    std::vector<std::uint8_t> dense_order_;   // row-major leq, only for n <= 4
    std::vector<std::vector<std::uint32_t>> down_;
    std::vector<int> ranks_;
    int height_ = 0;
    std::size_t bottom_ = 0, top_ = 0;
    std::unordered_map<std::string, std::size_t> index_;
};

} // namespace infoconv
