#include "infoconv/lattice.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "infoconv/errors.hpp"

namespace infoconv {

namespace {

constexpr int kMaxSources = 5;

bool comparable(SourceSubset a, SourceSubset b) {
    return subset_of(a, b) || subset_of(b, a);
}

} // namespace

Antichain::Antichain(std::vector<SourceSubset> members, int n_sources)
    : members_(std::move(members)), n_sources_(n_sources) {
    if (n_sources_ < 1 || n_sources_ > kMaxSources)
        throw ValidationError("Antichain: source count out of range 1..5");
    if (members_.empty()) throw ValidationError("Antichain: no members");
    std::sort(members_.begin(), members_.end());
    const SourceSubset full = (SourceSubset{1} << n_sources_) - 1;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i] == 0 || members_[i] > full)
            throw ValidationError("Antichain: member mask out of range");
        for (std::size_t j = i + 1; j < members_.size(); ++j)
            if (comparable(members_[i], members_[j]))
                throw ValidationError("Antichain: members " + std::to_string(members_[i]) +
                                      " and " + std::to_string(members_[j]) +
                                      " are comparable");
    }
}

std::string Antichain::to_string() const {
    std::string out;
    for (SourceSubset m : members_) {
        out += '{';
        for (int i = 0; i < n_sources_; ++i)
            if (m >> i & 1) out += static_cast<char>('0' + i);
        out += '}';
    }
    return out;
}

bool precedes(const Antichain& a, const Antichain& b) {
    if (a.n_sources() != b.n_sources())
        throw ValidationError("precedes: antichains over different source counts");
    for (SourceSubset s : b.members()) {
        bool covered = false;
        for (SourceSubset t : a.members())
            if (subset_of(t, s)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

std::vector<Antichain> enumerate_atoms(int n_sources) {
    if (n_sources < 1 || n_sources > kMaxSources)
        throw ValidationError("enumerate_atoms: source count out of range 1..5");
    const SourceSubset full = (SourceSubset{1} << n_sources) - 1;
    std::vector<Antichain> atoms;
    std::vector<SourceSubset> current;
    // Depth-first over subsets in increasing mask order; every partial
    // selection is itself an antichain, so each atom is emitted once.
    auto rec = [&](auto&& self, SourceSubset start) -> void {
        for (SourceSubset s = start; s <= full; ++s) {
            bool ok = true;
            for (SourceSubset t : current)
                if (comparable(s, t)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            current.push_back(s);
            atoms.emplace_back(current, n_sources);
            self(self, s + 1);
            current.pop_back();
        }
    };
    rec(rec, 1);
    return atoms;
}

std::pair<std::vector<int>, int> compute_ranks(
    const std::vector<std::vector<std::uint32_t>>& strict_down) {
    const std::size_t n = strict_down.size();
    // Any strict predecessor has a strictly smaller down-set, so
    // ordering by down-set size is a topological order.
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return strict_down[a].size() < strict_down[b].size();
    });
    std::vector<int> ranks(n, 0);
    int height = 0;
    for (std::uint32_t j : order) {
        int r = 0;
        for (std::uint32_t i : strict_down[j]) r = std::max(r, ranks[i] + 1);
        ranks[j] = r;
        height = std::max(height, r);
    }
    return {std::move(ranks), height};
}

PILattice::PILattice(int n_sources) : n_sources_(n_sources) {
    atoms_ = enumerate_atoms(n_sources);
    const std::size_t n = atoms_.size();
    const SourceSubset full = (SourceSubset{1} << n_sources) - 1;

    // up_of[t]: bit s set iff subset-mask s is a superset of t.
    std::array<std::uint32_t, 32> up_of{};
    for (SourceSubset t = 1; t <= full; ++t)
        for (SourceSubset s = 1; s <= full; ++s)
            if (subset_of(t, s)) up_of[t] |= std::uint32_t{1} << s;

    member_bits_.assign(n, 0);
    covered_bits_.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        for (SourceSubset t : atoms_[j].members()) {
            member_bits_[j] |= std::uint32_t{1} << t;
            covered_bits_[j] |= up_of[t];
        }
        index_.emplace(atoms_[j].to_string(), j);
    }

    // i <= j iff every member of j is covered by some member of i.
    auto leq_bits = [&](std::size_t i, std::size_t j) {
        return (member_bits_[j] & ~covered_bits_[i]) == 0;
    };

    if (n_sources <= 4) {
        dense_order_.assign(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                dense_order_[i * n + j] = leq_bits(i, j) ? 1 : 0;
    }
    down_.assign(n, {});
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (i != j && leq_bits(i, j)) down_[j].push_back(static_cast<std::uint32_t>(i));

    auto [ranks, height] = compute_ranks(down_);
    ranks_ = std::move(ranks);
    height_ = height;

    std::vector<SourceSubset> singletons;
    for (int i = 0; i < n_sources; ++i) singletons.push_back(SourceSubset{1} << i);
    bottom_ = index_of(Antichain(singletons, n_sources));
    top_ = index_of(Antichain({full}, n_sources));

    std::size_t minimal = 0;
    for (std::size_t j = 0; j < n; ++j)
        if (down_[j].empty()) ++minimal;
    if (minimal != 1 || ranks_[bottom_] != 0 || ranks_[top_] != height_ ||
        down_[top_].size() != n - 1)
        throw std::logic_error("PILattice: order is not a single-bottom graded lattice");
}

bool PILattice::leq(std::size_t i, std::size_t j) const {
    if (!dense_order_.empty()) return dense_order_[i * size() + j] != 0;
    return (member_bits_[j] & ~covered_bits_[i]) == 0;
}

std::size_t PILattice::index_of(const Antichain& a) const {
    auto it = index_.find(a.to_string());
    if (it == index_.end())
        throw ValidationError("PILattice: atom " + a.to_string() + " not in lattice");
    return it->second;
}

std::string PILattice::dump() const {
    std::ostringstream out;
    for (std::size_t j = 0; j < size(); ++j)
        out << atoms_[j].to_string() << ' ' << ranks_[j] << '\n';
    return out.str();
}

const PILattice& PILattice::for_sources(int n_sources) {
    if (n_sources < 1 || n_sources > kMaxSources)
        throw ValidationError("PILattice: source count out of range 1..5");
    static std::array<std::unique_ptr<PILattice>, kMaxSources + 1> cache;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    if (!cache[n_sources]) cache[n_sources] = std::make_unique<PILattice>(n_sources);
    return *cache[n_sources];
}

} // namespace infoconv
