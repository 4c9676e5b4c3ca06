#pragma once

#include <compare>
#include <string>
#include <vector>

namespace commperm {

// Permutation of {0, ..., n-1} stored as its image table: img[i] = sigma(i).
// Everything internal is 0-based; the 1-based image-sequence form ("2 3 1"
// for the 3-cycle) is used only at I/O boundaries.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);  // validates bijectivity

    static Permutation identity(int n);
    static Permutation transposition(int n, int a, int b);
    // Cycle notation, 0-based entries, e.g. from_cycles(4, {{0,1,2}}).
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
    static Permutation parse_one_based(const std::string& text);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const;
    bool is_identity() const;
    std::string to_one_based() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    struct trusted_t {};
    Permutation(trusted_t, std::vector<int> images) : img_(std::move(images)) {}
    std::vector<int> img_;
};

// (a o b)(i) = a(b(i))
Permutation compose(const Permutation& a, const Permutation& b);
bool commutes(const Permutation& a, const Permutation& b);
Permutation power(const Permutation& a, int e);  // e may be negative

// Tag for constructors that skip validation; for enumeration inner loops
// where commutation holds by construction.
struct unchecked_t {
    explicit unchecked_t() = default;
};
inline constexpr unchecked_t unchecked{};

// Ordered tuple (sigma_1, ..., sigma_p) of pairwise commuting permutations
// of {0,...,n-1}.  p = 0 is allowed (the empty tuple still carries n).
class CommutingTuple {
public:
    CommutingTuple(int n, std::vector<Permutation> perms);  // checks all pairs
    CommutingTuple(unchecked_t, int n, std::vector<Permutation> perms);

    int n() const { return n_; }
    int p() const { return static_cast<int>(perms_.size()); }
    const Permutation& operator[](int j) const { return perms_[j]; }
    const std::vector<Permutation>& perms() const { return perms_; }

    friend bool operator==(const CommutingTuple&, const CommutingTuple&) = default;
    friend auto operator<=>(const CommutingTuple&, const CommutingTuple&) = default;

private:
    int n_;
    std::vector<Permutation> perms_;
};

// Set partition of {0,...,n-1} into nonempty blocks, numbered by increasing
// minimum: min(block 0) = 0 < min(block 1) < ...  Each block is sorted.
class OrbitPartition {
public:
    static OrbitPartition from_blocks(int n, std::vector<std::vector<int>> blocks);

    int n() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<int>& block(int b) const { return blocks_[b]; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_of(int element) const { return block_index_[element]; }

    friend bool operator==(const OrbitPartition&, const OrbitPartition&) = default;

private:
    OrbitPartition() = default;
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_index_;
};

// Orbits of the action of <sigma_1,...,sigma_p> on {0,...,n-1}, i.e. the
// connected components of the graph with edges {i, sigma_j(i)}.
OrbitPartition orbit_partition(const CommutingTuple& t);
bool is_transitive(const CommutingTuple& t);

// Bijection between two equal-size subsets of {0,...,n-1}: source is kept
// sorted and image[i] = f(source[i]).  Target is computed, not prescribed.
class BlockMap {
public:
    BlockMap(std::vector<int> source, std::vector<int> images);

    static BlockMap identity_on(std::vector<int> subset);

    const std::vector<int>& source() const { return source_; }
    const std::vector<int>& images() const { return images_; }
    std::vector<int> target() const;  // sorted copy of images
    int block_size() const { return static_cast<int>(source_.size()); }

    int apply(int x) const;  // throws if x is outside source
    BlockMap inverse() const;

    friend bool operator==(const BlockMap&, const BlockMap&) = default;
    friend auto operator<=>(const BlockMap&, const BlockMap&) = default;

private:
    std::vector<int> source_;
    std::vector<int> images_;
};

// Restriction (and corestriction) of sigma to a block: x -> sigma(x).
BlockMap restrict_to(const Permutation& sigma, const std::vector<int>& block);
// (a o b), defined only when b's target equals a's source as sets.
BlockMap compose(const BlockMap& a, const BlockMap& b);
// Relabel a BlockMap with source == target (as sets) to a Permutation of
// {0,...,s-1} via the order-preserving identification of the block with [s].
Permutation as_permutation(const BlockMap& m);
// Inverse relabeling: lift a permutation of {0,...,s-1} onto a sorted subset.
BlockMap lift_to_block(const std::vector<int>& block, const Permutation& sigma);

}  // namespace commperm
