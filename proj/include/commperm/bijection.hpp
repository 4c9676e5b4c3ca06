#pragma once

#include <functional>
#include <string>
#include <vector>

#include "commperm/bigint.hpp"
#include "commperm/perm_core.hpp"

namespace commperm::bijection {

// Output of the p+1 -> p reduction applied to a transitive (p+1)-tuple:
//   blocks       orbits X_1,...,X_r of the first p permutations, all of the
//                same size s, numbered by minimal element (1 in X_1);
//   sigma_tilde  the first p permutations restricted to X_1, relabeled onto
//                {0,...,s-1} order-preservingly; commuting and transitive;
//   gamma        permutation of the block indices with gamma(0) = 0, listing
//                the cycle of block 0 under the last permutation:
//                sigma_{p+1}(X_{gamma(i)}) = X_{gamma(i+1)};
//   tau          the r-1 gluing maps tau[i] : X_{gamma(i)} -> X_{gamma(i+1)}
//                cut out of the last permutation;
//   z            (sigma_{p+1})^r applied to the minimum of X_1 (the twist).
struct BijectionWitness {
    OrbitPartition blocks;
    CommutingTuple sigma_tilde;
    Permutation gamma;
    std::vector<BlockMap> tau;
    int z = 0;

    int r() const { return blocks.block_count(); }
    int s() const { return static_cast<int>(blocks.block(0).size()); }

    // Throws std::invalid_argument on any structural violation.
    void validate() const;

    friend bool operator==(const BijectionWitness&, const BijectionWitness&) = default;
};

// The map [r] -> [r] induced by f on the blocks of X; defined when f sends
// each block into a single block (true for any power of a permutation
// commuting with the generators of X).  Throws if a block image straddles
// two blocks or the induced map fails to be a bijection.
std::vector<int> induced_block_perm(const Permutation& f, const OrbitPartition& X);

// The forward direction: transitive commuting (p+1)-tuple -> witness.
BijectionWitness decompose(const CommutingTuple& t);

// The unique g in <sigma_tilde> with g(0) = z (0-based), found by breadth
// first search; the commuting transitive action makes it unique.  Throws if
// z is unreachable (input not transitive).
Permutation find_g(const CommutingTuple& sigma_tilde, int z);

// The inverse direction: witness -> transitive commuting (p+1)-tuple.
CommutingTuple reconstruct(const BijectionWitness& w);

// All partitions of {0,...,n-1} into r blocks of equal size (r | n).
void for_each_equal_partition(int n, int r,
                              const std::function<void(const OrbitPartition&)>& visit);

// Every witness over a fixed block partition whose sigma_tilde has p
// permutations, one factor at a time: transitive sigma_tilde (via the
// enumeration oracle), gamma fixing block 0, all gluing tuples, all twists.
void for_each_witness(int p, const OrbitPartition& X,
                      const std::function<void(const BijectionWitness&)>& visit);

// A(p,s,1) * (r-1)! * s!^{r-1} * s: witnesses over one fixed partition.
Int witness_count_formula(int p, long r, long s);

// Fixture serialization: 1-based blocks, gamma as an image sequence, tau as
// explicit pair lists, z as a 1-based integer.
std::string witness_to_json(const BijectionWitness& w);
BijectionWitness witness_from_json(const std::string& text);

}  // namespace commperm::bijection
