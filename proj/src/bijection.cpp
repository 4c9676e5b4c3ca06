#include "commperm/bijection.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "commperm/counting.hpp"
#include "commperm/oracle.hpp"

namespace commperm::bijection {

void BijectionWitness::validate() const {
    const int nr = r();
    const int size = s();
    for (int b = 0; b < nr; ++b)
        if (static_cast<int>(blocks.block(b).size()) != size)
            throw std::invalid_argument("BijectionWitness: blocks are not of equal size");
    if (sigma_tilde.n() != size)
        throw std::invalid_argument("BijectionWitness: sigma_tilde is not on [s]");
    for (int i = 0; i < sigma_tilde.p(); ++i)
        for (int j = i + 1; j < sigma_tilde.p(); ++j)
            if (!commutes(sigma_tilde[i], sigma_tilde[j]))
                throw std::invalid_argument("BijectionWitness: sigma_tilde does not commute");
    if (!is_transitive(sigma_tilde))
        throw std::invalid_argument("BijectionWitness: sigma_tilde is not transitive");
    if (gamma.size() != nr || gamma(0) != 0)
        throw std::invalid_argument("BijectionWitness: gamma must fix the first block");
    if (static_cast<int>(tau.size()) != nr - 1)
        throw std::invalid_argument("BijectionWitness: wrong number of gluing maps");
    for (int i = 0; i + 1 < nr; ++i) {
        if (tau[i].source() != blocks.block(gamma(i)) ||
            tau[i].target() != blocks.block(gamma(i + 1)))
            throw std::invalid_argument("BijectionWitness: gluing map domains do not chain");
    }
    const auto& x1 = blocks.block(0);
    if (!std::binary_search(x1.begin(), x1.end(), z))
        throw std::invalid_argument("BijectionWitness: twist outside the first block");
}

std::vector<int> induced_block_perm(const Permutation& f, const OrbitPartition& X) {
    if (f.size() != X.n()) throw std::invalid_argument("induced_block_perm: size mismatch");
    const int r = X.block_count();
    std::vector<int> induced(r);
    std::vector<char> hit(r, 0);
    for (int b = 0; b < r; ++b) {
        const auto& block = X.block(b);
        const int target = X.block_of(f(block[0]));
        for (int x : block)
            if (X.block_of(f(x)) != target)
                throw std::invalid_argument(
                    "induced_block_perm: image of a block straddles two blocks");
        induced[b] = target;
        hit[target] = 1;
    }
    for (int b = 0; b < r; ++b)
        if (!hit[b])
            throw std::invalid_argument("induced_block_perm: induced map is not a bijection");
    return induced;
}

BijectionWitness decompose(const CommutingTuple& t) {
    const int p = t.p() - 1;
    if (p < 0) throw std::invalid_argument("decompose: need at least one permutation");
    if (!is_transitive(t)) throw std::invalid_argument("decompose: tuple is not transitive");
    const int n = t.n();

    std::vector<Permutation> head(t.perms().begin(), t.perms().end() - 1);
    const Permutation& last = t[p];
    OrbitPartition X = orbit_partition(CommutingTuple(unchecked, n, std::move(head)));
    const int r = X.block_count();
    const int s = static_cast<int>(X.block(0).size());
    for (int b = 0; b < r; ++b)
        if (static_cast<int>(X.block(b).size()) != s)
            throw std::logic_error("decompose: unequal block sizes; input tuple is invalid");

    const std::vector<int> induced = induced_block_perm(last, X);
    // cycle of block 0 in the induced permutation; transitivity forces it
    // to run through every block
    std::vector<int> cycle{0};
    for (int cur = induced[0]; cur != 0; cur = induced[cur]) cycle.push_back(cur);
    if (static_cast<int>(cycle.size()) != r)
        throw std::logic_error("decompose: block cycle does not cover all blocks");
    Permutation gamma(cycle);

    std::vector<BlockMap> tau;
    tau.reserve(r - 1);
    for (int i = 0; i + 1 < r; ++i) tau.push_back(restrict_to(last, X.block(gamma(i))));

    std::vector<Permutation> tilde;
    tilde.reserve(p);
    for (int j = 0; j < p; ++j) tilde.push_back(as_permutation(restrict_to(t[j], X.block(0))));

    int z = X.block(0)[0];
    for (int i = 0; i < r; ++i) z = last(z);

    return BijectionWitness{std::move(X), CommutingTuple(unchecked, s, std::move(tilde)),
                            std::move(gamma), std::move(tau), z};
}

Permutation find_g(const CommutingTuple& sigma_tilde, int z) {
    const int s = sigma_tilde.n();
    if (z < 0 || z >= s) throw std::invalid_argument("find_g: twist outside ground set");
    std::deque<Permutation> queue{Permutation::identity(s)};
    std::set<Permutation> visited{queue.front()};
    while (!queue.empty()) {
        Permutation g = std::move(queue.front());
        queue.pop_front();
        if (g(0) == z) return g;
        for (const Permutation& gen : sigma_tilde.perms()) {
            Permutation h = compose(gen, g);
            if (visited.insert(h).second) queue.push_back(std::move(h));
        }
    }
    throw std::invalid_argument("find_g: twist unreachable; tuple is not transitive");
}

CommutingTuple reconstruct(const BijectionWitness& w) {
    w.validate();
    const int n = w.blocks.n();
    const int r = w.r();
    const int p = w.sigma_tilde.p();
    const auto& x1 = w.blocks.block(0);

    // chain[i] : X_1 -> X_{gamma(i)}, the composite of the first i gluing maps
    std::vector<BlockMap> chain{BlockMap::identity_on(x1)};
    chain.reserve(r);
    for (int i = 1; i < r; ++i) chain.push_back(compose(w.tau[i - 1], chain[i - 1]));

    std::vector<Permutation> perms;
    perms.reserve(p + 1);
    for (int j = 0; j < p; ++j) {
        const BlockMap on_x1 = lift_to_block(x1, w.sigma_tilde[j]);
        std::vector<int> img(n);
        for (int i = 0; i < r; ++i) {
            // conjugate the action on X_1 over to X_{gamma(i)}
            const BlockMap on_block = compose(chain[i], compose(on_x1, chain[i].inverse()));
            for (int x : on_block.source()) img[x] = on_block.apply(x);
        }
        perms.push_back(Permutation(std::move(img)));
    }

    std::vector<int> img(n);
    for (int i = 0; i + 1 < r; ++i)
        for (int x : w.tau[i].source()) img[x] = w.tau[i].apply(x);
    const int z_index = static_cast<int>(
        std::lower_bound(x1.begin(), x1.end(), w.z) - x1.begin());
    const BlockMap g = lift_to_block(x1, find_g(w.sigma_tilde, z_index));
    const BlockMap last_map = compose(g, chain[r - 1].inverse());
    for (int x : last_map.source()) img[x] = last_map.apply(x);
    perms.push_back(Permutation(std::move(img)));

    CommutingTuple result(n, std::move(perms));  // checked: must commute
    if (!is_transitive(result))
        throw std::logic_error("reconstruct: output is not transitive");
    return result;
}

void for_each_equal_partition(int n, int r,
                              const std::function<void(const OrbitPartition&)>& visit) {
    if (n < 1 || r < 1 || n % r != 0)
        throw std::invalid_argument("for_each_equal_partition: r must divide n");
    const int s = n / r;
    std::vector<std::vector<int>> blocks;
    std::vector<char> used(n, 0);

    auto rec = [&](auto&& self) -> void {
        int first = 0;
        while (first < n && used[first]) ++first;
        if (first == n) {
            visit(OrbitPartition::from_blocks(n, blocks));
            return;
        }
        // the smallest free element anchors the next block; choose its s-1
        // companions in increasing order
        std::vector<int> block{first};
        used[first] = 1;
        auto choose = [&](auto&& choose_self, int from) -> void {
            if (static_cast<int>(block.size()) == s) {
                blocks.push_back(block);
                self(self);
                blocks.pop_back();
                return;
            }
            for (int x = from; x < n; ++x) {
                if (used[x]) continue;
                used[x] = 1;
                block.push_back(x);
                choose_self(choose_self, x + 1);
                block.pop_back();
                used[x] = 0;
            }
        };
        choose(choose, first + 1);
        used[first] = 0;
    };
    rec(rec);
}

void for_each_witness(int p, const OrbitPartition& X,
                      const std::function<void(const BijectionWitness&)>& visit) {
    const int r = X.block_count();
    const int s = static_cast<int>(X.block(0).size());
    for (int b = 0; b < r; ++b)
        if (static_cast<int>(X.block(b).size()) != s)
            throw std::invalid_argument("for_each_witness: blocks must have equal size");

    std::vector<CommutingTuple> tilde_choices;
    oracle::enumerate_transitive(p, s,
                                 [&](const CommutingTuple& t) { tilde_choices.push_back(t); });

    std::vector<int> gamma_img(r);
    for (int i = 0; i < r; ++i) gamma_img[i] = i;

    std::vector<BlockMap> tau;
    std::vector<std::vector<int>> glue(r);  // permutations of [s] defining each tau level

    auto emit_taus = [&](auto&& self, const Permutation& gamma, const CommutingTuple& tilde,
                         int level) -> void {
        if (level == r - 1) {
            for (int z : X.block(0))
                visit(BijectionWitness{X, tilde, gamma, tau, z});
            return;
        }
        std::vector<int> pi(s);
        for (int i = 0; i < s; ++i) pi[i] = i;
        const auto& src = X.block(gamma(level));
        const auto& dst = X.block(gamma(level + 1));
        do {
            std::vector<int> images(s);
            for (int i = 0; i < s; ++i) images[i] = dst[pi[i]];
            tau.emplace_back(src, std::move(images));
            self(self, gamma, tilde, level + 1);
            tau.pop_back();
        } while (std::next_permutation(pi.begin(), pi.end()));
    };

    do {
        Permutation gamma(gamma_img);
        for (const CommutingTuple& tilde : tilde_choices)
            emit_taus(emit_taus, gamma, tilde, 0);
    } while (std::next_permutation(gamma_img.begin() + 1, gamma_img.end()));
}

Int witness_count_formula(int p, long r, long s) {
    if (p < 0 || r < 1 || s < 1)
        throw std::invalid_argument("witness_count_formula: bad arguments");
    const Int transitive_choices = p == 0 ? Int(s == 1 ? 1 : 0) : counting::a_transitive(p, s);
    return transitive_choices * factorial(r - 1) * pow_int(factorial(s), r - 1) * s;
}

std::string witness_to_json(const BijectionWitness& w) {
    nlohmann::json j;
    for (const auto& block : w.blocks.blocks()) {
        nlohmann::json b = nlohmann::json::array();
        for (int x : block) b.push_back(x + 1);
        j["blocks"].push_back(std::move(b));
    }
    j["sigma_tilde"] = nlohmann::json::array();
    for (const Permutation& sigma : w.sigma_tilde.perms())
        j["sigma_tilde"].push_back(sigma.to_one_based());
    j["gamma"] = nlohmann::json::array();
    for (int i = 0; i < w.gamma.size(); ++i) j["gamma"].push_back(w.gamma(i) + 1);
    j["tau"] = nlohmann::json::array();
    for (const BlockMap& t : w.tau) {
        nlohmann::json pairs = nlohmann::json::array();
        for (int i = 0; i < t.block_size(); ++i)
            pairs.push_back({t.source()[i] + 1, t.images()[i] + 1});
        j["tau"].push_back(std::move(pairs));
    }
    j["z"] = w.z + 1;
    return j.dump();
}

BijectionWitness witness_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    std::vector<std::vector<int>> blocks;
    int n = 0;
    for (const auto& jb : j.at("blocks")) {
        std::vector<int> block;
        for (long x : jb) block.push_back(static_cast<int>(x - 1));
        n += static_cast<int>(block.size());
        blocks.push_back(std::move(block));
    }
    OrbitPartition part = OrbitPartition::from_blocks(n, std::move(blocks));
    const int s = static_cast<int>(part.block(0).size());

    std::vector<Permutation> tilde;
    for (const auto& js : j.at("sigma_tilde"))
        tilde.push_back(Permutation::parse_one_based(js.get<std::string>()));

    std::vector<int> gamma_img;
    for (long v : j.at("gamma")) gamma_img.push_back(static_cast<int>(v - 1));

    std::vector<BlockMap> tau;
    for (const auto& jt : j.at("tau")) {
        std::vector<std::pair<int, int>> pairs;
        for (const auto& jp : jt)
            pairs.emplace_back(jp.at(0).get<int>() - 1, jp.at(1).get<int>() - 1);
        std::sort(pairs.begin(), pairs.end());
        std::vector<int> src, img;
        for (auto& [a, b] : pairs) {
            src.push_back(a);
            img.push_back(b);
        }
        tau.emplace_back(std::move(src), std::move(img));
    }

    BijectionWitness w{std::move(part), CommutingTuple(s, std::move(tilde)),
                       Permutation(std::move(gamma_img)), std::move(tau),
                       j.at("z").get<int>() - 1};
    w.validate();
    return w;
}

}  // namespace commperm::bijection
