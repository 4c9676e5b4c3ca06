#include "commperm/perm_core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace commperm {

namespace {

void check_is_bijection(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    std::vector<char> seen(n, 0);
    for (int v : images) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("Permutation: image table is not a bijection");
        seen[v] = 1;
    }
}

// Union-find over {0,...,n-1}.
struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    check_is_bijection(img_);
}

Permutation Permutation::identity(int n) {
    if (n < 0) throw std::invalid_argument("Permutation::identity: negative size");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(trusted_t{}, std::move(img));
}

Permutation Permutation::transposition(int n, int a, int b) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b)
        throw std::invalid_argument("Permutation::transposition: bad points");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::swap(img[a], img[b]);
    return Permutation(trusted_t{}, std::move(img));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<char> used(n, 0);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i];
            int to = cyc[(i + 1) % cyc.size()];
            if (from < 0 || from >= n || used[from])
                throw std::invalid_argument("Permutation::from_cycles: bad or repeated entry");
            used[from] = 1;
            img[from] = to;
        }
    }
    return Permutation(std::move(img));
}

Permutation Permutation::parse_one_based(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> img;
    long v;
    while (in >> v) img.push_back(static_cast<int>(v - 1));
    if (!in.eof())
        throw std::invalid_argument("Permutation: cannot parse \"" + text + "\"");
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < size(); ++i) inv[img_[i]] = i;
    return Permutation(trusted_t{}, std::move(inv));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

std::string Permutation::to_one_based() const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(img_[i] + 1);
    }
    return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("compose: size mismatch");
    std::vector<int> img(a.size());
    for (int i = 0; i < a.size(); ++i) img[i] = a(b(i));
    return Permutation(std::move(img));
}

bool commutes(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("commutes: size mismatch");
    for (int i = 0; i < a.size(); ++i)
        if (a(b(i)) != b(a(i))) return false;
    return true;
}

Permutation power(const Permutation& a, int e) {
    Permutation base = e >= 0 ? a : a.inverse();
    int k = e >= 0 ? e : -e;
    Permutation acc = Permutation::identity(a.size());
    while (k > 0) {
        if (k & 1) acc = compose(acc, base);
        base = compose(base, base);
        k >>= 1;
    }
    return acc;
}

CommutingTuple::CommutingTuple(int n, std::vector<Permutation> perms)
    : n_(n), perms_(std::move(perms)) {
    if (n < 0) throw std::invalid_argument("CommutingTuple: negative n");
    for (const auto& s : perms_)
        if (s.size() != n_) throw std::invalid_argument("CommutingTuple: size mismatch");
    for (std::size_t i = 0; i < perms_.size(); ++i)
        for (std::size_t j = i + 1; j < perms_.size(); ++j)
            if (!commutes(perms_[i], perms_[j]))
                throw std::invalid_argument("CommutingTuple: permutations do not commute");
}

CommutingTuple::CommutingTuple(unchecked_t, int n, std::vector<Permutation> perms)
    : n_(n), perms_(std::move(perms)) {}

OrbitPartition OrbitPartition::from_blocks(int n, std::vector<std::vector<int>> blocks) {
    OrbitPartition part;
    part.n_ = n;
    part.block_index_.assign(n, -1);
    for (auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("OrbitPartition: empty block");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    part.blocks_ = std::move(blocks);
    for (int bi = 0; bi < part.block_count(); ++bi) {
        for (int x : part.blocks_[bi]) {
            if (x < 0 || x >= n || part.block_index_[x] != -1)
                throw std::invalid_argument("OrbitPartition: blocks are not a partition");
            part.block_index_[x] = bi;
        }
    }
    for (int x = 0; x < n; ++x)
        if (part.block_index_[x] == -1)
            throw std::invalid_argument("OrbitPartition: blocks do not cover the ground set");
    return part;
}

OrbitPartition orbit_partition(const CommutingTuple& t) {
    const int n = t.n();
    DisjointSet dsu(n);
    for (const auto& sigma : t.perms())
        for (int i = 0; i < n; ++i) dsu.unite(i, sigma(i));
    std::vector<std::vector<int>> groups(n);
    for (int i = 0; i < n; ++i) groups[dsu.find(i)].push_back(i);
    std::vector<std::vector<int>> blocks;
    for (auto& g : groups)
        if (!g.empty()) blocks.push_back(std::move(g));
    // roots are minima, so the blocks already come out ordered by minimum
    return OrbitPartition::from_blocks(n, std::move(blocks));
}

bool is_transitive(const CommutingTuple& t) {
    return orbit_partition(t).block_count() == 1;
}

BlockMap::BlockMap(std::vector<int> source, std::vector<int> images)
    : source_(std::move(source)), images_(std::move(images)) {
    if (source_.empty()) throw std::invalid_argument("BlockMap: empty source");
    if (source_.size() != images_.size())
        throw std::invalid_argument("BlockMap: source/image length mismatch");
    if (!std::is_sorted(source_.begin(), source_.end()) ||
        std::adjacent_find(source_.begin(), source_.end()) != source_.end())
        throw std::invalid_argument("BlockMap: source must be strictly increasing");
    auto tgt = target();
    if (std::adjacent_find(tgt.begin(), tgt.end()) != tgt.end())
        throw std::invalid_argument("BlockMap: images are not distinct");
}

BlockMap BlockMap::identity_on(std::vector<int> subset) {
    std::sort(subset.begin(), subset.end());
    std::vector<int> img = subset;
    return BlockMap(std::move(subset), std::move(img));
}

std::vector<int> BlockMap::target() const {
    std::vector<int> t = images_;
    std::sort(t.begin(), t.end());
    return t;
}

int BlockMap::apply(int x) const {
    auto it = std::lower_bound(source_.begin(), source_.end(), x);
    if (it == source_.end() || *it != x)
        throw std::invalid_argument("BlockMap::apply: point outside source");
    return images_[it - source_.begin()];
}

BlockMap BlockMap::inverse() const {
    std::vector<std::pair<int, int>> pairs(source_.size());
    for (std::size_t i = 0; i < source_.size(); ++i) pairs[i] = {images_[i], source_[i]};
    std::sort(pairs.begin(), pairs.end());
    std::vector<int> src(pairs.size()), img(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        src[i] = pairs[i].first;
        img[i] = pairs[i].second;
    }
    return BlockMap(std::move(src), std::move(img));
}

BlockMap restrict_to(const Permutation& sigma, const std::vector<int>& block) {
    std::vector<int> src = block;
    std::sort(src.begin(), src.end());
    std::vector<int> img(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (src[i] < 0 || src[i] >= sigma.size())
            throw std::invalid_argument("restrict_to: block outside ground set");
        img[i] = sigma(src[i]);
    }
    return BlockMap(std::move(src), std::move(img));
}

BlockMap compose(const BlockMap& a, const BlockMap& b) {
    if (b.target() != a.source())
        throw std::invalid_argument("compose(BlockMap): domains do not chain");
    std::vector<int> img(b.block_size());
    for (int i = 0; i < b.block_size(); ++i) img[i] = a.apply(b.images()[i]);
    return BlockMap(b.source(), std::move(img));
}

Permutation as_permutation(const BlockMap& m) {
    if (m.target() != m.source())
        throw std::invalid_argument("as_permutation: source and target differ");
    const auto& src = m.source();
    std::vector<int> img(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        auto it = std::lower_bound(src.begin(), src.end(), m.images()[i]);
        img[i] = static_cast<int>(it - src.begin());
    }
    return Permutation(std::move(img));
}

BlockMap lift_to_block(const std::vector<int>& block, const Permutation& sigma) {
    std::vector<int> src = block;
    std::sort(src.begin(), src.end());
    if (static_cast<int>(src.size()) != sigma.size())
        throw std::invalid_argument("lift_to_block: size mismatch");
    std::vector<int> img(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) img[i] = src[sigma(static_cast<int>(i))];
    return BlockMap(std::move(src), std::move(img));
}

}  // namespace commperm
