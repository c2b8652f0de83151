#include "tbprim/blocksys.hpp"

#include <algorithm>
#include <map>

#include "tbprim/errors.hpp"

namespace tbprim::blocksys {

GeneratorSet round_generators(const cipher::TbCipherSpec& spec, int h) {
    if (spec.n() > 16)
        throw CapacityError("blocksys: generator sets limited to n <= 16");
    GeneratorSet g;
    g.n = spec.n();
    if (spec.n() <= 12) {
        auto table = cipher::round_table(spec, h);
        g.maps.emplace_back([table = std::move(table)](std::uint32_t v) { return table[v]; });
    } else {
        g.maps.emplace_back([spec, h](std::uint32_t v) {
            return std::uint32_t(cipher::apply_round(spec, h, v, 0));
        });
    }
    return g;
}

namespace {

struct UnionFind {
    std::vector<std::uint32_t> parent;

    explicit UnionFind(std::uint32_t size) : parent(size) {
        for (std::uint32_t i = 0; i < size; ++i)
            parent[i] = i;
    }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(std::uint32_t a, std::uint32_t b) {
        std::uint32_t ra = find(a), rb = find(b);
        if (ra == rb)
            return false;
        parent[rb] = ra;
        return true;
    }
};

} // namespace

std::vector<std::uint32_t> minimal_block(const GeneratorSet& g, std::uint32_t w) {
    if (g.n < 1 || g.n > 16)
        throw CapacityError("blocksys: minimal_block limited to 1 <= n <= 16");
    const std::uint32_t size = std::uint32_t(1) << g.n;
    if (w == 0 || w >= size)
        throw InputError("blocksys: seed must be a nonzero n-bit value");

    UnionFind uf(size);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> queue;
    uf.unite(0, w);
    queue.emplace_back(0, w);
    std::uint32_t classes = size - 1;
    while (!queue.empty() && classes > 1) {
        auto [a, b] = queue.back();
        queue.pop_back();
        for (const auto& f : g.maps) {
            std::uint32_t fa = f(a), fb = f(b);
            if (uf.unite(fa, fb)) {
                queue.emplace_back(fa, fb);
                if (--classes == 1)
                    break;
            }
        }
        if (classes == 1)
            break;
        for (int j = 0; j < g.n; ++j) {
            std::uint32_t t = std::uint32_t(1) << j;
            if (uf.unite(a ^ t, b ^ t)) {
                queue.emplace_back(a ^ t, b ^ t);
                if (--classes == 1)
                    break;
            }
        }
    }
    std::vector<std::uint32_t> block;
    if (classes == 1) {
        block.resize(size);
        for (std::uint32_t x = 0; x < size; ++x)
            block[x] = x;
        return block;
    }
    const std::uint32_t root = uf.find(0);
    for (std::uint32_t x = 0; x < size; ++x)
        if (uf.find(x) == root)
            block.push_back(x);
    return block;
}

PrimitivityScan primitivity_scan(const GeneratorSet& g) {
    if (g.n < 1 || g.n > 12)
        throw CapacityError("blocksys: primitivity scan limited to 1 <= n <= 12");
    const std::uint32_t size = std::uint32_t(1) << g.n;

    PrimitivityScan scan;
    scan.n = g.n;
    std::map<std::vector<std::uint32_t>, std::size_t> seen;
    for (std::uint32_t w = 1; w < size; ++w) {
        std::vector<std::uint32_t> block = minimal_block(g, w);
        if (block.size() == size)
            continue;
        if (seen.count(block))
            continue;
        BlockSystemResult res;
        res.seed = w;
        res.block_size = std::uint32_t(block.size());
        res.block_count = size / res.block_size;
        std::vector<gf2::u128> words(block.begin(), block.end());
        gf2::Subspace span = gf2::span_words(words, g.n);
        res.is_subspace = (std::uint64_t(1) << span.dim()) == block.size();
        res.block_zero = block;
        seen.emplace(std::move(block), scan.systems.size());
        scan.systems.push_back(std::move(res));
    }
    scan.primitive = scan.systems.empty();
    return scan;
}

} // namespace tbprim::blocksys
