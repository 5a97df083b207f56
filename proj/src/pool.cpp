#include "walkgen/pool.hpp"

#include <algorithm>

namespace walkgen {

SolutionPool::SolutionPool(int goal_count, int capacity) { reset(goal_count, capacity); }

void SolutionPool::reset(int goal_count, int capacity) {
    capacity_ = capacity;
    stores_.assign(static_cast<std::size_t>(goal_count), {});
}

void SolutionPool::clear() {
    for (auto& s : stores_) s.clear();
}

bool SolutionPool::insert(int goal_id, const InputVector& input, double cost) {
    auto& store = stores_[static_cast<std::size_t>(goal_id)];
    if (static_cast<int>(store.size()) >= capacity_) {
        if (!(cost < store.back().cost)) return false;  // strictly better only
        store.pop_back();
    }
    auto pos = std::upper_bound(store.begin(), store.end(), cost,
                                [](double c, const PoolEntry& e) { return c < e.cost; });
    store.insert(pos, PoolEntry{input, cost});
    return true;
}

std::optional<double> SolutionPool::min_cost(int goal_id) const {
    const auto& store = stores_[static_cast<std::size_t>(goal_id)];
    if (store.empty()) return std::nullopt;
    return store.front().cost;
}

const PoolEntry& SolutionPool::pick_random(int goal_id, Rng& rng) const {
    const auto& store = stores_[static_cast<std::size_t>(goal_id)];
    return store[static_cast<std::size_t>(rng.below(store.size()))];
}

void pool_update(SolutionPool& pool, const InputVector& input,
                 const std::vector<std::pair<int, Cost>>& costs) {
    for (const auto& [goal_id, cost] : costs)
        if (cost.reached) pool.insert(goal_id, input, cost.value);
}

std::vector<int> sort_goals(const SolutionPool& pool, const std::vector<int>& unsolved) {
    struct Key {
        bool has_weight;
        double weight;
        int entries;
        int id;
    };
    std::vector<Key> keys;
    keys.reserve(unsolved.size());
    for (int id : unsolved) {
        auto w = pool.min_cost(id);
        keys.push_back(Key{w.has_value(), w.value_or(0.0), pool.size(id), id});
    }
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
        if (a.has_weight != b.has_weight) return a.has_weight;  // weightless == max cost
        if (a.has_weight && a.weight != b.weight) return a.weight < b.weight;
        if (a.entries != b.entries) return a.entries > b.entries;
        return a.id < b.id;
    });
    std::vector<int> out;
    out.reserve(keys.size());
    for (const auto& k : keys) out.push_back(k.id);
    return out;
}

}  // namespace walkgen
