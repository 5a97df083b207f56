#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "walkgen/fitness.hpp"
#include "walkgen/interpreter.hpp"
#include "walkgen/rng.hpp"

namespace walkgen {

struct PoolEntry {
    InputVector input;
    double cost = 0.0;
};

// Bounded per-goal archive of the best-cost inputs seen so far. Entries are
// kept ordered by cost; once a goal's store is full a newcomer only enters
// by evicting a strictly worse entry.
class SolutionPool {
public:
    SolutionPool() = default;
    SolutionPool(int goal_count, int capacity);

    void reset(int goal_count, int capacity);
    void clear();

    int capacity() const { return capacity_; }
    int goal_count() const { return static_cast<int>(stores_.size()); }

    bool insert(int goal_id, const InputVector& input, double cost);

    int size(int goal_id) const {
        return static_cast<int>(stores_[static_cast<std::size_t>(goal_id)].size());
    }
    bool empty(int goal_id) const { return stores_[static_cast<std::size_t>(goal_id)].empty(); }

    // Minimum pooled cost; empty stores have no weight (treated as a maximum
    // cost by goal sorting).
    std::optional<double> min_cost(int goal_id) const;

    const PoolEntry& pick_random(int goal_id, Rng& rng) const;
    const std::vector<PoolEntry>& entries(int goal_id) const {
        return stores_[static_cast<std::size_t>(goal_id)];
    }

private:
    int capacity_ = 0;
    std::vector<std::vector<PoolEntry>> stores_;
};

// Applies one evaluated input to the pool: every reached goal cost is
// offered to that goal's store under the eviction rule.
void pool_update(SolutionPool& pool, const InputVector& input,
                 const std::vector<std::pair<int, Cost>>& costs);

// Unsolved goals ordered easiest-first: ascending pooled weight, ties broken
// by larger store first, then by goal id.
std::vector<int> sort_goals(const SolutionPool& pool, const std::vector<int>& unsolved);

}  // namespace walkgen
