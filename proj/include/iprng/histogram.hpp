#pragma once

#include <cstdint>
#include <map>

namespace iprng {

/// Period -> number of generators with that period. Periods iterate in
/// ascending order and every stored count is positive.
class PeriodHistogram {
public:
    using Bins = std::map<std::uint64_t, std::uint64_t>;

    void add(std::uint64_t period, std::uint64_t count = 1) {
        if (count != 0) bins_[period] += count;
    }

    void merge(const PeriodHistogram& other) {
        for (const auto& [period, count] : other.bins_) add(period, count);
    }

    std::uint64_t count(std::uint64_t period) const {
        const auto it = bins_.find(period);
        return it == bins_.end() ? 0 : it->second;
    }

    std::uint64_t total() const noexcept {
        std::uint64_t sum = 0;
        for (const auto& [period, count] : bins_) sum += count;
        return sum;
    }

    bool empty() const noexcept { return bins_.empty(); }
    std::size_t size() const noexcept { return bins_.size(); }
    const Bins& bins() const noexcept { return bins_; }
    Bins::const_iterator begin() const noexcept { return bins_.begin(); }
    Bins::const_iterator end() const noexcept { return bins_.end(); }

    friend bool operator==(const PeriodHistogram&, const PeriodHistogram&) = default;

private:
    Bins bins_;
};

}  // namespace iprng
