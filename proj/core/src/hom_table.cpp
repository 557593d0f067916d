#include <homcount/errors.hpp>
#include <homcount/hom_table.hpp>

#include <algorithm>

namespace homcount {

HomTable::HomTable(std::size_t width) :
    width_(width),
    slots_(16, 0)
{
}

auto HomTable::hash(std::span<const VertexId> key) const -> std::size_t
{
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto v : key) {
        h ^= v;
        h *= 0xbf58476d1ce4e5b9ULL;
        h ^= h >> 31;
    }
    return static_cast<std::size_t>(h);
}

auto HomTable::slot_for(std::span<const VertexId> key) const -> std::size_t
{
    const auto mask = slots_.size() - 1;
    auto slot = hash(key) & mask;
    while (true) {
        auto entry = slots_[slot];
        if (entry == 0)
            return slot;
        if (std::equal(key.begin(), key.end(), keys_.begin() + static_cast<std::ptrdiff_t>((entry - 1) * width_)))
            return slot;
        slot = (slot + 1) & mask;
    }
}

void HomTable::grow()
{
    std::vector<std::uint32_t> old(slots_.size() * 2, 0);
    slots_.swap(old);
    const auto mask = slots_.size() - 1;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        auto slot = hash(key_at(i)) & mask;
        while (slots_[slot] != 0)
            slot = (slot + 1) & mask;
        slots_[slot] = static_cast<std::uint32_t>(i + 1);
    }
}

void HomTable::add(std::span<const VertexId> key, const Count &amount)
{
    if (key.size() != width_)
        throw InvalidArgument("HomTable key width mismatch");
    if (amount.is_zero())
        return;
    auto slot = slot_for(key);
    if (slots_[slot] != 0) {
        counts_[slots_[slot] - 1] += amount;
        return;
    }
    if (counts_.size() >= UINT32_MAX - 1)
        throw SizeLimitError("HomTable exceeds 2^32 entries");
    keys_.insert(keys_.end(), key.begin(), key.end());
    counts_.push_back(amount);
    slots_[slot] = static_cast<std::uint32_t>(counts_.size());
    if (counts_.size() * 2 > slots_.size())
        grow();
}

auto HomTable::find(std::span<const VertexId> key) const -> const Count *
{
    auto slot = slot_for(key);
    return slots_[slot] == 0 ? nullptr : &counts_[slots_[slot] - 1];
}

} // namespace homcount
