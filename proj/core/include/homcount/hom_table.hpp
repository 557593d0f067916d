#pragma once

#include <homcount/count.hpp>
#include <homcount/graph.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace homcount {

/// Counts of partial homomorphisms keyed by the images of a fixed, ordered
/// list of separator vertices.
///
/// Keys live in one flat array (width ids per entry) behind an
/// open-addressing index, so a table with millions of entries costs little
/// more than its keys and counts. Only positive counts are stored.
class HomTable {
public:
    explicit HomTable(std::size_t width);

    [[nodiscard]] auto width() const -> std::size_t { return width_; }
    [[nodiscard]] auto size() const -> std::size_t { return counts_.size(); }

    /// Adds amount to the entry for key; zero amounts are ignored.
    void add(std::span<const VertexId> key, const Count &amount);
    /// nullptr when the key is absent.
    [[nodiscard]] auto find(std::span<const VertexId> key) const -> const Count *;

    [[nodiscard]] auto key_at(std::size_t i) const -> std::span<const VertexId>
    {
        return {keys_.data() + i * width_, width_};
    }
    [[nodiscard]] auto count_at(std::size_t i) const -> const Count & { return counts_[i]; }

private:
    [[nodiscard]] auto hash(std::span<const VertexId> key) const -> std::size_t;
    [[nodiscard]] auto slot_for(std::span<const VertexId> key) const -> std::size_t;
    void grow();

    std::size_t width_;
    std::vector<VertexId> keys_;
    std::vector<Count> counts_;
    std::vector<std::uint32_t> slots_; // entry index + 1; 0 = empty
};

} // namespace homcount
