#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace homposet {

using Elem = std::uint32_t;

/// Subset of a ring carrier {0, ..., universe-1}, stored as a bitset.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe);
    ElementSet(std::size_t universe, std::initializer_list<Elem> members);
    ElementSet(std::size_t universe, std::span<const Elem> members);

    static ElementSet full(std::size_t universe);

    std::size_t universe() const noexcept { return universe_; }
    bool contains(Elem x) const noexcept {
        return x < universe_ && ((words_[x >> 6] >> (x & 63)) & 1U) != 0;
    }
    void insert(Elem x);
    void erase(Elem x);

    std::size_t count() const noexcept;
    bool empty() const noexcept { return count() == 0; }
    bool is_full() const noexcept { return count() == universe_; }

    std::vector<Elem> members() const;

    bool is_subset_of(const ElementSet& other) const noexcept;
    bool intersects(const ElementSet& other) const noexcept;

    ElementSet operator&(const ElementSet& other) const;
    ElementSet operator|(const ElementSet& other) const;
    ElementSet complement() const;

    friend bool operator==(const ElementSet& a, const ElementSet& b) noexcept {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

private:
    void trim() noexcept;

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Canonical order: smaller sets first, ties broken by comparing the sorted
/// member lists lexicographically.
bool canonical_less(const ElementSet& a, const ElementSet& b);

}  // namespace homposet
