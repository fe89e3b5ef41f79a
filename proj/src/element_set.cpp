#include "homposet/element_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace homposet {

ElementSet::ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

ElementSet::ElementSet(std::size_t universe, std::initializer_list<Elem> members) : ElementSet(universe) {
    for (Elem x : members) insert(x);
}

ElementSet::ElementSet(std::size_t universe, std::span<const Elem> members) : ElementSet(universe) {
    for (Elem x : members) insert(x);
}

ElementSet ElementSet::full(std::size_t universe) {
    ElementSet s(universe);
    std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
    s.trim();
    return s;
}

void ElementSet::insert(Elem x) {
    if (x >= universe_) throw std::out_of_range("element outside carrier");
    words_[x >> 6] |= std::uint64_t{1} << (x & 63);
}

void ElementSet::erase(Elem x) {
    if (x >= universe_) return;
    words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
}

std::size_t ElementSet::count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::vector<Elem> ElementSet::members() const {
    std::vector<Elem> out;
    out.reserve(count());
    for (std::size_t w = 0; w < words_.size(); ++w) {
        auto bits = words_[w];
        while (bits != 0) {
            auto bit = static_cast<unsigned>(std::countr_zero(bits));
            out.push_back(static_cast<Elem>(w * 64 + bit));
            bits &= bits - 1;
        }
    }
    return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
    if (universe_ != other.universe_) return false;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & ~other.words_[w]) != 0) return false;
    }
    return true;
}

bool ElementSet::intersects(const ElementSet& other) const noexcept {
    auto n = std::min(words_.size(), other.words_.size());
    for (std::size_t w = 0; w < n; ++w) {
        if ((words_[w] & other.words_[w]) != 0) return true;
    }
    return false;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
    if (universe_ != other.universe_) throw std::invalid_argument("element sets over different carriers");
    ElementSet out(universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w] & other.words_[w];
    return out;
}

ElementSet ElementSet::operator|(const ElementSet& other) const {
    if (universe_ != other.universe_) throw std::invalid_argument("element sets over different carriers");
    ElementSet out(universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w] | other.words_[w];
    return out;
}

ElementSet ElementSet::complement() const {
    ElementSet out(universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~words_[w];
    out.trim();
    return out;
}

void ElementSet::trim() noexcept {
    if (universe_ % 64 != 0 && !words_.empty()) {
        words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    }
}

bool canonical_less(const ElementSet& a, const ElementSet& b) {
    auto ca = a.count();
    auto cb = b.count();
    if (ca != cb) return ca < cb;
    auto ma = a.members();
    auto mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace homposet
