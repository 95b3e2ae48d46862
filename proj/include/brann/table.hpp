#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace brann {

/// A map R^arity -> M stored densely; both domain and codomain are element indices.
/// Entries are laid out lexicographically, first argument most significant.
class Table {
public:
    Table() = default;
    Table(int ring_size, int arity, int fill = 0);

    int ring_size() const noexcept { return ring_size_; }
    int arity() const noexcept { return arity_; }
    std::size_t entries() const noexcept { return values_.size(); }

    int& operator()(int x) { return values_[index1(x)]; }
    int operator()(int x) const { return values_[index1(x)]; }
    int& operator()(int x, int y) { return values_[index2(x, y)]; }
    int operator()(int x, int y) const { return values_[index2(x, y)]; }
    int& operator()(int x, int y, int z) { return values_[index3(x, y, z)]; }
    int operator()(int x, int y, int z) const { return values_[index3(x, y, z)]; }

    int at(std::span<const int> args) const;
    int& at(std::span<const int> args);

    /// Inverse of the lexicographic layout.
    std::vector<int> arguments(std::size_t flat) const;

    std::vector<int>& data() noexcept { return values_; }
    const std::vector<int>& data() const noexcept { return values_; }

    bool same_shape(const Table& other) const noexcept {
        return ring_size_ == other.ring_size_ && arity_ == other.arity_;
    }

    friend bool operator==(const Table&, const Table&) = default;

private:
    std::size_t index1(int x) const { return static_cast<std::size_t>(x); }
    std::size_t index2(int x, int y) const {
        return static_cast<std::size_t>(x) * ring_size_ + y;
    }
    std::size_t index3(int x, int y, int z) const {
        return (static_cast<std::size_t>(x) * ring_size_ + y) * ring_size_ + z;
    }
    std::size_t flat(std::span<const int> args) const;

    int ring_size_ = 0;
    int arity_ = 0;
    std::vector<int> values_;
};

} // namespace brann
