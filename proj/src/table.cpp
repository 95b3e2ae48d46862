#include "brann/table.hpp"

#include "brann/error.hpp"

namespace brann {

Table::Table(int ring_size, int arity, int fill) : ring_size_(ring_size), arity_(arity) {
    if (ring_size < 1 || arity < 0 || arity > 3)
        throw InvalidSizeError("table shape out of range");
    std::size_t n = 1;
    for (int i = 0; i < arity; ++i) n *= static_cast<std::size_t>(ring_size);
    values_.assign(n, fill);
}

std::size_t Table::flat(std::span<const int> args) const {
    if (static_cast<int>(args.size()) != arity_)
        throw ShapeError("table of arity " + std::to_string(arity_) + " indexed with " +
                         std::to_string(args.size()) + " arguments");
    std::size_t idx = 0;
    for (int a : args) idx = idx * ring_size_ + static_cast<std::size_t>(a);
    return idx;
}

int Table::at(std::span<const int> args) const { return values_[flat(args)]; }
int& Table::at(std::span<const int> args) { return values_[flat(args)]; }

std::vector<int> Table::arguments(std::size_t flat) const {
    std::vector<int> args(arity_);
    for (int i = arity_ - 1; i >= 0; --i) {
        args[i] = static_cast<int>(flat % ring_size_);
        flat /= ring_size_;
    }
    return args;
}

} // namespace brann
