#pragma once

#include <cstdint>
#include <vector>

namespace flowcat {

// Square boolean matrix packed into 64-bit blocks, used for reachability
// and order relations on small element sets.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_, 0) {}

    int size() const { return n_; }

    bool get(int i, int j) const {
        return (row(i)[j >> 6] >> (j & 63)) & 1u;
    }
    void set(int i, int j, bool v = true) {
        uint64_t mask = uint64_t(1) << (j & 63);
        if (v)
            row(i)[j >> 6] |= mask;
        else
            row(i)[j >> 6] &= ~mask;
    }

    // row(i) |= row(j); returns true when row(i) changed.
    bool or_row(int i, int j) {
        bool changed = false;
        uint64_t* a = row(i);
        const uint64_t* b = row(j);
        for (size_t w = 0; w < words_; ++w) {
            uint64_t nv = a[w] | b[w];
            if (nv != a[w]) {
                a[w] = nv;
                changed = true;
            }
        }
        return changed;
    }

    // true iff row(i) is a superset of row(j).
    bool row_contains(int i, int j) const {
        const uint64_t* a = row(i);
        const uint64_t* b = row(j);
        for (size_t w = 0; w < words_; ++w)
            if ((b[w] & ~a[w]) != 0) return false;
        return true;
    }

    uint64_t* row(int i) { return bits_.data() + static_cast<size_t>(i) * words_; }
    const uint64_t* row(int i) const { return bits_.data() + static_cast<size_t>(i) * words_; }

private:
    int n_ = 0;
    size_t words_ = 0;
    std::vector<uint64_t> bits_;
};

}  // namespace flowcat
