#pragma once

// Multiset partition describing a factorization / orbit pattern: the degrees
// of the irreducible factors of a squarefree polynomial mod p, equivalently
// the cycle type of a projective matrix acting on P^1.

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace modgal {

class CycleType {
  public:
    CycleType() = default;
    CycleType(std::initializer_list<int> parts)
        : parts_(parts) { normalize(); }
    explicit CycleType(std::vector<int> parts)
        : parts_(std::move(parts)) { normalize(); }

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    int sum() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    bool contains(int d) const {
        return std::binary_search(parts_.begin(), parts_.end(), d);
    }

    // All parts 1 or 2, with 2 occurring: the trace-zero shape.
    bool is_one_two_with_two() const {
        if (parts_.empty()) return false;
        for (int d : parts_)
            if (d != 1 && d != 2) return false;
        return parts_.back() == 2;
    }

    void add(int part, int copies = 1) {
        for (int i = 0; i < copies; ++i) parts_.push_back(part);
        normalize();
    }

    // Exponent notation, e.g. "1^2 5^2".
    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < parts_.size();) {
            std::size_t j = i;
            while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
            if (i) os << ' ';
            os << parts_[i];
            if (j - i > 1) os << '^' << (j - i);
            i = j;
        }
        return os.str();
    }

    friend auto operator<=>(const CycleType&, const CycleType&) = default;

  private:
    void normalize() { std::sort(parts_.begin(), parts_.end()); }

    std::vector<int> parts_;  // sorted ascending
};

}  // namespace modgal
