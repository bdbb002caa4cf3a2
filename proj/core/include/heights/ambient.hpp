#ifndef HEIGHTS_AMBIENT_HPP
#define HEIGHTS_AMBIENT_HPP

#include "heights/errors.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace heights {

// P^{N_1} x ... x P^{N_k}, stored as the coordinate count of each factor.
class Ambient {
public:
    static Ambient make(std::vector<int> block_sizes) {
        if (block_sizes.empty()) throw Error("ambient needs at least one factor");
        for (int n : block_sizes)
            if (n < 1) throw Error("each factor needs at least one coordinate");
        return Ambient(std::move(block_sizes));
    }
    static Ambient projective(int N) { return make({N + 1}); }

    int num_blocks() const { return static_cast<int>(blocks_.size()); }
    int block_size(int b) const { return blocks_.at(static_cast<size_t>(b)); }
    const std::vector<int>& block_sizes() const { return blocks_; }
    int total_coords() const { return std::accumulate(blocks_.begin(), blocks_.end(), 0); }
    int block_offset(int b) const {
        return std::accumulate(blocks_.begin(), blocks_.begin() + b, 0);
    }

    friend bool operator==(const Ambient& a, const Ambient& b) { return a.blocks_ == b.blocks_; }
    friend bool operator!=(const Ambient& a, const Ambient& b) { return !(a == b); }

    std::string str() const {
        std::string s;
        for (size_t i = 0; i < blocks_.size(); ++i) {
            if (i) s += " x ";
            s += "P^" + std::to_string(blocks_[i] - 1);
        }
        return s;
    }

private:
    explicit Ambient(std::vector<int> b) : blocks_(std::move(b)) {}
    std::vector<int> blocks_;
};

} // namespace heights

#endif
