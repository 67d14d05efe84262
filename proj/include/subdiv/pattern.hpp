#pragma once

#include <string>
#include <vector>

#include "subdiv/errors.hpp"

namespace subdiv {

enum class Sign { plus, minus };

// An oriented cycle written as sign + block lengths: C^+(k1,...,kl) when the
// first block is forward, C^-(...) otherwise. Blocks alternate direction, so
// l is even — except for the single-block form C^+(n), which stands for the
// directed cycle of length n and is accepted because the circuit finder
// handles it. A single-block pattern is normalized to sign plus (the two
// traversal directions of a directed cycle are the same digraph).
class CyclePattern {
public:
    CyclePattern(Sign sign, std::vector<int> blocks);

    Sign sign() const { return sign_; }
    const std::vector<int>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    int order() const;
    bool is_directed_cycle() const { return blocks_.size() == 1; }

    // "C+(2,1)" / "C-(1,1,2,2)".
    std::string str() const;
    static CyclePattern parse(const std::string& text);

    bool operator==(const CyclePattern& other) const;

private:
    Sign sign_;
    std::vector<int> blocks_;
};

struct CanonicalizedPattern {
    CyclePattern pattern;
    bool reversed;
};

// Returns the same oriented cycle listed so that blocks at even positions sum
// to at most order/2, using the identity C^+(k1,...,kl) = C^+(kl,...,k1).
// Requires at least two blocks; idempotent.
CanonicalizedPattern canonicalize_pattern(const CyclePattern& c);

}  // namespace subdiv
