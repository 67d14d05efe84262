#include "subdiv/pattern.hpp"

#include <algorithm>
#include <numeric>

namespace subdiv {

CyclePattern::CyclePattern(Sign sign, std::vector<int> blocks)
    : sign_(sign), blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw PreconditionError("pattern needs at least one block");
    for (int k : blocks_)
        if (k < 1) throw PreconditionError("block lengths must be positive");
    if (blocks_.size() == 1) {
        if (blocks_[0] < 2)
            throw PreconditionError("a directed-cycle pattern needs length >= 2");
        sign_ = Sign::plus;
    } else if (blocks_.size() % 2 != 0) {
        throw PreconditionError("oriented cycles have an even number of blocks");
    }
}

int CyclePattern::order() const {
    return std::accumulate(blocks_.begin(), blocks_.end(), 0);
}

std::string CyclePattern::str() const {
    std::string out = sign_ == Sign::plus ? "C+(" : "C-(";
    for (size_t i = 0; i < blocks_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(blocks_[i]);
    }
    out += ')';
    return out;
}

CyclePattern CyclePattern::parse(const std::string& text) {
    auto fail = [&](const std::string& why) -> ParseError {
        return ParseError(1, "bad pattern \"" + text + "\": " + why);
    };
    if (text.size() < 5 || text[0] != 'C') throw fail("expected C+(...) or C-(...)");
    Sign sign;
    if (text[1] == '+')
        sign = Sign::plus;
    else if (text[1] == '-')
        sign = Sign::minus;
    else
        throw fail("expected '+' or '-' after C");
    if (text[2] != '(' || text.back() != ')') throw fail("expected parenthesized block list");
    std::vector<int> blocks;
    std::string body = text.substr(3, text.size() - 4);
    size_t pos = 0;
    while (pos <= body.size()) {
        size_t comma = body.find(',', pos);
        std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw fail("block lengths must be positive decimal integers");
        long value = std::stol(item);
        if (value < 1 || value > 1'000'000) throw fail("block length out of range");
        blocks.push_back(static_cast<int>(value));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    try {
        return CyclePattern(sign, std::move(blocks));
    } catch (const PreconditionError& e) {
        throw fail(e.what());
    }
}

bool CyclePattern::operator==(const CyclePattern& other) const {
    return sign_ == other.sign_ && blocks_ == other.blocks_;
}

CanonicalizedPattern canonicalize_pattern(const CyclePattern& c) {
    if (c.block_count() < 2)
        throw PreconditionError("canonicalize_pattern needs at least two blocks");
    int even_sum = 0;
    for (int i = 1; i < c.block_count(); i += 2) even_sum += c.blocks()[i];
    // Block positions are 1-based in the C^±(k1,...,kl) notation.
    if (2 * even_sum <= c.order()) return {c, false};
    std::vector<int> reversed(c.blocks().rbegin(), c.blocks().rend());
    return {CyclePattern(c.sign(), std::move(reversed)), true};
}

}  // namespace subdiv
