#include "erelax/interval_set.hpp"

#include <sstream>

namespace erelax {

IntervalSet::IntervalSet(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
    if (intervals_.empty()) throw MissingEndpoint("interval set is empty");
    if (intervals_.front().lo != 0) throw MissingEndpoint("first interval must start at 0");
    if (intervals_.back().hi != 1) throw MissingEndpoint("last interval must end at 1");
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        if (!(intervals_[i].lo < intervals_[i].hi))
            throw OrderViolation("interval " + std::to_string(i + 1) + " has nonpositive length");
        if (i + 1 < intervals_.size() && !(intervals_[i].hi < intervals_[i + 1].lo))
            throw OrderViolation("intervals " + std::to_string(i + 1) + " and " +
                                 std::to_string(i + 2) + " are not strictly separated");
    }
    measure_ = 0;
    for (const auto& iv : intervals_) measure_ += iv.hi - iv.lo;
}

IntervalSet IntervalSet::full() { return IntervalSet({{Rational(0), Rational(1)}}); }

std::optional<std::size_t> IntervalSet::locate(const Rational& v) const {
    if (v < 0 || v > 1) throw OutOfUnitRange("value " + v.str() + " outside [0,1]");
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        if (v < intervals_[i].lo) return std::nullopt;  // fell into the gap before interval i
        if (v <= intervals_[i].hi) return i;
    }
    return std::nullopt;  // unreachable: d_k = 1
}

IntervalSet IntervalSet::shrink(const Rational& delta) const {
    if (delta < 0) throw DeltaTooLarge("negative delta");
    if (delta == 0) return *this;
    std::vector<Interval> out = intervals_;
    const std::size_t k = out.size();
    for (std::size_t i = 0; i < k; ++i) {
        if (i > 0) out[i].lo += delta;
        if (i + 1 < k) out[i].hi -= delta;
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (!(out[i].lo < out[i].hi))
            throw DeltaTooLarge("delta " + delta.str() + " collapses interval " +
                                std::to_string(i + 1));
        if (i + 1 < k && !(out[i].hi < out[i + 1].lo))
            throw DeltaTooLarge("delta " + delta.str() + " collapses gap after interval " +
                                std::to_string(i + 1));
    }
    return IntervalSet(std::move(out));
}

Rational IntervalSet::min_interval_length() const {
    Rational m = intervals_[0].hi - intervals_[0].lo;
    for (const auto& iv : intervals_) m = std::min(m, Rational(iv.hi - iv.lo));
    return m;
}

Rational IntervalSet::min_gap_length() const {
    if (intervals_.size() < 2) throw std::logic_error("no gaps in a single-interval set");
    Rational m = intervals_[1].lo - intervals_[0].hi;
    for (std::size_t i = 0; i + 1 < intervals_.size(); ++i)
        m = std::min(m, Rational(intervals_[i + 1].lo - intervals_[i].hi));
    return m;
}

std::string IntervalSet::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        if (i) os << ';';
        os << intervals_[i].lo.str() << ',' << intervals_[i].hi.str();
    }
    return os.str();
}

IntervalSet parse_interval_set(std::string_view text) {
    std::vector<Interval> out;
    std::string s(text);
    std::istringstream is(s);
    std::string piece;
    while (std::getline(is, piece, ';')) {
        const auto comma = piece.find(',');
        if (comma == std::string::npos)
            throw MalformedRational("interval needs two comma-separated endpoints: " + piece);
        out.push_back({parse_rational(piece.substr(0, comma)), parse_rational(piece.substr(comma + 1))});
    }
    return IntervalSet(std::move(out));
}

}  // namespace erelax
