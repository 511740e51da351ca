#pragma once

#include <optional>
#include <string>
#include <vector>

#include "erelax/rational.hpp"

namespace erelax {

class OrderViolation : public std::runtime_error {
public:
    explicit OrderViolation(const std::string& what) : std::runtime_error(what) {}
};
class MissingEndpoint : public std::runtime_error {
public:
    explicit MissingEndpoint(const std::string& what) : std::runtime_error(what) {}
};
class OutOfUnitRange : public std::runtime_error {
public:
    explicit OutOfUnitRange(const std::string& what) : std::runtime_error(what) {}
};
class DeltaTooLarge : public std::runtime_error {
public:
    explicit DeltaTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct Interval {
    Rational lo;
    Rational hi;
};

// A finite union of closed rational intervals
//   [c_1, d_1] u ... u [c_k, d_k],  0 = c_1 < d_1 < c_2 < ... < c_k < d_k = 1.
// The single interval [0, 1] (k = 1) is the degenerate case used for
// variables exempt from interval tracking. Immutable after construction.
class IntervalSet {
public:
    // Validates the ordering invariants; throws OrderViolation or
    // MissingEndpoint on bad input.
    explicit IntervalSet(std::vector<Interval> intervals);

    static IntervalSet full();  // [0, 1]

    std::size_t size() const { return intervals_.size(); }
    const Interval& interval(std::size_t i) const { return intervals_[i]; }
    const std::vector<Interval>& intervals() const { return intervals_; }

    const Rational& measure() const { return measure_; }

    // Index (0-based) of the interval containing v, or nullopt if v lies in
    // a gap. Throws OutOfUnitRange for v outside [0, 1]. Values 0 and 1 are
    // always located (c_1 = 0, d_k = 1).
    std::optional<std::size_t> locate(const Rational& v) const;

    // Interior endpoints pulled in by delta; [0, d_1 - delta] u
    // [c_2 + delta, d_2 - delta] u ... u [c_k + delta, 1].
    // Throws DeltaTooLarge if an interval or gap would collapse.
    IntervalSet shrink(const Rational& delta) const;

    Rational min_interval_length() const;
    Rational min_gap_length() const;  // throws if k == 1

    std::string str() const;  // "c1,d1;c2,d2;..."

    bool operator==(const IntervalSet& other) const { return intervals_ == other.intervals_; }

private:
    std::vector<Interval> intervals_;
    Rational measure_;
};

inline bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
}

// Parses "c1,d1;c2,d2;...", rationals as "p/q" or integers.
// Throws MalformedRational, OrderViolation or MissingEndpoint.
IntervalSet parse_interval_set(std::string_view text);

}  // namespace erelax
