#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "workbench/rational.hpp"

namespace wb {

/// Closed interval [lo, hi] with lo <= hi. "Proper" means lo < hi; box sides
/// and rectangle sides must be proper.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() = default;
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (hi < lo) throw std::invalid_argument("interval: lo > hi");
    }
    bool proper() const { return lo < hi; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

/// Exact classification of the intersection of two closed sets on a line.
struct Meet {
    enum class Kind { Empty, Point, Segment };
    Kind kind = Kind::Empty;
    Rational lo;  // Point: the point; Segment: left end
    Rational hi;  // Segment: right end

    static Meet empty() { return {}; }
    static Meet point(Rational c) { return {Kind::Point, c, c}; }
    static Meet segment(Rational l, Rational h) { return {Kind::Segment, std::move(l), std::move(h)}; }

    bool is_empty() const { return kind == Kind::Empty; }
    bool is_point() const { return kind == Kind::Point; }
    bool is_segment() const { return kind == Kind::Segment; }

    friend bool operator==(const Meet& a, const Meet& b) {
        if (a.kind != b.kind) return false;
        if (a.kind == Kind::Empty) return true;
        if (a.kind == Kind::Point) return a.lo == b.lo;
        return a.lo == b.lo && a.hi == b.hi;
    }
};

Meet interval_meet(const Interval& a, const Interval& b);

/// Axis-aligned rectangle with proper x and y extents (nonempty interior).
struct Rect {
    Interval x;
    Interval y;

    Rect() = default;
    Rect(Interval xi, Interval yi) : x(std::move(xi)), y(std::move(yi)) {
        if (!x.proper() || !y.proper())
            throw std::invalid_argument("rect: extents must be proper");
    }

    friend bool operator==(const Rect& a, const Rect& b) { return a.x == b.x && a.y == b.y; }
};

/// inner strictly inside the open interior of outer (all four inequalities strict).
bool rect_in_interior(const Rect& inner, const Rect& outer);

/// inner contained in outer as closed point sets (non-strict).
bool rect_contains_rect(const Rect& inner, const Rect& outer);

/// Closed axis-parallel segment with distinct endpoints.
struct Segment {
    bool vertical;   // true: x == fixed, y spans range; false: y == fixed, x spans range
    Rational fixed;
    Interval range;  // proper

    Segment(bool vert, Rational f, Interval r)
        : vertical(vert), fixed(std::move(f)), range(std::move(r)) {
        if (!range.proper())
            throw std::invalid_argument("segment: endpoints must be distinct");
    }
    static Segment horizontal_at(Rational y, Rational x0, Rational x1) {
        return Segment(false, std::move(y), Interval(std::move(x0), std::move(x1)));
    }
    static Segment vertical_at(Rational x, Rational y0, Rational y1) {
        return Segment(true, std::move(x), Interval(std::move(y0), std::move(y1)));
    }
};

/// Exact intersection of two closed axis-parallel segments.
struct SegMeet {
    enum class Kind { Empty, Point, Overlap };
    Kind kind = Kind::Empty;
    Rational px, py;          // Point: the crossing point
    std::optional<Segment> overlap;  // Overlap: the shared collinear piece

    bool is_empty() const { return kind == Kind::Empty; }
    bool is_point() const { return kind == Kind::Point; }
    bool is_overlap() const { return kind == Kind::Overlap; }
};

SegMeet seg_meet(const Segment& s, const Segment& t);

}  // namespace wb
