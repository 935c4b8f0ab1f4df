#include "workbench/geometry.hpp"

namespace wb {

Meet interval_meet(const Interval& a, const Interval& b) {
    Rational lo = max(a.lo, b.lo);
    Rational hi = min(a.hi, b.hi);
    if (hi < lo) return Meet::empty();
    if (lo == hi) return Meet::point(lo);
    return Meet::segment(lo, hi);
}

bool rect_in_interior(const Rect& inner, const Rect& outer) {
    return outer.x.lo < inner.x.lo && inner.x.hi < outer.x.hi &&
           outer.y.lo < inner.y.lo && inner.y.hi < outer.y.hi;
}

bool rect_contains_rect(const Rect& inner, const Rect& outer) {
    return outer.x.lo <= inner.x.lo && inner.x.hi <= outer.x.hi &&
           outer.y.lo <= inner.y.lo && inner.y.hi <= outer.y.hi;
}

SegMeet seg_meet(const Segment& s, const Segment& t) {
    SegMeet out;
    if (s.vertical == t.vertical) {
        if (s.fixed != t.fixed) return out;  // parallel, distinct lines
        Meet m = interval_meet(s.range, t.range);
        if (m.is_empty()) return out;
        if (m.is_point()) {
            out.kind = SegMeet::Kind::Point;
            if (s.vertical) { out.px = s.fixed; out.py = m.lo; }
            else            { out.px = m.lo;    out.py = s.fixed; }
            return out;
        }
        out.kind = SegMeet::Kind::Overlap;
        out.overlap = Segment(s.vertical, s.fixed, Interval(m.lo, m.hi));
        return out;
    }
    const Segment& v = s.vertical ? s : t;
    const Segment& h = s.vertical ? t : s;
    if (h.range.contains(v.fixed) && v.range.contains(h.fixed)) {
        out.kind = SegMeet::Kind::Point;
        out.px = v.fixed;
        out.py = h.fixed;
    }
    return out;
}

}  // namespace wb
