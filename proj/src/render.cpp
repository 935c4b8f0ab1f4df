#include "workbench/render.hpp"

#include <sstream>
#include <stdexcept>

namespace wb {

namespace {

constexpr int kDigits = 6;

struct Bounds {
    Rational x0, x1, y0, y1;
    bool empty = true;

    void add(const Rect& r) {
        if (empty) {
            x0 = r.x.lo; x1 = r.x.hi; y0 = r.y.lo; y1 = r.y.hi;
            empty = false;
            return;
        }
        x0 = min(x0, r.x.lo); x1 = max(x1, r.x.hi);
        y0 = min(y0, r.y.lo); y1 = max(y1, r.y.hi);
    }

    void pad() {
        Rational mx = (x1 - x0) * Rational(1, 20);
        Rational my = (y1 - y0) * Rational(1, 20);
        if (mx.sign() == 0) mx = Rational(1);
        if (my.sign() == 0) my = Rational(1);
        x0 = x0 - mx; x1 = x1 + mx; y0 = y0 - my; y1 = y1 + my;
    }
};

// SVG's y axis grows downward; flip around the viewport.
std::string flip_y(const Bounds& b, const Rational& hi) {
    return (b.y0 + (b.y1 - hi)).decimal(kDigits);
}

void emit_rect(std::ostringstream& os, const Bounds& b, int id, const Rect& r, bool filled) {
    Rational w = r.x.hi - r.x.lo;
    Rational h = r.y.hi - r.y.lo;
    os << "  <rect x=\"" << r.x.lo.decimal(kDigits) << "\" y=\"" << flip_y(b, r.y.hi)
       << "\" width=\"" << w.decimal(kDigits) << "\" height=\"" << h.decimal(kDigits) << "\"";
    if (filled)
        os << " fill=\"#7aa6c2\" fill-opacity=\"0.45\" stroke=\"#23536f\" stroke-width=\"0.6%\"";
    else
        os << " fill=\"none\" stroke=\"#222222\" stroke-width=\"0.6%\"";
    os << "/>\n";
    Rational cx = r.x.lo + w * Rational(1, 2);
    Rational cy = r.y.lo + h * Rational(1, 2);
    Rational flipped_cy = b.y0 + (b.y1 - cy);
    os << "  <text x=\"" << cx.decimal(kDigits) << "\" y=\"" << flipped_cy.decimal(kDigits)
       << "\" font-size=\"" << ((b.x1 - b.x0) * Rational(1, 40)).decimal(kDigits)
       << "\" text-anchor=\"middle\">" << id << "</text>\n";
}

std::string svg_open(const Bounds& b) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
       << b.x0.decimal(kDigits) << " " << b.y0.decimal(kDigits) << " "
       << (b.x1 - b.x0).decimal(kDigits) << " " << (b.y1 - b.y0).decimal(kDigits) << "\">\n";
    return os.str();
}

}  // namespace

std::string frames_to_svg(const FrameFamily& f) {
    Bounds b;
    for (const auto& fr : f.frames) b.add(fr.rect);
    if (b.empty) b.add(Rect(Interval(Rational(0), Rational(1)), Interval(Rational(0), Rational(1))));
    b.pad();
    std::ostringstream os;
    os << svg_open(b);
    for (const auto& fr : f.frames) emit_rect(os, b, fr.id, fr.rect, false);
    os << "</svg>\n";
    return os.str();
}

std::string boxes_to_svg(const BoxFamily& fam) {
    if (fam.dim != 2)
        throw std::invalid_argument("svg: only 2-D box families render; export the graph as DOT instead");
    Bounds b;
    for (const auto& box : fam.boxes)
        b.add(Rect(box.intervals[0], box.intervals[1]));
    if (b.empty) b.add(Rect(Interval(Rational(0), Rational(1)), Interval(Rational(0), Rational(1))));
    b.pad();
    std::ostringstream os;
    os << svg_open(b);
    for (const auto& box : fam.boxes)
        emit_rect(os, b, box.id, Rect(box.intervals[0], box.intervals[1]), true);
    os << "</svg>\n";
    return os.str();
}

}  // namespace wb
