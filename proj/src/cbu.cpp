#include "workbench/cbu.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace wb {

namespace {

void validate_family(const BoxFamily& b) {
    if (b.dim < 1) throw std::invalid_argument("box family: dimension must be >= 1");
    std::vector<int> ids;
    for (const auto& box : b.boxes) {
        if (static_cast<int>(box.intervals.size()) != b.dim)
            throw std::invalid_argument("box family: box dimension mismatch");
        ids.push_back(box.id);
    }
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw std::invalid_argument("box family: duplicate box id");
}

}  // namespace

const BoxD* BoxFamily::find(int id) const {
    for (const auto& b : boxes)
        if (b.id == id) return &b;
    return nullptr;
}

std::vector<int> box_id_order(const BoxFamily& b) {
    std::vector<int> ids;
    ids.reserve(b.boxes.size());
    for (const auto& box : b.boxes) ids.push_back(box.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

Graph box_graph(const BoxFamily& b) {
    validate_family(b);
    auto ids = box_id_order(b);
    const int n = static_cast<int>(ids.size());
    std::vector<const BoxD*> by_pos(n);
    for (int i = 0; i < n; ++i) by_pos[i] = b.find(ids[i]);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool meet_all = true;
            for (int a = 0; a < b.dim && meet_all; ++a)
                meet_all = !interval_meet(by_pos[i]->intervals[a],
                                          by_pos[j]->intervals[a]).is_empty();
            if (meet_all) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(n, edges);
}

CbuReport verify_cbu(const BoxFamily& b) {
    validate_family(b);
    for (const auto& box : b.boxes)
        for (const auto& iv : box.intervals)
            if (!iv.proper())
                throw std::invalid_argument("box family: degenerate interval on box " +
                                            std::to_string(box.id));
    CbuReport rep;
    rep.graph = box_graph(b);
    auto ids = box_id_order(b);
    const int n = static_cast<int>(ids.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!rep.graph.has_edge(i, j)) continue;
            Meet m0 = interval_meet(b.find(ids[i])->intervals[0],
                                    b.find(ids[j])->intervals[0]);
            if (m0.is_segment())
                rep.violations.push_back({ids[i], ids[j], m0});
        }
    }
    rep.valid = rep.violations.empty();
    return rep;
}

BoxFamily lift_dim(const BoxFamily& b) {
    BoxFamily out = b;
    out.dim = b.dim + 1;
    for (auto& box : out.boxes)
        box.intervals.emplace_back(Rational(0), Rational(1));
    return out;
}

namespace {

// One axis-parallel box on the integer grid, intervals as (lo, hi) pairs.
struct GridBox {
    std::array<std::pair<int, int>, 3> iv;  // up to 3 axes used
};

enum class PairKind { Empty, Point, Segment };

PairKind grid_meet(std::pair<int, int> a, std::pair<int, int> b) {
    int lo = std::max(a.first, b.first);
    int hi = std::min(a.second, b.second);
    if (lo > hi) return PairKind::Empty;
    if (lo == hi) return PairKind::Point;
    return PairKind::Segment;
}

class CbuSearch {
public:
    CbuSearch(const Graph& g, int dim, std::uint64_t budget)
        : g_(g), d_(dim), budget_(budget), n_(g.vertex_count()) {
        grid_max_ = 2 * n_;
        order_.resize(n_);
        for (int v = 0; v < n_; ++v) order_[v] = v;
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return g_.degree(a) > g_.degree(b); });
        placed_.resize(n_);
    }

    SearchResult run() {
        SearchResult res;
        exhausted_ = true;
        bool found = n_ == 0 ? true : dfs(0);
        res.nodes = nodes_;
        if (found) {
            res.status = SearchResult::Status::Representation;
            BoxFamily fam;
            fam.dim = d_;
            for (int k = 0; k < n_; ++k) {
                BoxD box;
                box.id = order_[k];
                for (int a = 0; a < d_; ++a)
                    box.intervals.emplace_back(Rational(placed_[k].iv[a].first),
                                               Rational(placed_[k].iv[a].second));
                fam.boxes.push_back(std::move(box));
            }
            std::sort(fam.boxes.begin(), fam.boxes.end(),
                      [](const BoxD& a, const BoxD& b) { return a.id < b.id; });
            res.family = std::move(fam);
        } else {
            res.status = exhausted_ ? SearchResult::Status::NoneComplete
                                    : SearchResult::Status::Unknown;
        }
        return res;
    }

private:
    bool dfs(int k) {
        if (k == n_) return true;
        GridBox box;
        return enumerate_axis(k, 0, box);
    }

    bool enumerate_axis(int k, int axis, GridBox& box) {
        if (axis == d_) {
            if (nodes_ >= budget_) {
                exhausted_ = false;
                return false;
            }
            ++nodes_;
            if (!nonneighbors_separated(k, box)) return false;
            placed_[k] = box;
            if (dfs(k + 1)) return true;
            return false;
        }
        for (int lo = 0; lo < grid_max_; ++lo) {
            for (int hi = lo + 1; hi <= grid_max_; ++hi) {
                // first box canonical up to per-axis reflection
                if (k == 0 && lo + hi > grid_max_) continue;
                box.iv[axis] = {lo, hi};
                // a placed neighbor that cannot be met on this axis kills the
                // whole subtree; the contact on axis 0 must already be a point
                if (!neighbors_satisfiable(k, axis, box)) continue;
                if (enumerate_axis(k, axis + 1, box)) return true;
                if (!exhausted_) return false;
            }
        }
        return false;
    }

    bool neighbors_satisfiable(int k, int axis, const GridBox& box) const {
        for (int j = 0; j < k; ++j) {
            if (!g_.has_edge(order_[k], order_[j])) continue;
            PairKind m = grid_meet(box.iv[axis], placed_[j].iv[axis]);
            if (axis == 0 ? m != PairKind::Point : m == PairKind::Empty) return false;
        }
        return true;
    }

    bool nonneighbors_separated(int k, const GridBox& box) const {
        for (int j = 0; j < k; ++j) {
            if (g_.has_edge(order_[k], order_[j])) continue;
            bool all_meet = true;
            for (int a = 0; a < d_ && all_meet; ++a)
                all_meet = grid_meet(box.iv[a], placed_[j].iv[a]) != PairKind::Empty;
            if (all_meet) return false;
        }
        return true;
    }

    const Graph& g_;
    int d_;
    std::uint64_t budget_;
    int n_;
    int grid_max_;
    std::vector<int> order_;
    std::vector<GridBox> placed_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = true;
};

}  // namespace

SearchResult search_cbu(const Graph& g, int dim, std::uint64_t budget, int max_n, int max_dim) {
    if (g.vertex_count() > max_n)
        throw std::invalid_argument("search_cbu: graph exceeds the size limit");
    if (dim < 1 || dim > max_dim)
        throw std::invalid_argument("search_cbu: dimension out of range");
    return CbuSearch(g, dim, budget).run();
}

BoxFamily sample_valid_family(std::uint64_t seed, int dim, int boxes) {
    if (dim < 1 || boxes < 0) throw std::invalid_argument("sample_valid_family: bad shape");
    std::mt19937_64 rng(seed);
    // distinct axis-0 cells over breakpoints 0..(boxes + slack)
    int cells = boxes + static_cast<int>(rng() % 3);
    std::vector<int> cell_ids(cells);
    for (int i = 0; i < cells; ++i) cell_ids[i] = i;
    std::shuffle(cell_ids.begin(), cell_ids.end(), rng);

    BoxFamily fam;
    fam.dim = dim;
    for (int i = 0; i < boxes; ++i) {
        BoxD box;
        box.id = i;
        int cell = cell_ids[i];
        box.intervals.emplace_back(Rational(cell), Rational(cell + 1));
        for (int a = 1; a < dim; ++a) {
            long den = 1 + static_cast<long>(rng() % 3);
            long lo = static_cast<long>(rng() % 40);
            long width = 1 + static_cast<long>(rng() % 25);
            box.intervals.emplace_back(Rational(lo, den), Rational(lo + width, den));
        }
        fam.boxes.push_back(std::move(box));
    }
    return fam;
}

}  // namespace wb
