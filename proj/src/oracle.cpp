#include "hw4k/oracle.hpp"

#include <algorithm>
#include <vector>

namespace hw4k {

namespace {

struct BudgetExceeded {};

class Searcher {
public:
    Searcher(int n, int r, int s, int cycle_len, const SearchOptions& opts)
        : n_(n), r_(r), s_(s), cycle_len_(cycle_len), opts_(opts) {
        // never reallocated: extend_factor keeps pointers into encodings_
        encodings_.reserve(static_cast<std::size_t>(r + s));
        factor_cycles_.reserve(static_cast<std::size_t>(r + s));
        adj_.assign(static_cast<std::size_t>(n), 0);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v) adj_[static_cast<std::size_t>(u)] |= 1u << v;
    }

    SearchResult run() {
        SearchResult res;
        try {
            if (solve_factor(0)) {
                res.status = SearchStatus::yes;
                res.witness = std::move(witness_);
            } else {
                res.status = SearchStatus::no;
            }
        } catch (const BudgetExceeded&) {
            res.status = SearchStatus::undecided;
        }
        res.nodes_expanded = nodes_;
        return res;
    }

private:
    bool solve_factor(int fi) {
        if (fi == r_ + s_) return finish();
        const bool hamilton = fi < r_;
        const int target = hamilton ? n_ : cycle_len_;
        // factor-permutation symmetry: same-kind factors must be increasing
        const std::vector<int>* floor = nullptr;
        if (fi > 0 && (fi < r_ || fi > r_)) floor = &encodings_[static_cast<std::size_t>(fi - 1)];
        cur_factor_.clear();
        cur_cycles_.clear();
        covered_ = 0;
        return extend_factor(fi, target, floor);
    }

    // Grow the current 2-factor cycle by cycle; cycles start at the lowest
    // uncovered vertex and canonically (second vertex below the closing one).
    bool extend_factor(int fi, int target, const std::vector<int>* floor) {
        if (covered_ == (1u << n_) - 1) {
            if (floor && cur_factor_ < *floor) return false;
            encodings_.push_back(cur_factor_);
            factor_cycles_.push_back(cur_cycles_);
            const auto saved_factor = cur_factor_;
            const auto saved_cycles = cur_cycles_;
            const auto saved_covered = covered_;
            if (solve_factor(fi + 1)) return true;
            factor_cycles_.pop_back();
            encodings_.pop_back();
            cur_factor_ = saved_factor;
            cur_cycles_ = saved_cycles;
            covered_ = saved_covered;
            return false;
        }
        int start = 0;
        while (covered_ & (1u << start)) ++start;
        std::vector<int> path{start};
        covered_ |= 1u << start;
        const bool ok = extend_cycle(fi, target, floor, start, path);
        covered_ &= ~(1u << start);
        return ok;
    }

    bool extend_cycle(int fi, int target, const std::vector<int>* floor, int start,
                      std::vector<int>& path) {
        bump();
        const int cur = path.back();
        if (static_cast<int>(path.size()) == target) {
            if (!(adj_[static_cast<std::size_t>(cur)] & (1u << start))) return false;
            // direction symmetry: path[1] must beat the closing neighbor
            if (path.size() > 2 && path[1] > path[path.size() - 1]) return false;
            remove_edge(cur, start);
            const std::size_t mark_f = cur_factor_.size();
            cur_factor_.insert(cur_factor_.end(), path.begin(), path.end());
            cur_factor_.push_back(-1);
            cur_cycles_.push_back(path);
            if (extend_factor(fi, target, floor)) return true;  // state already consumed
            cur_cycles_.pop_back();
            cur_factor_.resize(mark_f);
            add_edge(cur, start);
            return false;
        }
        for (int v = 0; v < n_; ++v) {
            if (!(adj_[static_cast<std::size_t>(cur)] & (1u << v))) continue;
            if (covered_ & (1u << v)) continue;
            remove_edge(cur, v);
            covered_ |= 1u << v;
            path.push_back(v);
            const bool ok = extend_cycle(fi, target, floor, start, path);
            path.pop_back();
            covered_ &= ~(1u << v);
            add_edge(cur, v);
            if (ok) return true;
        }
        return false;
    }

    bool finish() {
        // leftover must be a perfect matching (n even) or empty (n odd)
        std::vector<Edge> leftover;
        std::vector<int> deg(static_cast<std::size_t>(n_), 0);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adj_[static_cast<std::size_t>(u)] & (1u << v)) {
                    leftover.emplace_back(u, v);
                    ++deg[static_cast<std::size_t>(u)];
                    ++deg[static_cast<std::size_t>(v)];
                }
        if (n_ % 2 == 0) {
            for (int d : deg)
                if (d != 1) return false;
        } else if (!leftover.empty()) {
            return false;
        }
        Certificate cert;
        cert.n = n_;
        cert.r = r_;
        cert.s = s_;
        if (s_ > 0 && cycle_len_ % 4 == 0 && n_ % cycle_len_ == 0) {
            cert.k = cycle_len_ / 4;
            cert.t = n_ / cycle_len_;
        }
        for (int fi = 0; fi < r_ + s_; ++fi) {
            TwoFactor f;
            f.kind = fi < r_ ? FactorKind::hamilton : FactorKind::c4k;
            f.cycles = factor_cycles_[static_cast<std::size_t>(fi)];
            cert.factors.push_back(canonical_factor(std::move(f)));
        }
        if (n_ % 2 == 0) cert.one_factor = std::move(leftover);
        witness_ = std::move(cert);
        return true;
    }

    void bump() {
        if (++nodes_ > opts_.node_budget) throw BudgetExceeded{};
    }
    void remove_edge(int u, int v) {
        adj_[static_cast<std::size_t>(u)] &= ~(1u << v);
        adj_[static_cast<std::size_t>(v)] &= ~(1u << u);
    }
    void add_edge(int u, int v) {
        adj_[static_cast<std::size_t>(u)] |= 1u << v;
        adj_[static_cast<std::size_t>(v)] |= 1u << u;
    }

    int n_, r_, s_, cycle_len_;
    SearchOptions opts_;
    std::vector<std::uint32_t> adj_;
    std::uint32_t covered_ = 0;
    std::uint64_t nodes_ = 0;
    std::vector<int> cur_factor_;
    std::vector<std::vector<int>> cur_cycles_;
    std::vector<std::vector<int>> encodings_;
    std::vector<std::vector<std::vector<int>>> factor_cycles_;
    std::optional<Certificate> witness_;
};

}  // namespace

SearchResult exhaustive_hw(int n, int r, int s, int cycle_len, const SearchOptions& opts) {
    if (n < 3 || r < 0 || s < 0) throw std::invalid_argument("exhaustive_hw: bad parameters");
    if (n > opts.max_n) throw std::invalid_argument("exhaustive_hw: n exceeds the search guard");
    SearchResult res;
    const int slots = n % 2 == 0 ? (n - 2) / 2 : (n - 1) / 2;
    if (r + s != slots || (s > 0 && (cycle_len < 3 || n % cycle_len != 0))) {
        res.status = SearchStatus::no;  // necessary conditions fail
        return res;
    }
    return Searcher(n, r, s, cycle_len, opts).run();
}

}  // namespace hw4k
