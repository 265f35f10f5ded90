#include <zfcube/errors.hpp>
#include <zfcube/forcing.hpp>
#include <zfcube/solver.hpp>
#include <zfcube/twist_spec.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <thread>

namespace zfcube {

auto zero_forcing_lower_bound(const Graph & g) -> std::size_t
{
    return g.min_degree();
}

auto zero_forcing_upper_bound(const Graph & g) -> UpperBound
{
    if (! recover_twist_spec(g))
        throw DomainError("upper bound needs a twisted hypercube");
    if (*g.dimension() < 1)
        throw DomainError("upper bound needs dimension at least 1");

    UpperBound result;
    for (VertexId v = 0; v < g.order(); v += 2)
        result.witness.push_back(v);
    result.size = result.witness.size();
    if (! is_zero_forcing_set(g, result.witness))
        throw std::logic_error("half cube failed to force");
    return result;
}

namespace {
    using Mask = std::uint64_t;
    using Clock = std::chrono::steady_clock;

    struct MaskGraph {
        std::vector<Mask> adjacency;
        Mask all = 0;

        explicit MaskGraph(const Graph & g) :
            adjacency(g.order(), 0)
        {
            for (VertexId v = 0; v < g.order(); ++v) {
                all |= Mask{1} << v;
                for (auto w : g.neighbours(v))
                    adjacency[v] |= Mask{1} << w;
            }
        }

        auto close(Mask blue) const -> Mask
        {
            // vertices that are blue and still have white neighbours
            Mask active = blue;
            while (true) {
                Mask grown = 0;
                for (Mask rest = active; rest; rest &= rest - 1) {
                    auto v = std::countr_zero(rest);
                    Mask white = adjacency[static_cast<std::size_t>(v)] & ~blue;
                    if (white == 0)
                        active &= ~(Mask{1} << v);
                    else if ((white & (white - 1)) == 0) {
                        blue |= white;
                        grown |= white;
                        active &= ~(Mask{1} << v);
                    }
                }
                if (! grown)
                    return blue;
                active |= grown;
            }
        }
    };

    struct ShardOutcome {
        std::uint64_t tested = 0;
        std::optional<VertexSet> witness;
        bool aborted = false;
        bool finished = false;
    };

    class LevelSearch {
      public:
        LevelSearch(const MaskGraph & graph, std::size_t order, std::size_t k,
            std::atomic<std::size_t> & best_shard, std::atomic<std::uint64_t> & budget_used,
            std::atomic<bool> & out_of_budget, const SolveOptions & options, Clock::time_point start) :
            graph_(graph),
            order_(order),
            k_(k),
            best_shard_(best_shard),
            budget_used_(budget_used),
            out_of_budget_(out_of_budget),
            options_(options),
            start_(start)
        {
            if (options.subset_budget)
                check_interval_ = std::clamp<std::uint64_t>(*options.subset_budget, 1, check_interval_);
        }

        auto run(std::size_t shard) -> ShardOutcome
        {
            shard_ = shard;
            outcome_ = {};
            chosen_.assign(1, static_cast<VertexId>(shard));
            search(graph_.close(Mask{1} << shard), shard + 1);
            flush_budget();
            outcome_.finished = ! outcome_.aborted;
            return outcome_;
        }

      private:
        auto should_stop() -> bool
        {
            if (outcome_.aborted)
                return true;
            if (++since_check_ < check_interval_)
                return false;
            flush_budget();
            if (best_shard_.load(std::memory_order_relaxed) < shard_ || out_of_budget_.load(std::memory_order_relaxed)) {
                outcome_.aborted = true;
                return true;
            }
            if ((options_.subset_budget && budget_used_.load(std::memory_order_relaxed) > *options_.subset_budget)
                || (options_.time_budget && Clock::now() - start_ > *options_.time_budget)) {
                out_of_budget_.store(true);
                outcome_.aborted = true;
                return true;
            }
            return false;
        }

        void flush_budget()
        {
            budget_used_.fetch_add(since_check_, std::memory_order_relaxed);
            since_check_ = 0;
        }

        void search(Mask closed, std::size_t from)
        {
            if (chosen_.size() == k_) {
                if (should_stop())
                    return;
                ++outcome_.tested;
                if (closed == graph_.all)
                    outcome_.witness = VertexSet(chosen_.begin(), chosen_.end());
                return;
            }
            auto needed = k_ - chosen_.size();
            for (auto x = from; x + needed <= order_; ++x) {
                if (outcome_.witness || outcome_.aborted)
                    return;
                if (closed & (Mask{1} << x))
                    continue;
                chosen_.push_back(static_cast<VertexId>(x));
                search(graph_.close(closed | (Mask{1} << x)), x + 1);
                chosen_.pop_back();
            }
        }

        const MaskGraph & graph_;
        std::size_t order_, k_, shard_ = 0;
        std::atomic<std::size_t> & best_shard_;
        std::atomic<std::uint64_t> & budget_used_;
        std::atomic<bool> & out_of_budget_;
        const SolveOptions & options_;
        Clock::time_point start_;
        std::vector<VertexId> chosen_;
        ShardOutcome outcome_;
        std::uint64_t since_check_ = 0;
        std::uint64_t check_interval_ = 1024;
    };
}

auto solve_exact(const Graph & g, const SolveOptions & options) -> SolveResult
{
    auto start = Clock::now();
    auto n = g.order();
    if (n > max_solve_order)
        throw ResourceError("exact search is limited to " + std::to_string(max_solve_order) + " vertices");
    if (n > max_default_solve_order && ! options.allow_large)
        throw ResourceError("graph has " + std::to_string(n) + " vertices; exact search above "
            + std::to_string(max_default_solve_order) + " needs an explicit override");

    SolveResult result;
    result.lower = std::max<std::size_t>(1, zero_forcing_lower_bound(g));
    result.upper = n;
    result.witness.resize(n);
    for (VertexId v = 0; v < n; ++v)
        result.witness[v] = v;
    if (recover_twist_spec(g) && *g.dimension() >= 1) {
        auto ub = zero_forcing_upper_bound(g);
        result.upper = ub.size;
        result.witness = std::move(ub.witness);
    }

    MaskGraph graph(g);
    std::atomic<std::uint64_t> budget_used{0};
    std::atomic<bool> out_of_budget{false};
    auto workers = std::max(1U, options.workers);

    for (auto k = result.lower; k <= n; ++k) {
        if (options.max_k && k > *options.max_k)
            break;

        auto shards = n - k + 1;
        std::vector<ShardOutcome> outcomes(shards);
        std::atomic<std::size_t> next_shard{0};
        std::atomic<std::size_t> best_shard{std::numeric_limits<std::size_t>::max()};

        auto work = [&] {
            LevelSearch search(graph, n, k, best_shard, budget_used, out_of_budget, options, start);
            while (true) {
                auto s = next_shard.fetch_add(1);
                if (s >= shards || s > best_shard.load() || out_of_budget.load())
                    return;
                outcomes[s] = search.run(s);
                if (outcomes[s].witness) {
                    auto current = best_shard.load();
                    while (s < current && ! best_shard.compare_exchange_weak(current, s)) {
                    }
                }
            }
        };

        if (workers == 1)
            work();
        else {
            std::vector<std::jthread> threads;
            for (unsigned i = 0; i < workers; ++i)
                threads.emplace_back(work);
        }

        auto best = best_shard.load();
        for (std::size_t s = 0; s < shards && s <= best; ++s)
            result.subsets_tested += outcomes[s].tested;

        bool certified = std::all_of(outcomes.begin(), outcomes.begin() + static_cast<std::ptrdiff_t>(std::min(best, shards)),
            [](const ShardOutcome & o) { return o.finished; });
        if (best != std::numeric_limits<std::size_t>::max() && ! certified) {
            // a forcing set of size k, but some earlier shard was cut short
            result.upper = k;
            result.witness = *outcomes[best].witness;
            break;
        }
        if (best != std::numeric_limits<std::size_t>::max()) {
            // every set smaller than k was ruled out before this level began
            result.status = SolveStatus::exact;
            result.z = k;
            result.lower = result.upper = k;
            result.witness = *outcomes[best].witness;
            break;
        }
        if (out_of_budget.load())
            break;
        result.lower = k + 1;
        if (k + 1 > result.upper)
            throw std::logic_error("exhausted every size up to a known upper bound");
    }

    result.elapsed = Clock::now() - start;
    return result;
}

}
