#include <gpramsey/error.hpp>
#include <gpramsey/progression.hpp>
#include <gpramsey/search.hpp>

#include <algorithm>
#include <atomic>
#include <future>
#include <mutex>
#include <random>

namespace gpramsey {

namespace {

    // Depth-first extension of colorings of [1, p]. For every colored point x and
    // low-difference d < x, levels(x, d) has bit j - 1 set iff some monochromatic j-term
    // progression with low-difference d ends at x (d >= x admits only the 1-term one).
    class Extender {
    public:
        Extender(int colors, int k, const Family & family, const SearchBudget & budget,
            std::atomic<std::uint64_t> & shared_nodes) :
            colors_(colors),
            k_(k),
            family_(family),
            max_length_(budget.max_length),
            max_nodes_(budget.max_nodes),
            full_(k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1),
            stride_(static_cast<std::size_t>(budget.max_length) + 1),
            color_(stride_, 0),
            levels_(stride_ * stride_, 0),
            shared_nodes_(shared_nodes)
        {
        }

        // Colors point p (all of 1..p-1 colored) with c; false if that completes a
        // monochromatic k-term progression ending at p.
        auto place(int p, Color c) -> bool
        {
            color_[static_cast<std::size_t>(p)] = c;
            std::uint64_t * row = &levels_[static_cast<std::size_t>(p) * stride_];
            const auto top = std::uint64_t{1} << (k_ - 1);
            for (int d = 1; d < p; ++d) {
                std::uint64_t lv = 1;
                for (int u = 0; u <= family_.max_entry(); ++u) {
                    int x = p - family_.gap(d, u);
                    if (x < 1)
                        break;
                    if (color_[static_cast<std::size_t>(x)] == c)
                        lv |= level(x, d) << 1;
                }
                lv &= full_;
                if (lv & top)
                    return false;
                row[d] = lv;
            }
            return true;
        }

        auto search(int depth, int max_used) -> void
        {
            const int next = depth + 1;
            const int limit = std::min(colors_ - 1, max_used + 1);
            for (int c = 0; c <= limit; ++c) {
                if (! place(next, static_cast<Color>(c)))
                    continue;
                count_node(next);
                if (next > best_depth_) {
                    best_depth_ = next;
                    best_.assign(color_.begin() + 1, color_.begin() + next + 1);
                }
                if (next >= max_length_)
                    throw BudgetExceeded("search reached max_length = " + std::to_string(max_length_)
                            + " without exhausting the tree", best_depth_);
                search(next, std::max(max_used, c));
            }
        }

        struct Prefix {
            std::vector<Color> colors;
            int max_used;
        };

        auto collect(int depth, int max_used, int target, std::vector<Prefix> & out) -> void
        {
            if (depth == target) {
                out.push_back(Prefix{std::vector<Color>(color_.begin() + 1, color_.begin() + depth + 1), max_used});
                return;
            }
            const int next = depth + 1;
            const int limit = std::min(colors_ - 1, max_used + 1);
            for (int c = 0; c <= limit; ++c) {
                if (! place(next, static_cast<Color>(c)))
                    continue;
                count_node(next);
                if (next > best_depth_) {
                    best_depth_ = next;
                    best_.assign(color_.begin() + 1, color_.begin() + next + 1);
                }
                collect(next, std::max(max_used, c), target, out);
            }
        }

        // Replays a prefix without counting it; it becomes the initial best.
        auto load(const Prefix & prefix) -> void
        {
            for (std::size_t i = 0; i < prefix.colors.size(); ++i)
                if (! place(static_cast<int>(i) + 1, prefix.colors[i]))
                    throw Error("invalid search prefix");
            best_depth_ = static_cast<int>(prefix.colors.size());
            best_ = prefix.colors;
        }

        auto flush() -> void
        {
            shared_nodes_ += pending_;
            pending_ = 0;
        }

        auto nodes() const -> std::uint64_t { return nodes_; }
        auto best_depth() const -> int { return best_depth_; }
        auto best() const -> const std::vector<Color> & { return best_; }

    private:
        auto level(int x, int d) const -> std::uint64_t
        {
            return d < x ? levels_[static_cast<std::size_t>(x) * stride_ + static_cast<std::size_t>(d)] : 1;
        }

        auto count_node(int depth) -> void
        {
            ++nodes_;
            if (++pending_ == 4096) {
                flush();
                if (shared_nodes_.load(std::memory_order_relaxed) > max_nodes_)
                    throw BudgetExceeded("search exceeded max_nodes = " + std::to_string(max_nodes_),
                        std::max(best_depth_, depth));
            }
        }

        int colors_;
        int k_;
        Family family_;
        int max_length_;
        std::uint64_t max_nodes_;
        std::uint64_t full_;
        std::size_t stride_;
        std::vector<Color> color_;
        std::vector<std::uint64_t> levels_;
        std::atomic<std::uint64_t> & shared_nodes_;
        std::uint64_t nodes_ = 0;
        std::uint64_t pending_ = 0;
        int best_depth_ = 0;
        std::vector<Color> best_;
    };

    auto check_search_args(int colors, int k, const SearchBudget & budget) -> void
    {
        if (colors < 2 || colors > max_colors)
            throw InvalidInput("r must be in [2, 36]");
        if (k < 2 || k > 63)
            throw InvalidInput("exact search supports 2 <= k <= 63");
        if (budget.max_length < 1 || budget.max_nodes < 1)
            throw InvalidInput("search budget must be positive");
    }

    auto splitmix64(std::uint64_t x) -> std::uint64_t
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    // Unbiased draw in [0, bound) that does not depend on the standard library's distributions.
    auto draw_below(std::mt19937_64 & rng, std::uint64_t bound) -> std::uint64_t
    {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do
            x = rng();
        while (x >= limit);
        return x % bound;
    }

    // Counts of monochromatic progressions by low-difference d: forward[x][j] ends at x with
    // j terms, backward[x][j] starts at x with j terms (1-based j).
    struct PathCounts {
        std::vector<double> forward;
        std::vector<double> backward;
    };

    auto path_counts(const Coloring & chi, int k, const Family & family, int d, bool want_backward) -> PathCounts
    {
        const int n = chi.n_points();
        const auto stride = static_cast<std::size_t>(k + 1);
        PathCounts pc{std::vector<double>(static_cast<std::size_t>(n + 1) * stride, 0.0), {}};
        for (int x = 1; x <= n; ++x) {
            double * fx = &pc.forward[static_cast<std::size_t>(x) * stride];
            fx[1] = 1;
            for (int u = 0; u <= family.max_entry(); ++u) {
                int y = x - family.gap(d, u);
                if (y < 1)
                    break;
                if (chi.at(y) != chi.at(x))
                    continue;
                const double * fy = &pc.forward[static_cast<std::size_t>(y) * stride];
                for (int j = 2; j <= k; ++j)
                    fx[j] += fy[j - 1];
            }
        }
        if (want_backward) {
            pc.backward.assign(static_cast<std::size_t>(n + 2) * stride, 0.0);
            for (int x = n; x >= 1; --x) {
                double * bx = &pc.backward[static_cast<std::size_t>(x) * stride];
                bx[1] = 1;
                for (int u = 0; u <= family.max_entry(); ++u) {
                    int y = x + family.gap(d, u);
                    if (y > n)
                        break;
                    if (chi.at(y) != chi.at(x))
                        continue;
                    const double * by = &pc.backward[static_cast<std::size_t>(y) * stride];
                    for (int j = 2; j <= k; ++j)
                        bx[j] += by[j - 1];
                }
            }
        }
        return pc;
    }

    auto run_stream(int colors, int n_points, int k, const Family & family, std::uint64_t seed,
        std::uint64_t moves, const std::atomic<int> & best_stream, int stream) -> WitnessSearchResult
    {
        std::mt19937_64 rng(splitmix64(seed));
        std::vector<Color> values(static_cast<std::size_t>(n_points));
        for (auto & v : values)
            v = static_cast<Color>(draw_below(rng, static_cast<std::uint64_t>(colors)));
        Coloring chi(colors, std::move(values));

        for (std::uint64_t move = 0;; ++move) {
            auto mono = find_monochromatic(chi, k, family);
            if (! mono)
                return WitnessSearchResult{chi, stream, move};
            if (move == moves || best_stream.load(std::memory_order_relaxed) < stream)
                return WitnessSearchResult{std::nullopt, stream, move};

            double best_created = 0;
            std::uint64_t ties = 0;
            int best_x = 0;
            Color best_c = 0;
            for (int x : mono->terms()) {
                const Color old = chi.at(x);
                for (int c = 0; c < colors; ++c) {
                    if (c == old)
                        continue;
                    chi.set(x, static_cast<Color>(c));
                    double created = count_monochromatic_through(chi, k, family, x);
                    chi.set(x, old);
                    if (ties == 0 || created < best_created) {
                        best_created = created;
                        ties = 1;
                        best_x = x;
                        best_c = static_cast<Color>(c);
                    }
                    else if (created == best_created && draw_below(rng, ++ties) == 0) {
                        best_x = x;
                        best_c = static_cast<Color>(c);
                    }
                }
            }
            chi.set(best_x, best_c);
        }
    }

} // namespace

auto exact_threshold(int colors, int k, const Family & family, const SearchBudget & budget, int workers)
    -> ThresholdCertificate
{
    check_search_args(colors, k, budget);
    std::atomic<std::uint64_t> shared_nodes{0};

    auto certificate = [&](int depth, std::vector<Color> best, std::uint64_t nodes) {
        return ThresholdCertificate{family, colors, k, depth + 1, Coloring(colors, std::move(best)), nodes, true};
    };

    if (workers <= 1) {
        Extender ext(colors, k, family, budget, shared_nodes);
        ext.search(0, -1);
        return certificate(ext.best_depth(), ext.best(), ext.nodes());
    }

    // split the tree at the shallowest depth that yields enough subtrees
    std::vector<Extender::Prefix> prefixes;
    std::unique_ptr<Extender> top;
    const auto wanted = static_cast<std::size_t>(8 * workers);
    for (int depth = 1; depth < std::min(budget.max_length, 32); ++depth) {
        shared_nodes = 0;
        prefixes.clear();
        top = std::make_unique<Extender>(colors, k, family, budget, shared_nodes);
        top->collect(0, -1, depth, prefixes);
        if (prefixes.empty() || prefixes.size() >= wanted)
            break;
    }
    top->flush();
    if (prefixes.empty())
        return certificate(top->best_depth(), top->best(), top->nodes());

    struct Outcome {
        int depth;
        std::vector<Color> best;
        std::uint64_t nodes;
    };
    std::vector<Outcome> outcomes(prefixes.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> jobs;
    for (int w = 0; w < workers; ++w)
        jobs.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i = next++; i < prefixes.size(); i = next++) {
                Extender ext(colors, k, family, budget, shared_nodes);
                ext.load(prefixes[i]);
                ext.search(static_cast<int>(prefixes[i].colors.size()), prefixes[i].max_used);
                ext.flush();
                outcomes[i] = Outcome{ext.best_depth(), ext.best(), ext.nodes()};
            }
        }));

    std::exception_ptr failure;
    for (auto & j : jobs) {
        try {
            j.get();
        }
        catch (...) {
            if (! failure)
                failure = std::current_exception();
            next = prefixes.size();
        }
    }
    if (failure)
        std::rethrow_exception(failure);

    std::size_t winner = 0;
    std::uint64_t nodes = top->nodes();
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        nodes += outcomes[i].nodes;
        if (outcomes[i].depth > outcomes[winner].depth)
            winner = i;
    }
    return certificate(outcomes[winner].depth, outcomes[winner].best, nodes);
}

auto random_witness_search(int colors, int n_points, int k, const Family & family, const SearchBudget & budget,
    int workers) -> WitnessSearchResult
{
    if (colors < 2 || colors > max_colors)
        throw InvalidInput("r must be in [2, 36]");
    if (k < 2)
        throw InvalidInput("k must be >= 2");
    if (n_points < 0)
        throw InvalidInput("N must be >= 0");
    const int streams = std::max(1, budget.restarts);
    const std::uint64_t moves = std::max<std::uint64_t>(1, budget.max_nodes / static_cast<std::uint64_t>(streams));

    std::atomic<int> best_stream{streams};
    std::vector<WitnessSearchResult> results(static_cast<std::size_t>(streams));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int s = next++; s < streams; s = next++) {
            if (best_stream.load() < s)
                return;
            auto seed = splitmix64(budget.seed) ^ splitmix64(static_cast<std::uint64_t>(s) + 0x632be59bd9b4e019ULL);
            results[static_cast<std::size_t>(s)] = run_stream(colors, n_points, k, family, seed, moves, best_stream, s);
            if (results[static_cast<std::size_t>(s)].witness) {
                int current = best_stream.load();
                while (s < current && ! best_stream.compare_exchange_weak(current, s)) {
                }
            }
        }
    };

    const int threads = std::clamp(workers, 1, streams);
    std::vector<std::future<void>> jobs;
    for (int w = 1; w < threads; ++w)
        jobs.push_back(std::async(std::launch::async, worker));
    worker();
    for (auto & j : jobs)
        j.get();

    int winner = best_stream.load();
    if (winner < streams)
        return results[static_cast<std::size_t>(winner)];
    std::uint64_t total_moves = 0;
    for (const auto & r : results)
        total_moves += r.moves;
    return WitnessSearchResult{std::nullopt, -1, total_moves};
}

auto check_witness(const Coloring & chi, int k, const Family & family) -> bool
{
    return ! find_monochromatic(chi, k, family).has_value();
}

auto count_monochromatic(const Coloring & chi, int k, const Family & family) -> double
{
    if (k < 2)
        throw InvalidInput("k must be >= 2");
    const int n = chi.n_points();
    const auto stride = static_cast<std::size_t>(k + 1);
    double total = 0;
    for (int d = 1; d <= max_low_difference(1, k, n); ++d) {
        auto pc = path_counts(chi, k, family, d, false);
        for (int x = 1; x <= n; ++x)
            total += pc.forward[static_cast<std::size_t>(x) * stride + static_cast<std::size_t>(k)];
    }
    return total;
}

auto count_monochromatic_through(const Coloring & chi, int k, const Family & family, int x) -> double
{
    if (k < 2)
        throw InvalidInput("k must be >= 2");
    if (x < 1 || x > chi.n_points())
        throw InvalidInput("point outside the coloring");
    const auto stride = static_cast<std::size_t>(k + 1);
    const auto base = static_cast<std::size_t>(x) * stride;
    double total = 0;
    for (int d = 1; d <= max_low_difference(1, k, chi.n_points()); ++d) {
        auto pc = path_counts(chi, k, family, d, true);
        // x as the i-th term: i-term prefix ending at x times (k-i+1)-term suffix starting at x
        for (int i = 1; i <= k; ++i)
            total += pc.forward[base + static_cast<std::size_t>(i)]
                * pc.backward[base + static_cast<std::size_t>(k - i + 1)];
    }
    return total;
}

auto to_json(const ThresholdCertificate & cert) -> nlohmann::ordered_json
{
    return nlohmann::ordered_json{
        {"family", cert.family.name()},
        {"param", cert.family.param()},
        {"r", cert.colors},
        {"k", cert.k},
        {"value", cert.value},
        {"witness", cert.witness.to_digits()},
        {"witness_length", cert.witness.n_points()},
        {"nodes_explored", cert.nodes_explored},
        {"exhaustive", cert.exhaustive},
    };
}

} // namespace gpramsey
