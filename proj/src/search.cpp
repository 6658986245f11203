#include "gasper/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

namespace gasper {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

// Entries scaled to a common denominator so determinants are integers.
struct Scaled {
    std::vector<long long> vals;  // sorted ascending
    mpz_class den;                // original value = vals[i] / den
    bool fits = false;            // int64 entries and int128-safe minors
};

Scaled scale_entries(int n, const std::vector<Rat>& entries) {
    Scaled sc;
    sc.den = 1;
    for (const Rat& v : entries)
        mpz_lcm(sc.den.get_mpz_t(), sc.den.get_mpz_t(), v.get_den().get_mpz_t());
    sc.fits = true;
    double max_abs = 1.0;
    for (const Rat& v : entries) {
        mpz_class z = v.get_num() * (sc.den / v.get_den());
        if (!z.fits_slong_p()) {
            sc.fits = false;
            return sc;
        }
        long long x = z.get_si();
        sc.vals.push_back(x);
        max_abs = std::max(max_abs, std::abs(static_cast<double>(x)));
    }
    // Bareiss intermediates are minors, bounded by (max_abs * sqrt(n))^n.
    if (n * (std::log2(max_abs) + 0.5 * std::log2(static_cast<double>(n))) >= 126.0)
        sc.fits = false;
    std::sort(sc.vals.begin(), sc.vals.end());
    return sc;
}

// Fraction-free elimination over int128; exact for int64 inputs within
// the minor bound checked above.
u128 abs_det_ll(const long long* arr, int n) {
    thread_local std::vector<i128> buf;
    buf.assign(arr, arr + static_cast<size_t>(n) * n);
    auto at = [&](int i, int j) -> i128& { return buf[static_cast<size_t>(i) * n + j]; };
    i128 prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (at(i, k) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != k)
            for (int j = k; j < n; ++j) std::swap(at(k, j), at(pivot, j));
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        prev = at(k, k);
    }
    i128 d = at(n - 1, n - 1);
    return d < 0 ? static_cast<u128>(-d) : static_cast<u128>(d);
}

// Lexicographically least row-major arrangement over row permutations,
// column permutations and transposition.
template <class T>
std::vector<T> canonical_form(const std::vector<T>& arr, int n) {
    std::vector<T> best = arr;
    std::vector<T> base(arr.size()), cand(arr.size());
    std::vector<int> rows(n), cols(n);
    for (int t = 0; t < 2; ++t) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                base[static_cast<size_t>(i) * n + j] =
                    t ? arr[static_cast<size_t>(j) * n + i] : arr[static_cast<size_t>(i) * n + j];
        std::iota(rows.begin(), rows.end(), 0);
        do {
            std::iota(cols.begin(), cols.end(), 0);
            do {
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        cand[static_cast<size_t>(i) * n + j] =
                            base[static_cast<size_t>(rows[i]) * n + cols[j]];
                if (cand < best) best = cand;
            } while (std::next_permutation(cols.begin(), cols.end()));
        } while (std::next_permutation(rows.begin(), rows.end()));
    }
    return best;
}

template <class T>
Matrix arrangement_to_matrix(const std::vector<T>& arr, int n, const mpz_class& den) {
    Matrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat v(mpz_class(static_cast<long>(arr[static_cast<size_t>(i) * n + j])), den);
            v.canonicalize();
            m(i, j) = v;
        }
    return m;
}

Rat unscale_det(const mpz_class& det_scaled, const mpz_class& den, int n) {
    mpz_class den_pow;
    mpz_pow_ui(den_pow.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n));
    Rat v(det_scaled, den_pow);
    v.canonicalize();
    return v;
}

mpz_class u128_to_mpz(u128 v) {
    mpz_class hi(static_cast<unsigned long>(v >> 64));
    mpz_class lo(static_cast<unsigned long>(v & ~0ULL));
    return (hi << 64) + lo;
}

mpz_class reduced_space_size(const std::vector<long long>& rest) {
    mpz_class count;
    mpz_fac_ui(count.get_mpz_t(), rest.size());
    size_t i = 0;
    while (i < rest.size()) {
        size_t j = i;
        while (j < rest.size() && rest[j] == rest[i]) ++j;
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), j - i);
        count /= f;
        i = j;
    }
    return count;
}

struct TaskBest {
    bool found = false;
    u128 best = 0;
    std::vector<long long> canon;  // canonical optimal arrangement
    std::uint64_t nodes = 0;

    void offer(const std::vector<long long>& arr, int n, u128 d) {
        if (!found || d > best) {
            found = true;
            best = d;
            canon = canonical_form(arr, n);
        } else if (d == best) {
            auto c = canonical_form(arr, n);
            if (c < canon) canon = std::move(c);
        }
    }

    void merge(const TaskBest& other) {
        nodes += other.nodes;
        if (!other.found) return;
        if (!found || other.best > best) {
            found = true;
            best = other.best;
            canon = other.canon;
        } else if (other.best == best && other.canon < canon) {
            canon = other.canon;
        }
    }
};

// Enumerate all arrangements with the given two-entry prefix fixed.
TaskBest run_task(int n, long long v0, long long v1, std::vector<long long> remainder) {
    const size_t nn = static_cast<size_t>(n) * n;
    std::vector<long long> arr(nn);
    arr[0] = v0;
    arr[1] = v1;
    std::sort(remainder.begin(), remainder.end());
    TaskBest tb;
    do {
        std::copy(remainder.begin(), remainder.end(), arr.begin() + 2);
        u128 d = abs_det_ll(arr.data(), n);
        ++tb.nodes;
        if (!tb.found || d >= tb.best) tb.offer(arr, n, d);
    } while (std::next_permutation(remainder.begin(), remainder.end()));
    return tb;
}

void validate_problem(const SearchProblem& p) {
    if (p.n < 2) throw DimensionMismatch("dimension must be >= 2");
    if (p.entries.size() != static_cast<size_t>(p.n) * p.n)
        throw DimensionMismatch("multiset has " + std::to_string(p.entries.size()) +
                                " entries, expected " + std::to_string(p.n * p.n));
}

// Fallback for entries outside the int64 fast path: exact mpq
// determinants, single-threaded.
SearchResult exhaustive_generic(const SearchProblem& p, const BoundReport& br) {
    std::vector<Rat> vals = p.entries;
    std::sort(vals.begin(), vals.end());
    SearchResult res{Matrix(p.n), Rat(0), br.bound, 0.0, 0, true};
    bool found = false;
    Matrix best(p.n), cur(p.n);
    do {
        for (int i = 0; i < p.n; ++i)
            for (int j = 0; j < p.n; ++j) cur(i, j) = vals[static_cast<size_t>(i) * p.n + j];
        Rat d = abs(det_exact(cur));
        ++res.nodes_visited;
        if (!found || d > res.best_abs_det) {
            found = true;
            res.best_abs_det = d;
            best = cur;
        } else if (d == res.best_abs_det) {
            for (int i = 0; i < p.n * p.n; ++i) {
                const Rat& a = cur(i / p.n, i % p.n);
                const Rat& b = best(i / p.n, i % p.n);
                if (a != b) {
                    if (a < b) best = cur;
                    break;
                }
            }
        }
    } while (std::next_permutation(vals.begin(), vals.end()));
    res.best = best;
    res.ratio = to_double(res.best_abs_det) / res.upper_bound;
    return res;
}

}  // namespace

SearchResult exhaustive_max_det(const SearchProblem& p) {
    validate_problem(p);
    const int n = p.n;
    BoundReport br = gasper_bound(multiset_stats(n, p.entries));

    Scaled sc = scale_entries(n, p.entries);
    if (!sc.fits) {
        // No symmetry reduction in the generic path, so the guard applies
        // to the full space of distinct arrangements.
        std::vector<Rat> sorted = p.entries;
        std::sort(sorted.begin(), sorted.end());
        mpz_class count;
        mpz_fac_ui(count.get_mpz_t(), sorted.size());
        size_t i = 0;
        while (i < sorted.size()) {
            size_t j = i;
            while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
            mpz_class f;
            mpz_fac_ui(f.get_mpz_t(), j - i);
            count /= f;
            i = j;
        }
        if (count > 100000000)
            throw SearchSpaceTooLarge(
                "arrangement space has " + count.get_str() + " elements (limit 1e8)",
                count.get_d());
        return exhaustive_generic(p, br);
    }

    // Fix the largest entry at (0,0); row/column permutations preserve
    // |det| and can move any entry there, so no orbit is lost.
    long long maxval = sc.vals.back();
    std::vector<long long> rest(sc.vals.begin(), sc.vals.end() - 1);

    mpz_class space = reduced_space_size(rest);
    if (space > 100000000)
        throw SearchSpaceTooLarge(
            "reduced arrangement space has " + space.get_str() + " elements (limit 1e8)",
            space.get_d());

    // Split on the value at (0,1): independent tasks, deterministic merge.
    std::vector<std::pair<long long, std::vector<long long>>> tasks;
    {
        size_t i = 0;
        while (i < rest.size()) {
            size_t j = i;
            while (j < rest.size() && rest[j] == rest[i]) ++j;
            std::vector<long long> remainder = rest;
            remainder.erase(remainder.begin() + static_cast<long>(i));
            tasks.emplace_back(rest[i], std::move(remainder));
            i = j;
        }
    }

    std::vector<TaskBest> results(tasks.size());
    const int workers = std::max(1, std::min<int>(p.workers, static_cast<int>(tasks.size())));
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t idx = next.fetch_add(1);
            if (idx >= tasks.size()) break;
            results[idx] = run_task(n, maxval, tasks[idx].first, tasks[idx].second);
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    TaskBest total;
    for (const TaskBest& tb : results) total.merge(tb);

    SearchResult res{arrangement_to_matrix(total.canon, n, sc.den),
                     unscale_det(u128_to_mpz(total.best), sc.den, n),
                     br.bound,
                     0.0,
                     total.nodes,
                     true};
    res.ratio = to_double(res.best_abs_det) / res.upper_bound;
    return res;
}

SearchResult anneal_max_det(const SearchProblem& p) {
    validate_problem(p);
    const int n = p.n;
    const size_t nn = static_cast<size_t>(n) * n;
    BoundReport br = gasper_bound(multiset_stats(n, p.entries));

    Scaled sc = scale_entries(n, p.entries);
    if (!sc.fits)
        throw std::invalid_argument(
            "anneal_max_det: entries exceed the exact fast-path range");

    std::mt19937_64 rng(p.seed);
    std::vector<long long> arr = sc.vals;
    std::uniform_int_distribution<size_t> pos(0, nn - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    u128 best = 0;
    std::vector<long long> best_arr = arr;
    std::uint64_t nodes = 0;

    const std::uint64_t budget = std::max<std::uint64_t>(p.budget, 1);
    const int restarts = budget >= 100000 ? 8 : 1;
    const std::uint64_t per_run = budget / restarts;

    for (int run = 0; run < restarts; ++run) {
        std::shuffle(arr.begin(), arr.end(), rng);
        u128 cur = abs_det_ll(arr.data(), n);
        ++nodes;
        if (run == 0 || cur > best) {
            best = cur;
            best_arr = arr;
        }
        // Temperature scaled to the bound in integer-det units.
        double scale = br.bound;
        for (int i = 0; i < n; ++i) scale *= mpz_get_d(sc.den.get_mpz_t());
        double t0 = std::max(1.0, 0.05 * scale);
        double t_end = std::max(1e-12, 1e-9 * t0);
        double cool = std::pow(t_end / t0, 1.0 / std::max<std::uint64_t>(per_run, 2));
        double temp = t0;
        for (std::uint64_t it = 0; it < per_run; ++it, temp *= cool) {
            size_t i = pos(rng), j = pos(rng);
            if (arr[i] == arr[j]) continue;
            std::swap(arr[i], arr[j]);
            u128 cand = abs_det_ll(arr.data(), n);
            ++nodes;
            double delta = static_cast<double>(static_cast<double>(cand) - static_cast<double>(cur));
            if (cand >= cur || unit(rng) < std::exp(delta / temp)) {
                cur = cand;
                if (cur > best) {
                    best = cur;
                    best_arr = arr;
                }
            } else {
                std::swap(arr[i], arr[j]);
            }
        }
    }

    std::vector<long long> canon = canonical_form(best_arr, n);
    SearchResult res{arrangement_to_matrix(canon, n, sc.den),
                     unscale_det(u128_to_mpz(best), sc.den, n),
                     br.bound,
                     0.0,
                     nodes,
                     false};
    res.ratio = to_double(res.best_abs_det) / res.upper_bound;
    return res;
}

std::vector<RatioRow> ratio_table(int n_max, ProgressionMode family, int workers) {
    std::vector<RatioRow> rows;
    for (int n = 2; n <= n_max; ++n) {
        SearchProblem p;
        p.n = n;
        if (family == ProgressionMode::FullSquare) {
            for (int v = 1; v <= n * n; ++v) p.entries.emplace_back(v);
        } else {
            for (int v = 1; v <= n; ++v)
                for (int k = 0; k < n; ++k) p.entries.emplace_back(v);
        }
        double bound = progression_bound(n, 1, 1, family).bound;
        RatioRow row{n, Rat(0), bound, 0.0, false};
        try {
            p.mode = SearchMode::Exhaustive;
            p.workers = workers;
            SearchResult r = exhaustive_max_det(p);
            row.best = r.best_abs_det;
            row.exact = true;
        } catch (const SearchSpaceTooLarge&) {
            p.mode = SearchMode::Anneal;
            p.seed = 1;
            p.budget = 2000000;
            SearchResult r = anneal_max_det(p);
            row.best = r.best_abs_det;
            row.exact = false;
        }
        row.ratio = to_double(row.best) / row.bound;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace gasper
