#include "stiefelmw/crosscheck.hpp"

#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>

#include "stiefelmw/gysin.hpp"

namespace stiefelmw {

namespace {

PairVerdict check_pair(StiefelIndex idx, const std::vector<ConventionChoice>& conventions) {
    PairVerdict v;
    v.n = idx.n();
    v.k = idx.k();

    const FormalSum a = closed_form(idx);
    const FormalSum b = inductive_cohomology(idx);
    v.a_eq_b = (a == b);
    if (!v.a_eq_b) std::tie(v.only_in_a_vs_b, v.only_in_b_vs_a) = FormalSum::diff(a, b);

    for (const ConventionChoice& choice : conventions) {
        const FormalSum c = motive_cohomology(stiefel_motive(idx, choice.conv));
        PairVerdict::MotiveVerdict mv;
        mv.convention = choice.name;
        mv.equal = (a == c);
        if (!mv.equal) std::tie(mv.only_in_a, mv.only_in_c) = FormalSum::diff(a, c);
        v.motive.push_back(std::move(mv));
    }
    return v;
}

}  // namespace

CrosscheckReport run_crosscheck(int n_max, const std::vector<ConventionChoice>& conventions,
                                int jobs) {
    if (n_max < 3) throw std::domain_error("run_crosscheck: require n_max >= 3");

    std::vector<StiefelIndex> pairs;
    for (int n = 2; n <= n_max; ++n)
        for (int k = 1; k <= n - 1; ++k) pairs.emplace_back(n, k);

    CrosscheckReport report;
    report.n_max = n_max;
    report.conventions = conventions;
    report.results.resize(pairs.size());

    int workers = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = std::min<int>(workers, static_cast<int>(pairs.size()));

    // Each worker fills disjoint slots of the pre-sized result vector, so
    // assembly is independent of scheduling.
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    auto work = [&](int w) {
        try {
            for (std::size_t i = next.fetch_add(1); i < pairs.size(); i = next.fetch_add(1))
                report.results[i] = check_pair(pairs[i], conventions);
        } catch (...) {
            errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    report.a_eq_b_all = true;
    for (const PairVerdict& v : report.results)
        if (!v.a_eq_b) report.a_eq_b_all = false;

    for (std::size_t c = 0; c < conventions.size(); ++c) {
        CrosscheckReport::ConventionSummary s;
        s.convention = conventions[c].name;
        for (const PairVerdict& v : report.results) {
            const auto& mv = v.motive[c];
            if (mv.equal) {
                ++s.matches;
            } else if (s.all_equal) {
                s.all_equal = false;
                s.first_mismatch_n = v.n;
                s.first_mismatch_k = v.k;
            }
        }
        report.motive_summary.push_back(std::move(s));
    }
    return report;
}

}  // namespace stiefelmw
