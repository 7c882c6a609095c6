// Acceptance suite: one PASS/FAIL line per criterion.

#include "support.hpp"

#include "toric/combinatorics.hpp"
#include "toric/maximality.hpp"
#include "toric/orbit_complex.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>

using namespace toric;
using namespace testing_support;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Checked {
    CorpusEntry entry;
    MaximalityReport report;
};

int failures = 0;

void report(int id, bool ok, const std::string& detail)
{
    std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
    if (!ok)
        ++failures;
}

std::vector<Checked> check_all(const std::vector<CorpusEntry>& corpus, std::string& error)
{
    std::vector<Checked> out;
    for (const auto& e : corpus) {
        try {
            out.push_back({e, run_check(e.fan)});
        } catch (const std::exception& ex) {
            error += e.name + ": " + ex.what() + "; ";
        }
    }
    return out;
}

std::vector<CorpusEntry> corpus_of(std::size_t dim, std::size_t chains)
{
    return generate_corpus(1, base_fans(dim).size() + chains, dim);
}

bool all_s(const MaximalityReport& r)
{
    for (const auto& row : r.s_table)
        for (bool b : row)
            if (!b)
                return false;
    return true;
}

// Ranks by the dense oracle, never by the library kernel.
std::size_t oracle_betti_sum(const Fan& f)
{
    const auto c = build_orbit_complex(f);
    std::vector<std::size_t> ranks(f.n + 2, 0);
    for (std::size_t p = 1; p <= f.n; ++p)
        ranks[p] = oracle::rank_mod2(to_dense(c.boundary(p)));
    std::size_t sum = 0;
    for (std::size_t p = 0; p <= f.n; ++p)
        sum += c.dim(p) - ranks[p] - ranks[p + 1];
    return sum;
}

Fan power_of_line(std::size_t n)
{
    Fan f = point_fan();
    for (std::size_t i = 0; i < n; ++i)
        f = product_fan(f, projective_fan(1));
    return f;
}

GroupAlgebraChain push_forward(const F2Matrix& f, const GroupAlgebraChain& c)
{
    auto out = GroupAlgebraChain::zero(f.rows());
    for (std::uint32_t v = 0; v < (std::uint32_t{1} << c.quot_dim); ++v)
        if (c.coeffs.get(v))
            out.coeffs.flip(toric::to_mask(f * toric::from_mask(v, c.quot_dim)));
    return out;
}

bool psi_isomorphism(const Fan& f)
{
    const auto c = build_orbit_complex(f);
    for (std::size_t p = 0; p <= f.n; ++p) {
        for (auto id : c.cones(p))
            for (std::size_t q = 0; q <= p; ++q) {
                const std::size_t m = f.n - f.cones[id].dim;
                if (local_ideal_power(m, q).dim() - local_ideal_power(m, q + 1).dim() != binomial(m, q))
                    return false;
            }
        for (std::size_t q = 0; q <= p; ++q) {
            const auto a = assembled_psi(c, p, q);
            const auto& here = c.ideal_power(p, q);
            const auto& deeper = c.ideal_power(p, q + 1);
            const auto image = F2Subspace::row_space(a.transpose());
            if (image.dim() != a.cols() || !here.contains(image))
                return false;
            if (subspace_intersect(image, deeper).dim() != 0 || subspace_sum(image, deeper) != here)
                return false;
        }
    }
    return true;
}

} // namespace

int main()
{
    std::string err;

    // 1. Dimension four.
    auto t0 = Clock::now();
    const auto c4 = corpus_of(4, 50);
    const auto r4 = check_all(c4, err);
    const double t4 = seconds_since(t0);
    std::size_t degenerate4 = 0;
    for (const auto& c : r4)
        degenerate4 += c.report.degenerate_at_one;
    report(1, err.empty() && c4.size() >= 50 && degenerate4 == c4.size() && t4 < 60.0,
           std::to_string(degenerate4) + "/" + std::to_string(c4.size()) + " dimension-4 fans degenerate at one in " +
               std::to_string(t4) + " s" + (err.empty() ? "" : " errors: " + err));

    // 2. Dimensions one to three.
    t0 = Clock::now();
    std::vector<CorpusEntry> low;
    for (std::size_t d = 1; d <= 3; ++d)
        for (auto& e : corpus_of(d, 15))
            low.push_back(std::move(e));
    const auto rlow = check_all(low, err);
    const double tlow = seconds_since(t0);
    std::size_t degenerate_low = 0;
    for (const auto& c : rlow)
        degenerate_low += c.report.degenerate_at_one;
    report(2, err.empty() && low.size() >= 30 && degenerate_low == low.size() && tlow < 10.0,
           std::to_string(degenerate_low) + "/" + std::to_string(low.size()) + " fans of dimension 1-3 in " +
               std::to_string(tlow) + " s");

    // 3. Classical Betti numbers.
    {
        bool ok = true;
        std::string detail;
        for (std::size_t n = 1; n <= 4; ++n) {
            const auto rp = run_check(projective_fan(static_cast<int>(n)));
            const auto rt = run_check(power_of_line(n));
            const std::size_t want_p = n + 1, want_t = std::size_t{1} << n;
            ok = ok && rp.betti_real_sum == want_p && rp.e2_sum == want_p &&
                 oracle_betti_sum(projective_fan(static_cast<int>(n))) == want_p;
            ok = ok && rt.betti_real_sum == want_t && rt.e2_sum == want_t && oracle_betti_sum(power_of_line(n)) == want_t;
            detail += "P" + std::to_string(n) + "=" + std::to_string(rp.betti_real_sum) + " (P1)^" + std::to_string(n) +
                      "=" + std::to_string(rt.betti_real_sum) + " ";
        }
        report(3, ok, "Betti sums " + detail);
    }

    // Every corpus fan of dimensions 1 to 5.
    std::vector<const Checked*> every;
    for (const auto& c : r4)
        every.push_back(&c);
    for (const auto& c : rlow)
        every.push_back(&c);
    const auto c5 = generate_corpus(1, 20, 5);
    const auto r5 = check_all(c5, err);
    for (const auto& c : r5)
        every.push_back(&c);

    // 4. Convergence: limit page sums to the Betti numbers, degree by degree.
    {
        std::size_t good = 0;
        for (const auto* c : every) {
            const auto& lim = c->report.pages.back();
            bool ok = lim.dims.size() == c->report.betti_real.size();
            for (std::size_t p = 0; ok && p < lim.dims.size(); ++p)
                ok = std::accumulate(lim.dims[p].begin(), lim.dims[p].end(), std::size_t{0}) == c->report.betti_real[p];
            good += ok;
        }
        report(4, err.empty() && good == every.size(),
               std::to_string(good) + "/" + std::to_string(every.size()) + " fans converge to their Betti numbers");
    }

    // 5. Structure ties.
    {
        std::size_t good = 0;
        for (const auto* c : every) {
            const auto orbit = build_orbit_complex(c->entry.fan);
            const auto ext = build_exterior_complex(c->entry.fan);
            const auto pr = compute_pages(orbit.filtered(), default_r_max(orbit.filtered()));
            good += verify_g0_matches_e1(orbit, ext) && verify_g1_equals_e2(pr, e2_dims(ext));
        }
        report(5, good == every.size(),
               std::to_string(good) + "/" + std::to_string(every.size()) + " fans tie G0 to E1 and G1 to E2");
    }

    // 6. The proved s-conditions.
    {
        std::size_t good = 0;
        for (const auto* c : every) {
            const auto& s = c->report.s_table;
            const std::size_t n = c->entry.fan.n;
            bool ok = true;
            for (std::size_t p = 0; p <= n; ++p)
                ok = ok && s[p][0];
            for (std::size_t q = 0; q <= n; ++q)
                ok = ok && s[n][q];
            ok = ok && s[n - 1][1];
            good += ok;
        }
        report(6, good == every.size(),
               std::to_string(good) + "/" + std::to_string(every.size()) +
                   " fans (dims 1-5) satisfy s(p,0), s(n,q), s(n-1,1)");
    }

    // 7. All s-conditions iff degeneration.
    {
        std::size_t good = 0;
        for (const auto* c : every)
            good += all_s(c->report) == c->report.degenerate_at_one;
        report(7, good == every.size(),
               std::to_string(good) + "/" + std::to_string(every.size()) + " fans agree on s-conditions and degeneration");
    }

    // 8. Classes of subspaces meeting the kernel die under projection.
    {
        std::size_t pairs = 0, killed = 0;
        for (std::size_t m = 1; m <= 4; ++m) {
            const auto subs = all_subspaces(m);
            for (const auto& h : subs)
                for (const auto& k : subs) {
                    if (subspace_intersect(h, k).dim() == 0)
                        continue;
                    ++pairs;
                    killed += push_forward(quotient_projection(k), class_of_subspace(h)).coeffs.is_zero();
                }
        }
        report(8, pairs > 0 && killed == pairs,
               std::to_string(killed) + "/" + std::to_string(pairs) + " pairs (H, V') with m <= 4 vanish");
    }

    // 9. psi is an isomorphism on every corpus fan.
    {
        std::size_t good = 0;
        for (const auto* c : every)
            good += psi_isomorphism(c->entry.fan);
        report(9, good == every.size(),
               std::to_string(good) + "/" + std::to_string(every.size()) + " fans with psi an isomorphism");
    }

    // 10. Kernel speed.
    {
        std::mt19937_64 rng(2000);
        const auto m = random_matrix(rng, 2000, 2000);
        t0 = Clock::now();
        const auto r = rank(m);
        const double t = seconds_since(t0);
        report(10, t < 1.0 && r >= 1990, "rank " + std::to_string(r) + " of a random 2000x2000 matrix in " +
                                              std::to_string(t) + " s");
    }

    std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
    return failures == 0 ? 0 : 1;
}
