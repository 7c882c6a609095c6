#include "toric/maximality.hpp"

#include "toric/orbit_complex.hpp"

#include <json.hpp>

#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <set>

namespace toric {

using nlohmann::json;

std::string to_string(Verdict v)
{
    return v == Verdict::maximal_certified ? "maximal_certified" : "undetermined";
}

Verdict verdict_from_string(const std::string& s)
{
    if (s == "maximal_certified")
        return Verdict::maximal_certified;
    if (s == "undetermined")
        return Verdict::undetermined;
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

MaximalityReport run_check(const Fan& f, std::optional<std::size_t> r_max)
{
    const auto orbit = build_orbit_complex(f);
    const auto ext = build_exterior_complex(f);

    MaximalityReport rep;
    rep.fan.lattice_dim = f.n;
    rep.fan.ray_count = f.rays.size();
    rep.fan.cone_counts = f.cone_counts();

    rep.betti_real = betti_real(orbit);
    rep.betti_real_sum = std::accumulate(rep.betti_real.begin(), rep.betti_real.end(), std::size_t{0});

    const auto e1 = e1_dims(ext);
    for (std::size_t p = 0; p <= f.n; ++p) {
        const auto& row = e1.dims[p];
        if (std::accumulate(row.begin(), row.end(), std::size_t{0}) != orbit.dim(p))
            throw PipelineError("E1 dimensions do not add up to the chain group in degree " + std::to_string(p));
    }
    rep.e2 = e2_dims(ext);
    rep.e2_sum = rep.e2.total();

    // Pages past the requested bound are still needed for the verdict.
    const auto& filtered = orbit.filtered();
    const std::size_t shown = r_max.value_or(default_r_max(filtered));
    auto pr = compute_pages(filtered, std::max(shown, default_r_max(filtered)));

    if (!verify_g0_matches_e1(orbit, ext))
        throw PipelineError("graded differential does not match d1");
    if (!verify_g1_equals_e2(pr, rep.e2))
        throw PipelineError("G1 and E2 dimensions differ");
    if (!verify_convergence(pr, rep.betti_real))
        throw PipelineError("limit page does not match the Betti numbers");

    rep.degenerate_at_one = pr.degenerate_at_one;
    rep.s_table = std::move(pr.s_table);
    pr.pages.resize(std::max<std::size_t>(shown, 1) + 1);
    rep.pages = std::move(pr.pages);
    rep.verdict = rep.degenerate_at_one ? Verdict::maximal_certified : Verdict::undetermined;
    if (rep.betti_real_sum > rep.e2_sum)
        throw PipelineError("Betti sum exceeds the E2 total");
    return rep;
}

// ------------------------------------------------------------------- JSON

namespace {

template <typename T>
json triples(const std::vector<std::vector<T>>& grid)
{
    json out = json::array();
    for (std::size_t p = 0; p < grid.size(); ++p)
        for (std::size_t q = 0; q < grid[p].size(); ++q)
            out.push_back(json::array({p, q, static_cast<T>(grid[p][q])}));
    return out;
}

template <typename T>
std::vector<std::vector<T>> from_triples(const json& arr)
{
    std::size_t rows = 0, cols = 0;
    for (const auto& t : arr) {
        rows = std::max(rows, t.at(0).get<std::size_t>() + 1);
        cols = std::max(cols, t.at(1).get<std::size_t>() + 1);
    }
    std::vector<std::vector<T>> grid(rows, std::vector<T>(cols, T{}));
    for (const auto& t : arr)
        grid[t.at(0).get<std::size_t>()][t.at(1).get<std::size_t>()] = t.at(2).get<T>();
    return grid;
}

} // namespace

std::string report_to_json(const MaximalityReport& r)
{
    json j;
    j["fan"] = {{"lattice_dim", r.fan.lattice_dim}, {"ray_count", r.fan.ray_count}, {"cone_counts", r.fan.cone_counts}};
    j["betti_real"] = r.betti_real;
    j["betti_real_sum"] = r.betti_real_sum;
    j["e2"] = {{"dims", triples(r.e2.dims)}, {"sum", r.e2_sum}};
    json pages = json::array();
    for (const auto& pg : r.pages)
        pages.push_back({{"r", pg.r}, {"dims", triples(pg.dims)}, {"diff_ranks", triples(pg.diff_ranks)}});
    j["pages"] = std::move(pages);
    j["degenerate_at_one"] = r.degenerate_at_one;
    json s = json::array();
    for (std::size_t p = 0; p < r.s_table.size(); ++p)
        for (std::size_t q = 0; q < r.s_table[p].size(); ++q)
            s.push_back(json::array({json(p), json(q), json(static_cast<bool>(r.s_table[p][q]))}));
    j["s_conditions"] = std::move(s);
    j["verdict"] = to_string(r.verdict);
    return j.dump(2) + "\n";
}

MaximalityReport report_from_json(const std::string& text)
{
    const json j = json::parse(text);
    MaximalityReport r;
    const auto& fan = j.at("fan");
    r.fan.lattice_dim = fan.at("lattice_dim").get<std::size_t>();
    r.fan.ray_count = fan.at("ray_count").get<std::size_t>();
    r.fan.cone_counts = fan.at("cone_counts").get<std::vector<std::size_t>>();
    r.betti_real = j.at("betti_real").get<std::vector<std::size_t>>();
    r.betti_real_sum = j.at("betti_real_sum").get<std::size_t>();
    r.e2.n = r.fan.lattice_dim;
    r.e2.dims = from_triples<std::size_t>(j.at("e2").at("dims"));
    r.e2_sum = j.at("e2").at("sum").get<std::size_t>();
    for (const auto& pg : j.at("pages")) {
        Page page;
        page.r = pg.at("r").get<std::size_t>();
        page.dims = from_triples<std::size_t>(pg.at("dims"));
        page.diff_ranks = from_triples<std::size_t>(pg.at("diff_ranks"));
        r.pages.push_back(std::move(page));
    }
    r.degenerate_at_one = j.at("degenerate_at_one").get<bool>();
    r.s_table = from_triples<bool>(j.at("s_conditions"));
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    return r;
}

void emit_report(const MaximalityReport& r, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path + " for writing");
    out << report_to_json(r);
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

// ----------------------------------------------------------------- corpus

namespace {

std::vector<CorpusEntry> builtins_of_dim(std::size_t d)
{
    std::vector<CorpusEntry> out;
    out.push_back({"projective" + std::to_string(d), projective_fan(static_cast<int>(d))});
    if (d == 2) {
        for (int a = 0; a <= 3; ++a)
            out.push_back({"hirzebruch" + std::to_string(a), hirzebruch_fan(a)});
        out.push_back({"weighted_p112", weighted_p112_fan()});
    }
    return out;
}

// Non-increasing partitions of d into at least two parts.
void partitions(std::size_t left, std::size_t largest, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out)
{
    if (left == 0) {
        if (cur.size() >= 2)
            out.push_back(cur);
        return;
    }
    for (std::size_t part = std::min(left, largest); part >= 1; --part) {
        cur.push_back(part);
        partitions(left - part, part, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<CorpusEntry> base_fans(std::size_t dim)
{
    auto out = builtins_of_dim(dim);
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> cur;
    partitions(dim, dim - 1, cur, parts);

    for (const auto& part : parts) {
        // Within a run of equal part sizes, builtin indices are non-decreasing.
        std::vector<std::size_t> pick;
        std::function<void(std::size_t)> go = [&](std::size_t i) {
            if (i == part.size()) {
                CorpusEntry e = builtins_of_dim(part[0])[pick[0]];
                for (std::size_t k = 1; k < part.size(); ++k) {
                    const auto b = builtins_of_dim(part[k])[pick[k]];
                    e.name += "x" + b.name;
                    e.fan = product_fan(e.fan, b.fan);
                }
                out.push_back(std::move(e));
                return;
            }
            const std::size_t lo = (i > 0 && part[i] == part[i - 1]) ? pick[i - 1] : 0;
            const std::size_t choices = builtins_of_dim(part[i]).size();
            for (std::size_t c = lo; c < choices; ++c) {
                pick.push_back(c);
                go(i + 1);
                pick.pop_back();
            }
        };
        go(0);
    }
    return out;
}

std::vector<CorpusEntry> generate_corpus(std::uint64_t seed, std::size_t count, std::size_t dim)
{
    if (dim < 1 || dim > 6)
        throw std::invalid_argument("generate_corpus: dim must be in [1, 6]");
    if (count < 1)
        throw std::invalid_argument("generate_corpus: count must be at least 1");

    const auto base = base_fans(dim);
    std::vector<CorpusEntry> out;
    std::set<std::string> seen;
    auto add = [&](CorpusEntry e) {
        if (out.size() < count && seen.insert(fan_to_json(e.fan)).second)
            out.push_back(std::move(e));
    };
    for (const auto& e : base)
        add(e);

    constexpr std::size_t kMaxSteps = 10;
    const std::size_t attempts = 64 * count;
    for (std::size_t i = 0; out.size() < count && i < attempts; ++i) {
        std::mt19937_64 rng(seed + i);
        const auto& start = base[rng() % base.size()];
        const std::size_t steps = 1 + rng() % kMaxSteps;
        Fan f = start.fan;
        std::size_t done = 0;
        for (; done < steps; ++done) {
            std::vector<std::size_t> targets;
            for (const auto& c : f.cones)
                if (c.dim >= 2 && f.is_simplicial(c))
                    targets.push_back(c.id);
            if (targets.empty())
                break;
            f = star_subdivision(f, targets[rng() % targets.size()]);
        }
        if (done == 0)
            continue;
        add({start.name + "-s" + std::to_string(seed + i) + "-n" + std::to_string(done), std::move(f)});
    }
    return out;
}

} // namespace toric
