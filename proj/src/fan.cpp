#include "toric/fan.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace toric {

namespace {

bool is_subset(const std::vector<std::size_t>& small, const std::vector<std::size_t>& big)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<IntVector> generators_of(const std::vector<IntVector>& rays, const std::vector<std::size_t>& ids)
{
    std::vector<IntVector> gens;
    gens.reserve(ids.size());
    for (auto i : ids)
        gens.push_back(rays[i]);
    return gens;
}

std::vector<std::pair<std::size_t, std::size_t>> compute_covers(const std::vector<Cone>& cones)
{
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (const auto& lo : cones)
        for (const auto& hi : cones)
            if (hi.dim == lo.dim + 1 && is_subset(lo.rays, hi.rays))
                covers.emplace_back(lo.id, hi.id);
    std::sort(covers.begin(), covers.end());
    return covers;
}

// Every subset of each listed (simplicial) ray set, the empty set included.
std::vector<std::vector<std::size_t>> close_under_subsets(const std::vector<std::vector<std::size_t>>& maximal)
{
    std::set<std::vector<std::size_t>> all;
    for (const auto& m : maximal) {
        const std::size_t k = m.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
            std::vector<std::size_t> sub;
            for (std::size_t i = 0; i < k; ++i)
                if (mask >> i & 1U)
                    sub.push_back(m[i]);
            all.insert(std::move(sub));
        }
    }
    return {all.begin(), all.end()};
}

IntVector unit_vector(std::size_t n, std::size_t i, std::int64_t value = 1)
{
    IntVector v(n, 0);
    v[i] = value;
    return v;
}

} // namespace

IntVector primitive(const IntVector& v)
{
    std::int64_t g = 0;
    for (auto x : v)
        g = std::gcd(g, x);
    if (g == 0)
        throw std::invalid_argument("primitive: zero vector");
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v[i] / g;
    return out;
}

Fan Fan::assemble(std::size_t n, std::vector<IntVector> rays, std::vector<std::vector<std::size_t>> cone_rays)
{
    Fan f;
    f.n = n;
    f.rays = std::move(rays);

    for (auto& c : cone_rays)
        std::sort(c.begin(), c.end());

    std::vector<Cone> cones;
    cones.reserve(cone_rays.size());
    for (auto& ids : cone_rays) {
        Cone c;
        const auto gens = generators_of(f.rays, ids);
        c.dim = rational_rank(gens, n);
        c.mod2 = quotient_data(mod2_cone_subspace(gens, n));
        c.rays = std::move(ids);
        cones.push_back(std::move(c));
    }
    std::stable_sort(cones.begin(), cones.end(), [](const Cone& a, const Cone& b) {
        return std::tie(a.dim, a.rays) < std::tie(b.dim, b.rays);
    });
    for (std::size_t i = 0; i < cones.size(); ++i)
        cones[i].id = i;
    f.cones = std::move(cones);
    f.covers = compute_covers(f.cones);
    return f;
}

std::vector<std::size_t> Fan::cones_of_dim(std::size_t d) const
{
    std::vector<std::size_t> out;
    for (const auto& c : cones)
        if (c.dim == d)
            out.push_back(c.id);
    return out;
}

std::vector<std::size_t> Fan::cone_counts() const
{
    std::vector<std::size_t> counts(n + 1, 0);
    for (const auto& c : cones)
        if (c.dim <= n)
            ++counts[c.dim];
    return counts;
}

std::optional<std::size_t> Fan::find_cone(const std::vector<std::size_t>& sorted_rays) const
{
    for (const auto& c : cones)
        if (c.rays == sorted_rays)
            return c.id;
    return std::nullopt;
}

std::vector<std::string> validate_fan(const Fan& f)
{
    std::vector<std::string> out;
    const auto note = [&](std::string s) { out.push_back(std::move(s)); };

    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        const auto& r = f.rays[i];
        if (r.size() != f.n) {
            note("ray " + std::to_string(i) + " has length " + std::to_string(r.size()));
            continue;
        }
        std::int64_t g = 0;
        for (auto x : r)
            g = std::gcd(g, x);
        if (g != 1)
            note("ray " + std::to_string(i) + " is not primitive");
        for (std::size_t j = 0; j < i; ++j)
            if (f.rays[j] == r)
                note("ray " + std::to_string(i) + " duplicates ray " + std::to_string(j));
    }

    std::size_t zero_cones = 0;
    std::set<std::vector<std::size_t>> seen;
    bool cones_ok = true;
    for (std::size_t i = 0; i < f.cones.size(); ++i) {
        const auto& c = f.cones[i];
        const std::string name = "cone " + std::to_string(i);
        if (c.id != i)
            note(name + " has id " + std::to_string(c.id));
        if (c.rays.empty())
            ++zero_cones;
        if (!std::is_sorted(c.rays.begin(), c.rays.end()) ||
            std::adjacent_find(c.rays.begin(), c.rays.end()) != c.rays.end()) {
            note(name + " ray list is not strictly increasing");
            cones_ok = false;
            continue;
        }
        if (std::any_of(c.rays.begin(), c.rays.end(), [&](std::size_t r) { return r >= f.rays.size(); })) {
            note(name + " references a missing ray");
            cones_ok = false;
            continue;
        }
        if (!seen.insert(c.rays).second)
            note(name + " is listed twice");
        const auto gens = generators_of(f.rays, c.rays);
        const auto rank = rational_rank(gens, f.n);
        if (c.dim != rank)
            note(name + " has dim " + std::to_string(c.dim) + " but rank " + std::to_string(rank));
        if (c.mod2.sub.dim() != c.dim || !(c.mod2 == quotient_data(mod2_cone_subspace(gens, f.n))))
            note(name + " has inconsistent mod-2 data");
    }
    if (zero_cones == 0)
        note("zero cone is missing");
    else if (zero_cones > 1)
        note("zero cone is listed " + std::to_string(zero_cones) + " times");

    if (!cones_ok)
        return out;

    if (f.covers != compute_covers(f.cones))
        note("cover relation does not match ray-set inclusion");

    for (const auto& c : f.cones) {
        if (!f.is_simplicial(c) || c.rays.empty())
            continue;
        for (const auto& sub : close_under_subsets({c.rays})) {
            if (sub.empty() || sub.size() == c.rays.size())
                continue;
            if (!seen.contains(sub)) {
                std::string s = "face {";
                for (std::size_t k = 0; k < sub.size(); ++k)
                    s += (k ? "," : "") + std::to_string(sub[k]);
                note(s + "} of cone " + std::to_string(c.id) + " is not listed");
            }
        }
    }
    return out;
}

Fan projective_fan(int k)
{
    if (k < 1)
        throw std::invalid_argument("projective: k must be at least 1");
    const auto n = static_cast<std::size_t>(k);
    std::vector<IntVector> rays;
    for (std::size_t i = 0; i < n; ++i)
        rays.push_back(unit_vector(n, i));
    rays.emplace_back(n, -1);

    // Maximal cones omit one ray each.
    std::vector<std::vector<std::size_t>> maximal;
    for (std::size_t skip = 0; skip <= n; ++skip) {
        std::vector<std::size_t> c;
        for (std::size_t i = 0; i <= n; ++i)
            if (i != skip)
                c.push_back(i);
        maximal.push_back(std::move(c));
    }
    return Fan::assemble(n, std::move(rays), close_under_subsets(maximal));
}

Fan hirzebruch_fan(int a)
{
    std::vector<IntVector> rays = {{1, 0}, {0, 1}, {-1, a}, {0, -1}};
    return Fan::assemble(2, std::move(rays), close_under_subsets({{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
}

Fan weighted_p112_fan()
{
    // (1,0) + 2*(0,1) + (-1,-2) = 0; the cone on rays 0 and 2 has index 2.
    std::vector<IntVector> rays = {{1, 0}, {0, 1}, {-1, -2}};
    return Fan::assemble(2, std::move(rays), close_under_subsets({{0, 1}, {1, 2}, {0, 2}}));
}

Fan point_fan() { return Fan::assemble(0, {}, {{}}); }

Fan builtin_fan(std::string_view name, const BuiltinParams& params)
{
    if (name == "projective")
        return projective_fan(params.k);
    if (name == "hirzebruch")
        return hirzebruch_fan(params.a);
    if (name == "weighted_p112")
        return weighted_p112_fan();
    throw std::invalid_argument("unknown builtin fan: " + std::string(name));
}

Fan product_fan(const Fan& a, const Fan& b)
{
    const std::size_t n = a.n + b.n;
    std::vector<IntVector> rays;
    for (const auto& r : a.rays) {
        IntVector v(r);
        v.resize(n, 0);
        rays.push_back(std::move(v));
    }
    for (const auto& r : b.rays) {
        IntVector v(a.n, 0);
        v.insert(v.end(), r.begin(), r.end());
        rays.push_back(std::move(v));
    }
    std::vector<std::vector<std::size_t>> cones;
    for (const auto& ca : a.cones)
        for (const auto& cb : b.cones) {
            std::vector<std::size_t> c = ca.rays;
            for (auto r : cb.rays)
                c.push_back(a.rays.size() + r);
            cones.push_back(std::move(c));
        }
    return Fan::assemble(n, std::move(rays), std::move(cones));
}

Fan star_subdivision(const Fan& f, std::size_t cone_id)
{
    if (cone_id >= f.cones.size())
        throw std::invalid_argument("star_subdivision: no cone " + std::to_string(cone_id));
    const Cone& target = f.cones[cone_id];
    if (target.dim == 0)
        throw std::invalid_argument("star_subdivision: cannot subdivide the zero cone");
    if (!f.is_simplicial(target))
        throw std::invalid_argument("star_subdivision: cone " + std::to_string(cone_id) + " is not simplicial");
    if (target.dim == 1)
        return f;

    IntVector sum(f.n, 0);
    for (auto r : target.rays)
        for (std::size_t i = 0; i < f.n; ++i)
            sum[i] = checked_add(sum[i], f.rays[r][i]);
    const IntVector u = primitive(sum);
    if (std::find(f.rays.begin(), f.rays.end(), u) != f.rays.end())
        throw std::invalid_argument("star_subdivision: barycentric ray already present");
    const std::size_t u_id = f.rays.size();

    // Cones not containing the target survive; each one that shares a cone
    // with the target is also joined with the new ray.
    std::set<std::vector<std::size_t>> out;
    for (const auto& c : f.cones)
        if (!is_subset(target.rays, c.rays))
            out.insert(c.rays);
    for (const auto& star : f.cones) {
        if (!is_subset(target.rays, star.rays))
            continue;
        for (const auto& face : f.cones) {
            if (!is_subset(face.rays, star.rays) || is_subset(target.rays, face.rays))
                continue;
            auto joined = face.rays;
            joined.push_back(u_id);
            out.insert(std::move(joined));
        }
    }

    auto rays = f.rays;
    rays.push_back(u);
    return Fan::assemble(f.n, std::move(rays), {out.begin(), out.end()});
}

bool is_complete(const Fan& f)
{
    if (f.n == 0)
        return true;
    std::map<std::size_t, int> cofaces;
    for (auto id : f.cones_of_dim(f.n - 1))
        cofaces[id] = 0;
    if (cofaces.empty() || f.cones_of_dim(f.n).empty())
        return false;
    for (const auto& [lo, hi] : f.covers)
        if (f.cones[hi].dim == f.n)
            ++cofaces[lo];
    return std::all_of(cofaces.begin(), cofaces.end(), [](const auto& kv) { return kv.second == 2; });
}

} // namespace toric
