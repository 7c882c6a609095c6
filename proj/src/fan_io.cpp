#include "toric/fan.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace toric {

namespace {

using nlohmann::json;

// A_n has 2^n basis vectors and quotient elements are indexed by 32-bit masks.
constexpr std::int64_t kMaxLatticeDim = 12;

std::int64_t as_int(const json& j, const std::string& where)
{
    if (!j.is_number_integer())
        throw FanError(where, "expected an integer");
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
        throw FanError(where, "integer out of range");
    return j.get<std::int64_t>();
}

const json& require_array(const json& j, const std::string& where)
{
    if (!j.is_array())
        throw FanError(where, "expected an array");
    return j;
}

std::string join_rays(const std::vector<std::size_t>& c)
{
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i)
        s += (i ? ", " : "") + std::to_string(c[i]);
    return s + "]";
}

} // namespace

Fan parse_fan(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw FanError("byte " + std::to_string(e.byte), std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw FanError("$", "expected a JSON object");
    for (const auto* key : {"lattice_dim", "rays", "cones"})
        if (!doc.contains(key))
            throw FanError("$", std::string("missing key \"") + key + "\"");

    const auto n_raw = as_int(doc["lattice_dim"], "lattice_dim");
    if (n_raw < 0 || n_raw > kMaxLatticeDim)
        throw FanError("lattice_dim", "must lie in [0, " + std::to_string(kMaxLatticeDim) + "]");
    const auto n = static_cast<std::size_t>(n_raw);

    bool maximal_only = false;
    if (doc.contains("maximal_only")) {
        if (!doc["maximal_only"].is_boolean())
            throw FanError("maximal_only", "expected a boolean");
        maximal_only = doc["maximal_only"].get<bool>();
    }

    std::vector<IntVector> rays;
    const auto& jrays = require_array(doc["rays"], "rays");
    for (std::size_t i = 0; i < jrays.size(); ++i) {
        const std::string where = "rays[" + std::to_string(i) + "]";
        const auto& jr = require_array(jrays[i], where);
        if (jr.size() != n)
            throw FanError(where, "expected " + std::to_string(n) + " coordinates");
        IntVector r;
        std::int64_t g = 0;
        for (std::size_t k = 0; k < n; ++k) {
            r.push_back(as_int(jr[k], where + "[" + std::to_string(k) + "]"));
            g = std::gcd(g, r.back());
        }
        if (g != 1)
            throw FanError(where, "ray is not primitive");
        for (std::size_t j = 0; j < rays.size(); ++j)
            if (rays[j] == r)
                throw FanError(where, "duplicates rays[" + std::to_string(j) + "]");
        rays.push_back(std::move(r));
    }

    std::vector<std::vector<std::size_t>> cones;
    std::set<std::vector<std::size_t>> seen;
    const auto& jcones = require_array(doc["cones"], "cones");
    for (std::size_t i = 0; i < jcones.size(); ++i) {
        const std::string where = "cones[" + std::to_string(i) + "]";
        const auto& jc = require_array(jcones[i], where);
        std::vector<std::size_t> c;
        for (std::size_t k = 0; k < jc.size(); ++k) {
            const auto idx = as_int(jc[k], where + "[" + std::to_string(k) + "]");
            if (idx < 0 || static_cast<std::size_t>(idx) >= rays.size())
                throw FanError(where, "ray index " + std::to_string(idx) + " out of range");
            c.push_back(static_cast<std::size_t>(idx));
        }
        std::sort(c.begin(), c.end());
        if (std::adjacent_find(c.begin(), c.end()) != c.end())
            throw FanError(where, "repeated ray index");
        if (!seen.insert(c).second)
            throw FanError(where, "duplicate cone " + join_rays(c));
        if (maximal_only) {
            std::vector<IntVector> gens;
            for (auto r : c)
                gens.push_back(rays[r]);
            if (rational_rank(gens, n) != c.size())
                throw FanError(where, "maximal_only requires simplicial cones");
        }
        cones.push_back(std::move(c));
    }

    if (maximal_only) {
        std::set<std::vector<std::size_t>> all;
        for (const auto& c : cones)
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c.size()); ++mask) {
                std::vector<std::size_t> sub;
                for (std::size_t k = 0; k < c.size(); ++k)
                    if (mask >> k & 1U)
                        sub.push_back(c[k]);
                all.insert(std::move(sub));
            }
        cones.assign(all.begin(), all.end());
    }
    if (std::none_of(cones.begin(), cones.end(), [](const auto& c) { return c.empty(); }))
        cones.emplace_back();

    return Fan::assemble(n, std::move(rays), std::move(cones));
}

Fan load_fan(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FanError(path, "cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_fan(buf.str());
    } catch (const FanError& e) {
        throw FanError(path + ": " + e.where(), e.message());
    }
}

std::string fan_to_json(const Fan& f)
{
    std::ostringstream out;
    out << "{\n  \"cones\": [";
    for (std::size_t i = 0; i < f.cones.size(); ++i)
        out << (i ? ", " : "") << join_rays(f.cones[i].rays);
    out << "],\n  \"lattice_dim\": " << f.n << ",\n  \"maximal_only\": false,\n  \"rays\": [";
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        out << (i ? ", " : "") << "[";
        for (std::size_t k = 0; k < f.rays[i].size(); ++k)
            out << (k ? ", " : "") << f.rays[i][k];
        out << "]";
    }
    out << "]\n}\n";
    return out.str();
}

void save_fan(const Fan& f, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << fan_to_json(f);
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

} // namespace toric
