// toric-max: maximality checks for real toric varieties given by fans.
//
// Exit status: 0 maximal_certified, 2 undetermined, 1 on any error.

#include "toric/maximality.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

constexpr int kCertified = 0;
constexpr int kError = 1;
constexpr int kUndetermined = 2;

toric::Fan load_valid(const std::string& path)
{
    auto f = toric::load_fan(path);
    const auto problems = toric::validate_fan(f);
    if (!problems.empty()) {
        std::string msg = path + ": invalid fan";
        for (const auto& p : problems)
            msg += "\n  " + p;
        throw std::runtime_error(msg);
    }
    return f;
}

void write_fan(const toric::Fan& f, const std::string& out)
{
    if (out.empty())
        std::cout << toric::fan_to_json(f);
    else
        toric::save_fan(f, out);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Mod-2 maximality checks for real toric varieties"};
    app.require_subcommand(1);

    std::string fan_path, report_path, out_path, name = "projective", other_path, out_dir;
    std::size_t max_r = 0, cone = 0, count = 1, dim = 1;
    std::uint64_t seed = 1;
    int k = 1, a = 0;

    auto* check = app.add_subcommand("check", "Run the full pipeline and print or write the report");
    check->add_option("fan", fan_path, "Fan JSON file")->required();
    check->add_option("--report", report_path, "Write the report here instead of stdout");
    check->add_option("--max-r", max_r, "Last page to include in the report (default n + 2)");

    auto* builtin = app.add_subcommand("builtin", "Emit a builtin fan");
    builtin->add_option("--name", name, "projective, hirzebruch or weighted_p112")
        ->check(CLI::IsMember({"projective", "hirzebruch", "weighted_p112"}));
    builtin->add_option("--k", k, "Dimension of projective space")->check(CLI::Range(0, 12));
    builtin->add_option("--a", a, "Hirzebruch twist");
    builtin->add_option("--out", out_path, "Output file (stdout if omitted)");

    auto* product = app.add_subcommand("product", "Product of two fans");
    product->add_option("a", fan_path, "First fan")->required();
    product->add_option("b", other_path, "Second fan")->required();
    product->add_option("--out", out_path, "Output file (stdout if omitted)");

    auto* subdivide = app.add_subcommand("subdivide", "Star subdivision at a simplicial cone");
    subdivide->add_option("fan", fan_path, "Fan JSON file")->required();
    subdivide->add_option("--cone", cone, "Cone id")->required();
    subdivide->add_option("--out", out_path, "Output file (stdout if omitted)");

    auto* corpus = app.add_subcommand("corpus", "Write a reproducible corpus of fans");
    corpus->add_option("--seed", seed, "Base seed");
    corpus->add_option("--count", count, "Number of fans")->check(CLI::PositiveNumber);
    corpus->add_option("--dim", dim, "Lattice dimension")->check(CLI::Range(1, 6));
    corpus->add_option("--out-dir", out_dir, "Directory for the fan files")->required();

    auto* sconds = app.add_subcommand("s-conditions", "Print the s-condition table");
    sconds->add_option("fan", fan_path, "Fan JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) {
            const auto fan = load_valid(fan_path);
            std::optional<std::size_t> r;
            if (check->count("--max-r"))
                r = max_r;
            const auto rep = toric::run_check(fan, r);
            if (report_path.empty())
                std::cout << toric::report_to_json(rep);
            else
                toric::emit_report(rep, report_path);
            std::cerr << "verdict: " << toric::to_string(rep.verdict) << " (betti_real_sum " << rep.betti_real_sum
                      << ", e2_sum " << rep.e2_sum << ")\n";
            return rep.verdict == toric::Verdict::maximal_certified ? kCertified : kUndetermined;
        }
        if (*builtin) {
            write_fan(toric::builtin_fan(name, {k, a}), out_path);
        } else if (*product) {
            write_fan(toric::product_fan(load_valid(fan_path), load_valid(other_path)), out_path);
        } else if (*subdivide) {
            write_fan(toric::star_subdivision(load_valid(fan_path), cone), out_path);
        } else if (*corpus) {
            std::filesystem::create_directories(out_dir);
            const auto entries = toric::generate_corpus(seed, count, dim);
            for (std::size_t i = 0; i < entries.size(); ++i) {
                char prefix[16];
                std::snprintf(prefix, sizeof prefix, "%03zu_", i);
                const auto path = std::filesystem::path(out_dir) / (prefix + entries[i].name + ".json");
                toric::save_fan(entries[i].fan, path.string());
                std::cout << path.string() << "\n";
            }
            if (entries.size() < count)
                std::cerr << "only " << entries.size() << " distinct fans available\n";
        } else if (*sconds) {
            const auto fan = load_valid(fan_path);
            const auto table = toric::s_table(toric::build_orbit_complex(fan).filtered());
            bool all = true;
            for (std::size_t p = 0; p < table.size(); ++p)
                for (std::size_t q = 0; q < table[p].size(); ++q) {
                    std::cout << "s(" << p << "," << q << ") " << (table[p][q] ? "holds" : "fails") << "\n";
                    all = all && table[p][q];
                }
            return all ? kCertified : kUndetermined;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kCertified;
}
