#pragma once

// End-to-end check of a fan: real Betti numbers, the exterior E2 page, the
// filtered pages of the orbit complex, and the resulting verdict.

#include "toric/exterior_complex.hpp"
#include "toric/fan.hpp"
#include "toric/spectral.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

enum class Verdict { maximal_certified, undetermined };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct FanSummary {
    std::size_t lattice_dim = 0;
    std::size_t ray_count = 0;
    std::vector<std::size_t> cone_counts; // index = cone dimension
    bool operator==(const FanSummary&) const = default;
};

struct MaximalityReport {
    FanSummary fan;
    std::vector<std::size_t> betti_real;
    std::size_t betti_real_sum = 0;
    PageTable e2;
    std::size_t e2_sum = 0;
    std::vector<Page> pages;
    bool degenerate_at_one = false;
    std::vector<std::vector<bool>> s_table; // [p][q]
    Verdict verdict = Verdict::undetermined;

    bool operator==(const MaximalityReport&) const = default;
};

/// One of the internal consistency checks failed; indicates a bug, not bad input.
class PipelineError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Runs every stage on a fan that passed validate_fan. r_max defaults to n + 2.
MaximalityReport run_check(const Fan& f, std::optional<std::size_t> r_max = std::nullopt);

/// Canonical JSON, sorted keys, trailing newline.
std::string report_to_json(const MaximalityReport& r);
MaximalityReport report_from_json(const std::string& text);
void emit_report(const MaximalityReport& r, const std::string& path);

struct CorpusEntry {
    std::string name;
    Fan fan;
};

/// Builtins of dimension dim, then products of lower-dimensional builtins,
/// then random star-subdivision chains; chain i draws from mt19937_64(seed + i).
/// Distinct fans only, truncated to count.
std::vector<CorpusEntry> generate_corpus(std::uint64_t seed, std::size_t count, std::size_t dim);

/// Builtin and product fans of dimension dim, in corpus order.
std::vector<CorpusEntry> base_fans(std::size_t dim);

} // namespace toric
