#pragma once

// Rational fans: cones given by sets of primitive rays, with the face
// relation taken to be ray-set inclusion among listed cones.

#include "toric/lattice.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace toric {

/// Rejected fan input. `where` is a byte offset ("byte 17") for syntax errors
/// or a JSON path ("rays[2]") for semantic ones.
class FanError : public std::runtime_error {
public:
    FanError(std::string where, std::string message)
        : std::runtime_error(where.empty() ? message : where + ": " + message), where_(std::move(where)),
          message_(std::move(message))
    {
    }
    const std::string& where() const { return where_; }
    const std::string& message() const { return message_; }

private:
    std::string where_;
    std::string message_;
};

struct Cone {
    std::size_t id = 0;
    std::vector<std::size_t> rays; // sorted indices into Fan::rays
    std::size_t dim = 0;
    QuotientData mod2;             // saturated cone lattice mod 2, and projection onto the quotient
};

/// Cones are kept in canonical order (dimension, then ray indices), so a cone's
/// id is its position. The zero cone, when present, is id 0.
struct Fan {
    std::size_t n = 0;
    std::vector<IntVector> rays;
    std::vector<Cone> cones;
    std::vector<std::pair<std::size_t, std::size_t>> covers; // (face, coface), dims differ by one

    /// Builds cones from ray sets: sorts them canonically and computes
    /// dimensions, mod-2 data and covers. Nothing is added or checked; see
    /// validate_fan.
    static Fan assemble(std::size_t n, std::vector<IntVector> rays, std::vector<std::vector<std::size_t>> cone_rays);

    std::vector<std::size_t> cones_of_dim(std::size_t d) const;
    std::vector<std::size_t> cone_counts() const; // index = dimension
    std::optional<std::size_t> find_cone(const std::vector<std::size_t>& sorted_rays) const;
    bool is_simplicial(const Cone& c) const { return c.rays.size() == c.dim; }
};

Fan parse_fan(std::string_view text);
Fan load_fan(const std::string& path);

/// Canonical JSON: every cone listed (zero cone included) in id order,
/// "maximal_only": false. Byte-stable for a given fan.
std::string fan_to_json(const Fan& f);
void save_fan(const Fan& f, const std::string& path);

std::vector<std::string> validate_fan(const Fan& f);

struct BuiltinParams {
    int k = 1; // projective dimension
    int a = 0; // Hirzebruch twist
};

/// name: "projective" (uses k), "hirzebruch" (uses a) or "weighted_p112".
Fan builtin_fan(std::string_view name, const BuiltinParams& params = {});
Fan projective_fan(int k);
Fan hirzebruch_fan(int a);
Fan weighted_p112_fan();
/// Lattice dimension 0, zero cone only.
Fan point_fan();

Fan product_fan(const Fan& a, const Fan& b);

/// Star subdivision at a simplicial cone of dimension >= 1. Throws
/// std::invalid_argument for a non-simplicial or zero target.
Fan star_subdivision(const Fan& f, std::size_t cone_id);

/// Combinatorial completeness: every (n-1)-cone lies in exactly two n-cones.
bool is_complete(const Fan& f);

IntVector primitive(const IntVector& v);

} // namespace toric
