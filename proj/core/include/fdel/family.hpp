#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fdel/graph.hpp"

namespace fdel {

/// Validated forbidden-minor family: every member connected, at least one
/// planar, members pairwise non-isomorphic. `eta` is the working treewidth
/// bound associated with F-minor-free graphs; it parameterizes protrusion
/// search and nothing else.
struct MinorFamily {
    std::vector<Graph> members;
    int eta = 0;
    std::string name;  // preset tag, or "custom"

    int max_member_order() const;
};

/// Validate members and resolve eta. Throws Error with code
/// EmptyFamily, DisconnectedMember or NoPlanarMember. Duplicate members
/// (up to isomorphism) are collapsed, keeping the first occurrence.
/// When eta is not given it resolves to max(|V(H)| - 2) over members,
/// clamped to >= 0; explicit values must be >= 0.
MinorFamily validate_family(std::vector<Graph> members, std::optional<int> eta = std::nullopt,
                            const Limits& limits = default_limits());

/// Preset families: "vc" = {K2}, "fvs" = {K3}, "tw2" = {K4}.
MinorFamily preset_family(const std::string& tag);
bool is_preset_tag(const std::string& tag);

/// Family file: one edge-list block per member, blocks separated by one
/// or more blank lines. Comment lines ("c ...") are allowed inside blocks.
MinorFamily parse_family_file(const std::string& text, std::optional<int> eta = std::nullopt,
                              const Limits& limits = default_limits());
std::string format_family_file(const MinorFamily& f);

/// True iff no member of `f` is a minor of `g`.
bool is_f_minor_free(const Graph& g, const MinorFamily& f,
                     const Limits& limits = default_limits());

}  // namespace fdel
