#include "fdel/family.hpp"

#include <algorithm>
#include <sstream>

#include "fdel/minor.hpp"

namespace fdel {

int MinorFamily::max_member_order() const {
    int m = 0;
    for (const Graph& g : members) m = std::max(m, g.vertex_count());
    return m;
}

MinorFamily validate_family(std::vector<Graph> members, std::optional<int> eta,
                            const Limits& limits) {
    if (members.empty())
        throw Error(ErrorCode::EmptyFamily, "family must contain at least one graph");

    for (size_t i = 0; i < members.size(); ++i) {
        if (members[i].vertex_count() == 0)
            throw Error(ErrorCode::InvalidArgument,
                        "family member " + std::to_string(i + 1) + " is empty");
        if (!is_connected(members[i]))
            throw Error(ErrorCode::DisconnectedMember,
                        "family member " + std::to_string(i + 1) +
                            " is disconnected; only connected forbidden minors are supported");
    }

    bool any_planar = false;
    for (const Graph& g : members)
        if (is_planar(g, limits)) {
            any_planar = true;
            break;
        }
    if (!any_planar)
        throw Error(ErrorCode::NoPlanarMember,
                    "no planar member: deletion to such families (e.g. {K5, K3,3}, vertex "
                    "planarization) is outside this solver's supported regime");

    // Collapse isomorphic duplicates, keeping first occurrences.
    std::vector<Graph> unique_members;
    std::vector<std::string> keys;
    for (Graph& g : members) {
        std::string key = canonical_key(g, limits);
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            keys.push_back(std::move(key));
            unique_members.push_back(std::move(g));
        }
    }

    MinorFamily f;
    f.members = std::move(unique_members);
    if (eta) {
        if (*eta < 0)
            throw Error(ErrorCode::InvalidArgument, "eta must be nonnegative");
        f.eta = *eta;
    } else {
        int e = 0;
        for (const Graph& g : f.members) e = std::max(e, g.vertex_count() - 2);
        f.eta = e;
    }
    f.name = "custom";
    return f;
}

bool is_preset_tag(const std::string& tag) {
    return tag == "vc" || tag == "fvs" || tag == "tw2";
}

MinorFamily preset_family(const std::string& tag) {
    MinorFamily f;
    if (tag == "vc") {
        f = validate_family({complete_graph(2)}, 0);
    } else if (tag == "fvs") {
        f = validate_family({complete_graph(3)}, 1);
    } else if (tag == "tw2") {
        f = validate_family({complete_graph(4)}, 2);
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown family preset: " + tag);
    }
    f.name = tag;
    return f;
}

MinorFamily parse_family_file(const std::string& text, std::optional<int> eta,
                              const Limits& limits) {
    std::vector<std::string> blocks;
    std::istringstream in(text);
    std::string line, block;
    auto flush = [&]() {
        if (block.find_first_not_of(" \t\r\n") != std::string::npos) blocks.push_back(block);
        block.clear();
    };
    while (std::getline(in, line)) {
        bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
        if (blank)
            flush();
        else
            block += line + "\n";
    }
    flush();

    std::vector<Graph> members;
    for (const std::string& b : blocks) members.push_back(parse_graph(b));
    return validate_family(std::move(members), eta, limits);
}

std::string format_family_file(const MinorFamily& f) {
    std::string out;
    for (size_t i = 0; i < f.members.size(); ++i) {
        if (i) out += "\n";
        out += format_graph(f.members[i]);
    }
    return out;
}

bool is_f_minor_free(const Graph& g, const MinorFamily& f, const Limits& limits) {
    for (const Graph& h : f.members)
        if (contains_minor(g, h, limits)) return false;
    return true;
}

}  // namespace fdel
