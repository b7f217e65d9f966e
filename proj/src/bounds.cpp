#include "skeinkit/bounds.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace skeinkit {

namespace {

using Kind = DegreeBound::Kind;
using Role = SkeinEdge::Role;

// Picks max(a_value, b_value) with the equality-on-strict-inequality rule:
// the result is Exact only when one candidate strictly beats the other and
// the winner's input is Exact.
DegreeBound pick_larger(const DegreeBound& a, int a_value, const DegreeBound& b, int b_value) {
    if (a_value == b_value) return DegreeBound::upper(a_value);
    const DegreeBound& winner = a_value > b_value ? a : b;
    int value = std::max(a_value, b_value);
    return {winner.kind, value};
}

}  // namespace

bool refines(const DegreeBound& a, const DegreeBound& b) {
    if (b.kind == Kind::UpperBound) return a.value <= b.value;
    return a.kind == Kind::Exact && a.value == b.value;
}

std::string to_text(const DegreeBound& b) {
    return (b.kind == Kind::Exact ? "Exact(" : "UpperBound(") + std::to_string(b.value) + ")";
}

DegreeBound combine(int parent_sign, const DegreeBound& switched, const DegreeBound& smoothed) {
    if (parent_sign != 1 && parent_sign != -1)
        throw std::invalid_argument("combine: parent sign must be +1 or -1");
    return pick_larger(switched, switched.value, smoothed, smoothed.value + 1);
}

DegreeBound combine_smoothed(const DegreeBound& plus, const DegreeBound& minus) {
    DegreeBound r = pick_larger(plus, plus.value, minus, minus.value);
    r.value -= 1;
    return r;
}

namespace {

struct NodeChildren {
    int switched = -1;  // index into tree.edges
    int smoothed = -1;
};

// Shared structural pass behind require_valid and propagate: resolves each
// internal node's child edges and checks the leaf/bound bookkeeping.
std::unordered_map<std::string, NodeChildren> index_children(const SkeinTree& t) {
    std::unordered_map<std::string, int> known;
    for (const auto& n : t.nodes) {
        if (!known.emplace(n, 1).second)
            throw std::invalid_argument("skein tree: duplicate node " + n);
    }
    std::unordered_map<std::string, NodeChildren> children;
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
        const SkeinEdge& e = t.edges[i];
        if (!known.count(e.parent) || !known.count(e.child))
            throw std::invalid_argument("skein tree: edge names unknown node " + e.parent +
                                        " -> " + e.child);
        if (e.parent_sign != 1 && e.parent_sign != -1)
            throw std::invalid_argument("skein tree: edge sign must be +1 or -1");
        int NodeChildren::*slot =
            e.role == Role::Switched ? &NodeChildren::switched : &NodeChildren::smoothed;
        NodeChildren& c = children[e.parent];
        if (c.*slot != -1)
            throw std::invalid_argument("skein tree: node " + e.parent +
                                        " has two children in one role");
        c.*slot = static_cast<int>(i);
    }
    for (const auto& [node, c] : children) {
        if (c.switched == -1 || c.smoothed == -1)
            throw std::invalid_argument("skein tree: node " + node +
                                        " is missing a switched or smoothed child");
        if (t.leaf_bounds.count(node))
            throw std::invalid_argument("skein tree: internal node " + node + " carries a bound");
    }
    for (const auto& n : t.nodes) {
        if (!children.count(n) && !t.leaf_bounds.count(n))
            throw std::invalid_argument("skein tree: leaf " + n + " has no bound");
    }
    for (const auto& [node, bound] : t.leaf_bounds) {
        (void)bound;
        if (!known.count(node))
            throw std::invalid_argument("skein tree: bound on unknown node " + node);
    }
    return children;
}

}  // namespace

void require_valid(const SkeinTree& t) {
    propagate(t);  // runs the structural pass and the cycle check
}

std::map<std::string, DegreeBound> propagate(const SkeinTree& t) {
    auto children = index_children(t);
    std::map<std::string, DegreeBound> bounds(t.leaf_bounds.begin(), t.leaf_bounds.end());

    // Kahn pass over the dependency graph: a parent is ready once both its
    // children are bound.
    std::unordered_map<std::string, std::vector<std::string>> dependents;
    std::unordered_map<std::string, int> missing;
    for (const auto& [node, c] : children) {
        missing[node] = 2;
        dependents[t.edges[c.switched].child].push_back(node);
        dependents[t.edges[c.smoothed].child].push_back(node);
    }
    std::deque<std::string> ready;
    for (const auto& [node, bound] : t.leaf_bounds) {
        (void)bound;
        ready.push_back(node);
    }
    while (!ready.empty()) {
        std::string node = std::move(ready.front());
        ready.pop_front();
        auto dep = dependents.find(node);
        if (dep == dependents.end()) continue;
        for (const std::string& parent : dep->second) {
            if (--missing[parent] > 0) continue;
            const NodeChildren& c = children[parent];
            bounds[parent] = combine(t.edges[c.switched].parent_sign,
                                     bounds.at(t.edges[c.switched].child),
                                     bounds.at(t.edges[c.smoothed].child));
            ready.push_back(parent);
        }
    }
    if (bounds.size() != t.nodes.size())
        throw std::invalid_argument("skein tree: cycle or unreachable node");
    return bounds;
}

SkeinTree skein_tree_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("skein tree json: ") + e.what());
    }
    try {
        SkeinTree t;
        for (const auto& n : j.at("nodes")) t.nodes.push_back(n.get<std::string>());
        for (const auto& e : j.at("edges")) {
            SkeinEdge edge;
            edge.parent = e.at("parent").get<std::string>();
            edge.child = e.at("child").get<std::string>();
            std::string role = e.at("role").get<std::string>();
            if (role == "switched") {
                edge.role = Role::Switched;
            } else if (role == "smoothed") {
                edge.role = Role::Smoothed;
            } else {
                throw std::invalid_argument("skein tree json: bad role " + role);
            }
            std::string sign = e.at("sign").get<std::string>();
            if (sign == "+") {
                edge.parent_sign = 1;
            } else if (sign == "-") {
                edge.parent_sign = -1;
            } else {
                throw std::invalid_argument("skein tree json: bad sign " + sign);
            }
            t.edges.push_back(std::move(edge));
        }
        for (const auto& [node, b] : j.at("leaf_bounds").items()) {
            std::string kind = b.at("kind").get<std::string>();
            if (kind != "Exact" && kind != "UpperBound")
                throw std::invalid_argument("skein tree json: bad bound kind " + kind);
            t.leaf_bounds[node] = {kind == "Exact" ? Kind::Exact : Kind::UpperBound,
                                   b.at("value").get<int>()};
        }
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("skein tree json: ") + e.what());
    }
}

std::string skein_tree_to_json(const SkeinTree& t) {
    nlohmann::json j;
    j["nodes"] = t.nodes;
    j["edges"] = nlohmann::json::array();
    for (const auto& e : t.edges) {
        j["edges"].push_back({{"parent", e.parent},
                              {"child", e.child},
                              {"role", e.role == Role::Switched ? "switched" : "smoothed"},
                              {"sign", e.parent_sign > 0 ? "+" : "-"}});
    }
    j["leaf_bounds"] = nlohmann::json::object();
    for (const auto& [node, b] : t.leaf_bounds) {
        j["leaf_bounds"][node] = {{"kind", b.kind == Kind::Exact ? "Exact" : "UpperBound"},
                                  {"value", b.value}};
    }
    return j.dump(2);
}

std::string to_dot(const SkeinTree& t, const std::map<std::string, DegreeBound>& bounds) {
    std::ostringstream out;
    out << "digraph skein_tree {\n  rankdir=BT;\n  node [shape=box];\n";
    for (const auto& n : t.nodes) {
        out << "  \"" << n << "\" [label=\"" << n;
        auto it = bounds.find(n);
        if (it != bounds.end()) out << "\\n" << to_text(it->second);
        out << "\"];\n";
    }
    for (const auto& e : t.edges) {
        out << "  \"" << e.child << "\" -> \"" << e.parent << "\" [label=\""
            << (e.role == Role::Switched ? "switched" : "smoothed")
            << (e.parent_sign > 0 ? " +" : " -") << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

SkeinTree ladder_fixture(int c, bool degraded) {
    if (c < 3) throw std::invalid_argument("ladder_fixture: crossing count must be at least 3");
    SkeinTree t;
    t.nodes = {"root", "K_a", "K_b", "K_c", "K_d", "K_e", "K_f", "K_g", "K_h", "K_1",
               "K_2",  "K_3", "K_4", "K_5", "K_6", "K_7", "K_8", "A",   "B"};
    auto resolve = [&](const std::string& parent, const std::string& switched,
                       const std::string& smoothed) {
        t.edges.push_back({parent, switched, Role::Switched, 1});
        t.edges.push_back({parent, smoothed, Role::Smoothed, 1});
    };
    resolve("K_a", "K_1", "A");
    resolve("K_b", "K_2", "K_3");
    resolve("K_c", "K_a", "K_b");
    resolve("K_d", "K_4", "K_5");
    resolve("K_e", "K_d", "K_6");
    resolve("K_f", "K_c", "K_e");
    resolve("K_g", "B", "K_7");
    resolve("K_h", "K_g", "K_8");
    resolve("root", "K_f", "K_h");
    t.leaf_bounds = {
        {"K_1", DegreeBound::upper(2 * c - 5)}, {"A", DegreeBound::upper(2 * c - 6)},
        {"K_2", DegreeBound::upper(2 * c - 4)}, {"K_3", DegreeBound::upper(2 * c - 5)},
        {"K_4", DegreeBound::upper(2 * c - 6)}, {"K_5", DegreeBound::upper(2 * c - 5)},
        {"K_6", DegreeBound::upper(2 * c - 5)}, {"B", DegreeBound::upper(2 * c - 4)},
        {"K_7", DegreeBound::upper(2 * c - 5)}, {"K_8", DegreeBound::exact(2 * c - (degraded ? 5 : 3))},
    };
    return t;
}

SkeinTree split_component_fixture(int c) {
    SkeinTree t = ladder_fixture(c);
    for (const char* leaf : {"A", "K_3", "K_6", "K_7", "B"})
        t.leaf_bounds.at(leaf) = DegreeBound::upper(2 * c - 7);
    return t;
}

std::string bounds_to_json(const std::map<std::string, DegreeBound>& bounds) {
    nlohmann::ordered_json j;
    for (const auto& [node, b] : bounds) {
        j[node] = {{"kind", b.kind == Kind::Exact ? "Exact" : "UpperBound"}, {"value", b.value}};
    }
    return j.dump(2);
}

std::string ledger_report_to_json(const LedgerReport& report) {
    nlohmann::ordered_json j;
    j["ok"] = report.ok;
    j["lines"] = nlohmann::ordered_json::array();
    for (const auto& line : report.lines) {
        j["lines"].push_back({{"node", line.node},
                              {"expected", to_text(line.expected)},
                              {"got", to_text(line.got)},
                              {"ok", line.ok}});
    }
    return j.dump(2);
}

LedgerReport ledger_check(int c) {
    if (c < 3) throw std::invalid_argument("ledger_check: crossing count must be at least 3");
    auto bounds = propagate(ladder_fixture(c));
    const std::vector<std::pair<std::string, DegreeBound>> chain = {
        {"K_a", DegreeBound::upper(2 * c - 5)}, {"K_b", DegreeBound::upper(2 * c - 4)},
        {"K_c", DegreeBound::upper(2 * c - 3)}, {"K_d", DegreeBound::upper(2 * c - 4)},
        {"K_e", DegreeBound::upper(2 * c - 4)}, {"K_f", DegreeBound::upper(2 * c - 3)},
        {"K_g", DegreeBound::upper(2 * c - 4)}, {"K_h", DegreeBound::exact(2 * c - 2)},
        {"root", DegreeBound::exact(2 * c - 1)},
    };
    LedgerReport report;
    std::ostringstream transcript;
    for (const auto& [node, expected] : chain) {
        LedgerLine line;
        line.node = node;
        line.expected = expected;
        line.got = bounds.at(node);
        line.ok = line.got == expected;
        report.ok = report.ok && line.ok;
        transcript << node << ' ' << to_text(line.got) << '\n';
        report.lines.push_back(std::move(line));
    }
    report.transcript = transcript.str();
    return report;
}

}  // namespace skeinkit
