#include "homposet/render.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace homposet {

namespace {

std::string set_text(const ElementSet& s) {
    std::ostringstream out;
    out << "{";
    const auto m = s.members();
    for (std::size_t i = 0; i < m.size(); ++i) out << (i ? "," : "") << m[i];
    out << "}";
    return out.str();
}

std::string label(const HomPoset& poset, std::size_t i) {
    if (poset.is_top(i)) return "TOP";
    const auto& p = poset.pairs()[i];
    return "(" + set_text(p.ideal.members) + ", " + set_text(p.mset.members) + ")";
}

}  // namespace

std::string render_text(const HomPoset& poset) {
    const auto least = poset.least();
    const auto maxes = poset.maximal();
    std::ostringstream out;
    out << "Hom" << (poset.top_adjoined() ? "-bar" : "") << "(" << poset.ring()->describe() << "): " << poset.size()
        << " element" << (poset.size() == 1 ? "" : "s") << "\n";
    out << "idx  |ideal|  |M|  flags         pair\n";
    for (std::size_t i = 0; i < poset.size(); ++i) {
        std::string flags;
        if (i == least) flags += "least ";
        if (std::find(maxes.begin(), maxes.end(), i) != maxes.end()) flags += "maximal ";
        if (poset.is_top(i)) flags += "top ";
        std::ostringstream row;
        row.width(3);
        row << i;
        out << row.str() << "  ";
        if (poset.is_top(i)) {
            out << "     -    -  ";
        } else {
            const auto& p = poset.pairs()[i];
            std::ostringstream a, m;
            a.width(6);
            a << p.ideal.members.count();
            m.width(4);
            m << p.mset.members.count();
            out << a.str() << " " << m.str() << "  ";
        }
        std::string f = flags;
        f.resize(std::max<std::size_t>(f.size(), 14), ' ');
        out << f << label(poset, i) << "\n";
    }
    return out.str();
}

std::string render_dot(const HomPoset& poset) {
    std::ostringstream out;
    out << "digraph hom {\n";
    out << "  label=\"Hom" << (poset.top_adjoined() ? "-bar" : "") << "(" << poset.ring()->describe() << ")\";\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box];\n";
    for (std::size_t i = 0; i < poset.size(); ++i) out << "  n" << i << " [label=\"" << label(poset, i) << "\"];\n";
    for (const auto& [a, b] : hasse(poset)) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

std::string render_json(const HomPoset& poset) {
    nlohmann::ordered_json doc;
    doc["ring"] = poset.ring()->describe();
    doc["size"] = poset.size();
    doc["elements"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < poset.size(); ++i) {
        nlohmann::ordered_json e;
        e["index"] = i;
        e["top"] = poset.is_top(i);
        if (poset.is_top(i)) {
            e["ideal"] = nullptr;
            e["mset"] = nullptr;
        } else {
            e["ideal"] = poset.pairs()[i].ideal.members.members();
            e["mset"] = poset.pairs()[i].mset.members.members();
        }
        doc["elements"].push_back(std::move(e));
    }
    doc["hasse"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : hasse(poset)) doc["hasse"].push_back({a, b});
    return doc.dump(2) + "\n";
}

}  // namespace homposet
