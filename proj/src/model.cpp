#include "da/model.hpp"

#include <algorithm>

namespace da {

std::string to_string(Visibility v) {
    switch (v) {
    case Visibility::Public: return "public";
    case Visibility::Protected: return "protected";
    case Visibility::Package: return "package";
    case Visibility::Private: return "private";
    }
    return "?";
}

std::string ClassModel::simple_name() const {
    const auto pos = qualified_name.rfind('.');
    return pos == std::string::npos ? qualified_name : qualified_name.substr(pos + 1);
}

std::string to_string(const Diagnostic& d) {
    std::string out = d.severity == Severity::Error ? "error: " : "warning: ";
    if (d.file == "global") {
        out += d.message;
    } else {
        out += d.file;
        if (d.line > 0)
            out += ":" + std::to_string(d.line);
        out += ": " + d.message;
    }
    return out;
}

const ClassModel* CodebaseModel::find(const std::string& qualified_name) const {
    const auto it = std::find_if(classes.begin(), classes.end(), [&](const ClassModel& c) {
        return c.qualified_name == qualified_name;
    });
    return it == classes.end() ? nullptr : &*it;
}

const std::set<std::string>* CodebaseModel::resolve_simple(const std::string& simple_name) const {
    const auto it = simple_name_index.find(simple_name);
    return it == simple_name_index.end() ? nullptr : &it->second;
}

std::set<std::string> CodebaseModel::known_simple_names() const {
    std::set<std::string> out;
    for (const auto& [simple, qualified] : simple_name_index)
        out.insert(simple);
    return out;
}

} // namespace da
