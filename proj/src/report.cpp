#include "delpezzo/report.hpp"

namespace delpezzo {

Json Report::to_json() const {
    Json j = Json::object();
    j["command"] = command;
    j["status"] = status;
    j["payload"] = payload;
    return j;
}

std::string Report::render_json() const { return to_json().dump(2) + "\n"; }

namespace {

void render_node(const Json& j, const std::string& key, int indent, std::string& out) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        if (!key.empty()) out += pad + key + ":\n";
        for (auto it = j.begin(); it != j.end(); ++it)
            render_node(it.value(), it.key(), indent + (key.empty() ? 0 : 2), out);
    } else if (j.is_array()) {
        bool scalars = true;
        for (const auto& e : j)
            if (e.is_object() || e.is_array()) scalars = false;
        if (scalars) {
            std::string line;
            for (const auto& e : j) {
                if (!line.empty()) line += " ";
                line += e.is_string() ? e.get<std::string>() : e.dump();
            }
            out += pad + key + ": [" + line + "]\n";
        } else {
            out += pad + key + ":\n";
            int i = 0;
            for (const auto& e : j) render_node(e, "- " + std::to_string(i++), indent + 2, out);
        }
    } else {
        out += pad + key + ": " + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
    }
}

}  // namespace

std::string Report::render_text() const {
    std::string out;
    out += "command: " + command + "\n";
    out += "status: " + status + "\n";
    render_node(payload, "", 0, out);
    return out;
}

}  // namespace delpezzo
