#pragma once

#include <string>

#include <json.hpp>

namespace delpezzo {

// Reports keep insertion order so identical invocations render byte-identical
// payloads; timing never enters the payload (the CLI prints it to stderr).
using Json = nlohmann::ordered_json;

struct Report {
    std::string command;
    std::string status = "info";   // pass | fail | info
    Json payload = Json::object();

    Json to_json() const;
    std::string render_text() const;
    std::string render_json() const;
};

}  // namespace delpezzo
