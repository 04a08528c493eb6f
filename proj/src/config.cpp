#include "zdtpc/config.hpp"

#include <cstdlib>
#include <type_traits>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace zdtpc {

RingLimits Config::limits() const {
    RingLimits l;
    l.order_cap = ring_cap;
    return l;
}

SearchOptions Config::search_options() const {
    SearchOptions s;
    s.vertex_bound = search_bound;
    s.enumeration_bound = enum_bound;
    return s;
}

ZdgOptions Config::zdg_options() const {
    ZdgOptions o;
    o.limits = limits();
    o.exact_bound = search_bound;
    o.search = search_options();
    return o;
}

Config config_from_json(std::string_view text, Config base) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("config is not valid JSON: ") + e.what(), e.byte);
    }
    if (!j.is_object()) throw ParseError("config must be an object", 0);
    auto read = [&](const char* key, auto& field) {
        if (!j.contains(key)) return;
        if (!j[key].is_number_unsigned() || j[key].get<std::uint64_t>() == 0)
            throw ParseError(std::string("config key '") + key + "' must be a positive integer", 0);
        field = j[key].get<std::remove_reference_t<decltype(field)>>();
    };
    read("ring_cap", base.ring_cap);
    read("search_bound", base.search_bound);
    read("enum_bound", base.enum_bound);
    read("jobs", base.jobs);
    for (const auto& [key, value] : j.items())
        if (key != "ring_cap" && key != "search_bound" && key != "enum_bound" && key != "jobs")
            throw ParseError("unknown config key '" + key + "'", 0);
    return base;
}

Config load_config(const std::filesystem::path& path, Config base) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read config file " + path.string(), 0);
    std::stringstream ss;
    ss << in.rdbuf();
    return config_from_json(ss.str(), base);
}

Config apply_environment(Config config) {
    auto read = [](const char* name, std::size_t& field) {
        const char* value = std::getenv(name);
        if (!value || !*value) return;
        char* end = nullptr;
        const auto n = std::strtoull(value, &end, 10);
        if (*end != '\0' || n == 0) throw ParseError(std::string(name) + " must be a positive integer", 0);
        field = static_cast<std::size_t>(n);
    };
    read("ZDTPC_RING_CAP", config.ring_cap);
    read("ZDTPC_SEARCH_BOUND", config.search_bound);
    read("ZDTPC_ENUM_BOUND", config.enum_bound);
    return config;
}

}  // namespace zdtpc
