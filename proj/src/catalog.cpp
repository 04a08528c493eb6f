#include "zdtpc/catalog.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace zdtpc {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr std::array<std::string_view, 7> kExceptional = {
    "Z4XY-X2-Y2-XYm2-2X-2Y", "Z2XY-X2-Y2",    "Z4X-X2", "Z4X-X2p2X", "Z8X-2X-X2p4",
    "Z2XY-X2-Y2mXY",         "Z4XY-X2-Y2mXY-XYm2-2X-2Y",
};

std::vector<std::uint32_t> uint_array(const json& j, const std::string& what) {
    if (!j.is_array()) throw ValidationError("table ring field '" + what + "' must be an array");
    std::vector<std::uint32_t> out;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<long long>() < 0)
            throw ValidationError("table ring field '" + what + "' must hold non-negative integers");
        out.push_back(v.get<std::uint32_t>());
    }
    return out;
}

}  // namespace

TableRingSpec table_spec_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("table ring fixture is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ValidationError("table ring fixture must be an object");
    for (const char* key : {"name", "moduli", "one", "products"})
        if (!j.contains(key)) throw ValidationError(std::string("table ring fixture lacks '") + key + "'");
    TableRingSpec spec;
    if (!j["name"].is_string()) throw ValidationError("table ring field 'name' must be a string");
    spec.name = j["name"].get<std::string>();
    spec.moduli = uint_array(j["moduli"], "moduli");
    spec.one = uint_array(j["one"], "one");
    if (!j["products"].is_array()) throw ValidationError("table ring field 'products' must be an array");
    for (const auto& row : j["products"]) {
        if (!row.is_array()) throw ValidationError("table ring field 'products' must be a k x k array");
        auto& out_row = spec.products.emplace_back();
        for (const auto& cell : row) out_row.push_back(uint_array(cell, "products"));
    }
    if (j.contains("basis")) {
        for (const auto& b : j["basis"]) {
            if (!b.is_string()) throw ValidationError("table ring field 'basis' must hold strings");
            spec.basis.push_back(b.get<std::string>());
        }
    }
    return spec;
}

std::string table_spec_to_json(const TableRingSpec& spec) {
    ordered_json j;
    j["name"] = spec.name;
    if (!spec.basis.empty()) j["basis"] = spec.basis;
    j["moduli"] = spec.moduli;
    j["one"] = spec.one;
    j["products"] = spec.products;
    return j.dump(2) + "\n";
}

TableRingSpec load_table_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open table ring fixture '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return table_spec_from_json(text.str());
}

const std::vector<CatalogEntry>& ring_catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> out;
        for (const auto& file : detail::embedded_ring_fixtures()) {
            CatalogEntry e;
            e.slug = std::string(file.stem);
            e.spec = table_spec_from_json(file.text);
            e.exceptional = std::find(kExceptional.begin(), kExceptional.end(), file.stem) != kExceptional.end();
            out.push_back(std::move(e));
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.slug < b.slug; });
        return out;
    }();
    return entries;
}

const CatalogEntry* find_catalog_entry(std::string_view slug) {
    for (const auto& e : ring_catalog())
        if (e.slug == slug) return &e;
    return nullptr;
}

std::vector<std::string> catalog_slugs() {
    std::vector<std::string> out;
    for (const auto& e : ring_catalog()) out.push_back(e.slug);
    return out;
}

std::string_view known_findings_text() { return detail::embedded_known_findings(); }

}  // namespace zdtpc
