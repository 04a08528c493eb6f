#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "zdtpc/ring.hpp"

namespace zdtpc {

/// A named table ring shipped under data/rings/. The slug is the fixture's file stem and the
/// name used after '@' in ring expressions.
struct CatalogEntry {
    std::string slug;
    TableRingSpec spec;
    /// One of the seven 16-element local rings whose graphs have cut vertices but no code.
    bool exceptional = false;
};

/// Fixture schema: {"name": str, "moduli": [int], "one": [int], "products": [[[int]]], "basis"?: [str]}.
TableRingSpec table_spec_from_json(std::string_view text);
std::string table_spec_to_json(const TableRingSpec& spec);
TableRingSpec load_table_spec(const std::filesystem::path& path);

const std::vector<CatalogEntry>& ring_catalog();
/// nullptr when `slug` is not in the catalog.
const CatalogEntry* find_catalog_entry(std::string_view slug);
std::vector<std::string> catalog_slugs();

/// Raw text of the shipped known-findings manifest.
std::string_view known_findings_text();

namespace detail {
struct EmbeddedFile {
    std::string_view stem;
    std::string_view text;
};
std::vector<EmbeddedFile> embedded_ring_fixtures();
std::string_view embedded_known_findings();
}  // namespace detail

}  // namespace zdtpc
