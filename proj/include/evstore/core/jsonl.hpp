#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "evstore/core/document.hpp"

namespace evstore {

/// Wire format for documents: one JSON object per line, the key under
/// "_key", all remaining fields flat in insertion order.
nlohmann::ordered_json to_json(const Document& doc);
Document document_from_json(const nlohmann::ordered_json& obj);

std::string to_json_line(const Document& doc);
Document from_json_line(std::string_view line);

/// Serialized size in bytes of the document's JSON line.
std::size_t serialized_size(const Document& doc);

/// A parsed JSON-lines file. A first line without "_key" is treated as a
/// header object (dataset or snapshot metadata) and kept verbatim.
struct JsonlFile {
    std::optional<nlohmann::ordered_json> header;
    std::vector<Document> docs;
};

JsonlFile read_jsonl(std::istream& in);
JsonlFile read_jsonl_file(const std::string& path); // throws IoError

void write_jsonl(std::ostream& out, const std::optional<nlohmann::ordered_json>& header,
                 std::span<const Document> docs);
void write_jsonl_file(const std::string& path, const std::optional<nlohmann::ordered_json>& header,
                      std::span<const Document> docs); // throws IoError

} // namespace evstore
