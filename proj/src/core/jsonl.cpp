#include "evstore/core/jsonl.hpp"

#include <fstream>
#include <sstream>

#include "evstore/core/error.hpp"

namespace evstore {

using nlohmann::ordered_json;

ordered_json to_json(const Document& doc) {
    ordered_json obj;
    obj["_key"] = doc.key;
    for (const auto& [name, value] : doc.fields) {
        std::visit([&](const auto& v) { obj[name] = v; }, value);
    }
    return obj;
}

Document document_from_json(const ordered_json& obj) {
    if (!obj.is_object()) raise(Errc::invalid_value, "document line is not a JSON object");
    Document doc;
    for (const auto& [name, value] : obj.items()) {
        if (name == "_key") {
            if (!value.is_string()) raise(Errc::invalid_value, "_key must be a string");
            doc.key = value.get<std::string>();
            continue;
        }
        if (value.is_string()) {
            doc.fields.emplace_back(name, make_text(value.get<std::string>()));
        } else if (value.is_number_integer() || value.is_number_unsigned()) {
            doc.fields.emplace_back(name, make_integer(value.get<std::int64_t>()));
        } else if (value.is_number_float()) {
            doc.fields.emplace_back(name, make_number(value.get<double>()));
        } else {
            raise(Errc::invalid_value,
                  "field '" + name + "' is not a flat text/number value");
        }
    }
    if (doc.key.empty()) raise(Errc::invalid_value, "document has no _key");
    return doc;
}

std::string to_json_line(const Document& doc) { return to_json(doc).dump(); }

Document from_json_line(std::string_view line) {
    ordered_json obj = ordered_json::parse(line, nullptr, false);
    if (obj.is_discarded()) raise(Errc::invalid_value, "malformed JSON line");
    return document_from_json(obj);
}

std::size_t serialized_size(const Document& doc) { return to_json_line(doc).size(); }

JsonlFile read_jsonl(std::istream& in) {
    JsonlFile file;
    std::string line;
    bool first = true;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        ordered_json obj = ordered_json::parse(line, nullptr, false);
        if (obj.is_discarded()) {
            raise(Errc::invalid_value, "malformed JSON on line " + std::to_string(lineno));
        }
        if (first && obj.is_object() && !obj.contains("_key")) {
            file.header = std::move(obj);
            first = false;
            continue;
        }
        first = false;
        file.docs.push_back(document_from_json(obj));
    }
    return file;
}

JsonlFile read_jsonl_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::io_error, "cannot open '" + path + "' for reading");
    return read_jsonl(in);
}

void write_jsonl(std::ostream& out, const std::optional<ordered_json>& header,
                 std::span<const Document> docs) {
    if (header) out << header->dump() << '\n';
    for (const auto& doc : docs) out << to_json_line(doc) << '\n';
}

void write_jsonl_file(const std::string& path, const std::optional<ordered_json>& header,
                      std::span<const Document> docs) {
    std::ofstream out(path);
    if (!out) raise(Errc::io_error, "cannot open '" + path + "' for writing");
    write_jsonl(out, header, docs);
    if (!out) raise(Errc::io_error, "write to '" + path + "' failed");
}

} // namespace evstore
