#include "evstore/docstore/collection.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "evstore/core/error.hpp"
#include "evstore/core/jsonl.hpp"

namespace evstore::docstore {

namespace {

void check_document(const Document& doc) {
    if (doc.key.empty()) raise(Errc::invalid_value, "document key is empty");
    for (const auto& [name, value] : doc.fields) {
        if (name.empty()) raise(Errc::invalid_value, "field name is empty");
        if (const auto* d = std::get_if<double>(&value); d && !std::isfinite(*d)) {
            raise(Errc::invalid_value, "field '" + name + "' is not finite");
        }
    }
    if (serialized_size(doc) > kMaxDocumentBytes) {
        raise(Errc::document_too_large,
              "document '" + doc.key + "' exceeds 1 MiB serialized");
    }
}

} // namespace

const Document* Collection::stored(std::string_view key) const {
    const auto it = docs_.find(std::string(key));
    return it == docs_.end() ? nullptr : &it->second;
}

ScanStats Collection::insert(Document doc) {
    check_document(doc);
    if (docs_.contains(doc.key)) {
        raise(Errc::duplicate_key, "key '" + doc.key + "' already present");
    }
    ScanStats stats;
    auto [it, ok] = docs_.emplace(doc.key, std::move(doc));
    const Document* ptr = &it->second;
    order_.push_back(ptr);
    for (const auto& [name, value] : ptr->fields) {
        indices_[name].insert(value, ptr, stats.index_comparisons);
    }
    return stats;
}

ScanStats Collection::bulk_load(std::vector<Document> docs) {
    std::unordered_set<std::string_view> batch_keys;
    for (const auto& doc : docs) {
        check_document(doc);
        if (docs_.contains(doc.key) || !batch_keys.insert(doc.key).second) {
            raise(Errc::duplicate_key, "key '" + doc.key + "' already present");
        }
    }
    ScanStats stats;
    stats.docs_examined = docs.size();
    docs_.reserve(docs_.size() + docs.size());
    order_.reserve(order_.size() + docs.size());
    for (auto& doc : docs) {
        auto [it, ok] = docs_.emplace(doc.key, std::move(doc));
        const Document* ptr = &it->second;
        order_.push_back(ptr);
        for (const auto& [name, value] : ptr->fields) {
            indices_[name].append_unsorted(value, ptr);
        }
    }
    for (auto& [name, index] : indices_) index.sort_entries();
    return stats;
}

std::pair<Document, ScanStats> Collection::get(std::string_view key) const {
    auto [doc, stats] = try_get(key);
    if (doc == nullptr) raise(Errc::not_found, "no document with key '" + std::string(key) + "'");
    return {*doc, stats};
}

std::pair<const Document*, ScanStats> Collection::try_get(std::string_view key) const {
    ScanStats stats;
    const Document* doc = stored(key);
    stats.docs_examined = doc ? 1 : 0;
    return {doc, stats};
}

ScanStats Collection::update(std::string_view key,
                             const std::vector<Document::Field>& changed_fields) {
    auto it = docs_.find(std::string(key));
    if (it == docs_.end()) {
        raise(Errc::not_found, "no document with key '" + std::string(key) + "'");
    }
    Document& doc = it->second;

    Document updated = doc;
    for (const auto& [name, value] : changed_fields) updated.set(name, value);
    check_document(updated);

    ScanStats stats;
    stats.docs_examined = 1;
    for (const auto& [name, value] : changed_fields) {
        if (const FieldValue* old = doc.find(name)) {
            indices_[name].erase(*old, &doc, stats.index_comparisons);
        }
        indices_[name].insert(value, &doc, stats.index_comparisons);
    }
    doc = std::move(updated);
    return stats;
}

Collection::QueryResult Collection::query(const QuerySpec& spec) const {
    validate_spec(spec);

    const auto ineq = inequality_fields(spec.conditions);
    if (ineq.size() > 1) {
        std::string fields;
        for (const auto& f : ineq) {
            if (!fields.empty()) fields += ", ";
            fields += f;
        }
        raise(Errc::multiple_inequality_fields,
              "inequality conditions on multiple fields: " + fields);
    }

    QueryResult result;
    if (spec.conditions.empty()) {
        result = read_all();
    } else {
        // resolve through the inequality field's index, or the first
        // equality field's when the query is equality-only
        const std::string& probe = ineq.empty() ? spec.conditions.front().field : ineq.front();

        std::vector<const Condition*> rest;
        RangeBound lower, upper;
        bool class_known = false;
        bool text_class = false;
        bool contradictory = false;
        for (const auto& cond : spec.conditions) {
            if (cond.field != probe) {
                rest.push_back(&cond);
                continue;
            }
            const bool ct = is_text(cond.value);
            if (!class_known) {
                class_known = true;
                text_class = ct;
            } else if (ct != text_class) {
                contradictory = true; // a value cannot be both numeric and text
                break;
            }
            const RangeBound inc{RangeBound::Kind::value_inclusive, cond.value};
            const RangeBound exc{RangeBound::Kind::value_exclusive, cond.value};
            auto tighten_lower = [&](const RangeBound& b, bool exclusive) {
                if (lower.kind == RangeBound::Kind::none) {
                    lower = b;
                    return;
                }
                const int c = order_compare(b.value, lower.value);
                if (c > 0 || (c == 0 && exclusive)) lower = b;
            };
            auto tighten_upper = [&](const RangeBound& b, bool exclusive) {
                if (upper.kind == RangeBound::Kind::none) {
                    upper = b;
                    return;
                }
                const int c = order_compare(b.value, upper.value);
                if (c < 0 || (c == 0 && exclusive)) upper = b;
            };
            switch (cond.op) {
                case Op::eq:
                    tighten_lower(inc, false);
                    tighten_upper(inc, false);
                    break;
                case Op::ge: tighten_lower(inc, false); break;
                case Op::gt: tighten_lower(exc, true); break;
                case Op::le: tighten_upper(inc, false); break;
                case Op::lt: tighten_upper(exc, true); break;
            }
        }

        const FieldIndex* idx = index(probe);
        if (idx != nullptr && !contradictory) {
            const auto [first, last] =
                idx->locate(lower, upper, text_class, result.stats.index_comparisons);
            result.stats.docs_examined = last - first;
            const auto entries = idx->entries();
            for (std::size_t i = first; i < last; ++i) {
                const Document* doc = entries[i].doc;
                const bool all = std::all_of(rest.begin(), rest.end(), [&](const Condition* c) {
                    return condition_matches(*doc, *c);
                });
                if (all) result.docs.push_back(*doc);
            }
        }
        // unknown field: no document carries it, so the result is empty
    }

    if (spec.limit && result.docs.size() > *spec.limit) result.docs.resize(*spec.limit);
    if (spec.projection) {
        for (auto& doc : result.docs) doc = project(doc, *spec.projection);
    }
    return result;
}

Collection::QueryResult Collection::read_all() const {
    QueryResult result;
    result.docs.reserve(order_.size());
    for (const Document* doc : order_) result.docs.push_back(*doc);
    result.stats.docs_examined = order_.size();
    return result;
}

const FieldIndex* Collection::index(std::string_view field) const {
    const auto it = indices_.find(field);
    return it == indices_.end() ? nullptr : &it->second;
}

std::vector<std::string> Collection::indexed_fields() const {
    std::vector<std::string> names;
    names.reserve(indices_.size());
    for (const auto& [name, idx] : indices_) names.push_back(name);
    return names;
}

} // namespace evstore::docstore
