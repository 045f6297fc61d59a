#include "evstore/docstore/field_index.hpp"

#include <algorithm>

namespace evstore::docstore {

namespace {

int entry_compare(const FieldIndex::Entry& e, const FieldValue& v, const Document* doc) {
    const int c = order_compare(e.value, v);
    if (c != 0) return c;
    return e.doc->key.compare(doc->key);
}

} // namespace

void FieldIndex::insert(FieldValue value, const Document* doc, std::uint64_t& comparisons) {
    std::size_t lo = 0;
    std::size_t len = entries_.size();
    while (len > 0) {
        const std::size_t half = len / 2;
        ++comparisons;
        if (entry_compare(entries_[lo + half], value, doc) < 0) {
            lo += half + 1;
            len -= half + 1;
        } else {
            len = half;
        }
    }
    entries_.insert(entries_.begin() + static_cast<std::ptrdiff_t>(lo),
                    Entry{std::move(value), doc});
}

void FieldIndex::erase(const FieldValue& value, const Document* doc,
                       std::uint64_t& comparisons) {
    std::size_t lo = 0;
    std::size_t len = entries_.size();
    while (len > 0) {
        const std::size_t half = len / 2;
        ++comparisons;
        if (entry_compare(entries_[lo + half], value, doc) < 0) {
            lo += half + 1;
            len -= half + 1;
        } else {
            len = half;
        }
    }
    if (lo < entries_.size() && entries_[lo].doc == doc &&
        order_compare(entries_[lo].value, value) == 0) {
        entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(lo));
    }
}

void FieldIndex::append_unsorted(FieldValue value, const Document* doc) {
    entries_.push_back(Entry{std::move(value), doc});
}

void FieldIndex::sort_entries() {
    std::stable_sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
        const int c = order_compare(a.value, b.value);
        if (c != 0) return c < 0;
        return a.doc->key < b.doc->key;
    });
}

std::size_t FieldIndex::lower_bound_value(const FieldValue& v, std::uint64_t& comparisons) const {
    std::size_t lo = 0;
    std::size_t len = entries_.size();
    while (len > 0) {
        const std::size_t half = len / 2;
        ++comparisons;
        if (order_compare(entries_[lo + half].value, v) < 0) {
            lo += half + 1;
            len -= half + 1;
        } else {
            len = half;
        }
    }
    return lo;
}

std::size_t FieldIndex::upper_bound_value(const FieldValue& v, std::uint64_t& comparisons) const {
    std::size_t lo = 0;
    std::size_t len = entries_.size();
    while (len > 0) {
        const std::size_t half = len / 2;
        ++comparisons;
        if (order_compare(entries_[lo + half].value, v) <= 0) {
            lo += half + 1;
            len -= half + 1;
        } else {
            len = half;
        }
    }
    return lo;
}

std::size_t FieldIndex::class_boundary(std::uint64_t& comparisons) const {
    std::size_t lo = 0;
    std::size_t len = entries_.size();
    while (len > 0) {
        const std::size_t half = len / 2;
        ++comparisons;
        if (!is_text(entries_[lo + half].value)) {
            lo += half + 1;
            len -= half + 1;
        } else {
            len = half;
        }
    }
    return lo;
}

std::pair<std::size_t, std::size_t> FieldIndex::locate(const RangeBound& lower,
                                                       const RangeBound& upper, bool text_class,
                                                       std::uint64_t& comparisons) const {
    std::size_t first;
    switch (lower.kind) {
        case RangeBound::Kind::value_inclusive:
            first = lower_bound_value(lower.value, comparisons);
            break;
        case RangeBound::Kind::value_exclusive:
            first = upper_bound_value(lower.value, comparisons);
            break;
        case RangeBound::Kind::none:
        default:
            // numeric entries occupy the front of the order space
            first = text_class ? class_boundary(comparisons) : 0;
            break;
    }
    std::size_t last;
    switch (upper.kind) {
        case RangeBound::Kind::value_inclusive:
            last = upper_bound_value(upper.value, comparisons);
            break;
        case RangeBound::Kind::value_exclusive:
            last = lower_bound_value(upper.value, comparisons);
            break;
        case RangeBound::Kind::none:
        default:
            last = text_class ? entries_.size() : class_boundary(comparisons);
            break;
    }
    if (last < first) last = first;
    return {first, last};
}

} // namespace evstore::docstore
