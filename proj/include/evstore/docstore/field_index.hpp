#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "evstore/core/document.hpp"
#include "evstore/core/field_value.hpp"

namespace evstore::docstore {

/// One bound of a half-open index range, in the value order of the index.
struct RangeBound {
    enum class Kind {
        none,            // unbounded within the value class
        value_inclusive, // GE / LE
        value_exclusive, // GT / LT
    };
    Kind kind = Kind::none;
    FieldValue value;
};

/// The sorted secondary index over one field: (value, document) entries
/// ordered by value then document key. A single flat array gives range
/// location the exact binary-search comparison count the work-bound
/// contract promises; the same logical index serves descending traversal
/// in reverse.
class FieldIndex {
public:
    struct Entry {
        FieldValue value;
        const Document* doc;
    };

    std::size_t size() const { return entries_.size(); }
    std::span<const Entry> entries() const { return entries_; }

    /// Inserts at the binary-searched position; every value comparison the
    /// search performs increments comparisons.
    void insert(FieldValue value, const Document* doc, std::uint64_t& comparisons);

    /// Removes the entry for (value, doc). No-op if absent.
    void erase(const FieldValue& value, const Document* doc, std::uint64_t& comparisons);

    /// Bulk-build path: append unsorted, then sort once.
    void append_unsorted(FieldValue value, const Document* doc);
    void sort_entries();

    /// Half-open entry range [first, second) for a bound pair constrained
    /// to one value class (text_class selects the text segment, otherwise
    /// the numeric segment). At most two binary searches.
    std::pair<std::size_t, std::size_t> locate(const RangeBound& lower, const RangeBound& upper,
                                               bool text_class,
                                               std::uint64_t& comparisons) const;

private:
    std::size_t lower_bound_value(const FieldValue& v, std::uint64_t& comparisons) const;
    std::size_t upper_bound_value(const FieldValue& v, std::uint64_t& comparisons) const;
    std::size_t class_boundary(std::uint64_t& comparisons) const; // first text entry

    std::vector<Entry> entries_;
};

} // namespace evstore::docstore
