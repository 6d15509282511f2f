#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace movdom {

using VertexId = std::uint32_t;

/// Largest order a Graph may have: one adjacency row is one machine word.
inline constexpr VertexId kMaxOrder = 64;

/// A subset of {0, ..., order-1}, stored as a single 64-bit word.
///
/// Every set remembers the order of the graph it belongs to, so that
/// complement() is well defined and mixed-order algebra can be caught in
/// debug builds. Binary operators require both operands to share an order.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(VertexId order) : order_(order) {}
    VertexSet(VertexId order, std::initializer_list<VertexId> members);
    VertexSet(VertexId order, const std::vector<VertexId>& members);

    static VertexSet from_bits(VertexId order, std::uint64_t bits);
    static VertexSet full(VertexId order);

    [[nodiscard]] VertexId order() const { return order_; }
    [[nodiscard]] std::uint64_t bits() const { return bits_; }
    [[nodiscard]] VertexId size() const { return static_cast<VertexId>(std::popcount(bits_)); }
    [[nodiscard]] bool empty() const { return bits_ == 0; }
    [[nodiscard]] bool contains(VertexId v) const { return v < order_ && ((bits_ >> v) & 1U); }

    void insert(VertexId v);
    void erase(VertexId v) { bits_ &= ~(std::uint64_t{1} << v); }

    [[nodiscard]] VertexSet complement() const;
    [[nodiscard]] bool is_subset_of(const VertexSet& other) const { return (bits_ & ~other.bits_) == 0; }
    [[nodiscard]] bool covers_all() const { return bits_ == full_mask(order_); }

    /// Smallest member; undefined on an empty set.
    [[nodiscard]] VertexId front() const { return static_cast<VertexId>(std::countr_zero(bits_)); }

    [[nodiscard]] std::vector<VertexId> to_vector() const;
    [[nodiscard]] std::string to_string() const;

    VertexSet& operator|=(const VertexSet& o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(const VertexSet& o) { bits_ &= o.bits_; return *this; }
    VertexSet& operator-=(const VertexSet& o) { bits_ &= ~o.bits_; return *this; }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Orders equal-size sets by their ascending member lists; smaller sets first.
    friend bool lex_less(const VertexSet& a, const VertexSet& b);

    class iterator {
    public:
        using value_type = VertexId;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        explicit iterator(std::uint64_t rest) : rest_(rest) {}
        VertexId operator*() const { return static_cast<VertexId>(std::countr_zero(rest_)); }
        iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        iterator operator++(int) { auto old = *this; ++*this; return old; }
        bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    [[nodiscard]] iterator begin() const { return iterator(bits_); }
    [[nodiscard]] iterator end() const { return iterator(0); }

    static constexpr std::uint64_t full_mask(VertexId order)
    {
        return order >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1;
    }

private:
    VertexId order_ = 0;
    std::uint64_t bits_ = 0;
};

bool lex_less(const VertexSet& a, const VertexSet& b);

} // namespace movdom
