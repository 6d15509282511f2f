#include "movdom/vertex_set.hpp"

#include "movdom/error.hpp"

#include <sstream>

namespace movdom {

VertexSet::VertexSet(VertexId order, std::initializer_list<VertexId> members) : order_(order)
{
    for (auto v : members)
        insert(v);
}

VertexSet::VertexSet(VertexId order, const std::vector<VertexId>& members) : order_(order)
{
    for (auto v : members)
        insert(v);
}

VertexSet VertexSet::from_bits(VertexId order, std::uint64_t bits)
{
    VertexSet s(order);
    s.bits_ = bits & full_mask(order);
    return s;
}

VertexSet VertexSet::full(VertexId order)
{
    return from_bits(order, full_mask(order));
}

void VertexSet::insert(VertexId v)
{
    if (v >= order_)
        throw GraphError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(order_));
    bits_ |= std::uint64_t{1} << v;
}

VertexSet VertexSet::complement() const
{
    return from_bits(order_, ~bits_);
}

std::vector<VertexId> VertexSet::to_vector() const
{
    std::vector<VertexId> out;
    out.reserve(size());
    for (auto v : *this)
        out.push_back(v);
    return out;
}

std::string VertexSet::to_string() const
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto v : *this) {
        if (!first)
            os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

bool lex_less(const VertexSet& a, const VertexSet& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    // With equal cardinality, the smallest vertex in the symmetric difference
    // belongs to the set whose sorted member list is lexicographically smaller.
    auto diff = a.bits_ ^ b.bits_;
    if (diff == 0)
        return false;
    return (a.bits_ >> std::countr_zero(diff)) & 1U;
}

} // namespace movdom
