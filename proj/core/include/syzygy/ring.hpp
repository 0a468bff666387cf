#ifndef SYZYGY_RING_HPP
#define SYZYGY_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "syzygy/field.hpp"
#include "syzygy/order.hpp"

namespace syz {

// A polynomial ring k[x0, ..., xN] over a concrete field object.  Rings are
// shared immutably; two rings are interchangeable when their field specs and
// variable lists agree.
template <class K>
struct Ring {
    K field;
    std::vector<std::string> vars;

    Ring(K f, std::vector<std::string> v) : field(std::move(f)), vars(std::move(v)) {}

    std::size_t nvars() const { return vars.size(); }
    MonomialOrder canonical_order() const { return MonomialOrder::deglex(vars.size()); }

    bool compatible(const Ring& o) const { return field.spec() == o.field.spec() && vars == o.vars; }

    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }
};

template <class K>
using RingPtr = std::shared_ptr<const Ring<K>>;

// Standard coordinates x0..xN on P^N (so nvars = N + 1).
template <class K>
RingPtr<K> make_ring(K field, std::size_t nvars) {
    std::vector<std::string> vars;
    vars.reserve(nvars);
    for (std::size_t i = 0; i < nvars; ++i) vars.push_back("x" + std::to_string(i));
    return std::make_shared<const Ring<K>>(std::move(field), std::move(vars));
}

template <class K>
RingPtr<K> make_ring(K field, std::vector<std::string> vars) {
    return std::make_shared<const Ring<K>>(std::move(field), std::move(vars));
}

template <class K>
void require_compatible(const Ring<K>& a, const Ring<K>& b, const char* what) {
    if (!a.compatible(b)) throw RingMismatchError(std::string("ring mismatch in ") + what);
}

} // namespace syz

#endif
