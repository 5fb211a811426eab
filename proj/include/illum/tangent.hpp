#pragma once

#include "illum/arc.hpp"
#include "illum/polygon.hpp"

namespace illum {

struct not_on_boundary : invalid_input {
    using invalid_input::invalid_input;
};

// Arc of directions d with x + t*d in K (Closed) resp. int K (Interior) for
// some t > 0, for x on bd K. Vertex: the cone between the two incident
// edges; edge-interior point: the supporting half-circle.
template <class S>
ArcT<Dir> tangent_cone_arc(const ConvexPolygon<S>& K, const V2<S>& x, Mode mode) {
    auto f = boundary_feature(K, x);
    if (!f) throw not_on_boundary("point is not on the polygon boundary");
    bool closed = (mode == Mode::Closed);
    auto [i, at_vertex] = *f;
    if (at_vertex) {
        const std::size_t n = K.size();
        Dir lo(lift(K.vertex(i + 1) - x));          // toward next vertex
        Dir hi(lift(K.vertex(i + n - 1) - x));      // toward previous vertex
        return ArcT<Dir>::make(lo, hi, closed, closed);
    }
    V2<S> e = K.vertex(i + 1) - K.vertex(i);
    Dir fwd(lift(e));
    return ArcT<Dir>::make(fwd, fwd.opposite(), closed, closed);
}

}  // namespace illum
