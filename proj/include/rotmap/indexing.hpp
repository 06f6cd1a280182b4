#pragma once

namespace rotmap {

// Fixed packing of the vertex (i, j) of C_n[mK_1] (column i in 1..n,
// fiber j in 1..m) into the point (i-1)*m + j of 1..mn. Every module
// shares this packing so permutations agree bit-exactly across modules.

inline int vertex_id(int column, int fiber, int m) { return (column - 1) * m + fiber; }

inline int vertex_column(int id, int m) { return (id - 1) / m + 1; }

inline int vertex_fiber(int id, int m) { return (id - 1) % m + 1; }

// Index arithmetic mod n with representative n rather than 0.
inline int mod1(int value, int n) {
    int r = value % n;
    if (r <= 0) r += n;
    return r;
}

}  // namespace rotmap
