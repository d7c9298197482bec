#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "allcnn/error.hpp"

namespace allcnn {

size_t shape_product(std::span<const size_t> shape);
std::string shape_str(std::span<const size_t> shape);

// Rank-N numeric array, row-major (last axis fastest). Flat index of
// coordinates (i0..ik) is sum(i_a * stride_a) with strides derived from the
// shape; offset() below is the single source of that formula. Tensors are
// plain values: copy freely, share read-only across threads.
template <typename T>
struct TensorT {
    std::vector<size_t> shape;
    std::vector<T> data;

    TensorT() = default;

    explicit TensorT(std::vector<size_t> s) : shape(std::move(s)) {
        validate_shape();
        data.assign(shape_product(shape), T(0));
    }

    TensorT(std::vector<size_t> s, std::vector<T> d) : shape(std::move(s)), data(std::move(d)) {
        validate_shape();
        ALLCNN_CHECK(data.size() == shape_product(shape), ShapeError,
                     "data length ", data.size(), " does not match shape ", shape_str(shape));
    }

    static TensorT full(std::vector<size_t> s, T value) {
        TensorT t(std::move(s));
        for (T& v : t.data) v = value;
        return t;
    }

    size_t size() const { return data.size(); }
    size_t rank() const { return shape.size(); }
    size_t dim(size_t axis) const { return shape[axis]; }
    bool empty() const { return data.empty(); }

    T* ptr() { return data.data(); }
    const T* ptr() const { return data.data(); }

    T& operator[](size_t i) { return data[i]; }
    const T& operator[](size_t i) const { return data[i]; }

    size_t offset(std::initializer_list<size_t> idx) const {
        size_t off = 0;
        size_t a = 0;
        for (size_t i : idx) {
            off = off * shape[a] + i;
            ++a;
        }
        return off;
    }

    T& at(std::initializer_list<size_t> idx) { return data[offset(idx)]; }
    const T& at(std::initializer_list<size_t> idx) const { return data[offset(idx)]; }

private:
    void validate_shape() const {
        for (size_t d : shape) {
            ALLCNN_CHECK(d > 0, ValueError, "dimension sizes must be positive, got shape ",
                         shape_str(shape));
        }
    }
};

using Tensor = TensorT<float>;
using Tensor64 = TensorT<double>;

// Same flat data, new shape; products must match.
template <typename T>
TensorT<T> reshape(const TensorT<T>& t, std::vector<size_t> new_shape) {
    ALLCNN_CHECK(shape_product(new_shape) == t.size(), ShapeError,
                 "reshape mismatch: ", shape_str(t.shape), " -> ", shape_str(new_shape));
    return TensorT<T>(std::move(new_shape), t.data);
}

// out[i] = f(a[i], b[i]); shapes must match exactly (no broadcasting).
template <typename T, typename F>
TensorT<T> map_zip(const TensorT<T>& a, const TensorT<T>& b, F&& f) {
    ALLCNN_CHECK(a.shape == b.shape, ShapeError, "map_zip shape mismatch: ", shape_str(a.shape),
                 " vs ", shape_str(b.shape));
    TensorT<T> out(a.shape);
    for (size_t i = 0; i < a.size(); ++i) out.data[i] = f(a.data[i], b.data[i]);
    return out;
}

// out[i] = f(a[i], scalar).
template <typename T, typename F>
TensorT<T> map_zip(const TensorT<T>& a, T scalar, F&& f) {
    TensorT<T> out(a.shape);
    for (size_t i = 0; i < a.size(); ++i) out.data[i] = f(a.data[i], scalar);
    return out;
}

enum class Reduce { Sum, Mean, Max };

// Drops `axis` from the shape; sums/means accumulate in double.
template <typename T>
TensorT<T> reduce_axis(const TensorT<T>& t, size_t axis, Reduce op) {
    ALLCNN_CHECK(axis < t.rank(), ValueError, "reduce axis ", axis, " out of range for rank ",
                 t.rank());
    std::vector<size_t> out_shape;
    for (size_t a = 0; a < t.rank(); ++a) {
        if (a != axis) out_shape.push_back(t.shape[a]);
    }
    if (out_shape.empty()) out_shape.push_back(1);

    size_t outer = 1, inner = 1;
    for (size_t a = 0; a < axis; ++a) outer *= t.shape[a];
    for (size_t a = axis + 1; a < t.rank(); ++a) inner *= t.shape[a];
    const size_t n = t.shape[axis];

    TensorT<T> out(out_shape);
    for (size_t o = 0; o < outer; ++o) {
        for (size_t i = 0; i < inner; ++i) {
            const T* base = t.ptr() + o * n * inner + i;
            if (op == Reduce::Max) {
                T best = base[0];
                for (size_t k = 1; k < n; ++k) {
                    T v = base[k * inner];
                    if (v > best) best = v;
                }
                out.data[o * inner + i] = best;
            } else {
                double acc = 0.0;
                for (size_t k = 0; k < n; ++k) acc += static_cast<double>(base[k * inner]);
                if (op == Reduce::Mean) acc /= static_cast<double>(n);
                out.data[o * inner + i] = static_cast<T>(acc);
            }
        }
    }
    return out;
}

} // namespace allcnn
