#include "allcnn/tensor.hpp"

#include <sstream>

namespace allcnn {

size_t shape_product(std::span<const size_t> shape) {
    size_t p = 1;
    for (size_t d : shape) p *= d;
    return p;
}

std::string shape_str(std::span<const size_t> shape) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < shape.size(); ++i) {
        if (i) os << ",";
        os << shape[i];
    }
    os << "]";
    return os.str();
}

} // namespace allcnn
