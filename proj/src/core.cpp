#include "eqcolor/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace eqcolor {

Int ceil_div(Int a, Int b) {
    if (b <= 0) throw validation_error("ceil_div: divisor must be positive");
    if (a < 0) throw validation_error("ceil_div: dividend must be nonnegative");
    return a / b + (a % b != 0 ? 1 : 0);
}

Instance make_instance(std::vector<Int> sizes) {
    if (sizes.empty()) throw validation_error("instance needs at least one partite set");
    Int total = 0;
    for (Int n : sizes) {
        if (n <= 0) throw validation_error("partite-set sizes must be positive");
        if (__builtin_add_overflow(total, n, &total))
            throw validation_error("total vertex count overflows");
    }
    std::sort(sizes.begin(), sizes.end());
    Instance inst;
    inst.sizes_ = std::move(sizes);
    inst.total_ = total;
    return inst;
}

std::string Instance::name() const {
    std::ostringstream out;
    out << "K_{";
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        if (i) out << ",";
        out << sizes_[i];
    }
    out << "}";
    return out.str();
}

Int EquitableColoring::class_count() const {
    Int count = empty_classes;
    for (const auto& part : classes) count += static_cast<Int>(part.size());
    return count;
}

}  // namespace eqcolor
