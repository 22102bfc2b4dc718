#include "stsc/gaussint.hpp"

namespace stsc {

std::string GaussInt::str() const {
    std::string s = std::to_string(re);
    if (im >= 0) s += "+";
    s += std::to_string(im) + "i";
    return s;
}

}  // namespace stsc
