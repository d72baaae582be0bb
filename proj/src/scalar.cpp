#include "wres/scalar.hpp"

namespace wres {

std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string Scalar::str() const {
    if (im_ == 0) return rat_str(re_);
    std::string ims;
    if (im_ == 1) ims = "i";
    else if (im_ == -1) ims = "-i";
    else ims = rat_str(im_) + "*i";
    if (re_ == 0) return ims;
    if (im_ > 0) return "(" + rat_str(re_) + "+" + ims + ")";
    return "(" + rat_str(re_) + ims + ")";  // ims already carries the minus
}

} // namespace wres
