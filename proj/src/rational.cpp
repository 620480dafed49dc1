#include "lcsk/rational.hpp"

#include "lcsk/errors.hpp"

namespace lcsk {

Rat rat(long num, long den) {
    if (den == 0) throw UsageError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat rat_parse(const std::string& text) {
    if (text.empty()) throw UsageError("empty rational literal");
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-'))
            throw UsageError("bad rational literal: " + text);
    }
    try {
        Rat r(text);
        if (r.get_den() == 0) throw UsageError("rational with zero denominator: " + text);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw UsageError("bad rational literal: " + text);
    }
}

std::string rat_str(const Rat& r) { return r.get_str(); }

} // namespace lcsk
