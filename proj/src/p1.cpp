#include "scrollcalc/p1.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace scrollcalc {

SplittingType::SplittingType(std::vector<i64> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        throw std::invalid_argument("splitting type must have at least one part");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

SplittingType SplittingType::parse(std::string_view text) {
    std::vector<i64> parts;
    size_t pos = 0;
    while (true) {
        size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        i64 value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument("cannot parse splitting type part '" +
                                        std::string(tok) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return SplittingType(std::move(parts));
}

i64 SplittingType::degree() const {
    i128 sum = 0;
    for (i64 p : parts_) sum += p;
    return narrow(sum, "splitting type degree");
}

std::string SplittingType::str() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

TwistCohomology splitting_cohomology(const SplittingType& type, i64 twist) {
    i128 h0 = 0, h1 = 0;
    for (i64 p : type.parts()) {
        i64 d = checked_add(p, twist);
        h0 += h0_p1(d);
        h1 += h1_p1(d);
    }
    return {narrow(h0, "splitting h0"), narrow(h1, "splitting h1")};
}

bool specializes(const SplittingType& general, const SplittingType& special) {
    if (general.rank() != special.rank()) return false;
    if (general.degree() != special.degree()) return false;
    // Partial sums of the sorted special side must dominate the general side.
    i128 sg = 0, ss = 0;
    for (size_t i = 0; i < general.parts().size(); ++i) {
        sg += general.parts()[i];
        ss += special.parts()[i];
        if (ss < sg) return false;
    }
    return true;
}

std::pair<i64, i64> active_twist_window(const SplittingType& a, const SplittingType& b) {
    i64 lo = std::min(a.parts().back(), b.parts().back());
    i64 hi = std::max(a.parts().front(), b.parts().front());
    return {checked_sub(-1, hi), checked_add(-lo, 1)};
}

}  // namespace scrollcalc
