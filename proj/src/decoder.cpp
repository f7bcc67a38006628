#include "sepsem/decoder.hpp"

#include "sepsem/errors.hpp"

#include <algorithm>

namespace sepsem {

FinOmega make_omega(std::vector<std::string> points) {
    if (points.empty())
        throw input_error("sample space must be nonempty");
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end())
        throw input_error("duplicate sample point name");
    return points;
}

Decoder::Decoder(FinOmega omega, std::map<std::string, IntervalSet> fibers)
    : omega_(make_omega(std::move(omega))), fibers_(std::move(fibers)) {
    IntervalSet all;
    Rat total = 0;
    for (const std::string& point : omega_) {
        auto it = fibers_.find(point);
        if (it == fibers_.end())
            throw input_error("decoder missing fiber for point " + point);
        if (it->second.empty())
            throw input_error("decoder fiber for " + point + " is negligible");
        all = set_union(all, it->second);
        total += it->second.measure();
    }
    if (fibers_.size() != omega_.size())
        throw input_error("decoder has fibers for unknown points");
    if (all != IntervalSet::full() || total != 1)
        throw input_error("decoder fibers do not partition [0,1)");
}

const IntervalSet& Decoder::fiber(const std::string& point) const {
    auto it = fibers_.find(point);
    if (it == fibers_.end())
        throw input_error("no fiber for point " + point);
    return it->second;
}

const std::string& Decoder::decode(const Rat& x) const {
    for (const auto& [point, fiber] : fibers_)
        if (fiber.contains(x))
            return point;
    throw input_error("sample outside [0,1)");
}

Decoder make_decoder(const FinOmega& omega) {
    FinOmega sorted = make_omega(omega);
    const Rat width = Rat(1) / Rat(static_cast<long>(sorted.size()));
    std::map<std::string, IntervalSet> fibers;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        fibers[sorted[i]] =
            IntervalSet::interval(width * static_cast<long>(i), width * static_cast<long>(i + 1));
    return Decoder(std::move(sorted), std::move(fibers));
}

} // namespace sepsem
