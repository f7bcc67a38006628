#include "sepsem/json_io.hpp"

#include "sepsem/errors.hpp"

namespace sepsem {

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw input_error(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

std::string as_string(const Json& j, const char* what) {
    if (!j.is_string())
        throw input_error(std::string("expected a string for ") + what);
    return j.get<std::string>();
}

std::int64_t as_int(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw input_error(std::string("expected an integer for ") + what);
    return j.get<std::int64_t>();
}

std::int64_t key_as_int(const std::string& key) {
    try {
        std::size_t used = 0;
        std::int64_t v = std::stoll(key, &used);
        if (used != key.size())
            throw input_error("malformed integer key \"" + key + "\"");
        return v;
    } catch (const input_error&) {
        throw;
    } catch (const std::exception&) {
        throw input_error("malformed integer key \"" + key + "\"");
    }
}

} // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw input_error(std::string("malformed JSON: ") + e.what());
    }
}

Json to_json(const Rat& r) {
    return rat_to_string(r);
}

Rat rat_from_json(const Json& j) {
    return rat_from_string(as_string(j, "a rational"));
}

Json to_json(const IntervalSet& s) {
    Json out = Json::array();
    for (const auto& [a, b] : s.pieces())
        out.push_back(Json::array({to_json(a), to_json(b)}));
    return out;
}

IntervalSet interval_set_from_json(const Json& j) {
    if (!j.is_array())
        throw input_error("expected an array of interval endpoint pairs");
    std::vector<IntervalSet::Piece> raw;
    for (const Json& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            throw input_error("expected an [a,b) endpoint pair");
        raw.emplace_back(rat_from_json(pair[0]), rat_from_json(pair[1]));
    }
    return IntervalSet::from_pairs(std::move(raw));
}

Json to_json(const MPartition& p) {
    Json cells = Json::array();
    for (const IntervalSet& c : p.cells())
        cells.push_back(to_json(c));
    return Json{{"cells", std::move(cells)}};
}

MPartition mpartition_from_json(const Json& j) {
    std::vector<IntervalSet> cells;
    for (const Json& c : field(j, "cells"))
        cells.push_back(interval_set_from_json(c));
    return MPartition(std::move(cells));
}

Json to_json(const MeasuredPartition& p) {
    Json cells = Json::array();
    for (const IntervalSet& c : p.partition().cells())
        cells.push_back(to_json(c));
    Json masses = Json::array();
    for (const Rat& m : p.masses())
        masses.push_back(to_json(m));
    return Json{{"cells", std::move(cells)}, {"masses", std::move(masses)}};
}

MeasuredPartition measured_partition_from_json(const Json& j) {
    const Json& cells = field(j, "cells");
    const Json& masses = field(j, "masses");
    if (!cells.is_array() || !masses.is_array() || cells.size() != masses.size())
        throw input_error("cells and masses must be arrays of the same length");
    std::vector<MeasuredPartition::WeightedCell> weighted;
    for (std::size_t i = 0; i < cells.size(); ++i)
        weighted.emplace_back(interval_set_from_json(cells[i]), rat_from_json(masses[i]));
    return MeasuredPartition(std::move(weighted));
}

Json to_json(const FinPerm& p) {
    Json out = Json::array();
    for (const auto& [n, pn] : p.mapping())
        out.push_back(Json::array({n, pn}));
    return out;
}

FinPerm fin_perm_from_json(const Json& j) {
    if (!j.is_array())
        throw input_error("expected an array of [n, pi(n)] pairs");
    std::vector<std::pair<Nat, Nat>> pairs;
    for (const Json& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            throw input_error("expected a [n, pi(n)] pair");
        std::int64_t a = as_int(pair[0], "a location");
        std::int64_t b = as_int(pair[1], "a location");
        if (a < 0 || b < 0)
            throw input_error("locations are naturals");
        pairs.emplace_back(static_cast<Nat>(a), static_cast<Nat>(b));
    }
    return FinPerm::from_pairs(pairs);
}

Json to_json(const PwAffine& p) {
    Json out = Json::array();
    for (const AffinePiece& piece : p.pieces())
        out.push_back(Json{{"src", Json::array({to_json(piece.src_lo), to_json(piece.src_hi)})},
                           {"dst", Json::array({to_json(piece.dst_lo), to_json(piece.dst_hi)})}});
    return out;
}

PwAffine pw_affine_from_json(const Json& j) {
    if (!j.is_array())
        throw input_error("expected an array of {src, dst} pieces");
    std::vector<AffinePiece> pieces;
    for (const Json& piece : j) {
        const Json& src = field(piece, "src");
        const Json& dst = field(piece, "dst");
        if (!src.is_array() || src.size() != 2 || !dst.is_array() || dst.size() != 2)
            throw input_error("src and dst must be [lo, hi) pairs");
        pieces.push_back({rat_from_json(src[0]), rat_from_json(src[1]), rat_from_json(dst[0]),
                          rat_from_json(dst[1])});
    }
    return PwAffine::from_pieces(std::move(pieces));
}

Json to_json(const Decoder& d) {
    Json omega = Json::array();
    for (const std::string& point : d.omega())
        omega.push_back(point);
    Json fibers = Json::object();
    for (const auto& [point, fiber] : d.fibers())
        fibers[point] = to_json(fiber);
    return Json{{"omega", std::move(omega)}, {"fibers", std::move(fibers)}};
}

Decoder decoder_from_json(const Json& j) {
    FinOmega omega;
    for (const Json& point : field(j, "omega"))
        omega.push_back(as_string(point, "a sample point"));
    std::map<std::string, IntervalSet> fibers;
    for (const auto& [point, fiber] : field(j, "fibers").items())
        fibers[point] = interval_set_from_json(fiber);
    return Decoder(std::move(omega), std::move(fibers));
}

Json to_json(const LawReport& r) {
    Json violations = Json::array();
    for (const Violation& v : r.violations)
        violations.push_back(
            Json{{"law", v.law}, {"detail", v.detail}, {"case_seed", v.case_seed}});
    return Json{{"cases", r.cases}, {"violations", std::move(violations)}};
}

Json to_json(const StoreInstanceM1& inst) {
    Json shape = Json::array();
    for (const Loc& loc : inst.shape)
        shape.push_back(loc);
    Json store = Json::object();
    for (const auto& [loc, v] : inst.store)
        store[loc] = v;
    Json subst = Json::object();
    for (const auto& [var, loc] : inst.subst)
        subst[var] = loc;
    return Json{{"shape", std::move(shape)}, {"store", std::move(store)},
                {"subst", std::move(subst)}};
}

StoreInstanceM1 store_m1_from_json(const Json& j) {
    StoreInstanceM1 out;
    for (const Json& loc : field(j, "shape"))
        if (!out.shape.insert(as_string(loc, "a location")).second)
            throw input_error("duplicate location in shape");
    for (const auto& [loc, v] : field(j, "store").items())
        out.store[loc] = as_int(v, "a stored value");
    for (const auto& [var, loc] : field(j, "subst").items())
        out.subst[var] = as_string(loc, "a location");
    return out;
}

Json to_json(const StoreInstanceM2& inst) {
    Json store = Json::object();
    for (const auto& [n, v] : inst.store)
        store[std::to_string(n)] = v;
    Json subst = Json::object();
    for (const auto& [var, n] : inst.subst)
        subst[var] = n;
    return Json{{"store", std::move(store)}, {"subst", std::move(subst)}};
}

StoreInstanceM2 store_m2_from_json(const Json& j) {
    StoreInstanceM2 out;
    for (const auto& [key, v] : field(j, "store").items()) {
        std::int64_t n = key_as_int(key);
        if (n < 0)
            throw input_error("store locations are naturals");
        out.store[static_cast<Nat>(n)] = as_int(v, "a stored value");
    }
    for (const auto& [var, n] : field(j, "subst").items()) {
        std::int64_t loc = as_int(n, "a location");
        if (loc < 0)
            throw input_error("substitution locations are naturals");
        out.subst[var] = static_cast<Nat>(loc);
    }
    return out;
}

Json to_json(const ProbInstanceM1& inst) {
    Json omega = Json::array();
    for (const std::string& point : inst.space.omega())
        omega.push_back(point);
    Json atoms = Json::array();
    for (const auto& atom : inst.space.atoms()) {
        Json a = Json::array();
        for (const std::string& point : atom)
            a.push_back(point);
        atoms.push_back(std::move(a));
    }
    Json masses = Json::array();
    for (const Rat& m : inst.space.masses())
        masses.push_back(to_json(m));
    Json rvs = Json::object();
    for (const auto& [var, rv] : inst.subst) {
        Json values = Json::object();
        for (const auto& [point, v] : rv)
            values[point] = v;
        rvs[var] = std::move(values);
    }
    return Json{{"omega", std::move(omega)},
                {"atoms", std::move(atoms)},
                {"masses", std::move(masses)},
                {"rvs", std::move(rvs)}};
}

ProbInstanceM1 prob_m1_from_json(const Json& j) {
    FinOmega omega;
    for (const Json& point : field(j, "omega"))
        omega.push_back(as_string(point, "a sample point"));
    std::vector<std::vector<std::string>> atoms;
    for (const Json& atom : field(j, "atoms")) {
        std::vector<std::string> a;
        for (const Json& point : atom)
            a.push_back(as_string(point, "a sample point"));
        atoms.push_back(std::move(a));
    }
    std::vector<Rat> masses;
    for (const Json& m : field(j, "masses"))
        masses.push_back(rat_from_json(m));
    RandSubst subst;
    for (const auto& [var, values] : field(j, "rvs").items()) {
        RandVar rv;
        for (const auto& [point, v] : values.items())
            rv[point] = as_int(v, "a random-variable value");
        subst.emplace(var, std::move(rv));
    }
    return {FinProbSpace(std::move(omega), std::move(atoms), std::move(masses)),
            std::move(subst)};
}

Json to_json(const ProbInstanceM2& inst) {
    Json rvs = Json::object();
    for (const auto& [var, f] : inst.subst) {
        Json levels = Json::object();
        for (const auto& [value, level] : f.levels())
            levels[std::to_string(value)] = to_json(level);
        rvs[var] = std::move(levels);
    }
    return Json{{"partition", to_json(inst.partition)}, {"rvs", std::move(rvs)}};
}

ProbInstanceM2 prob_m2_from_json(const Json& j) {
    MeasuredPartition partition = measured_partition_from_json(field(j, "partition"));
    StepSubst subst;
    for (const auto& [var, levels] : field(j, "rvs").items()) {
        std::map<std::int64_t, IntervalSet> level_map;
        for (const auto& [value, level] : levels.items())
            level_map[key_as_int(value)] = interval_set_from_json(level);
        subst.emplace(var, StepFn(std::move(level_map)));
    }
    return {std::move(partition), std::move(subst)};
}

std::map<std::string, std::string> string_map_from_json(const Json& j) {
    std::map<std::string, std::string> out;
    for (const auto& [from, to] : field(j, "map").items())
        out[from] = as_string(to, "a target point");
    return out;
}

} // namespace sepsem
